#include "trav/generate.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace trav {
namespace {

constexpr int kResampleCap = 1'000'000;

// Bit index of the unordered pair (a, b), a < b, in the adjacency bitmask.
int pairBit(int a, int b) {
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;
}

bool maskConnected(std::uint32_t mask, int n) {
    std::array<std::uint32_t, 8> adj{};
    int e = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++e)
            if (mask >> e & 1) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
    std::uint32_t visited = 1, frontier = 1;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint32_t fresh = adj[v] & ~visited;
        visited |= fresh;
        frontier |= fresh;
    }
    return visited == (1u << n) - 1;
}

}  // namespace

void forEachConnectedGraph(int n, bool isoReduce, const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7) throw std::invalid_argument("exhaustive sweep supports 1 <= n <= 7");
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pairOf(pairs);
    {
        int e = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) pairOf[e++] = {i, j};
    }
    // For each non-identity relabeling, srcBit[e] is the bit the relabeled
    // graph reads its e-th edge from.
    std::vector<std::array<int, 21>> perms;
    if (isoReduce) {
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        while (std::next_permutation(sigma.begin(), sigma.end())) {
            std::array<int, 21> src{};
            for (int e = 0; e < pairs; ++e)
                src[e] = pairBit(sigma[pairOf[e].first], sigma[pairOf[e].second]);
            perms.push_back(src);
        }
    }
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        if (!maskConnected(mask, n)) continue;
        if (isoReduce) {
            // Canonical = no relabeling yields a smaller bitmask; compare
            // from the top bit down and stop at the first difference.
            bool canonical = true;
            for (const auto& src : perms) {
                int e = pairs - 1;
                while (e >= 0 && ((mask >> src[e]) & 1) == ((mask >> e) & 1)) --e;
                if (e >= 0 && (mask >> e & 1)) {
                    canonical = false;
                    break;
                }
            }
            if (!canonical) continue;
        }
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < pairs; ++e)
            if (mask >> e & 1) edges.push_back(pairOf[e]);
        fn(Graph(n, edges));
    }
}

namespace {

bool chance(std::mt19937_64& rng, const Rational& p) {
    const std::uint64_t draw = rng();  // always consume, for stream stability
    if (p == Rational(1)) return true;
    const unsigned __int128 threshold = ((unsigned __int128)p.num() << 64) / p.den();
    return (unsigned __int128)draw < threshold;
}

std::vector<std::pair<int, int>> drawEdges(std::mt19937_64& rng, int n, const Rational& p) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (chance(rng, p)) edges.emplace_back(i, j);
    return edges;
}

void checkProbability(const Rational& p) {
    if (p < Rational(0) || p > Rational(1))
        throw std::invalid_argument("edge probability must lie in [0, 1]");
}

}  // namespace

Graph randomConnected(int n, const Rational& p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    checkProbability(p);
    if (n > 1 && p == Rational(0))
        throw std::invalid_argument("p = 0 cannot produce a connected graph");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        Graph g(n, drawEdges(rng, n, p));
        if (connectivity(g).connected) return g;
    }
    throw std::runtime_error("resample cap reached without a connected draw");
}

Graph randomTwoConnected(int n, const Rational& p, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("2-connected graphs need at least 3 vertices");
    checkProbability(p);
    if (p == Rational(0)) throw std::invalid_argument("p = 0 cannot produce a 2-connected graph");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        Graph g(n, drawEdges(rng, n, p));
        if (connectivity(g).twoConnected) return g;
    }
    throw std::runtime_error("resample cap reached without a 2-connected draw");
}

Graph triangleChain(int t) {
    if (t < 1) throw std::invalid_argument("need at least one triangle");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i) {
        const int b = 3 * i;
        edges.emplace_back(b, b + 1);
        edges.emplace_back(b, b + 2);
        edges.emplace_back(b + 1, b + 2);
        if (i + 1 < t) edges.emplace_back(b + 2, b + 3);
    }
    return Graph(3 * t, edges);
}

ArcModel randomArcModel(int m, std::uint64_t seed) {
    if (m < 2) throw std::invalid_argument("covering a circle needs at least 2 open arcs");
    std::mt19937_64 rng(seed);
    const long long grid = 720;  // endpoints on a 720th-of-a-turn grid
    for (int attempt = 0; attempt < kResampleCap; ++attempt) {
        ArcModel model;
        std::set<long long> used;
        bool distinct = true;
        for (int id = 0; id < m && distinct; ++id) {
            const long long s = (long long)(rng() % grid);
            const long long len = 108 + (long long)(rng() % 325);  // [0.15, 0.6] turns
            const long long e = (s + len) % grid;
            distinct = used.insert(s).second && used.insert(e).second;
            model.arcs.push_back({false, Rational(s, grid), Rational(e, grid)});
        }
        if (!distinct) continue;
        std::vector<int> all(m);
        std::iota(all.begin(), all.end(), 0);
        if (coversCircle(model, all)) return model;
    }
    throw std::runtime_error("resample cap reached without a covering model");
}

GeneratedDecomposition partialKTree(int k, int n, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("width parameter must be positive");
    if (n < k + 1) throw std::invalid_argument("a k-tree needs at least k+1 vertices");
    std::mt19937_64 rng(seed);

    std::set<std::pair<int, int>> edgeSet;
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) edgeSet.insert({i, j});
    TreeDecomposition td;
    {
        std::vector<int> seedBag(k + 1);
        std::iota(seedBag.begin(), seedBag.end(), 0);
        td.bags.push_back(seedBag);
    }
    for (int v = k + 1; v < n; ++v) {
        const int host = (int)(rng() % td.bags.size());
        std::vector<int> sub = td.bags[host];
        sub.erase(sub.begin() + (std::size_t)(rng() % sub.size()));
        for (int u : sub) edgeSet.insert({std::min(u, v), std::max(u, v)});
        sub.push_back(v);
        std::sort(sub.begin(), sub.end());
        td.bags.push_back(sub);
        td.treeEdges.emplace_back(host, (int)td.bags.size() - 1);
    }

    // Thin the clique structure without disconnecting the graph.
    std::vector<std::pair<int, int>> edges(edgeSet.begin(), edgeSet.end());
    std::vector<char> alive(edges.size(), 1);
    auto connectedWithout = [&](std::size_t skip) {
        std::vector<std::vector<int>> adj(n);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (!alive[e] || e == skip) continue;
            adj[edges[e].first].push_back(edges[e].second);
            adj[edges[e].second].push_back(edges[e].first);
        }
        std::vector<char> visited(n, 0);
        std::vector<int> stack{0};
        visited[0] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : adj[v])
                if (!visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
        }
        return reached == n;
    };
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (chance(rng, Rational(3, 10)) && connectedWithout(e)) alive[e] = 0;

    std::vector<std::pair<int, int>> kept;
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (alive[e]) kept.push_back(edges[e]);
    return {Graph(n, kept), std::move(td)};
}

BlockMatching randomBlockMatching(int tau, std::uint64_t seed) {
    if (tau < 1) throw std::invalid_argument("paths need at least one vertex");
    std::mt19937_64 rng(seed);
    BlockMatching bm;
    bm.instance.tau = tau;
    int iPos = 1, jPos = 1;
    while (true) {
        iPos += (int)(rng() % 3);
        jPos += (int)(rng() % 3);
        const int cap = std::min(tau - iPos + 1, tau - jPos + 1);
        if (cap < 1) break;
        std::vector<int> sizes;
        for (int s : {1, 2, 4, 6})
            if (s <= cap) sizes.push_back(s);
        const int s = sizes[rng() % sizes.size()];
        std::vector<LadderEdge> block;
        // Ascending i paired with descending j: pairwise crossing inside,
        // and the strictly later coordinate ranges keep blocks parallel.
        for (int r = 0; r < s; ++r) block.push_back({iPos + r, jPos + s - 1 - r});
        for (const LadderEdge& e : block) bm.instance.matching.push_back(e);
        bm.blocks.push_back(std::move(block));
        iPos += s;
        jPos += s;
        if (rng() % 4 == 0) break;
    }
    return bm;
}

LadderInstance randomLadderInstance(int tau, int window, int targetSize, std::uint64_t seed) {
    if (tau < 1) throw std::invalid_argument("paths need at least one vertex");
    if (window < 1) throw std::invalid_argument("window must be positive");
    if (targetSize < 0) throw std::invalid_argument("target size cannot be negative");
    std::mt19937_64 rng(seed);
    LadderInstance inst;
    inst.tau = tau;
    std::set<int> usedI, usedJ;
    const int half = window / 2;
    for (int attempt = 0; attempt < 200 * targetSize + 100; ++attempt) {
        if ((int)inst.matching.size() >= targetSize) break;
        const int i = 1 + (int)(rng() % tau);
        const int lo = std::max(1, i - half), hi = std::min(tau, i + half);
        const int j = lo + (int)(rng() % (hi - lo + 1));
        if (usedI.count(i) || usedJ.count(j)) continue;
        usedI.insert(i);
        usedJ.insert(j);
        inst.matching.push_back({i, j});
    }
    return inst;
}

}  // namespace trav
