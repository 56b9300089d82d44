#include "trav/transversal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "trav/bounds.hpp"

namespace trav {
namespace {

// Distinct vertex sets of the collection members, each sorted ascending.
// Hitting sets only depend on the sets, so duplicates (a path and its
// reverse share a set only if... they never do, but two different paths may
// use the same vertices) are dropped.
std::vector<std::vector<int>> distinctMemberSets(const SequenceCollection& c) {
    std::set<std::vector<int>> seen;
    for (std::uint64_t i = 0; i < c.count; ++i) {
        const std::uint8_t* p = c.memberBegin(i);
        std::vector<int> vs(p, p + c.length);
        std::sort(vs.begin(), vs.end());
        seen.insert(std::move(vs));
    }
    return {seen.begin(), seen.end()};
}

// Branch and bound over distinct member sets. minSize(floor, cap) returns
// the least hitting-set size using only vertices >= floor, or cap + 1 when
// every such set exceeds cap.
class HittingSolver {
public:
    HittingSolver(int n, std::vector<std::vector<int>> members, ExpansionBudget& budget)
        : n_(n), members_(std::move(members)), budget_(budget) {
        byVertex_.resize(n_);
        for (int m = 0; m < (int)members_.size(); ++m)
            for (int v : members_[m]) byVertex_[v].push_back(m);
    }

    int minSize(int vertexFloor, int cap) {
        hits_.assign(members_.size(), 0);
        uncovered_ = (int)members_.size();
        best_ = cap + 1;
        search(0, vertexFloor);
        return best_;
    }

private:
    // Greedy disjoint packing of uncovered members: a lower bound, since any
    // hitting set needs one distinct vertex per packed member.
    int packingBound(std::vector<char>& used) {
        std::fill(used.begin(), used.end(), 0);
        int packed = 0;
        for (int m = 0; m < (int)members_.size(); ++m) {
            if (hits_[m]) continue;
            bool free = true;
            for (int v : members_[m])
                if (used[v]) { free = false; break; }
            if (!free) continue;
            for (int v : members_[m]) used[v] = 1;
            ++packed;
        }
        return packed;
    }

    void cover(int v) {
        for (int m : byVertex_[v])
            if (hits_[m]++ == 0) --uncovered_;
    }

    void uncover(int v) {
        for (int m : byVertex_[v])
            if (--hits_[m] == 0) ++uncovered_;
    }

    void search(int chosen, int vertexFloor) {
        budget_.tick();
        if (uncovered_ == 0) {
            best_ = std::min(best_, chosen);
            return;
        }
        if (chosen + 1 >= best_) return;
        std::vector<char> used(n_, 0);
        if (chosen + packingBound(used) >= best_) return;
        // Branch on the uncovered member with the fewest usable vertices.
        int pick = -1, pickUsable = n_ + 1;
        for (int m = 0; m < (int)members_.size(); ++m) {
            if (hits_[m]) continue;
            int usable = 0;
            for (int v : members_[m])
                if (v >= vertexFloor) ++usable;
            if (usable < pickUsable) { pickUsable = usable; pick = m; }
        }
        if (pickUsable == 0) return;  // member only has forbidden vertices
        for (int v : members_[pick]) {
            if (v < vertexFloor) continue;
            cover(v);
            search(chosen + 1, vertexFloor);
            uncover(v);
        }
    }

    int n_;
    std::vector<std::vector<int>> members_;
    std::vector<std::vector<int>> byVertex_;
    ExpansionBudget& budget_;
    std::vector<int> hits_;
    int uncovered_ = 0;
    int best_ = 0;
};

// Exact minimum hitting set, then the lexicographically least optimum,
// rebuilt one vertex at a time with a feasibility probe per candidate.
std::vector<int> lexLeastMinimumHit(int n, const std::vector<std::vector<int>>& members,
                                    ExpansionBudget& budget) {
    if (members.empty()) return {};
    HittingSolver solver(n, members, budget);
    const int optimum = solver.minSize(0, n);
    if (optimum > n) throw std::logic_error("hitting set solver failed to find the trivial cover");

    std::vector<int> chosen;
    std::vector<char> covered(members.size(), 0);
    int remaining = optimum;
    int floor = 0;
    auto coveredByAll = [&]() {
        for (char c : covered)
            if (!c) return false;
        return true;
    };
    while (!coveredByAll()) {
        bool advanced = false;
        for (int v = floor; v < n && !advanced; ++v) {
            std::vector<int> touched;
            for (int m = 0; m < (int)members.size(); ++m) {
                if (covered[m]) continue;
                if (std::binary_search(members[m].begin(), members[m].end(), v))
                    touched.push_back(m);
            }
            if (touched.empty()) continue;  // useless vertex cannot appear in a minimum cover
            std::vector<std::vector<int>> rest;
            for (int m = 0; m < (int)members.size(); ++m)
                if (!covered[m] && !std::binary_search(members[m].begin(), members[m].end(), v))
                    rest.push_back(members[m]);
            HittingSolver probe(n, rest, budget);
            if (probe.minSize(v + 1, remaining - 1) <= remaining - 1) {
                chosen.push_back(v);
                for (int m : touched) covered[m] = 1;
                floor = v + 1;
                --remaining;
                advanced = true;
            }
        }
        if (!advanced) throw std::logic_error("lexicographic reconstruction lost feasibility");
    }
    return chosen;
}

}  // namespace

Transversal exactLpt(const Graph& g, ExpansionBudget& budget) {
    PathCollection paths = longestPaths(g, budget);
    Transversal t;
    t.mode = TransversalMode::path;
    t.vertices = lexLeastMinimumHit(g.vertexCount(), distinctMemberSets(paths), budget);
    t.certifiedMinimum = true;
    return t;
}

Transversal exactLct(const Graph& g, ExpansionBudget& budget) {
    if (g.vertexCount() < 3) throw std::invalid_argument("graph is acyclic");
    CycleCollection cycles = longestCycles(g, budget);
    if (cycles.count == 0) throw std::invalid_argument("graph is acyclic");
    Transversal t;
    t.mode = TransversalMode::cycle;
    t.vertices = lexLeastMinimumHit(g.vertexCount(), distinctMemberSets(cycles), budget);
    t.certifiedMinimum = true;
    return t;
}

VerifyResult verifyTransversal(const Graph& g, const std::vector<int>& candidate,
                               TransversalMode mode, ExpansionBudget& budget) {
    const int n = g.vertexCount();
    std::vector<char> inSet(n, 0);
    for (int v : candidate) {
        if (v < 0 || v >= n) throw std::invalid_argument("candidate vertex out of range");
        inSet[v] = 1;
    }
    VerifyResult r;
    if (mode == TransversalMode::cycle && n < 3) return r;  // nothing to hit
    SequenceCollection c;
    if (mode == TransversalMode::path) {
        c = longestPaths(g, budget);
    } else {
        c = longestCycles(g, budget);
        if (c.count == 0) return r;
    }
    for (std::uint64_t i = 0; i < c.count; ++i) {
        const std::uint8_t* p = c.memberBegin(i);
        bool hit = false;
        for (int k = 0; k < c.length && !hit; ++k) hit = inSet[p[k]];
        if (!hit) {
            r.ok = false;
            r.witness = std::vector<int>(p, p + c.length);
            return r;
        }
    }
    return r;
}

FractionalTransversal fractionalLpt(const Graph& g, ExpansionBudget& budget) {
    if (!connectivity(g).connected) throw std::invalid_argument("fractional transversal needs a connected graph");
    const int n = g.vertexCount();
    PathCollection paths = longestPaths(g, budget);
    const long long ell = paths.length;

    FractionalTransversal f;
    f.weights.assign(n, Rational(0));
    if (ell * ell <= n) {
        // A single longest path carries weight <= sqrt(n) and meets every
        // longest path (any two longest paths of a connected graph share a
        // vertex), so its characteristic function works.
        const std::uint8_t* p = paths.memberBegin(0);
        for (int k = 0; k < paths.length; ++k) f.weights[p[k]] = Rational(1);
    } else {
        const Rational w(1, ceilSqrt(n));
        for (int v = 0; v < n; ++v) f.weights[v] = w;
    }
    f.total = Rational(0);
    for (const Rational& w : f.weights) f.total = f.total + w;

    if (!leSqrt(f.total, n)) throw std::logic_error("fractional transversal exceeds the weight budget");
    for (std::uint64_t i = 0; i < paths.count; ++i) {
        const std::uint8_t* p = paths.memberBegin(i);
        Rational onPath(0);
        for (int k = 0; k < paths.length; ++k) onPath = onPath + f.weights[p[k]];
        if (onPath < Rational(1)) throw std::logic_error("fractional transversal misses a longest path");
    }
    return f;
}

namespace {

void greedyAlphaRec(const Graph& sub, const std::vector<int>& labels, const Rational& alpha,
                    ExpansionBudget& budget, std::set<int>& out) {
    PathCollection paths = longestPaths(sub, budget);
    const int n = sub.vertexCount();
    const long long ell = paths.length;
    const long long count = (long long)paths.count;

    // Few longest paths: one vertex from each covers them all.
    if (Rational(count * count) <= alpha * Rational(n)) {
        for (long long i = 0; i < count; ++i) {
            const std::uint8_t* p = paths.memberBegin(i);
            int smallest = *std::min_element(p, p + paths.length);
            out.insert(labels[smallest]);
        }
        return;
    }
    // Short longest paths: the whole vertex set of one of them is cheap.
    if (Rational(ell * ell) <= alpha * Rational(n)) {
        const std::uint8_t* p = paths.memberBegin(0);
        for (int k = 0; k < paths.length; ++k) out.insert(labels[p[k]]);
        return;
    }
    // A heavy vertex on every longest path finishes instantly.
    // p_v == count is equivalent to {v} being a transversal.
    long long maxCount = -1;
    int argmax = -1;
    for (int v = 0; v < n; ++v) {
        long long pv = (long long)paths.perVertexCounts[v];
        if (pv > maxCount) { maxCount = pv; argmax = v; }
    }
    if (Rational(maxCount) >= alpha && maxCount == count) {
        out.insert(labels[argmax]);
        return;
    }
    if (Rational(maxCount) < alpha) {
        // Summing p_v over vertices gives ell * count, so the max is at
        // least ell * count / n > alpha whenever ell^2 > alpha n and
        // count^2 > alpha n. Reaching this line contradicts that identity.
        throw FalsificationError("per-vertex path counting identity violated");
    }
    // Commit the heaviest vertex and recurse where longest paths survive.
    out.insert(labels[argmax]);
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (v != argmax) keep.push_back(v);
    std::vector<int> subLabels;
    Graph rest = sub.induced(keep, &subLabels);
    ConnectivityReport rep = connectivity(rest);
    int carrier = -1;
    for (int ci = 0; ci < (int)rep.components.size(); ++ci) {
        std::vector<int> compLabels;
        Graph comp = rest.induced(rep.components[ci], &compLabels);
        PathCollection cp = longestPaths(comp, budget);
        if (cp.length != ell) continue;
        if (carrier != -1)
            throw FalsificationError("two components carry disjoint longest paths");
        carrier = ci;
    }
    if (carrier == -1) {
        // Every longest path used the committed vertex, yet its path count
        // fell short of the total; both cannot hold.
        throw FalsificationError("committed vertex misses a longest path it must carry");
    }
    std::vector<int> compLabels;
    Graph comp = rest.induced(rep.components[carrier], &compLabels);
    std::vector<int> outer(comp.vertexCount());
    for (int v = 0; v < comp.vertexCount(); ++v) outer[v] = labels[subLabels[compLabels[v]]];
    greedyAlphaRec(comp, outer, alpha, budget, out);
}

}  // namespace

Transversal greedyAlphaTransversal(const Graph& g, const Rational& alpha, ExpansionBudget& budget) {
    if (alpha < Rational(2)) throw std::invalid_argument("alpha must be at least 2");
    if (!connectivity(g).connected) throw std::invalid_argument("counting transversal needs a connected graph");
    std::vector<int> identity(g.vertexCount());
    for (int v = 0; v < g.vertexCount(); ++v) identity[v] = v;
    std::set<int> out;
    greedyAlphaRec(g, identity, alpha, budget, out);
    Transversal t;
    t.mode = TransversalMode::path;
    t.vertices.assign(out.begin(), out.end());
    VerifyResult check = verifyTransversal(g, t.vertices, TransversalMode::path, budget);
    if (!check.ok) throw std::logic_error("counting transversal failed verification");
    return t;
}

}  // namespace trav
