#include "trav/separator.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "trav/longest.hpp"

namespace trav {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, (int)b.size() - 1);
    return w;
}

namespace {

std::vector<std::string> dataLines(const std::string& text, std::vector<int>& lineNumbers) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string trimmed = line;
        auto hash = trimmed.find('#');
        if (hash != std::string::npos) trimmed.erase(hash);
        auto notSpace = [](unsigned char c) { return !std::isspace(c); };
        trimmed.erase(trimmed.begin(), std::find_if(trimmed.begin(), trimmed.end(), notSpace));
        trimmed.erase(std::find_if(trimmed.rbegin(), trimmed.rend(), notSpace).base(), trimmed.end());
        if (trimmed.empty()) continue;
        out.push_back(trimmed);
        lineNumbers.push_back(number);
    }
    return out;
}

}  // namespace

TreeDecomposition parseTreeDecomposition(const std::string& text, const Graph& g) {
    std::vector<int> lineNo;
    std::vector<std::string> lines = dataLines(text, lineNo);
    if (lines.empty()) throw ParseError(0, "empty decomposition file");

    std::istringstream header(lines[0]);
    std::string s, td;
    long long bagCount = 0, widthPlusOne = 0, n = 0;
    if (!(header >> s >> td >> bagCount >> widthPlusOne >> n) || s != "s" || td != "td")
        throw ParseError(lineNo[0], "expected header 's td <#bags> <width+1> <n>'");
    std::string junk;
    if (header >> junk) throw ParseError(lineNo[0], "trailing data after header");
    if (bagCount < 1) throw ParseError(lineNo[0], "decomposition needs at least one bag");
    if (n != g.vertexCount()) throw ParseError(lineNo[0], "header vertex count disagrees with the graph");

    TreeDecomposition result;
    std::size_t pos = 1;
    for (long long b = 0; b < bagCount; ++b, ++pos) {
        if (pos >= lines.size()) throw ParseError(lineNo.back(), "fewer bag lines than the header declares");
        std::istringstream in(lines[pos]);
        std::string tag;
        long long index = -1;
        if (!(in >> tag >> index) || tag != "b")
            throw ParseError(lineNo[pos], "expected bag line 'b <index> <v...>'");
        if (index != b) throw ParseError(lineNo[pos], "bag indices must appear as 0,1,2,...");
        std::vector<int> bag;
        long long v;
        while (in >> v) {
            if (v < 0 || v >= n) throw ParseError(lineNo[pos], "bag vertex out of range");
            bag.push_back((int)v);
        }
        if (!in.eof()) throw ParseError(lineNo[pos], "non-integer in bag line");
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        result.bags.push_back(std::move(bag));
    }
    for (; pos < lines.size(); ++pos) {
        std::istringstream in(lines[pos]);
        long long i, j;
        if (!(in >> i >> j)) throw ParseError(lineNo[pos], "expected tree edge '<i> <j>'");
        if (in >> junk) throw ParseError(lineNo[pos], "trailing data after tree edge");
        if (i < 0 || i >= bagCount || j < 0 || j >= bagCount || i == j)
            throw ParseError(lineNo[pos], "tree edge endpoints out of range");
        result.treeEdges.emplace_back((int)i, (int)j);
    }

    if ((long long)result.treeEdges.size() != bagCount - 1)
        throw std::invalid_argument("a tree on " + std::to_string(bagCount) + " bags needs exactly " +
                                    std::to_string(bagCount - 1) + " edges");
    // Tree connectivity via union-find (edge count already matches).
    std::vector<int> parent(bagCount);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [i, j] : result.treeEdges) {
        int a = find(i), b = find(j);
        if (a == b) throw std::invalid_argument("bag tree contains a cycle");
        parent[a] = b;
    }
    if (result.width() + 1 != widthPlusOne)
        throw std::invalid_argument("header width+1 is " + std::to_string(widthPlusOne) +
                                    " but the largest bag has " + std::to_string(result.width() + 1) +
                                    " vertices");

    // Axiom: every vertex appears in some bag.
    std::vector<char> seen(g.vertexCount(), 0);
    for (const auto& bag : result.bags)
        for (int v : bag) seen[v] = 1;
    for (int v = 0; v < g.vertexCount(); ++v)
        if (!seen[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " lies in no bag");
    // Axiom: every edge lies inside some bag.
    for (auto [u, v] : g.edges()) {
        bool inside = false;
        for (const auto& bag : result.bags) {
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                inside = true;
                break;
            }
        }
        if (!inside)
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") lies inside no bag");
    }
    // Axiom: the bags containing any fixed vertex induce a subtree.
    std::vector<std::vector<int>> adj(bagCount);
    for (auto [i, j] : result.treeEdges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    for (int v = 0; v < g.vertexCount(); ++v) {
        std::vector<char> holds(bagCount, 0);
        int total = 0, start = -1;
        for (int b = 0; b < bagCount; ++b)
            if (std::binary_search(result.bags[b].begin(), result.bags[b].end(), v)) {
                holds[b] = 1;
                ++total;
                if (start < 0) start = b;
            }
        std::vector<int> stack{start};
        std::vector<char> visited(bagCount, 0);
        visited[start] = 1;
        int reached = 0;
        while (!stack.empty()) {
            int b = stack.back();
            stack.pop_back();
            ++reached;
            for (int nb : adj[b])
                if (holds[nb] && !visited[nb]) {
                    visited[nb] = 1;
                    stack.push_back(nb);
                }
        }
        if (reached != total)
            throw std::invalid_argument("bags containing vertex " + std::to_string(v) +
                                        " do not induce a subtree");
    }
    return result;
}

std::string serializeTreeDecomposition(const TreeDecomposition& td, int vertexCount) {
    std::ostringstream out;
    out << "s td " << td.bags.size() << ' ' << td.width() + 1 << ' ' << vertexCount << '\n';
    for (std::size_t b = 0; b < td.bags.size(); ++b) {
        out << "b " << b;
        for (int v : td.bags[b]) out << ' ' << v;
        out << '\n';
    }
    for (auto [i, j] : td.treeEdges) out << i << ' ' << j << '\n';
    return out.str();
}

namespace {

// Connected components of g minus a removed set, ordered by smallest vertex.
std::vector<std::vector<int>> componentsWithout(const Graph& g, const std::vector<char>& removed) {
    const int n = g.vertexCount();
    std::vector<char> visited(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (removed[s] || visited[s]) continue;
        std::vector<int> comp, stack{s};
        visited[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!removed[w] && !visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

SeparatorResult assembleResult(const Graph& g, std::vector<int> separator) {
    const int n = g.vertexCount();
    std::vector<char> removed(n, 0);
    for (int v : separator) removed[v] = 1;
    SeparatorResult r;
    r.separator = std::move(separator);
    r.components = componentsWithout(g, removed);
    std::size_t largest = 0;
    for (const auto& c : r.components) largest = std::max(largest, c.size());
    r.balance = Rational((long long)largest, n);
    return r;
}

bool separatorWorks(const Graph& g, const std::vector<char>& removed, const Rational& maxSize) {
    const int n = g.vertexCount();
    std::vector<char> visited(n, 0);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (removed[s] || visited[s]) continue;
        long long size = 0;
        stack.assign(1, s);
        visited[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++size;
            for (int w : g.neighbors(v))
                if (!removed[w] && !visited[w]) {
                    visited[w] = 1;
                    stack.push_back(w);
                }
        }
        if (Rational(size) > maxSize) return false;
    }
    return true;
}

}  // namespace

SeparatorResult balancedSeparatorBrute(const Graph& g, const Rational& fraction,
                                       ExpansionBudget& budget) {
    if (fraction <= Rational(0) || fraction >= Rational(1))
        throw std::invalid_argument("balance fraction must lie strictly between 0 and 1");
    const int n = g.vertexCount();
    const Rational maxSize = fraction * Rational(n);
    std::vector<char> removed(n, 0);
    for (int k = 0; k <= n; ++k) {
        // k-subsets in lexicographic order.
        std::vector<int> pick(k);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            budget.tick();
            std::fill(removed.begin(), removed.end(), 0);
            for (int v : pick) removed[v] = 1;
            if (separatorWorks(g, removed, maxSize)) return assembleResult(g, pick);
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw std::logic_error("removing all vertices always balances");  // unreachable
}

SeparatorResult balancedSeparatorBag(const Graph& g, const TreeDecomposition& td) {
    const int n = g.vertexCount();
    const Rational half(n, 2);
    std::vector<char> removed(n, 0);
    for (const auto& bag : td.bags) {
        std::fill(removed.begin(), removed.end(), 0);
        for (int v : bag) removed[v] = 1;
        if (separatorWorks(g, removed, half)) return assembleResult(g, bag);
    }
    throw std::logic_error("valid decomposition has no centroid bag");
}

namespace {

TreeDecomposition restrictDecomposition(const TreeDecomposition& td,
                                        const std::vector<int>& newLabelOf) {
    TreeDecomposition out;
    out.treeEdges = td.treeEdges;
    out.bags.reserve(td.bags.size());
    for (const auto& bag : td.bags) {
        std::vector<int> nb;
        for (int v : bag)
            if (newLabelOf[v] >= 0) nb.push_back(newLabelOf[v]);
        std::sort(nb.begin(), nb.end());
        out.bags.push_back(std::move(nb));
    }
    return out;
}

void separatorRec(const Graph& h, const std::vector<int>& labels, const Rational* fraction,
                  const TreeDecomposition* td, ExpansionBudget& budget, std::vector<int>& out,
                  std::vector<SeparatorLevel>& trace) {
    const int n = h.vertexCount();
    if (n < 2) {
        out.push_back(labels[0]);
        trace.push_back({n, 1, -1});
        return;
    }
    SeparatorResult sep = td ? balancedSeparatorBag(h, *td) : balancedSeparatorBrute(h, *fraction, budget);

    PathCollection paths = longestPaths(h, budget);
    std::vector<char> inSep(n, 0);
    for (int v : sep.separator) {
        inSep[v] = 1;
        out.push_back(labels[v]);
    }
    bool hitsAll = true;
    for (std::uint64_t i = 0; i < paths.count && hitsAll; ++i) {
        const std::uint8_t* p = paths.memberBegin(i);
        bool hit = false;
        for (int k = 0; k < paths.length && !hit; ++k) hit = inSep[p[k]];
        hitsAll = hit;
    }
    if (hitsAll) {
        trace.push_back({n, (int)sep.separator.size(), -1});
        return;
    }

    int carrier = -1;
    for (int ci = 0; ci < (int)sep.components.size(); ++ci) {
        std::vector<int> compLabels;
        Graph comp = h.induced(sep.components[ci], &compLabels);
        PathCollection cp = longestPaths(comp, budget);
        if (cp.length != paths.length) continue;
        if (carrier != -1)
            throw FalsificationError("longest paths found in two components after separator removal");
        carrier = ci;
    }
    if (carrier == -1)
        throw std::logic_error("separator marked as missing a longest path, yet no component carries one");

    std::vector<int> compLabels;
    Graph comp = h.induced(sep.components[carrier], &compLabels);
    trace.push_back({n, (int)sep.separator.size(), comp.vertexCount()});
    std::vector<int> outerLabels(comp.vertexCount());
    for (int v = 0; v < comp.vertexCount(); ++v) outerLabels[v] = labels[compLabels[v]];

    if (td) {
        std::vector<int> newLabelOf(n, -1);
        for (int v = 0; v < comp.vertexCount(); ++v) newLabelOf[compLabels[v]] = v;
        TreeDecomposition sub = restrictDecomposition(*td, newLabelOf);
        separatorRec(comp, outerLabels, nullptr, &sub, budget, out, trace);
    } else {
        separatorRec(comp, outerLabels, fraction, nullptr, budget, out, trace);
    }
}

SeparatorTransversalResult runSeparatorTransversal(const Graph& g, const Rational* fraction,
                                                   const TreeDecomposition* td,
                                                   ExpansionBudget& budget) {
    if (!connectivity(g).connected)
        throw std::invalid_argument("separator transversal needs a connected graph");
    if (g.vertexCount() < 2)
        throw std::invalid_argument("separator transversal needs at least 2 vertices");
    std::vector<int> identity(g.vertexCount());
    std::iota(identity.begin(), identity.end(), 0);
    SeparatorTransversalResult r;
    std::vector<int> out;
    separatorRec(g, identity, fraction, td, budget, out, r.trace);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    r.transversal.mode = TransversalMode::path;
    r.transversal.vertices = std::move(out);
    VerifyResult check = verifyTransversal(g, r.transversal.vertices, TransversalMode::path, budget);
    if (!check.ok)
        throw std::logic_error("separator recursion produced a non-transversal");
    return r;
}

}  // namespace

SeparatorTransversalResult separatorTransversal(const Graph& g, const Rational& fraction,
                                                ExpansionBudget& budget) {
    return runSeparatorTransversal(g, &fraction, nullptr, budget);
}

SeparatorTransversalResult separatorTransversal(const Graph& g, const TreeDecomposition& td,
                                                ExpansionBudget& budget) {
    return runSeparatorTransversal(g, nullptr, &td, budget);
}

}  // namespace trav
