#include "trav/longest.hpp"

#include <algorithm>
#include <cstring>
#include <unordered_map>

namespace trav {

std::vector<int> SequenceCollection::member(std::uint64_t i) const {
    const std::uint8_t* p = memberBegin(i);
    return std::vector<int>(p, p + length);
}

namespace {

constexpr int kMaxVertices = 255;

void checkSize(const Graph& g) {
    if (g.vertexCount() > kMaxVertices)
        throw std::invalid_argument("enumeration supports at most 255 vertices");
}

struct PathSearch {
    const Graph& g;
    ExpansionBudget& budget;
    SequenceCollection& out;
    std::vector<std::uint8_t> path;
    std::vector<bool> visited;

    void record() {
        int len = (int)path.size();
        if (len < out.length) return;
        if (len > out.length) {
            out.length = len;
            out.count = 0;
            out.flat.clear();
            std::fill(out.perVertexCounts.begin(), out.perVertexCounts.end(), 0);
        }
        // keep only the canonical orientation so each path lands exactly once
        for (int i = 0, j = len - 1; i < j; ++i, --j) {
            if (path[i] < path[j]) break;
            if (path[i] > path[j]) return;
        }
        out.flat.insert(out.flat.end(), path.begin(), path.end());
        ++out.count;
        for (std::uint8_t v : path) ++out.perVertexCounts[v];
    }

    void dfs(int v) {
        record();
        for (int w : g.neighbors(v)) {
            if (visited[w]) continue;
            budget.tick();
            visited[w] = true;
            path.push_back((std::uint8_t)w);
            dfs(w);
            path.pop_back();
            visited[w] = false;
        }
    }
};

struct CycleSearch {
    const Graph& g;
    ExpansionBudget& budget;
    SequenceCollection& out;
    int root = 0;
    std::vector<std::uint8_t> path;
    std::vector<bool> visited;

    void record() {
        int len = (int)path.size();
        if (len < 3 || !g.hasEdge(path.back(), root)) return;
        if (len < out.length) return;
        if (path[1] > path[len - 1]) return;  // one orientation per cycle
        if (len > out.length) {
            out.length = len;
            out.count = 0;
            out.flat.clear();
            std::fill(out.perVertexCounts.begin(), out.perVertexCounts.end(), 0);
        }
        out.flat.insert(out.flat.end(), path.begin(), path.end());
        ++out.count;
        for (std::uint8_t v : path) ++out.perVertexCounts[v];
    }

    void dfs(int v) {
        record();
        for (int w : g.neighbors(v)) {
            if (w <= root || visited[w]) continue;
            budget.tick();
            visited[w] = true;
            path.push_back((std::uint8_t)w);
            dfs(w);
            path.pop_back();
            visited[w] = false;
        }
    }
};

}  // namespace

PathCollection longestPaths(const Graph& g, ExpansionBudget& budget) {
    checkSize(g);
    PathCollection out;
    out.perVertexCounts.assign(g.vertexCount(), 0);
    PathSearch search{g, budget, out};
    search.visited.assign(g.vertexCount(), false);
    for (int s = 0; s < g.vertexCount(); ++s) {
        budget.tick();
        search.visited[s] = true;
        search.path.assign(1, (std::uint8_t)s);
        search.dfs(s);
        search.visited[s] = false;
    }
    return out;
}

CycleCollection longestCycles(const Graph& g, ExpansionBudget& budget) {
    checkSize(g);
    if (g.vertexCount() < 3)
        throw std::invalid_argument("cycle enumeration needs at least 3 vertices");
    CycleCollection out;
    out.perVertexCounts.assign(g.vertexCount(), 0);
    CycleSearch search{g, budget, out};
    search.visited.assign(g.vertexCount(), false);
    for (int s = 0; s + 2 < g.vertexCount(); ++s) {
        budget.tick();
        search.root = s;
        search.visited[s] = true;
        search.path.assign(1, (std::uint8_t)s);
        search.dfs(s);
        search.visited[s] = false;
    }
    return out;
}

IntersectionCheck pairwiseIntersectionCheck(const SequenceCollection& c, int vertexCount) {
    IntersectionCheck result;
    if (c.count < 2) return result;
    size_t words = ((size_t)vertexCount + 63) / 64;
    // distinct vertex sets suffice: intersection only depends on the set
    std::vector<std::uint64_t> masks;
    std::vector<std::uint64_t> firstWithMask;
    std::unordered_map<std::string, std::uint64_t> seen;
    std::string key(words * 8, '\0');
    std::vector<std::uint64_t> mask(words);
    for (std::uint64_t i = 0; i < c.count; ++i) {
        std::fill(mask.begin(), mask.end(), 0);
        const std::uint8_t* p = c.memberBegin(i);
        for (int k = 0; k < c.length; ++k) mask[p[k] / 64] |= 1ULL << (p[k] % 64);
        std::memcpy(key.data(), mask.data(), words * 8);
        if (seen.emplace(key, i).second) {
            masks.insert(masks.end(), mask.begin(), mask.end());
            firstWithMask.push_back(i);
        }
    }
    size_t distinct = firstWithMask.size();
    for (size_t a = 0; a < distinct; ++a) {
        for (size_t b = a + 1; b < distinct; ++b) {
            bool meet = false;
            for (size_t w = 0; w < words; ++w)
                if (masks[a * words + w] & masks[b * words + w]) { meet = true; break; }
            if (!meet) {
                result.allIntersect = false;
                result.witness = {firstWithMask[a], firstWithMask[b]};
                return result;
            }
        }
    }
    return result;
}

}  // namespace trav
