#include "trav/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "trav/budget.hpp"

namespace trav {

Graph::Graph(int vertexCount, std::vector<std::pair<int, int>> edges) : n_(vertexCount) {
    if (n_ < 1) throw std::invalid_argument("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

bool Graph::hasEdge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Graph Graph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineNo = 0;
    bool haveCount = false;
    long long n = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!haveCount) {
            if (!(ls >> n)) {
                std::string junk;
                if (ls.clear(), ls >> junk)
                    throw ParseError(lineNo, "expected vertex count, got '" + junk + "'");
                continue;  // blank or comment-only line
            }
            std::string junk;
            if (ls >> junk) throw ParseError(lineNo, "trailing data after vertex count");
            if (n < 1) throw ParseError(lineNo, "vertex count must be at least 1");
            haveCount = true;
            continue;
        }
        long long u, v;
        if (!(ls >> u)) {
            std::string junk;
            if (ls.clear(), ls >> junk)
                throw ParseError(lineNo, "expected edge, got '" + junk + "'");
            continue;
        }
        if (!(ls >> v)) throw ParseError(lineNo, "edge needs two endpoints");
        std::string junk;
        if (ls >> junk) throw ParseError(lineNo, "trailing data after edge");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineNo, "edge endpoint out of range");
        if (u == v) throw ParseError(lineNo, "loops are not allowed");
        edges.emplace_back((int)u, (int)v);
    }
    if (!haveCount) throw ParseError(lineNo, "missing vertex count");
    return Graph((int)n, std::move(edges));
}

std::string Graph::serialize() const {
    std::ostringstream out;
    out << n_ << "\n";
    for (auto [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
}

Graph Graph::induced(const std::vector<int>& vertices, std::vector<int>* originalLabels) const {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> newLabel(n_, -1);
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= n_)
            throw std::invalid_argument("induced subgraph vertex out of range");
        newLabel[verts[i]] = (int)i;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : edges_)
        if (newLabel[u] >= 0 && newLabel[v] >= 0)
            edges.emplace_back(newLabel[u], newLabel[v]);
    if (originalLabels) *originalLabels = verts;
    return Graph((int)verts.size(), std::move(edges));
}

ConnectivityReport connectivity(const Graph& g) {
    int n = g.vertexCount();
    ConnectivityReport rep;
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = (int)rep.components.size();
        std::vector<int> stack{s}, members;
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) { comp[w] = id; stack.push_back(w); }
        }
        std::sort(members.begin(), members.end());
        rep.components.push_back(std::move(members));
    }
    rep.connected = rep.components.size() == 1;

    // articulation points, iterative low-link
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), childCount(n, 0);
    std::vector<bool> cut(n, false);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < g.neighbors(v).size()) {
                int w = g.neighbors(v)[idx++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    ++childCount[v];
                    disc[w] = low[w] = timer++;
                    stack.emplace_back(w, 0);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (p != root && low[v] >= disc[p]) cut[p] = true;
                }
            }
        }
        if (childCount[root] >= 2) cut[root] = true;
    }
    for (int v = 0; v < n; ++v)
        if (cut[v]) rep.cutVertices.push_back(v);
    rep.twoConnected = rep.connected && n >= 3 && rep.cutVertices.empty();
    return rep;
}

}  // namespace trav
