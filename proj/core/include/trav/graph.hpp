#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trav {

// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges.
class Graph {
public:
    Graph(int vertexCount, std::vector<std::pair<int, int>> edges);

    // Edge-list text: '#' starts a comment, first data line is the vertex
    // count, every further data line is one "u v" pair. Duplicate edges are
    // collapsed; loops and out-of-range endpoints are line-numbered errors.
    static Graph parse(std::string_view text);
    std::string serialize() const;

    int vertexCount() const { return n_; }
    int edgeCount() const { return (int)edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool hasEdge(int u, int v) const;

    // Induced subgraph on the given vertices (need not be sorted). The i-th
    // entry of the returned map is the original label of new vertex i.
    Graph induced(const std::vector<int>& vertices, std::vector<int>* originalLabels = nullptr) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;       // canonical: u < v, sorted
    std::vector<std::vector<int>> adj_;            // sorted neighbor lists
};

struct ConnectivityReport {
    bool connected = false;
    bool twoConnected = false;
    std::vector<std::vector<int>> components;      // each sorted, ordered by minimum
    std::vector<int> cutVertices;                  // sorted
};

ConnectivityReport connectivity(const Graph& g);

}  // namespace trav
