#pragma once

#include <cstdint>
#include <functional>

#include "trav/arcs.hpp"
#include "trav/graph.hpp"
#include "trav/rational.hpp"
#include "trav/separator.hpp"
#include "trav/weave.hpp"

namespace trav {

// Every connected graph on n <= 7 labeled vertices, by adjacency-bitmask
// sweep. With isoReduce only canonical representatives are emitted (the
// graph whose edge bitmask is minimal over all vertex relabelings).
void forEachConnectedGraph(int n, bool isoReduce, const std::function<void(const Graph&)>& fn);

// Seeded G(n, p) resampled until connected / 2-connected. p is an exact
// rational probability; identical seeds give identical graphs everywhere.
Graph randomConnected(int n, const Rational& p, std::uint64_t seed);
Graph randomTwoConnected(int n, const Rational& p, std::uint64_t seed);

// t triangles joined in a path by bridges: n = 3t, 3t + t - 1 edges.
Graph triangleChain(int t);

// m open arcs with grid-rational endpoints and lengths in [0.15, 0.6],
// resampled until all endpoints are distinct and the circle is covered
// (which forces a connected intersection graph).
ArcModel randomArcModel(int m, std::uint64_t seed);

struct GeneratedDecomposition {
    Graph graph;
    TreeDecomposition decomposition;
};

// Random k-tree on n vertices thinned by random edge deletions that keep
// the graph connected, together with its natural width-k decomposition.
GeneratedDecomposition partialKTree(int k, int n, std::uint64_t seed);

// Valid block matching on two length-tau paths: blocks occupy disjoint
// coordinate ranges on both sides (hence pairwise parallel across blocks)
// and are internally decreasing (hence pairwise crossing), size 1 or even.
BlockMatching randomBlockMatching(int tau, std::uint64_t seed);

// Unstructured matching obeying the span bound 2*|j - i| <= window, for
// feeding the refinement pipeline.
LadderInstance randomLadderInstance(int tau, int window, int targetSize, std::uint64_t seed);

}  // namespace trav
