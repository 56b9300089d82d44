#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "trav/budget.hpp"
#include "trav/graph.hpp"

namespace trav {

// Longest members of one kind, all of the same order, each stored once in
// canonical orientation (paths: lexicographic minimum of the two traversals;
// cycles: minimum vertex first, then the smaller neighbor). The flat buffer
// holds count*length labels in lexicographic order.
struct SequenceCollection {
    int length = 0;
    std::uint64_t count = 0;
    std::vector<std::uint8_t> flat;
    std::vector<std::uint64_t> perVertexCounts;

    std::vector<int> member(std::uint64_t i) const;
    const std::uint8_t* memberBegin(std::uint64_t i) const { return flat.data() + i * length; }
};

struct PathCollection : SequenceCollection {};
struct CycleCollection : SequenceCollection {};

// All longest paths of g. Every vertex alone is a path, so length >= 1.
// Budget is charged one tick per DFS node expansion.
PathCollection longestPaths(const Graph& g, ExpansionBudget& budget);

// All longest cycles of g (empty collection, length 0, when g is acyclic).
// Requires at least 3 vertices.
CycleCollection longestCycles(const Graph& g, ExpansionBudget& budget);

struct IntersectionCheck {
    bool allIntersect = true;
    // indices into the collection of the first vertex-disjoint pair found
    std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

IntersectionCheck pairwiseIntersectionCheck(const SequenceCollection& c, int vertexCount);

}  // namespace trav
