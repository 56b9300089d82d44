#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trav/budget.hpp"
#include "trav/graph.hpp"
#include "trav/rational.hpp"
#include "trav/transversal.hpp"

namespace trav {

struct TreeDecomposition {
    std::vector<std::vector<int>> bags;         // each sorted ascending
    std::vector<std::pair<int, int>> treeEdges; // pairs of bag indices
    int width() const;                          // max bag size - 1 (-1 if all empty)
};

// Text format: header `s td <#bags> <width+1> <n>`, then `b <index> <v...>`
// lines with 0-based bag indices in ascending order, then one `<i> <j>` line
// per tree edge. '#' starts a comment. All three decomposition axioms are
// checked against g; violations name the offending vertex or edge.
TreeDecomposition parseTreeDecomposition(const std::string& text, const Graph& g);
std::string serializeTreeDecomposition(const TreeDecomposition& td, int vertexCount);

struct SeparatorResult {
    std::vector<int> separator;                // sorted ascending
    std::vector<std::vector<int>> components;  // of g - separator, ordered by smallest vertex
    Rational balance;                          // max component size / n
};

// Minimum-size vertex set whose removal leaves every component of order at
// most fraction * n; exhaustive over subset sizes ascending, lexicographic
// within a size, so the result is the lexicographically least optimum.
SeparatorResult balancedSeparatorBrute(const Graph& g, const Rational& fraction,
                                       ExpansionBudget& budget);

// First bag (ascending index) whose removal leaves components of order at
// most n/2; such a centroid bag always exists in a valid decomposition.
SeparatorResult balancedSeparatorBag(const Graph& g, const TreeDecomposition& td);

struct SeparatorLevel {
    int order = 0;           // order of the graph at this level
    int separatorSize = 0;
    int componentOrder = -1; // order of the component recursed into; -1 = stopped here
};

struct SeparatorTransversalResult {
    Transversal transversal;
    std::vector<SeparatorLevel> trace;
};

// Separator recursion: take a balanced separator, stop if it already hits
// every longest path, otherwise recurse into the unique component still
// carrying paths of maximum order. Output is verified before returning.
SeparatorTransversalResult separatorTransversal(const Graph& g, const Rational& fraction,
                                                ExpansionBudget& budget);
SeparatorTransversalResult separatorTransversal(const Graph& g, const TreeDecomposition& td,
                                                ExpansionBudget& budget);

}  // namespace trav
