#pragma once

#include <optional>
#include <vector>

#include "trav/budget.hpp"
#include "trav/graph.hpp"
#include "trav/longest.hpp"
#include "trav/rational.hpp"

namespace trav {

enum class TransversalMode { path, cycle };

struct Transversal {
    TransversalMode mode = TransversalMode::path;
    std::vector<int> vertices;      // sorted ascending
    bool certifiedMinimum = false;
    int size() const { return (int)vertices.size(); }
};

// Minimum hitting set of all longest paths, certified minimal; among the
// optima the lexicographically least vertex set is returned.
Transversal exactLpt(const Graph& g, ExpansionBudget& budget);

// Same for longest cycles. Rejects acyclic input.
Transversal exactLct(const Graph& g, ExpansionBudget& budget);

struct FractionalTransversal {
    std::vector<Rational> weights;  // one per vertex, in [0, 1]
    Rational total;
};

// Weights with total <= sqrt(n) and weight >= 1 on every longest path: the
// characteristic function of one longest path when ell*ell <= n, otherwise
// the constant 1/ceil(sqrt(n)). Both constraints are re-verified in exact
// arithmetic before returning.
FractionalTransversal fractionalLpt(const Graph& g, ExpansionBudget& budget);

// Counting-argument transversal: repeatedly commits a vertex that lies on at
// least alpha longest paths and recurses into the component still carrying
// longest paths. Output is verified and has size <= |P|/alpha + sqrt(alpha*n).
Transversal greedyAlphaTransversal(const Graph& g, const Rational& alpha, ExpansionBudget& budget);

struct VerifyResult {
    bool ok = true;
    std::optional<std::vector<int>> witness;  // an uncovered longest member
};

VerifyResult verifyTransversal(const Graph& g, const std::vector<int>& candidate,
                               TransversalMode mode, ExpansionBudget& budget);

}  // namespace trav
