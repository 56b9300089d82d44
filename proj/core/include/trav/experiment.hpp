#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trav/budget.hpp"
#include "trav/rational.hpp"

namespace trav {

// Families: exhaustive-connected | random-connected | random-2connected |
// triangle-chain | random-arc-model | partial-ktree.
// Checks: thm1 thm2 thomassen prop3 prop4 prop5 thm6 frac intersect.
struct ExperimentConfig {
    std::string family;
    int n = 0;
    int t = 0;
    int m = 0;
    int k = 0;
    int count = 1;           // instances for random families
    Rational p{1, 2};        // edge probability
    Rational alpha{3};       // counting-transversal parameter
    std::uint64_t seed = 1;
    std::uint64_t budget = ExpansionBudget::kDefaultLimit;
    bool isoReduce = true;
    std::vector<std::string> checks;
    std::string name = "experiment";
};

// Key = value lines, '#' comments. Unknown keys and malformed values error.
ExperimentConfig parseExperimentConfig(const std::string& text);

struct ReportRow {
    long long id = 0;
    int n = 0;               // instance order (arc count for arc models)
    int order = 0;           // longest path/cycle order used by the check
    long long members = 0;   // how many longest members were enumerated
    std::string check;
    std::string bound;       // human-readable bound value/expression
    std::string measured;
    std::string result;      // pass | fail | skip
    std::string note;
};

struct Report {
    std::vector<ReportRow> rows;
    long long failures = 0;
    long long skips = 0;
    std::string maxRatio;    // max measured/bound over integer-valued rows
};

Report runExperiment(const ExperimentConfig& cfg);

std::string reportTsv(const Report& r);
std::string reportJson(const Report& r);

}  // namespace trav
