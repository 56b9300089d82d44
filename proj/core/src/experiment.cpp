#include "trav/experiment.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "trav/arcs.hpp"
#include "trav/bounds.hpp"
#include "trav/generate.hpp"
#include "trav/longest.hpp"
#include "trav/separator.hpp"
#include "trav/transversal.hpp"

namespace trav {
namespace {

const std::vector<std::string> kFamilies = {
    "exhaustive-connected", "random-connected", "random-2connected",
    "triangle-chain",       "random-arc-model", "partial-ktree"};
const std::vector<std::string> kChecks = {"thm1",  "thm2",  "thomassen", "prop3", "prop4",
                                          "prop5", "thm6",  "frac",      "intersect"};

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

long long parseInt(const std::string& v, int line) {
    try {
        std::size_t used = 0;
        long long x = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + v + "'");
    }
}

}  // namespace

ExperimentConfig parseExperimentConfig(const std::string& text) {
    ExperimentConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineNumber = 0;
    bool sawFamily = false;
    while (std::getline(in, line)) {
        ++lineNumber;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trimmed(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineNumber, "expected 'key = value'");
        const std::string key = trimmed(line.substr(0, eq));
        const std::string value = trimmed(line.substr(eq + 1));
        if (value.empty()) throw ParseError(lineNumber, "empty value for '" + key + "'");
        if (key == "family") {
            if (std::find(kFamilies.begin(), kFamilies.end(), value) == kFamilies.end())
                throw ParseError(lineNumber, "unknown family '" + value + "'");
            cfg.family = value;
            sawFamily = true;
        } else if (key == "n") {
            cfg.n = (int)parseInt(value, lineNumber);
        } else if (key == "t") {
            cfg.t = (int)parseInt(value, lineNumber);
        } else if (key == "m") {
            cfg.m = (int)parseInt(value, lineNumber);
        } else if (key == "k") {
            cfg.k = (int)parseInt(value, lineNumber);
        } else if (key == "count") {
            cfg.count = (int)parseInt(value, lineNumber);
        } else if (key == "seed") {
            cfg.seed = (std::uint64_t)parseInt(value, lineNumber);
        } else if (key == "budget") {
            cfg.budget = (std::uint64_t)parseInt(value, lineNumber);
        } else if (key == "p") {
            try {
                cfg.p = Rational::parse(value);
            } catch (const std::exception& e) {
                throw ParseError(lineNumber, e.what());
            }
        } else if (key == "alpha") {
            try {
                cfg.alpha = Rational::parse(value);
            } catch (const std::exception& e) {
                throw ParseError(lineNumber, e.what());
            }
        } else if (key == "iso") {
            if (value == "true")
                cfg.isoReduce = true;
            else if (value == "false")
                cfg.isoReduce = false;
            else
                throw ParseError(lineNumber, "iso must be true or false");
        } else if (key == "name") {
            cfg.name = value;
        } else if (key == "checks") {
            cfg.checks.clear();
            std::istringstream cs(value);
            std::string item;
            while (std::getline(cs, item, ',')) {
                item = trimmed(item);
                if (item.empty()) continue;
                if (std::find(kChecks.begin(), kChecks.end(), item) == kChecks.end())
                    throw ParseError(lineNumber, "unknown check '" + item + "'");
                cfg.checks.push_back(item);
            }
            if (cfg.checks.empty()) throw ParseError(lineNumber, "empty check list");
        } else {
            throw ParseError(lineNumber, "unknown key '" + key + "'");
        }
    }
    if (!sawFamily) throw ParseError(lineNumber, "missing 'family'");
    if (cfg.checks.empty()) throw ParseError(lineNumber, "missing 'checks'");
    return cfg;
}

namespace {

struct InstanceData {
    Graph g;
    std::optional<TreeDecomposition> td;
    std::optional<ArcModel> model;
};

void forEachInstance(const ExperimentConfig& cfg,
                     const std::function<void(long long, InstanceData&)>& fn) {
    long long id = 0;
    if (cfg.family == "exhaustive-connected") {
        if (cfg.n < 1 || cfg.n > 7)
            throw std::invalid_argument("exhaustive-connected needs 1 <= n <= 7");
        forEachConnectedGraph(cfg.n, cfg.isoReduce, [&](const Graph& g) {
            InstanceData inst{g, std::nullopt, std::nullopt};
            fn(id++, inst);
        });
        return;
    }
    if (cfg.count < 1) throw std::invalid_argument("count must be at least 1");
    if (cfg.family == "random-connected" || cfg.family == "random-2connected") {
        if (cfg.n < 1 || cfg.n > 14)
            throw std::invalid_argument("random graph families support 1 <= n <= 14");
        for (int i = 0; i < cfg.count; ++i) {
            Graph g = cfg.family == "random-connected"
                          ? randomConnected(cfg.n, cfg.p, cfg.seed + (std::uint64_t)i)
                          : randomTwoConnected(cfg.n, cfg.p, cfg.seed + (std::uint64_t)i);
            InstanceData inst{std::move(g), std::nullopt, std::nullopt};
            fn(id++, inst);
        }
    } else if (cfg.family == "triangle-chain") {
        if (cfg.t < 1 || cfg.t > 4) throw std::invalid_argument("triangle-chain supports 1 <= t <= 4");
        InstanceData inst{triangleChain(cfg.t), std::nullopt, std::nullopt};
        fn(id++, inst);
    } else if (cfg.family == "random-arc-model") {
        if (cfg.m < 2 || cfg.m > 12)
            throw std::invalid_argument("random-arc-model supports 2 <= m <= 12");
        for (int i = 0; i < cfg.count; ++i) {
            ArcModel model = randomArcModel(cfg.m, cfg.seed + (std::uint64_t)i);
            InstanceData inst{arcIntersectionGraph(model), std::nullopt, std::move(model)};
            fn(id++, inst);
        }
    } else if (cfg.family == "partial-ktree") {
        if (cfg.k < 1 || cfg.k > 3) throw std::invalid_argument("partial-ktree supports 1 <= k <= 3");
        if (cfg.n < cfg.k + 1 || cfg.n > 14)
            throw std::invalid_argument("partial-ktree supports k+1 <= n <= 14");
        for (int i = 0; i < cfg.count; ++i) {
            GeneratedDecomposition gen = partialKTree(cfg.k, cfg.n, cfg.seed + (std::uint64_t)i);
            InstanceData inst{std::move(gen.graph), std::move(gen.decomposition), std::nullopt};
            fn(id++, inst);
        }
    } else {
        throw std::invalid_argument("unknown family '" + cfg.family + "'");
    }
}

struct RatioTracker {
    std::optional<Rational> best;
    void feed(long long measured, long long bound) {
        if (bound <= 0) return;
        Rational r(measured, bound);
        if (!best || r > *best) best = r;
    }
};

}  // namespace

Report runExperiment(const ExperimentConfig& cfg) {
    Report report;
    RatioTracker ratio;

    forEachInstance(cfg, [&](long long id, InstanceData& inst) {
        const Graph& g = inst.g;
        const int n = g.vertexCount();
        ConnectivityReport conn = connectivity(g);
        std::optional<PathCollection> pathCache;
        auto paths = [&]() -> const PathCollection& {
            if (!pathCache) {
                ExpansionBudget b(cfg.budget);
                pathCache = longestPaths(g, b);
            }
            return *pathCache;
        };

        auto addRow = [&](const std::string& check, int order, long long members,
                          const std::string& bound, const std::string& measured, bool pass,
                          const std::string& note) {
            report.rows.push_back({id, n, order, members, check, bound, measured,
                                   pass ? "pass" : "fail", note});
            if (!pass) ++report.failures;
        };
        auto addSkip = [&](const std::string& check, const std::string& note) {
            report.rows.push_back({id, n, 0, 0, check, "", "", "skip", note});
            ++report.skips;
        };

        for (const std::string& check : cfg.checks) {
            try {
                ExpansionBudget budget(cfg.budget);
                if (check == "thm1") {
                    Transversal t = exactLpt(g, budget);
                    const long long bound = ceilLinearMinusCbrt(n, 4, 90);
                    ratio.feed(t.size(), bound);
                    addRow(check, paths().length, (long long)paths().count,
                           std::to_string(bound), std::to_string(t.size()), t.size() <= bound, "");
                } else if (check == "thm2") {
                    if (!conn.twoConnected) {
                        addSkip(check, "needs a 2-connected instance");
                        continue;
                    }
                    Transversal t = exactLct(g, budget);
                    ExpansionBudget b2(cfg.budget);
                    CycleCollection cycles = longestCycles(g, b2);
                    const long long bound = ceilLinearMinusCbrt(n, 3, 36);
                    ratio.feed(t.size(), bound);
                    addRow(check, cycles.length, (long long)cycles.count, std::to_string(bound),
                           std::to_string(t.size()), t.size() <= bound, "");
                } else if (check == "thomassen") {
                    Transversal t = exactLct(g, budget);
                    ExpansionBudget b2(cfg.budget);
                    CycleCollection cycles = longestCycles(g, b2);
                    const long long bound = ceilThird(n);
                    ratio.feed(t.size(), bound);
                    addRow(check, cycles.length, (long long)cycles.count, std::to_string(bound),
                           std::to_string(t.size()), t.size() <= bound, "");
                } else if (check == "prop3") {
                    Transversal t = greedyAlphaTransversal(g, cfg.alpha, budget);
                    const bool pass = fitsCountingBound(t.size(), paths().count, cfg.alpha, n);
                    addRow(check, paths().length, (long long)paths().count,
                           "|P|/" + cfg.alpha.str() + "+sqrt(" + cfg.alpha.str() + "n)",
                           std::to_string(t.size()), pass, "alpha=" + cfg.alpha.str());
                } else if (check == "prop4") {
                    if (n < 2) {
                        addSkip(check, "separator recursion needs order >= 2");
                        continue;
                    }
                    SeparatorTransversalResult r = separatorTransversal(g, Rational(2, 3), budget);
                    const bool pass = fitsSqrtLogBound(r.transversal.size(), 9, n);
                    addRow(check, paths().length, (long long)paths().count, "9*sqrt(n)*log2(n)",
                           std::to_string(r.transversal.size()), pass,
                           "levels=" + std::to_string(r.trace.size()));
                } else if (check == "prop5") {
                    if (!inst.td) {
                        addSkip(check, "family provides no decomposition");
                        continue;
                    }
                    SeparatorTransversalResult r = separatorTransversal(g, *inst.td, budget);
                    const int k = inst.td->width();
                    const bool pass = fitsLogBound(r.transversal.size(), 3LL * k, n);
                    addRow(check, paths().length, (long long)paths().count,
                           "3*" + std::to_string(k) + "*log2(n)",
                           std::to_string(r.transversal.size()), pass,
                           "levels=" + std::to_string(r.trace.size()));
                } else if (check == "thm6") {
                    if (!inst.model) {
                        addSkip(check, "family provides no arc model");
                        continue;
                    }
                    CascadeResult r = theorem6Transversal(*inst.model, TransversalMode::path, budget);
                    ratio.feed(r.transversal.size(), 3);
                    addRow(check, 0, r.chainsChecked, "3", std::to_string(r.transversal.size()),
                           r.transversal.size() <= 3, "step=" + std::to_string(r.step));
                    if (conn.twoConnected) {
                        ExpansionBudget b2(cfg.budget);
                        CascadeResult rc = theorem6Transversal(*inst.model, TransversalMode::cycle, b2);
                        ratio.feed(rc.transversal.size(), 3);
                        addRow(check, 0, rc.chainsChecked, "3", std::to_string(rc.transversal.size()),
                               rc.transversal.size() <= 3,
                               "cycle mode, step=" + std::to_string(rc.step));
                    }
                } else if (check == "frac") {
                    FractionalTransversal f = fractionalLpt(g, budget);
                    long long support = 0;
                    for (const Rational& w : f.weights)
                        if (!(w == Rational(0))) ++support;
                    addRow(check, paths().length, (long long)paths().count, "sqrt(n)",
                           f.total.str(), leSqrt(f.total, n),
                           "support=" + std::to_string(support));
                } else if (check == "intersect") {
                    IntersectionCheck pc = pairwiseIntersectionCheck(paths(), n);
                    addRow(check, paths().length, (long long)paths().count, "all pairs meet",
                           pc.allIntersect ? "yes" : "no", pc.allIntersect,
                           pc.allIntersect ? "paths" : "disjoint pair of longest paths");
                    if (conn.twoConnected) {
                        ExpansionBudget b2(cfg.budget);
                        CycleCollection cycles = longestCycles(g, b2);
                        IntersectionCheck cc = pairwiseIntersectionCheck(cycles, n);
                        addRow(check, cycles.length, (long long)cycles.count, "all pairs meet",
                               cc.allIntersect ? "yes" : "no", cc.allIntersect,
                               cc.allIntersect ? "cycles" : "disjoint pair of longest cycles");
                    }
                }
            } catch (const BudgetExceeded& e) {
                addSkip(check, e.what());
            } catch (const FalsificationError& e) {
                report.rows.push_back({id, n, 0, 0, check, "", "", "fail",
                                       std::string("falsification: ") + e.what()});
                ++report.failures;
            } catch (const std::invalid_argument& e) {
                addSkip(check, e.what());
            }
        }
    });

    if (ratio.best) report.maxRatio = ratio.best->str();
    return report;
}

std::string reportTsv(const Report& r) {
    std::ostringstream out;
    out << "id\tn\torder\tmembers\tcheck\tbound\tmeasured\tresult\tnote\n";
    for (const ReportRow& row : r.rows)
        out << row.id << '\t' << row.n << '\t' << row.order << '\t' << row.members << '\t'
            << row.check << '\t' << row.bound << '\t' << row.measured << '\t' << row.result
            << '\t' << row.note << '\n';
    return out.str();
}

std::string reportJson(const Report& r) {
    nlohmann::ordered_json j;
    j["rows"] = nlohmann::ordered_json::array();
    for (const ReportRow& row : r.rows) {
        nlohmann::ordered_json o;
        o["id"] = row.id;
        o["n"] = row.n;
        o["order"] = row.order;
        o["members"] = row.members;
        o["check"] = row.check;
        o["bound"] = row.bound;
        o["measured"] = row.measured;
        o["result"] = row.result;
        o["note"] = row.note;
        j["rows"].push_back(std::move(o));
    }
    j["summary"] = {{"failures", r.failures}, {"skips", r.skips}, {"max_ratio", r.maxRatio}};
    return j.dump(2) + "\n";
}

}  // namespace trav
