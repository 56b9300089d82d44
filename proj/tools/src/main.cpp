#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "trav/arcs.hpp"
#include "trav/bounds.hpp"
#include "trav/budget.hpp"
#include "trav/experiment.hpp"
#include "trav/graph.hpp"
#include "trav/longest.hpp"
#include "trav/separator.hpp"
#include "trav/transversal.hpp"
#include "trav/weave.hpp"

namespace {

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string joinVertices(const std::vector<int>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(vs[i]);
    }
    return s;
}

void printTransversal(const trav::Transversal& t) {
    std::cout << "size\t" << t.size() << "\n";
    std::cout << "vertices\t" << joinVertices(t.vertices) << "\n";
    std::cout << "minimum\t" << (t.certifiedMinimum ? "certified" : "not-certified") << "\n";
}

std::string wovenPathText(const trav::WovenPath& p) {
    std::string s;
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        if (i) s += ' ';
        s += p.vertices[i].label();
    }
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"longest path and cycle transversal toolkit"};
    app.require_subcommand(1);
    int exitCode = 0;

    // enum
    auto* cmdEnum = app.add_subcommand("enum", "enumerate all longest paths or cycles");
    std::string enumFile;
    bool enumPaths = false, enumCycles = false;
    std::uint64_t enumBudget = trav::ExpansionBudget::kDefaultLimit;
    cmdEnum->add_option("graph-file", enumFile, "edge-list graph file")->required();
    cmdEnum->add_flag("--paths", enumPaths, "enumerate longest paths");
    cmdEnum->add_flag("--cycles", enumCycles, "enumerate longest cycles");
    cmdEnum->add_option("--budget", enumBudget, "node expansion budget");
    cmdEnum->callback([&] {
        if (enumPaths == enumCycles)
            throw CLI::ValidationError("enum", "pass exactly one of --paths / --cycles");
        trav::Graph g = trav::Graph::parse(readFile(enumFile));
        trav::ExpansionBudget budget(enumBudget);
        trav::SequenceCollection c =
            enumPaths ? (trav::SequenceCollection)trav::longestPaths(g, budget)
                      : (trav::SequenceCollection)trav::longestCycles(g, budget);
        std::cout << "length\t" << c.length << "\n";
        std::cout << "count\t" << c.count << "\n";
        for (int v = 0; v < g.vertexCount(); ++v)
            std::cout << "v" << v << "\t" << c.perVertexCounts[v] << "\n";
    });

    // weave
    auto* cmdWeave = app.add_subcommand("weave", "run the block-matching weave");
    std::string weaveFile;
    cmdWeave->add_option("ladder-file", weaveFile, "ladder file: tau line, then one block per line")
        ->required();
    cmdWeave->callback([&] {
        trav::BlockMatching bm = trav::parseLadder(readFile(weaveFile));
        trav::WeaveResult w = trav::weave(bm);
        const int tau = bm.instance.tau;
        const int msize = (int)bm.instance.matching.size();
        std::cout << "p_prime\t" << wovenPathText(w.pPrime) << "\n";
        std::cout << "q_prime\t" << wovenPathText(w.qPrime) << "\n";
        std::cout << "order_p\t" << w.pPrime.order() << "\n";
        std::cout << "order_q\t" << w.qPrime.order() << "\n";
        std::cout << "certificate\t" << w.pPrime.order() << "+" << w.qPrime.order() << " = "
                  << 2 * tau + 2 * msize << " = 2*" << tau << "+2*" << msize
                  << ", longer >= " << tau + msize << "\n";
    });

    // lpt / lct
    auto* cmdLpt = app.add_subcommand("lpt", "minimum longest-path transversal");
    auto* cmdLct = app.add_subcommand("lct", "minimum longest-cycle transversal");
    std::string lptFile, lctFile;
    std::uint64_t lptBudget = trav::ExpansionBudget::kDefaultLimit;
    std::uint64_t lctBudget = trav::ExpansionBudget::kDefaultLimit;
    cmdLpt->add_option("graph-file", lptFile, "edge-list graph file")->required();
    cmdLpt->add_option("--budget", lptBudget, "node expansion budget");
    cmdLct->add_option("graph-file", lctFile, "edge-list graph file")->required();
    cmdLct->add_option("--budget", lctBudget, "node expansion budget");
    cmdLpt->callback([&] {
        trav::Graph g = trav::Graph::parse(readFile(lptFile));
        if (!trav::connectivity(g).connected)
            std::cerr << "note: graph is disconnected; hitting all longest paths anyway\n";
        trav::ExpansionBudget budget(lptBudget);
        printTransversal(trav::exactLpt(g, budget));
    });
    cmdLct->callback([&] {
        trav::Graph g = trav::Graph::parse(readFile(lctFile));
        trav::ExpansionBudget budget(lctBudget);
        printTransversal(trav::exactLct(g, budget));
    });

    // frac
    auto* cmdFrac = app.add_subcommand("frac", "fractional longest-path transversal");
    std::string fracFile;
    std::uint64_t fracBudget = trav::ExpansionBudget::kDefaultLimit;
    cmdFrac->add_option("graph-file", fracFile, "edge-list graph file")->required();
    cmdFrac->add_option("--budget", fracBudget, "node expansion budget");
    cmdFrac->callback([&] {
        trav::Graph g = trav::Graph::parse(readFile(fracFile));
        trav::ExpansionBudget budget(fracBudget);
        trav::FractionalTransversal f = trav::fractionalLpt(g, budget);
        for (int v = 0; v < g.vertexCount(); ++v)
            std::cout << "w" << v << "\t" << f.weights[v].str() << "\n";
        std::cout << "total\t" << f.total.str() << "\n";
        std::cout << "certificate\ttotal^2 = " << (f.total * f.total).str() << " <= "
                  << g.vertexCount() << ", every longest path weighs >= 1\n";
    });

    // alpha
    auto* cmdAlpha = app.add_subcommand("alpha", "counting-argument transversal");
    std::string alphaFile, alphaValue{"3"};
    std::uint64_t alphaBudget = trav::ExpansionBudget::kDefaultLimit;
    cmdAlpha->add_option("graph-file", alphaFile, "edge-list graph file")->required();
    cmdAlpha->add_option("--alpha", alphaValue, "rational alpha >= 2")->required();
    cmdAlpha->add_option("--budget", alphaBudget, "node expansion budget");
    cmdAlpha->callback([&] {
        trav::Graph g = trav::Graph::parse(readFile(alphaFile));
        trav::ExpansionBudget budget(alphaBudget);
        trav::Transversal t =
            trav::greedyAlphaTransversal(g, trav::Rational::parse(alphaValue), budget);
        printTransversal(t);
    });

    // septrans
    auto* cmdSep = app.add_subcommand("septrans", "separator-recursion transversal");
    std::string sepFile, sepTdFile, sepFraction{"2/3"};
    std::uint64_t sepBudget = trav::ExpansionBudget::kDefaultLimit;
    cmdSep->add_option("graph-file", sepFile, "edge-list graph file")->required();
    auto* tdOpt = cmdSep->add_option("--td", sepTdFile, "tree decomposition file (bag strategy)");
    auto* frOpt = cmdSep->add_option("--fraction", sepFraction, "balance fraction: 1/2 or 2/3");
    tdOpt->excludes(frOpt);
    cmdSep->add_option("--budget", sepBudget, "node expansion budget");
    cmdSep->callback([&] {
        trav::Graph g = trav::Graph::parse(readFile(sepFile));
        trav::ExpansionBudget budget(sepBudget);
        trav::SeparatorTransversalResult r = [&] {
            if (!sepTdFile.empty()) {
                trav::TreeDecomposition td = trav::parseTreeDecomposition(readFile(sepTdFile), g);
                return trav::separatorTransversal(g, td, budget);
            }
            if (sepFraction != "1/2" && sepFraction != "2/3")
                throw CLI::ValidationError("septrans", "--fraction must be 1/2 or 2/3");
            return trav::separatorTransversal(g, trav::Rational::parse(sepFraction), budget);
        }();
        for (std::size_t i = 0; i < r.trace.size(); ++i) {
            const trav::SeparatorLevel& lv = r.trace[i];
            std::cout << "level\t" << i << "\torder " << lv.order << ", separator "
                      << lv.separatorSize << ", "
                      << (lv.componentOrder < 0
                              ? std::string("stop")
                              : "recurse into order " + std::to_string(lv.componentOrder))
                      << "\n";
        }
        printTransversal(r.transversal);
    });

    // circ
    auto* cmdCirc = app.add_subcommand("circ", "arc-model transversal of at most 3 arcs");
    std::string circFile, circMode;
    std::uint64_t circBudget = trav::ExpansionBudget::kDefaultLimit;
    cmdCirc->add_option("model-file", circFile, "arc model file")->required();
    cmdCirc->add_option("--mode", circMode, "path or cycle")
        ->required()
        ->check(CLI::IsMember({"path", "cycle"}));
    cmdCirc->add_option("--budget", circBudget, "node expansion budget");
    cmdCirc->callback([&] {
        trav::ArcModel model = trav::parseArcModel(readFile(circFile));
        trav::ExpansionBudget budget(circBudget);
        trav::CascadeResult r = trav::theorem6Transversal(
            model, circMode == "path" ? trav::TransversalMode::path : trav::TransversalMode::cycle,
            budget);
        for (const std::string& line : r.log) std::cout << "trace\t" << line << "\n";
        std::cout << "step\t" << r.step << "\n";
        printTransversal(r.transversal);
    });

    // experiment
    auto* cmdExp = app.add_subcommand("experiment", "sweep a family and check every bound");
    std::string expConfig;
    cmdExp->add_option("--config", expConfig, "key = value config file")->required();
    cmdExp->callback([&] {
        trav::ExperimentConfig cfg = trav::parseExperimentConfig(readFile(expConfig));
        trav::Report report = trav::runExperiment(cfg);
        {
            std::ofstream tsv(cfg.name + ".tsv", std::ios::binary);
            tsv << trav::reportTsv(report);
        }
        {
            std::ofstream json(cfg.name + ".json", std::ios::binary);
            json << trav::reportJson(report);
        }
        std::cout << "rows\t" << report.rows.size() << "\n";
        std::cout << "failures\t" << report.failures << "\n";
        std::cout << "skips\t" << report.skips << "\n";
        std::cout << "max_ratio\t" << (report.maxRatio.empty() ? "-" : report.maxRatio) << "\n";
        std::cout << "wrote\t" << cfg.name << ".tsv, " << cfg.name << ".json\n";
        if (report.failures > 0) exitCode = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const trav::FalsificationError& e) {
        std::cerr << "falsification: " << e.what() << "\n";
        return 1;
    } catch (const trav::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const trav::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exitCode;
}
