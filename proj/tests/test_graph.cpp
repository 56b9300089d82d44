#include <set>
#include <stdexcept>

#include "doctest.h"
#include "testutil.hpp"
#include "trav/budget.hpp"
#include "trav/graph.hpp"

using namespace trav;

TEST_CASE("graph constructor canonicalizes edges") {
    Graph g(4, {{2, 1}, {0, 1}, {1, 2}, {3, 0}});
    CHECK(g.vertexCount() == 4);
    CHECK(g.edgeCount() == 3);  // duplicate collapsed
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(g.hasEdge(1, 0));
    CHECK(g.hasEdge(0, 3));
    CHECK(!g.hasEdge(2, 3));
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{-1, 2}}), std::invalid_argument);
}

TEST_CASE("graph parse accepts comments and blank lines") {
    Graph g = Graph::parse("# a path\n\n3\n0 1\n# middle\n1 2\n");
    CHECK(g.vertexCount() == 3);
    CHECK(g.edgeCount() == 2);
}

TEST_CASE("graph parse reports the offending line") {
    auto lineOf = [](const char* text) {
        try {
            Graph::parse(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(lineOf("") == 0);                      // no vertex count at all
    CHECK(lineOf("abc\n") == 1);                 // malformed count
    CHECK(lineOf("3\n0\n") == 2);                // one endpoint only
    CHECK(lineOf("3\n0 1 2\n") == 2);            // trailing junk
    CHECK(lineOf("# c\n3\n0 3\n") == 3);         // out of range
    CHECK(lineOf("3\n0 1\n1 1\n") == 3);         // loop
    CHECK(lineOf("-1\n") == 1);                  // negative count
}

TEST_CASE("graph parse and serialize round trip") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 3}});
    Graph h = Graph::parse(g.serialize());
    CHECK(h.vertexCount() == g.vertexCount());
    CHECK(h.edges() == g.edges());
    // serialization is canonical: parsing scrambled input reproduces it
    Graph scrambled = Graph::parse("5\n4 0\n1 0\n3 2\n2 1\n3 1\n4 3\n");
    CHECK(scrambled.serialize() == g.serialize());
}

TEST_CASE("induced subgraph relabels and reports original labels") {
    Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
    std::vector<int> labels;
    Graph h = g.induced({5, 1, 0}, &labels);
    CHECK(h.vertexCount() == 3);
    // the vertex list is sorted before relabeling
    CHECK(labels == std::vector<int>{0, 1, 5});
    // edges 0-1 and 5-0 survive as (0,1) and (0,2) under the new labels
    CHECK(h.hasEdge(0, 1));
    CHECK(h.hasEdge(0, 2));
    CHECK(!h.hasEdge(1, 2));
    CHECK(g.induced({0, 0}).vertexCount() == 1);  // duplicates collapse
    CHECK_THROWS_AS(g.induced({0, 6}), std::invalid_argument);
}

TEST_CASE("connectivity on canonical small graphs") {
    auto r1 = connectivity(testutil::makeGraph(1, {}));
    CHECK(r1.connected);
    CHECK(!r1.twoConnected);  // an isolated vertex is not 2-connected

    auto path = connectivity(testutil::makeGraph(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(path.connected);
    CHECK(!path.twoConnected);
    CHECK(path.cutVertices == std::vector<int>{1, 2});

    auto cycle = connectivity(testutil::makeGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
    CHECK(cycle.connected);
    CHECK(cycle.twoConnected);
    CHECK(cycle.cutVertices.empty());

    auto two = connectivity(testutil::makeGraph(5, {{0, 1}, {3, 4}}));
    CHECK(!two.connected);
    CHECK(!two.twoConnected);
    CHECK(two.components ==
          std::vector<std::vector<int>>{{0, 1}, {2}, {3, 4}});

    // bowtie: two triangles sharing vertex 2
    auto bow = connectivity(
        testutil::makeGraph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(bow.connected);
    CHECK(!bow.twoConnected);
    CHECK(bow.cutVertices == std::vector<int>{2});

    auto k2 = connectivity(testutil::makeGraph(2, {{0, 1}}));
    CHECK(k2.connected);
    CHECK(!k2.twoConnected);  // 2-connected needs at least 3 vertices
}

TEST_CASE("two-connectivity agrees with the vertex-deletion definition") {
    // a graph on >= 3 vertices is 2-connected iff removing any single vertex
    // leaves it connected
    std::uint64_t seed = 11;
    for (int n = 3; n <= 8; ++n) {
        for (int trial = 0; trial < 40; ++trial) {
            // derive a deterministic edge set from a simple counter sweep
            std::vector<std::pair<int, int>> edges;
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            std::uint64_t bits = seed;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    bits = bits * 6364136223846793005ULL + 1442695040888963407ULL;
                    if ((bits >> 33) & 1) edges.push_back({u, v});
                }
            Graph g(n, edges);
            auto rep = connectivity(g);
            bool expectTwo = rep.connected;
            for (int v = 0; v < n && expectTwo; ++v) {
                std::vector<int> rest;
                for (int u = 0; u < n; ++u)
                    if (u != v) rest.push_back(u);
                expectTwo = connectivity(g.induced(rest)).connected;
            }
            CAPTURE(n);
            CAPTURE(trial);
            REQUIRE(rep.twoConnected == expectTwo);
        }
    }
}

TEST_CASE("budget stops runaway expansions") {
    ExpansionBudget b(5);
    for (int i = 0; i < 5; ++i) b.tick();
    CHECK(b.used() == 5);
    CHECK(b.limit() == 5);
    CHECK_THROWS_AS(b.tick(), BudgetExceeded);
    ExpansionBudget c(10);
    c.charge(7);
    CHECK_THROWS_AS(c.charge(4), BudgetExceeded);
    CHECK_NOTHROW(ExpansionBudget(1).tick());
}
