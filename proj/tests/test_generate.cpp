#include <map>
#include <set>

#include "doctest.h"
#include "testutil.hpp"
#include "trav/generate.hpp"
#include "trav/longest.hpp"

using namespace trav;

TEST_CASE("exhaustive generation counts labeled connected graphs") {
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t count = 0;
        forEachConnectedGraph(n, false, [&](const Graph& g) {
            ++count;
            REQUIRE(g.vertexCount() == n);
            REQUIRE(connectivity(g).connected);
        });
        CAPTURE(n);
        CHECK(count == testutil::kConnectedLabeledCounts[n - 1]);
    }
}

TEST_CASE("exhaustive generation counts isomorphism classes") {
    for (int n = 1; n <= 6; ++n) {
        std::uint64_t count = 0, twoConn = 0;
        forEachConnectedGraph(n, true, [&](const Graph& g) {
            ++count;
            if (connectivity(g).twoConnected) ++twoConn;
        });
        CAPTURE(n);
        CHECK(count == testutil::kConnectedIsoCounts[n - 1]);
        if (n >= 3) CHECK(twoConn == testutil::kTwoConnectedIsoCounts[n - 3]);
    }
}

TEST_CASE("canonical representatives are minimal over relabelings") {
    // every emitted representative must reproduce itself when canonicalized by
    // brute force over all vertex permutations
    forEachConnectedGraph(4, true, [&](const Graph& g) {
        std::vector<int> perm{0, 1, 2, 3};
        std::set<std::vector<std::pair<int, int>>> images;
        do {
            std::vector<std::pair<int, int>> edges;
            for (auto [u, v] : g.edges()) {
                int a = perm[u], b = perm[v];
                if (a > b) std::swap(a, b);
                edges.push_back({a, b});
            }
            std::sort(edges.begin(), edges.end());
            images.insert(edges);
        } while (std::next_permutation(perm.begin(), perm.end()));
        // the generator's choice must be one fixed point of its own ordering;
        // count how many distinct graphs are in the orbit and re-generate
        CHECK(images.count(g.edges()) == 1);
    });
    // iso reduction really reduces: orbits of the labeled sweep partition into
    // the canonical classes
    std::uint64_t labeled = 0;
    forEachConnectedGraph(4, false, [&](const Graph&) { ++labeled; });
    CHECK(labeled == 38);
}

TEST_CASE("exhaustive generation rejects out-of-range orders") {
    CHECK_THROWS_AS(forEachConnectedGraph(0, false, [](const Graph&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(forEachConnectedGraph(8, false, [](const Graph&) {}),
                    std::invalid_argument);
}

TEST_CASE("random connected graphs are connected, seeded, and depend on p") {
    for (int n : {1, 2, 5, 10, 14}) {
        Graph g = randomConnected(n, Rational(3, 10), 42);
        CHECK(g.vertexCount() == n);
        CHECK(connectivity(g).connected);
        Graph h = randomConnected(n, Rational(3, 10), 42);
        CHECK(h.edges() == g.edges());  // same seed, same graph
    }
    Graph a = randomConnected(10, Rational(3, 10), 7);
    Graph b = randomConnected(10, Rational(3, 10), 8);
    CHECK(a.edges() != b.edges());  // overwhelmingly likely and fixed by the seeds
    // p = 1 forces the complete graph
    Graph k6 = randomConnected(6, Rational(1), 3);
    CHECK(k6.edgeCount() == 15);
    CHECK_THROWS_AS(randomConnected(5, Rational(0), 3), std::invalid_argument);
    CHECK_THROWS_AS(randomConnected(5, Rational(11, 10), 3), std::invalid_argument);
}

TEST_CASE("random two-connected graphs are two-connected and seeded") {
    for (int n : {3, 6, 10, 14}) {
        Graph g = randomTwoConnected(n, Rational(2, 5), 99);
        CHECK(g.vertexCount() == n);
        CHECK(connectivity(g).twoConnected);
        Graph h = randomTwoConnected(n, Rational(2, 5), 99);
        CHECK(h.edges() == g.edges());
    }
    CHECK_THROWS_AS(randomTwoConnected(2, Rational(1, 2), 5), std::invalid_argument);
}

TEST_CASE("triangle chains have the pinned shape") {
    Graph t1 = triangleChain(1);
    CHECK(t1.vertexCount() == 3);
    CHECK(t1.edgeCount() == 3);
    Graph t3 = triangleChain(3);
    CHECK(t3.vertexCount() == 9);
    CHECK(t3.edgeCount() == 11);  // 9 triangle edges + 2 bridges
    auto rep = connectivity(t3);
    CHECK(rep.connected);
    CHECK(!rep.twoConnected);
    // longest cycles are the three triangles
    ExpansionBudget budget;
    CycleCollection cycles = longestCycles(t3, budget);
    CHECK(cycles.length == 3);
    CHECK(cycles.count == 3);
    CHECK_THROWS_AS(triangleChain(0), std::invalid_argument);
}

TEST_CASE("random arc models cover the circle with distinct endpoints") {
    for (int m : {2, 5, 8, 12}) {
        ArcModel model = randomArcModel(m, 77 + m);
        CHECK(model.arcCount() == m);
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        CHECK(coversCircle(model, all));
        std::set<Rational> endpoints;
        for (const Arc& a : model.arcs) {
            CHECK(!a.full);
            CHECK(a.start >= Rational(0));
            CHECK(a.start < Rational(1));
            CHECK(endpoints.insert(a.start).second);
            CHECK(endpoints.insert(a.end).second);
        }
        ArcModel again = randomArcModel(m, 77 + m);
        for (int i = 0; i < m; ++i) {
            CHECK(again.arcs[i].start == model.arcs[i].start);
            CHECK(again.arcs[i].end == model.arcs[i].end);
        }
    }
    CHECK_THROWS_AS(randomArcModel(1, 5), std::invalid_argument);
}

TEST_CASE("partial k-trees come with valid decompositions of width k") {
    for (int k = 1; k <= 3; ++k)
        for (int n : {k + 1, k + 3, 10, 14}) {
            GeneratedDecomposition gd = partialKTree(k, n, 1234 + 19 * k + n);
            CHECK(gd.graph.vertexCount() == n);
            CHECK(connectivity(gd.graph).connected);
            CHECK(gd.decomposition.width() == k);
            // re-parse through the validator: all three axioms hold
            std::string text = serializeTreeDecomposition(gd.decomposition, n);
            TreeDecomposition td = parseTreeDecomposition(text, gd.graph);
            CHECK(td.bags == gd.decomposition.bags);
            GeneratedDecomposition again = partialKTree(k, n, 1234 + 19 * k + n);
            CHECK(again.graph.edges() == gd.graph.edges());
            CHECK(again.decomposition.bags == gd.decomposition.bags);
        }
    CHECK_THROWS_AS(partialKTree(0, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(partialKTree(2, 2, 1), std::invalid_argument);
}

TEST_CASE("random block matchings are valid and seeded") {
    int nonEmpty = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        BlockMatching bm = randomBlockMatching(25, seed);
        CHECK(bm.instance.tau == 25);
        CHECK(validateBlockMatching(bm).ok);
        if (!bm.instance.matching.empty()) ++nonEmpty;
        BlockMatching again = randomBlockMatching(25, seed);
        CHECK(again.instance.matching == bm.instance.matching);
        CHECK(again.blocks == bm.blocks);
    }
    CHECK(nonEmpty > 50);  // the generator mostly emits real instances
}

TEST_CASE("random ladder instances obey the span rule") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const int window = 6;
        LadderInstance inst = randomLadderInstance(40, window, 15, seed);
        CHECK_NOTHROW(validateLadder(inst));
        for (const auto& e : inst.matching) CHECK(2 * std::abs(e.j - e.i) <= window);
        CHECK((int)inst.matching.size() >= 1);
        LadderInstance again = randomLadderInstance(40, window, 15, seed);
        CHECK(again.matching == inst.matching);
    }
}
