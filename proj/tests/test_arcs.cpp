#include <set>

#include "doctest.h"
#include "testutil.hpp"
#include "trav/arcs.hpp"
#include "trav/generate.hpp"
#include "trav/transversal.hpp"

using namespace trav;

namespace {

Arc arc(long long sn, long long sd, long long en, long long ed) {
    return Arc{false, Rational(sn, sd), Rational(en, ed)};
}

// The pinned three-arc model: pairwise intersections form a triangle.
ArcModel threeArcs() {
    ArcModel m;
    m.arcs = {arc(0, 1, 2, 5), arc(7, 20, 3, 4), arc(7, 10, 1, 20)};
    return m;
}

// Exhaustively confirm a covering family is minimum by trying all smaller
// subsets of arcs.
void checkFamilyMinimum(const ArcModel& model, const CoverFamily& family) {
    const int m = model.arcCount();
    REQUIRE(m <= 12);
    std::vector<int> ids;
    for (int mask = 0; mask < (1 << m); ++mask) {
        if (std::popcount((unsigned)mask) >= family.size()) continue;
        ids.clear();
        for (int a = 0; a < m; ++a)
            if (mask >> a & 1) ids.push_back(a);
        REQUIRE(!coversCircle(model, ids));
    }
    std::vector<int> members = family.members;
    REQUIRE(coversCircle(model, members));
}

}  // namespace

TEST_CASE("point containment on plain and wrapping arcs") {
    Arc plain = arc(1, 4, 3, 4);
    CHECK(containsPoint(plain, Rational(1, 2)));
    CHECK(!containsPoint(plain, Rational(1, 4)));  // open at the endpoints
    CHECK(!containsPoint(plain, Rational(3, 4)));
    CHECK(!containsPoint(plain, Rational(9, 10)));
    Arc wrap = arc(3, 4, 1, 4);
    CHECK(containsPoint(wrap, Rational(9, 10)));
    CHECK(containsPoint(wrap, Rational(0)));
    CHECK(containsPoint(wrap, Rational(1, 10)));
    CHECK(!containsPoint(wrap, Rational(1, 2)));
    Arc full{true, Rational(0), Rational(0)};
    CHECK(containsPoint(full, Rational(17, 31)));
}

TEST_CASE("arc intersection and proper containment") {
    CHECK(arcsIntersect(arc(0, 1, 1, 2), arc(1, 4, 3, 4)));
    CHECK(!arcsIntersect(arc(0, 1, 1, 4), arc(1, 2, 3, 4)));
    CHECK(arcsIntersect(arc(3, 4, 1, 4), arc(1, 8, 1, 2)));   // wrap meets plain
    CHECK(arcsIntersect(arc(0, 1, 9, 10), arc(1, 3, 2, 3)));  // containment intersects
    Arc full{true, Rational(0), Rational(0)};
    CHECK(arcsIntersect(full, arc(0, 1, 1, 100)));

    CHECK(properlyContains(arc(0, 1, 9, 10), arc(1, 3, 2, 3)));
    CHECK(!properlyContains(arc(1, 3, 2, 3), arc(0, 1, 9, 10)));
    CHECK(!properlyContains(arc(0, 1, 1, 2), arc(1, 4, 3, 4)));  // straddles the end
    CHECK(properlyContains(arc(3, 4, 1, 2), arc(9, 10, 1, 4)));  // both wrap
    CHECK(!properlyContains(arc(0, 1, 1, 2), arc(0, 1, 1, 2)));  // not proper
}

TEST_CASE("circle covering detection") {
    // three arcs covering: (0,0.4), (0.35,0.75), (0.7,0.05)
    ArcModel m = threeArcs();
    CHECK(coversCircle(m, {0, 1, 2}));
    CHECK(!coversCircle(m, {0, 1}));
    CHECK(!coversCircle(m, {0, 2}));  // the two leave a gap at e.g. 0.5
    CHECK(!coversCircle(m, {}));
    ArcModel two;
    two.arcs = {arc(0, 1, 51, 100), arc(1, 2, 1, 100)};
    CHECK(coversCircle(two, {0, 1}));  // endpoints 0 and 1/100 are interior to the other arc
    ArcModel gap;
    gap.arcs = {arc(0, 1, 1, 2), arc(1, 2, 99, 100)};
    CHECK(!coversCircle(gap, {0, 1}));  // the point 1/2 itself is uncovered
    ArcModel full;
    full.arcs = {Arc{true, Rational(0), Rational(0)}};
    CHECK(coversCircle(full, {0}));
}

TEST_CASE("covering family on pinned models") {
    std::optional<CoverFamily> fam = coveringFamily(threeArcs());
    REQUIRE(fam.has_value());
    CHECK(fam->members == std::vector<int>{0, 1, 2});  // start order 0, 7/20, 7/10
    checkFamilyMinimum(threeArcs(), *fam);

    // not covering: no family
    ArcModel sparse;
    sparse.arcs = {arc(0, 1, 1, 4), arc(1, 2, 3, 4)};
    CHECK(!coveringFamily(sparse).has_value());

    // a full arc covers alone
    ArcModel full;
    full.arcs = {arc(0, 1, 1, 2), Arc{true, Rational(0), Rational(0)}};
    std::optional<CoverFamily> ff = coveringFamily(full);
    REQUIRE(ff.has_value());
    CHECK(ff->members == std::vector<int>{1});

    // redundant small arc properly inside a big one is never picked
    ArcModel redundant;
    redundant.arcs = {arc(0, 1, 1, 2), arc(1, 10, 2, 10), arc(2, 5, 9, 10),
                      arc(4, 5, 1, 20)};
    std::optional<CoverFamily> rf = coveringFamily(redundant);
    REQUIRE(rf.has_value());
    CHECK(rf->members == std::vector<int>{0, 2, 3});
    checkFamilyMinimum(redundant, *rf);
}

TEST_CASE("covering family is minimum on generated models") {
    for (int m = 4; m <= 9; ++m)
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            ArcModel model = randomArcModel(m, 9100 + 17 * m + seed);
            std::optional<CoverFamily> fam = coveringFamily(model);
            REQUIRE(fam.has_value());  // generator resamples until covering
            checkFamilyMinimum(model, *fam);
            // members listed in increasing start order
            for (int i = 1; i < fam->size(); ++i) {
                const Arc& a = model.arcs[fam->members[i - 1]];
                const Arc& b = model.arcs[fam->members[i]];
                REQUIRE(a.start < b.start);
            }
        }
}

TEST_CASE("intersection graph of the pinned model is a triangle") {
    Graph g = arcIntersectionGraph(threeArcs());
    CHECK(g.vertexCount() == 3);
    CHECK(g.edgeCount() == 3);
    ChainCollection open = [&] {
        ExpansionBudget budget;
        return longestChains(threeArcs(), false, budget);
    }();
    CHECK(!open.closed);
    CHECK(open.seqs.length == 3);
    CHECK(open.seqs.count == 3);
    ChainCollection closed = [&] {
        ExpansionBudget budget;
        return longestChains(threeArcs(), true, budget);
    }();
    CHECK(closed.closed);
    CHECK(closed.seqs.length == 3);
    CHECK(closed.seqs.count == 1);
}

TEST_CASE("chain projection classifies contiguity on the circle") {
    CoverFamily family;
    family.members = {0, 1, 2, 3};
    // positions {3, 0} wrap into the contiguous interval [3..0]
    std::vector<std::uint8_t> chain{3, 0};
    ChainProjection pr = chainProjection(chain.data(), 2, family);
    CHECK(pr.positions == std::vector<int>{0, 3});
    CHECK(pr.contiguous);
    CHECK(!pr.fullFamily);
    CHECK(pr.intervalStart == 3);
    CHECK(pr.intervalEnd == 0);
    // positions {0, 2} are not contiguous among four
    std::vector<std::uint8_t> split{0, 2};
    ChainProjection ps = chainProjection(split.data(), 2, family);
    CHECK(!ps.contiguous);
    // chains may pass through arcs outside the family
    CoverFamily partial;
    partial.members = {0, 2};
    std::vector<std::uint8_t> mixed{0, 1, 2};
    ChainProjection pm = chainProjection(mixed.data(), 3, partial);
    CHECK(pm.positions == std::vector<int>{0, 1});
    CHECK(pm.fullFamily);
    CHECK(pm.intervalStart == 0);
    CHECK(pm.intervalEnd == 1);
}

TEST_CASE("cascade on the pinned triangle model stops at step two") {
    for (TransversalMode mode : {TransversalMode::path, TransversalMode::cycle}) {
        ExpansionBudget budget;
        CascadeResult r = theorem6Transversal(threeArcs(), mode, budget);
        CHECK(r.step == 2);
        CHECK(r.transversal.size() == 2);
        CHECK(r.transversal.vertices == std::vector<int>{0, 2});
        CHECK(r.chainsChecked == (mode == TransversalMode::path ? 3 : 1));
        REQUIRE(r.family.has_value());
        CHECK(r.family->size() == 3);
    }
}

TEST_CASE("cascade without a covering family uses a common arc") {
    // two long arcs plus a tiny one inside their overlap; nothing covers the
    // circle, and the intersection graph is a triangle with a hole at 0.9
    ArcModel m;
    m.arcs = {arc(0, 1, 1, 2), arc(2, 5, 4, 5), arc(45, 100, 49, 100)};
    CHECK(!coveringFamily(m).has_value());
    ExpansionBudget budget;
    CascadeResult r = theorem6Transversal(m, TransversalMode::path, budget);
    CHECK(r.step == 1);
    CHECK(r.transversal.size() == 1);
    // longest chains are 0-1 orderings through all three arcs; 0 and 1 lie on
    // all of them, and the least common id is reported
    CHECK(r.transversal.vertices == std::vector<int>{0});
}

TEST_CASE("cascade with a single-member family") {
    ArcModel m;
    m.arcs = {Arc{true, Rational(0), Rational(0)}, arc(1, 4, 1, 2)};
    ExpansionBudget budget;
    CascadeResult r = theorem6Transversal(m, TransversalMode::path, budget);
    CHECK(r.step == 1);
    CHECK(r.transversal.vertices == std::vector<int>{0});
}

TEST_CASE("cascade transversals always hit every longest chain on generated models") {
    for (int m = 4; m <= 10; ++m)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            ArcModel model = randomArcModel(m, 300 + 13 * m + seed);
            Graph g = arcIntersectionGraph(model);
            auto conn = connectivity(g);
            REQUIRE(conn.connected);  // covering models always are
            for (TransversalMode mode : {TransversalMode::path, TransversalMode::cycle}) {
                if (mode == TransversalMode::cycle && !conn.twoConnected) continue;
                ExpansionBudget budget;
                CascadeResult r = theorem6Transversal(model, mode, budget);
                CAPTURE(serializeArcModel(model));
                REQUIRE(r.transversal.size() <= 3);
                REQUIRE(verifyTransversal(g, r.transversal.vertices, mode, budget).ok);
                // never worse than three times the optimum, never better than it
                Transversal exact = mode == TransversalMode::path ? exactLpt(g, budget)
                                                                  : exactLct(g, budget);
                REQUIRE(r.transversal.size() >= exact.size());
            }
        }
}

TEST_CASE("arc model files parse, serialize, and reject bad input") {
    ArcModel m = parseArcModel("# pinned\n0 0/1 2/5\n1 7/20 3/4\n2 7/10 1/20\n");
    CHECK(m.arcCount() == 3);
    CHECK(m.arcs[1].start == Rational(7, 20));
    CHECK(m.arcs[2].end == Rational(1, 20));
    ArcModel again = parseArcModel(serializeArcModel(m));
    CHECK(again.arcCount() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(again.arcs[i].start == m.arcs[i].start);
        CHECK(again.arcs[i].end == m.arcs[i].end);
    }
    ArcModel withFull = parseArcModel("0 FULL\n1 1/4 1/2\n");
    CHECK(withFull.arcs[0].full);
    ArcModel fullAgain = parseArcModel(serializeArcModel(withFull));
    CHECK(fullAgain.arcs[0].full);

    auto lineOf = [](const std::string& text) {
        try {
            parseArcModel(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(lineOf("") == 0);                          // empty model
    CHECK(lineOf("1 0/1 1/2\n") == 1);               // ids must start at 0
    CHECK(lineOf("0 0/1 1/2\n2 1/4 3/4\n") == 2);    // ids must be consecutive
    CHECK(lineOf("0 0/1\n") == 1);                   // missing endpoint
    CHECK(lineOf("0 0/1 1/2 x\n") == 1);             // trailing junk
    CHECK(lineOf("0 3/2 1/2\n") == 1);               // start outside [0,1)
    CHECK(lineOf("0 1/2 1/2\n") == 1);               // equal endpoints
    CHECK(lineOf("0 0/1 1/2\n1 1/2 3/4\n") == 2);    // shared endpoint value
}
