#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trav/budget.hpp"
#include "trav/graph.hpp"
#include "trav/longest.hpp"
#include "trav/rational.hpp"
#include "trav/transversal.hpp"

namespace trav {

// Open arc on the unit circle, traversed counterclockwise from start to end
// (wrapping past 0 when end < start). A whole-circle arc has no endpoints
// and is flagged instead.
struct Arc {
    bool full = false;
    Rational start;  // in [0, 1)
    Rational end;    // in [0, 1), distinct from start
};

struct ArcModel {
    std::vector<Arc> arcs;  // ids 0..m-1
    int arcCount() const { return (int)arcs.size(); }
};

// One arc per line: `id start_num/start_den end_num/end_den` or `id FULL`,
// ids 0,1,2,... in order. All endpoints across the model must be distinct.
ArcModel parseArcModel(const std::string& text);
std::string serializeArcModel(const ArcModel& model);

bool containsPoint(const Arc& a, const Rational& p);
bool arcsIntersect(const Arc& a, const Arc& b);
bool properlyContains(const Arc& outer, const Arc& inner);

// Whether the union of the listed arcs is the whole circle.
bool coversCircle(const ArcModel& model, const std::vector<int>& ids);

// Minimum-cardinality covering family of maximal arcs, members in increasing
// order of start point. Empty optional when the circle is not covered.
struct CoverFamily {
    std::vector<int> members;  // arc ids, cyclic order of start points
    int size() const { return (int)members.size(); }
};
std::optional<CoverFamily> coveringFamily(const ArcModel& model);

// Vertex per arc, edge iff the open arcs intersect.
Graph arcIntersectionGraph(const ArcModel& model);

// All longest chains (closed = false) or closed chains (true): sequences of
// distinct arcs with consecutive intersections, i.e. the longest paths or
// cycles of the intersection graph with vertices read as arc ids.
struct ChainCollection {
    bool closed = false;
    SequenceCollection seqs;
};
ChainCollection longestChains(const ArcModel& model, bool closed, ExpansionBudget& budget);

// Which covering-family positions a chain touches, and whether that set is a
// contiguous cyclic interval.
struct ChainProjection {
    std::vector<int> positions;  // family positions hit, sorted ascending
    bool contiguous = false;     // empty and full sets count as contiguous
    bool fullFamily = false;
    int intervalStart = -1;      // cyclic interval [start..end]; full family
    int intervalEnd = -1;        // reported as [0..n-1]
};
ChainProjection chainProjection(const std::uint8_t* chain, int length, const CoverFamily& family);

// Transversal of all longest (closed) chains with at most 3 arcs, by the
// four-step cascade: common arc in the non-covering / one-member case, then
// boundary arcs of one, two, or three extremal chain projections. Every
// candidate is checked against the enumerated chains before it is returned;
// a guaranteed-but-failing candidate raises a falsification alarm.
struct CascadeResult {
    Transversal transversal;
    int step = 0;                     // 1..4: which cascade step fired
    std::optional<CoverFamily> family;
    long long chainsChecked = 0;      // longest chains the result was verified against
    std::vector<std::string> log;     // human-readable trace
};
CascadeResult theorem6Transversal(const ArcModel& model, TransversalMode mode,
                                  ExpansionBudget& budget);

}  // namespace trav
