#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trav {

// One rung of a ladder: the edge u_i v_j between the two paths, 1-based.
struct LadderEdge {
    int i = 0;
    int j = 0;
    friend bool operator==(const LadderEdge&, const LadderEdge&) = default;
    friend auto operator<=>(const LadderEdge&, const LadderEdge&) = default;
};

// Two disjoint paths u_1..u_tau and v_1..v_tau plus a matching between them.
// First coordinates are pairwise distinct, as are second coordinates.
struct LadderInstance {
    int tau = 0;
    std::vector<LadderEdge> matching;
};

void validateLadder(const LadderInstance& inst);

// Two edges cross when their endpoints interleave: (i2-i1)*(j2-j1) < 0.
bool edgesCross(const LadderEdge& a, const LadderEdge& b);

// A matching split into ordered blocks. Valid when every block has size 1 or
// even size, edges inside a block pairwise cross, and edges from different
// blocks are pairwise parallel.
struct BlockMatching {
    LadderInstance instance;
    std::vector<std::vector<LadderEdge>> blocks;
};

struct BlockValidation {
    bool ok = true;
    std::string diagnostic;
};

BlockValidation validateBlockMatching(const BlockMatching& bm);

struct WovenVertex {
    enum class Side { P, Q };
    Side side = Side::P;
    int index = 0;  // 1-based position on its path
    std::string label() const;
    friend bool operator==(const WovenVertex&, const WovenVertex&) = default;
};

struct WovenPath {
    std::vector<WovenVertex> vertices;
    int order() const { return (int)vertices.size(); }
};

// The two interleaved paths produced from a valid block matching. Both run
// from {u_1, v_1} to {u_tau, v_tau}, they overlap exactly in the matching
// edges, and order(pPrime) + order(qPrime) == 2*tau + 2*|M|, so the longer
// one has order >= tau + |M|. All of that is re-verified before returning.
struct WeaveResult {
    WovenPath pPrime;
    WovenPath qPrime;
    const WovenPath& longer() const {
        return pPrime.order() >= qPrime.order() ? pPrime : qPrime;
    }
};

WeaveResult weave(const BlockMatching& bm);

// Splits the matching into windows of the given width by first coordinate:
// bucket k holds edges with i in ((k)*window, (k+1)*window]. Requires every
// edge to satisfy 2*|j-i| <= window, which makes edges from buckets that are
// two or more apart pairwise parallel.
std::vector<std::vector<LadderEdge>> bucketMatching(const LadderInstance& inst, int window);

// Largest monotone subset of a bucket: edges sorted by first coordinate, the
// longer of LIS/LDS on second coordinates (ties prefer the decreasing, i.e.
// crossing, set; within a direction the lexicographically first positions).
// Erdos-Szekeres gives size >= ceil(sqrt(block size)).
std::vector<LadderEdge> extractMonotone(std::vector<LadderEdge> block);

struct ParityFixResult {
    BlockMatching result;
    int removedEdges = 0;
};

// Turns monotone blocks (each all-crossing or all-parallel, pairwise parallel
// across blocks) into a valid BlockMatching: parallel blocks split into
// singletons, odd crossing blocks drop the edge with the median first
// coordinate. Removes at most floor(input/3) edges.
ParityFixResult parityFix(const std::vector<std::vector<LadderEdge>>& blocks, int tau);

struct RefineStats {
    std::size_t inputEdges = 0;
    std::size_t keptAfterHalving = 0;
    std::size_t monotoneEdges = 0;
    int removedByParity = 0;
};

struct RefineResult {
    BlockMatching refined;
    RefineStats stats;
};

// bucket -> keep the alternate half with more edges -> monotone per block ->
// parity fix. Output is valid and keeps at least |N| / (3*sqrt(window)) edges.
RefineResult refinePipeline(const LadderInstance& inst, int window);

struct BipartiteGraph {
    int leftCount = 0;
    int rightCount = 0;
    std::vector<std::pair<int, int>> edges;  // (left, right)
};

struct KoenigResult {
    std::vector<std::pair<int, int>> matching;
    std::vector<int> coverLeft;
    std::vector<int> coverRight;
};

// Maximum matching plus a vertex cover of the same size.
KoenigResult koenigCover(const BipartiteGraph& bg);

// Ladder file: '#' comments, first data line tau, then one block per data
// line as "i j i j ...".
BlockMatching parseLadder(std::string_view text);
std::string serializeLadder(const BlockMatching& bm);

}  // namespace trav
