#include "trav/weave.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "trav/budget.hpp"

namespace trav {

bool edgesCross(const LadderEdge& a, const LadderEdge& b) {
    return (long long)(b.i - a.i) * (b.j - a.j) < 0;
}

void validateLadder(const LadderInstance& inst) {
    if (inst.tau < 1) throw std::invalid_argument("ladder needs tau >= 1");
    std::vector<bool> seenI(inst.tau + 1, false), seenJ(inst.tau + 1, false);
    for (const auto& e : inst.matching) {
        if (e.i < 1 || e.i > inst.tau || e.j < 1 || e.j > inst.tau)
            throw std::invalid_argument("matching edge endpoint out of range");
        if (seenI[e.i]) throw std::invalid_argument("repeated first coordinate in matching");
        if (seenJ[e.j]) throw std::invalid_argument("repeated second coordinate in matching");
        seenI[e.i] = seenJ[e.j] = true;
    }
}

std::string WovenVertex::label() const {
    return (side == Side::P ? "u" : "v") + std::to_string(index);
}

BlockValidation validateBlockMatching(const BlockMatching& bm) {
    validateLadder(bm.instance);
    auto fail = [](std::string why) { return BlockValidation{false, std::move(why)}; };

    std::vector<LadderEdge> fromBlocks;
    for (const auto& block : bm.blocks)
        fromBlocks.insert(fromBlocks.end(), block.begin(), block.end());
    std::vector<LadderEdge> fromInstance = bm.instance.matching;
    std::sort(fromBlocks.begin(), fromBlocks.end());
    std::sort(fromInstance.begin(), fromInstance.end());
    if (fromBlocks != fromInstance) return fail("blocks do not partition the matching");

    for (size_t b = 0; b < bm.blocks.size(); ++b) {
        const auto& block = bm.blocks[b];
        if (block.empty()) return fail("empty block " + std::to_string(b));
        if (block.size() != 1 && block.size() % 2 != 0)
            return fail("block " + std::to_string(b) + " has odd size " + std::to_string(block.size()));
        for (size_t x = 0; x < block.size(); ++x)
            for (size_t y = x + 1; y < block.size(); ++y)
                if (!edgesCross(block[x], block[y]))
                    return fail("parallel pair inside block " + std::to_string(b));
    }
    for (size_t a = 0; a < bm.blocks.size(); ++a)
        for (size_t b = a + 1; b < bm.blocks.size(); ++b)
            for (const auto& ea : bm.blocks[a])
                for (const auto& eb : bm.blocks[b])
                    if (edgesCross(ea, eb))
                        return fail("crossing pair across blocks " + std::to_string(a) +
                                    " and " + std::to_string(b));
    return {};
}

namespace {

// Vertex ids for the woven graph: u_i -> i-1, v_j -> tau+j-1.
struct WeaveBuilder {
    int tau;
    std::vector<std::vector<int>> adj;

    explicit WeaveBuilder(int tau_) : tau(tau_), adj(2 * tau_) {}

    void addEdge(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    // Path edges inside segments of the chosen parity. boundaries holds
    // 1, i_1..i_m, tau; segment k spans positions b[k]..b[k+1].
    void addSegments(const std::vector<int>& boundaries, int parity, int offset) {
        for (size_t k = 0; k + 1 < boundaries.size(); ++k) {
            if ((int)(k % 2) != parity) continue;
            for (int p = boundaries[k]; p < boundaries[k + 1]; ++p)
                addEdge(offset + p - 1, offset + p);
        }
    }

    WovenPath walk(size_t expectedEdges) const {
        std::vector<int> degreeOne;
        size_t edgeCount = 0;
        for (int v = 0; v < 2 * tau; ++v) {
            if (adj[v].size() == 1) degreeOne.push_back(v);
            if (adj[v].size() > 2)
                throw FalsificationError("woven edge set has a vertex of degree > 2");
            edgeCount += adj[v].size();
        }
        edgeCount /= 2;
        if (edgeCount != expectedEdges)
            throw FalsificationError("woven edge set lost edges");
        if (degreeOne.size() != 2)
            throw FalsificationError("woven edge set is not a single open path");
        int start = degreeOne[0];
        for (int cand : degreeOne)
            if (cand == 0 || cand == tau) { start = cand; break; }  // begin at u_1 or v_1
        WovenPath path;
        std::vector<bool> seen(2 * tau, false);
        int cur = start, prev = -1;
        while (true) {
            if (seen[cur]) throw FalsificationError("woven walk revisits a vertex");
            seen[cur] = true;
            path.vertices.push_back(cur < tau
                                        ? WovenVertex{WovenVertex::Side::P, cur + 1}
                                        : WovenVertex{WovenVertex::Side::Q, cur - tau + 1});
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        if (path.order() != (int)expectedEdges + 1)
            throw FalsificationError("woven walk does not cover the edge set");
        return path;
    }
};

bool touchesEnds(const WovenPath& p, int tau) {
    auto at = [&](const WovenVertex& v, int idx) { return v.index == idx; };
    return at(p.vertices.front(), 1) && at(p.vertices.back(), tau);
}

}  // namespace

WeaveResult weave(const BlockMatching& bm) {
    if (auto check = validateBlockMatching(bm); !check.ok)
        throw std::invalid_argument("invalid block matching: " + check.diagnostic);
    int tau = bm.instance.tau;
    const auto& matching = bm.instance.matching;

    WeaveResult result;
    if (matching.empty()) {
        for (int p = 1; p <= tau; ++p)
            result.pPrime.vertices.push_back({WovenVertex::Side::P, p});
        for (int p = 1; p <= tau; ++p)
            result.qPrime.vertices.push_back({WovenVertex::Side::Q, p});
        return result;
    }

    std::vector<int> pIdx, qIdx;
    for (const auto& e : matching) { pIdx.push_back(e.i); qIdx.push_back(e.j); }
    std::sort(pIdx.begin(), pIdx.end());
    std::sort(qIdx.begin(), qIdx.end());
    auto boundaries = [&](std::vector<int> idx) {
        idx.insert(idx.begin(), 1);
        idx.push_back(tau);
        return idx;
    };
    std::vector<int> pBounds = boundaries(pIdx), qBounds = boundaries(qIdx);

    auto build = [&](int pParity, int qParity) {
        WeaveBuilder builder(tau);
        builder.addSegments(pBounds, pParity, 0);
        builder.addSegments(qBounds, qParity, tau);
        size_t edges = matching.size();
        for (const auto& e : matching) builder.addEdge(e.i - 1, tau + e.j - 1);
        for (size_t k = 0; k + 1 < pBounds.size(); ++k)
            if ((int)(k % 2) == pParity) edges += pBounds[k + 1] - pBounds[k];
        for (size_t k = 0; k + 1 < qBounds.size(); ++k)
            if ((int)(k % 2) == qParity) edges += qBounds[k + 1] - qBounds[k];
        return builder.walk(edges);
    };
    result.pPrime = build(1, 0);  // odd segments of P, matching, even segments of Q
    result.qPrime = build(0, 1);

    int total = result.pPrime.order() + result.qPrime.order();
    if (total != 2 * tau + 2 * (int)matching.size())
        throw FalsificationError("woven order identity violated");
    if (result.longer().order() < tau + (int)matching.size())
        throw FalsificationError("woven path shorter than tau + |M|");
    if (!touchesEnds(result.pPrime, tau) || !touchesEnds(result.qPrime, tau))
        throw FalsificationError("woven path endpoints off the ladder ends");
    return result;
}

std::vector<std::vector<LadderEdge>> bucketMatching(const LadderInstance& inst, int window) {
    validateLadder(inst);
    if (window < 1) throw std::invalid_argument("window must be positive");
    for (const auto& e : inst.matching)
        if (2LL * std::abs(e.j - e.i) > window)
            throw std::invalid_argument("edge span exceeds window/2");
    int buckets = (inst.tau + window - 1) / window;
    std::vector<std::vector<LadderEdge>> out(buckets);
    for (const auto& e : inst.matching) out[(e.i - 1) / window].push_back(e);
    for (auto& bucket : out)
        std::sort(bucket.begin(), bucket.end());
    return out;
}

namespace {

// Longest strictly monotone subsequence of the block's second coordinates,
// lexicographically first positions among the longest. O(s^2) is plenty here.
std::vector<size_t> monotonePositions(const std::vector<LadderEdge>& sorted, bool increasing) {
    size_t s = sorted.size();
    std::vector<int> fromHere(s, 1);  // longest run starting at x
    for (size_t x = s; x-- > 0;) {
        for (size_t y = x + 1; y < s; ++y) {
            bool ok = increasing ? sorted[y].j > sorted[x].j : sorted[y].j < sorted[x].j;
            if (ok) fromHere[x] = std::max(fromHere[x], fromHere[y] + 1);
        }
    }
    int best = 0;
    for (size_t x = 0; x < s; ++x) best = std::max(best, fromHere[x]);
    std::vector<size_t> positions;
    int need = best;
    long long lastJ = -1;
    size_t from = 0;
    while (need > 0) {
        for (size_t x = from; x < s; ++x) {
            bool ok = lastJ < 0 || (increasing ? sorted[x].j > lastJ : sorted[x].j < lastJ);
            if (ok && fromHere[x] == need) {
                positions.push_back(x);
                lastJ = sorted[x].j;
                from = x + 1;
                --need;
                break;
            }
        }
    }
    return positions;
}

}  // namespace

std::vector<LadderEdge> extractMonotone(std::vector<LadderEdge> block) {
    if (block.empty()) return {};
    std::sort(block.begin(), block.end());
    auto inc = monotonePositions(block, true);
    auto dec = monotonePositions(block, false);
    const auto& pick = dec.size() >= inc.size() ? dec : inc;
    std::vector<LadderEdge> out;
    for (size_t p : pick) out.push_back(block[p]);
    return out;
}

ParityFixResult parityFix(const std::vector<std::vector<LadderEdge>>& blocks, int tau) {
    for (size_t a = 0; a < blocks.size(); ++a)
        for (size_t b = a + 1; b < blocks.size(); ++b)
            for (const auto& ea : blocks[a])
                for (const auto& eb : blocks[b])
                    if (edgesCross(ea, eb))
                        throw std::invalid_argument("parity fix needs pairwise parallel blocks");
    ParityFixResult out;
    std::vector<std::vector<LadderEdge>> kept;
    for (const auto& raw : blocks) {
        if (raw.empty()) continue;
        auto block = raw;
        std::sort(block.begin(), block.end());
        if (block.size() == 1) {
            kept.push_back(block);
            continue;
        }
        bool allCross = true, allParallel = true;
        for (size_t x = 0; x < block.size(); ++x)
            for (size_t y = x + 1; y < block.size(); ++y)
                (edgesCross(block[x], block[y]) ? allParallel : allCross) = false;
        if (!allCross && !allParallel)
            throw std::invalid_argument("parity fix needs monotone blocks");
        if (allParallel) {
            for (const auto& e : block) kept.push_back({e});
            continue;
        }
        if (block.size() % 2 != 0) {
            block.erase(block.begin() + block.size() / 2);  // median first coordinate
            ++out.removedEdges;
        }
        kept.push_back(block);
    }
    std::sort(kept.begin(), kept.end(),
              [](const auto& a, const auto& b) { return a.front().i < b.front().i; });
    BlockMatching bm;
    bm.instance.tau = tau;
    for (const auto& block : kept)
        bm.instance.matching.insert(bm.instance.matching.end(), block.begin(), block.end());
    bm.blocks = std::move(kept);
    if (auto check = validateBlockMatching(bm); !check.ok)
        throw std::logic_error("parity fix produced an invalid block matching: " + check.diagnostic);
    out.result = std::move(bm);
    return out;
}

RefineResult refinePipeline(const LadderInstance& inst, int window) {
    auto buckets = bucketMatching(inst, window);
    RefineResult out;
    out.stats.inputEdges = inst.matching.size();

    size_t oddTotal = 0, evenTotal = 0;
    for (size_t k = 0; k < buckets.size(); ++k)
        (k % 2 == 0 ? oddTotal : evenTotal) += buckets[k].size();  // bucket 0 is N_1
    size_t keepResidue = oddTotal >= evenTotal ? 0 : 1;
    out.stats.keptAfterHalving = keepResidue == 0 ? oddTotal : evenTotal;

    std::vector<std::vector<LadderEdge>> monotone;
    for (size_t k = keepResidue; k < buckets.size(); k += 2) {
        if (buckets[k].empty()) continue;
        monotone.push_back(extractMonotone(buckets[k]));
        out.stats.monotoneEdges += monotone.back().size();
    }
    auto fixed = parityFix(monotone, inst.tau);
    out.stats.removedByParity = fixed.removedEdges;
    out.refined = std::move(fixed.result);
    return out;
}

KoenigResult koenigCover(const BipartiteGraph& bg) {
    if (bg.leftCount < 0 || bg.rightCount < 0)
        throw std::invalid_argument("negative side size");
    std::vector<std::vector<int>> adj(bg.leftCount);
    for (auto [l, r] : bg.edges) {
        if (l < 0 || l >= bg.leftCount || r < 0 || r >= bg.rightCount)
            throw std::invalid_argument("bipartite edge endpoint out of range");
        adj[l].push_back(r);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    std::vector<int> matchOfRight(bg.rightCount, -1), matchOfLeft(bg.leftCount, -1);
    std::vector<bool> tried;
    auto augment = [&](auto&& self, int l) -> bool {
        for (int r : adj[l]) {
            if (tried[r]) continue;
            tried[r] = true;
            if (matchOfRight[r] < 0 || self(self, matchOfRight[r])) {
                matchOfRight[r] = l;
                matchOfLeft[l] = r;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < bg.leftCount; ++l) {
        tried.assign(bg.rightCount, false);
        augment(augment, l);
    }

    // alternating reachability from unmatched left vertices
    std::vector<bool> leftSeen(bg.leftCount, false), rightSeen(bg.rightCount, false);
    std::vector<int> stack;
    for (int l = 0; l < bg.leftCount; ++l)
        if (matchOfLeft[l] < 0) { leftSeen[l] = true; stack.push_back(l); }
    while (!stack.empty()) {
        int l = stack.back();
        stack.pop_back();
        for (int r : adj[l]) {
            if (rightSeen[r] || matchOfLeft[l] == r) continue;
            rightSeen[r] = true;
            int l2 = matchOfRight[r];
            if (l2 >= 0 && !leftSeen[l2]) { leftSeen[l2] = true; stack.push_back(l2); }
        }
    }

    KoenigResult out;
    for (int l = 0; l < bg.leftCount; ++l)
        if (matchOfLeft[l] >= 0) out.matching.emplace_back(l, matchOfLeft[l]);
    for (int l = 0; l < bg.leftCount; ++l)
        if (!leftSeen[l]) out.coverLeft.push_back(l);
    for (int r = 0; r < bg.rightCount; ++r)
        if (rightSeen[r]) out.coverRight.push_back(r);

    if (out.coverLeft.size() + out.coverRight.size() != out.matching.size())
        throw std::logic_error("cover size disagrees with matching size");
    for (auto [l, r] : bg.edges) {
        bool covered = !leftSeen[l] || rightSeen[r];
        if (!covered) throw std::logic_error("computed cover misses an edge");
    }
    return out;
}

BlockMatching parseLadder(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineNo = 0;
    bool haveTau = false;
    BlockMatching bm;
    while (std::getline(in, line)) {
        ++lineNo;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!haveTau) {
            if (!(ls >> bm.instance.tau)) {
                std::string junk;
                if (ls.clear(), ls >> junk)
                    throw ParseError(lineNo, "expected tau, got '" + junk + "'");
                continue;
            }
            if (bm.instance.tau < 1) throw ParseError(lineNo, "tau must be at least 1");
            haveTau = true;
            continue;
        }
        std::vector<int> nums;
        long long x;
        while (ls >> x) nums.push_back((int)x);
        std::string junk;
        if (ls.clear(), ls >> junk) throw ParseError(lineNo, "unexpected token '" + junk + "'");
        if (nums.empty()) continue;
        if (nums.size() % 2 != 0) throw ParseError(lineNo, "block line needs (i, j) pairs");
        std::vector<LadderEdge> block;
        for (size_t k = 0; k < nums.size(); k += 2) block.push_back({nums[k], nums[k + 1]});
        bm.instance.matching.insert(bm.instance.matching.end(), block.begin(), block.end());
        bm.blocks.push_back(std::move(block));
    }
    if (!haveTau) throw ParseError(lineNo, "missing tau");
    try {
        validateLadder(bm.instance);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineNo, e.what());
    }
    return bm;
}

std::string serializeLadder(const BlockMatching& bm) {
    std::ostringstream out;
    out << bm.instance.tau << "\n";
    for (const auto& block : bm.blocks) {
        for (size_t k = 0; k < block.size(); ++k)
            out << (k ? " " : "") << block[k].i << " " << block[k].j;
        out << "\n";
    }
    return out.str();
}

}  // namespace trav
