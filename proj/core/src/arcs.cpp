#include "trav/arcs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace trav {
namespace {

// x reduced modulo 1 into [0, 1).
Rational mod1(const Rational& x) {
    long long f = x.num() >= 0 ? x.num() / x.den() : -((-x.num() + x.den() - 1) / x.den());
    return x - Rational(f);
}

Rational arcLength(const Arc& a) {
    if (a.full) return Rational(1);
    return mod1(a.end - a.start);
}

}  // namespace

bool containsPoint(const Arc& a, const Rational& p) {
    if (a.full) return true;
    if (a.start < a.end) return a.start < p && p < a.end;
    return p > a.start || p < a.end;  // wraps past 0
}

bool arcsIntersect(const Arc& a, const Arc& b) {
    if (a.full || b.full) return true;
    // Open arcs with pairwise-distinct endpoints intersect exactly when one
    // contains an endpoint of the other (covers partial overlap and nesting).
    return containsPoint(a, b.start) || containsPoint(a, b.end) ||
           containsPoint(b, a.start) || containsPoint(b, a.end);
}

bool properlyContains(const Arc& outer, const Arc& inner) {
    if (outer.full) return !inner.full;
    if (inner.full) return false;
    // Positions measured counterclockwise from outer.start.
    const Rational k1 = mod1(inner.start - outer.start);
    const Rational k2 = mod1(inner.end - outer.start);
    const Rational len = arcLength(outer);
    return Rational(0) < k1 && k1 < k2 && k2 < len;
}

ArcModel parseArcModel(const std::string& text) {
    ArcModel model;
    std::istringstream in(text);
    std::string line;
    int lineNumber = 0;
    std::set<Rational> endpoints;
    while (std::getline(in, line)) {
        ++lineNumber;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string idText;
        if (!(fields >> idText)) continue;  // blank line
        long long id;
        try {
            std::size_t used = 0;
            id = std::stoll(idText, &used);
            if (used != idText.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(lineNumber, "arc id must be an integer");
        }
        if (id != model.arcCount())
            throw ParseError(lineNumber, "arc ids must appear as 0,1,2,...");
        std::string a, b;
        if (!(fields >> a)) throw ParseError(lineNumber, "missing arc endpoints");
        Arc arc;
        if (a == "FULL") {
            arc.full = true;
        } else {
            if (!(fields >> b)) throw ParseError(lineNumber, "missing arc end point");
            try {
                arc.start = Rational::parse(a);
                arc.end = Rational::parse(b);
            } catch (const std::exception& e) {
                throw ParseError(lineNumber, e.what());
            }
            if (arc.start < Rational(0) || arc.start >= Rational(1) ||
                arc.end < Rational(0) || arc.end >= Rational(1))
                throw ParseError(lineNumber, "endpoints must lie in [0, 1)");
            if (arc.start == arc.end)
                throw ParseError(lineNumber, "degenerate arc: start equals end");
            if (!endpoints.insert(arc.start).second)
                throw ParseError(lineNumber, "duplicate endpoint " + arc.start.str());
            if (!endpoints.insert(arc.end).second)
                throw ParseError(lineNumber, "duplicate endpoint " + arc.end.str());
        }
        std::string junk;
        if (fields >> junk) throw ParseError(lineNumber, "trailing data after arc");
        model.arcs.push_back(arc);
    }
    if (model.arcs.empty()) throw ParseError(lineNumber, "model contains no arcs");
    return model;
}

std::string serializeArcModel(const ArcModel& model) {
    std::ostringstream out;
    for (int i = 0; i < model.arcCount(); ++i) {
        const Arc& a = model.arcs[i];
        if (a.full)
            out << i << " FULL\n";
        else
            out << i << ' ' << a.start.str() << ' ' << a.end.str() << '\n';
    }
    return out.str();
}

bool coversCircle(const ArcModel& model, const std::vector<int>& ids) {
    for (int id : ids)
        if (model.arcs[id].full) return true;
    if (ids.empty()) return false;
    std::vector<Rational> points;
    for (int id : ids) {
        points.push_back(model.arcs[id].start);
        points.push_back(model.arcs[id].end);
    }
    std::sort(points.begin(), points.end());
    auto covered = [&](const Rational& p) {
        for (int id : ids)
            if (containsPoint(model.arcs[id], p)) return true;
        return false;
    };
    // Between consecutive endpoints membership in any open arc is constant,
    // so endpoints plus the midpoints of consecutive endpoint pairs decide
    // coverage of the whole circle.
    for (const Rational& p : points)
        if (!covered(p)) return false;
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (!covered((points[i] + points[i + 1]) / Rational(2))) return false;
    const Rational wrapMid = mod1((points.back() + points.front() + Rational(1)) / Rational(2));
    return covered(wrapMid);
}

std::optional<CoverFamily> coveringFamily(const ArcModel& model) {
    const int m = model.arcCount();
    for (int id = 0; id < m; ++id)
        if (model.arcs[id].full) return CoverFamily{{id}};

    std::vector<int> all(m);
    for (int id = 0; id < m; ++id) all[id] = id;
    if (!coversCircle(model, all)) return std::nullopt;

    std::vector<int> maximal;
    for (int i = 0; i < m; ++i) {
        bool dominated = false;
        for (int j = 0; j < m && !dominated; ++j)
            dominated = (j != i) && properlyContains(model.arcs[j], model.arcs[i]);
        if (!dominated) maximal.push_back(i);
    }

    // Minimum circular cover: greedy farthest-reach from every maximal start
    // arc; the best chain over all starts is a true minimum. Extensions are
    // strictly ordered because all endpoints are distinct.
    std::vector<int> best;
    for (int startId : maximal) {
        const Arc& a = model.arcs[startId];
        std::vector<int> chosen{startId};
        Rational reach = arcLength(a);  // covered: (start, start + reach), unrolled
        int guard = 0;
        while (reach <= Rational(1)) {
            if (++guard > 2 * m + 2)
                throw std::logic_error("circular cover greedy failed to terminate");
            const Rational p = mod1(a.start + reach);
            int pickId = -1;
            Rational pickExt(0);
            for (int id : maximal) {
                if (!containsPoint(model.arcs[id], p)) continue;
                const Rational ext = mod1(model.arcs[id].end - p);
                if (ext > pickExt) {
                    pickExt = ext;
                    pickId = id;
                }
            }
            if (pickId == -1)
                throw std::logic_error("covered circle left an uncovered point during greedy");
            chosen.push_back(pickId);
            reach = reach + pickExt;
        }
        if (best.empty() || chosen.size() < best.size()) best = chosen;
    }

    std::sort(best.begin(), best.end(), [&](int x, int y) {
        return model.arcs[x].start < model.arcs[y].start;
    });
    return CoverFamily{best};
}

Graph arcIntersectionGraph(const ArcModel& model) {
    const int m = model.arcCount();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (arcsIntersect(model.arcs[i], model.arcs[j])) edges.emplace_back(i, j);
    return Graph(m, edges);
}

ChainCollection longestChains(const ArcModel& model, bool closed, ExpansionBudget& budget) {
    Graph g = arcIntersectionGraph(model);
    ChainCollection c;
    c.closed = closed;
    if (!closed) {
        c.seqs = longestPaths(g, budget);
    } else if (g.vertexCount() < 3) {
        c.seqs.perVertexCounts.assign(g.vertexCount(), 0);
    } else {
        c.seqs = longestCycles(g, budget);
    }
    return c;
}

ChainProjection chainProjection(const std::uint8_t* chain, int length, const CoverFamily& family) {
    const int n = family.size();
    std::vector<char> inChain;
    int maxId = 0;
    for (int id : family.members) maxId = std::max(maxId, id);
    for (int k = 0; k < length; ++k) maxId = std::max(maxId, (int)chain[k]);
    inChain.assign(maxId + 1, 0);
    for (int k = 0; k < length; ++k) inChain[chain[k]] = 1;

    ChainProjection p;
    std::vector<char> hit(n, 0);
    for (int i = 0; i < n; ++i)
        if (inChain[family.members[i]]) {
            hit[i] = 1;
            p.positions.push_back(i);
        }
    if (p.positions.empty()) {
        p.contiguous = true;
        return p;
    }
    if ((int)p.positions.size() == n) {
        p.contiguous = true;
        p.fullFamily = true;
        p.intervalStart = 0;
        p.intervalEnd = n - 1;
        return p;
    }
    int risingEdges = 0, start = -1;
    for (int i = 0; i < n; ++i)
        if (!hit[i] && hit[(i + 1) % n]) {
            ++risingEdges;
            start = (i + 1) % n;
        }
    p.contiguous = (risingEdges == 1);
    if (p.contiguous) {
        p.intervalStart = start;
        p.intervalEnd = (start + (int)p.positions.size() - 1) % n;
    }
    return p;
}

namespace {

std::string joinIds(const std::vector<int>& ids) {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(ids[i]);
    }
    return s;
}

}  // namespace

CascadeResult theorem6Transversal(const ArcModel& model, TransversalMode mode,
                                  ExpansionBudget& budget) {
    Graph g = arcIntersectionGraph(model);
    ConnectivityReport rep = connectivity(g);
    if (mode == TransversalMode::path && !rep.connected)
        throw std::invalid_argument("path mode needs a connected intersection graph");
    if (mode == TransversalMode::cycle && !rep.twoConnected)
        throw std::invalid_argument("cycle mode needs a 2-connected intersection graph");

    CascadeResult res;
    res.transversal.mode = mode;
    res.family = coveringFamily(model);
    ChainCollection chains = longestChains(model, mode == TransversalMode::cycle, budget);
    const SequenceCollection& cs = chains.seqs;
    if (cs.count == 0) throw std::logic_error("chain enumeration came back empty");
    res.chainsChecked = (long long)cs.count;
    res.log.push_back("longest " + std::string(chains.closed ? "closed " : "") + "chains: order " +
                      std::to_string(cs.length) + ", count " + std::to_string(cs.count));

    auto hitsAll = [&](const std::vector<int>& ids) {
        for (std::uint64_t i = 0; i < cs.count; ++i) {
            const std::uint8_t* c = cs.memberBegin(i);
            bool hit = false;
            for (int k = 0; k < cs.length && !hit; ++k)
                hit = std::find(ids.begin(), ids.end(), (int)c[k]) != ids.end();
            if (!hit) return false;
        }
        return true;
    };
    auto finish = [&](std::vector<int> ids, int step, const std::string& what) {
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (!hitsAll(ids))
            throw FalsificationError("cascade candidate {" + joinIds(ids) +
                                     "} fails verification at step " + std::to_string(step));
        res.transversal.vertices = std::move(ids);
        res.step = step;
        res.log.push_back("step " + std::to_string(step) + ": " + what + " -> {" +
                          joinIds(res.transversal.vertices) + "}, verified against " +
                          std::to_string(cs.count) + " chains");
    };

    if (!res.family || res.family->size() == 1) {
        res.log.push_back(res.family ? "circle covered by a single arc"
                                     : "arcs do not cover the circle");
        for (int id = 0; id < model.arcCount(); ++id) {
            if (cs.perVertexCounts[id] == cs.count) {
                finish({id}, 1, "common arc of every longest chain");
                return res;
            }
        }
        throw FalsificationError("no arc lies on every longest chain in the one-member case");
    }

    const CoverFamily& fam = *res.family;
    const int n = fam.size();
    res.log.push_back("covering family: " + std::to_string(n) + " members [" +
                      joinIds(fam.members) + "]");

    std::vector<ChainProjection> projs(cs.count);
    for (std::uint64_t i = 0; i < cs.count; ++i) {
        projs[i] = chainProjection(cs.memberBegin(i), cs.length, fam);
        if (!projs[i].contiguous || projs[i].positions.empty())
            throw FalsificationError("longest chain projection is not a non-empty cyclic interval");
    }
    res.log.push_back("projections: all " + std::to_string(cs.count) +
                      " contiguous and non-empty");

    // First chain with the fewest covering-family members; the collection is
    // lexicographically sorted, so ties resolve to the least chain.
    auto pickMinProjection = [&](auto&& eligible) {
        std::int64_t pick = -1;
        for (std::uint64_t i = 0; i < cs.count; ++i) {
            if (!eligible(i)) continue;
            if (pick < 0 || projs[i].positions.size() < projs[pick].positions.size())
                pick = (std::int64_t)i;
        }
        return pick;
    };
    auto avoids = [&](std::uint64_t i, const std::vector<int>& ids) {
        const std::uint8_t* c = cs.memberBegin(i);
        for (int k = 0; k < cs.length; ++k)
            if (std::find(ids.begin(), ids.end(), (int)c[k]) != ids.end()) return false;
        return true;
    };

    const std::int64_t pIdx = pickMinProjection([](std::uint64_t) { return true; });
    const int ps = projs[pIdx].intervalStart, pe = projs[pIdx].intervalEnd;
    res.log.push_back("first extremal chain projects onto [" + std::to_string(ps) + ".." +
                      std::to_string(pe) + "]");
    std::vector<int> t2{fam.members[ps], fam.members[pe]};
    std::sort(t2.begin(), t2.end());
    t2.erase(std::unique(t2.begin(), t2.end()), t2.end());
    if (hitsAll(t2)) {
        finish(t2, 2, "interval boundary arcs of the first extremal chain");
        return res;
    }

    const std::int64_t qIdx = pickMinProjection([&](std::uint64_t i) { return avoids(i, t2); });
    if (qIdx < 0) throw std::logic_error("unhit candidate chain vanished at step 3");
    const int qs = projs[qIdx].intervalStart, qe = projs[qIdx].intervalEnd;
    res.log.push_back("second extremal chain projects onto [" + std::to_string(qs) + ".." +
                      std::to_string(qe) + "]");
    const bool caseA = qs == (pe + 1) % n;       // second interval follows the first
    const bool caseB = qe == (ps + n - 1) % n;   // second interval precedes the first
    if (!caseA && !caseB)
        throw FalsificationError("second projection is not adjacent to the first");
    std::vector<int> t3 = caseA ? std::vector<int>{fam.members[ps], fam.members[pe], fam.members[qe]}
                                : std::vector<int>{fam.members[ps], fam.members[pe], fam.members[qs]};
    std::sort(t3.begin(), t3.end());
    t3.erase(std::unique(t3.begin(), t3.end()), t3.end());
    res.log.push_back(std::string("adjacency: second interval ") +
                      (caseA ? "follows" : "precedes") + " the first");
    if (hitsAll(t3)) {
        finish(t3, 3, "boundary arcs of the first two extremal chains");
        return res;
    }

    const std::int64_t rIdx = pickMinProjection([&](std::uint64_t i) { return avoids(i, t3); });
    if (rIdx < 0) throw std::logic_error("unhit candidate chain vanished at step 4");
    const int rs = projs[rIdx].intervalStart, re = projs[rIdx].intervalEnd;
    res.log.push_back("third extremal chain projects onto [" + std::to_string(rs) + ".." +
                      std::to_string(re) + "]");
    std::vector<int> t4;
    if (caseA) {
        if (rs != (qe + 1) % n || re != (ps + n - 1) % n)
            throw FalsificationError("three projections do not tile the covering family");
        t4 = {fam.members[ps], fam.members[qs], fam.members[rs]};
    } else {
        if (re != (qs + n - 1) % n || rs != (pe + 1) % n)
            throw FalsificationError("three projections do not tile the covering family");
        t4 = {fam.members[pe], fam.members[qe], fam.members[re]};
    }
    finish(t4, 4, "one boundary arc from each of three tiling projections");
    return res;
}

}  // namespace trav
