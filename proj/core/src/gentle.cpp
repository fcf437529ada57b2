#include "cxg/gentle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cxg {

namespace {

Ring ringOfChar(char c) {
    switch (c) {
        case 'R': return Ring::R;
        case 'C': return Ring::C;
        default: return Ring::H;
    }
}

Table1Row makeRow(const char* tag, std::vector<GenTerm> r0, std::vector<GenTerm> r1,
                  std::vector<GenTerm> r0i = {}, std::vector<GenTerm> r1i = {}) {
    Table1Row row;
    row.tag = tag;
    row.u = ringOfChar(tag[0]);
    row.v = ringOfChar(tag[1]);
    row.w = ringOfChar(tag[2]);
    row.doubledIn = row.u == row.v;
    row.doubledOut = row.v == row.w;
    row.r0 = std::move(r0);
    row.r1 = std::move(r1);
    row.r0i = std::move(r0i);
    row.r1i = std::move(r1i);
    return row;
}

}  // namespace

const std::vector<Table1Row>& table1Rows() {
    static const std::vector<Table1Row> rows = [] {
        std::vector<Table1Row> r;
        r.push_back(makeRow("RRR",
                            {{+1, 0, "1", 0, "1"}, {-1, 1, "1", 1, "1"}},
                            {{+1, 0, "1", 0, "1"}, {+1, 1, "1", 1, "1"}},
                            {{-1, 0, "1", 1, "1"}, {-1, 1, "1", 0, "1"}},
                            {{+1, 0, "1", 1, "1"}, {-1, 1, "1", 0, "1"}}));
        r.push_back(makeRow("RRH",
                            {{+1, 0, "1", 0, "1"}, {+1, 0, "j", 1, "1"}},
                            {{+1, 0, "1", 0, "1"}, {-1, 0, "j", 1, "1"}}));
        r.push_back(makeRow("RRC",
                            {{+1, 0, "1", 0, "1"}, {+1, 0, "i", 1, "1"}},
                            {{+1, 0, "1", 0, "1"}, {-1, 0, "i", 1, "1"}}));
        r.push_back(makeRow("HHR",
                            {{+1, 0, "1", 0, "1"}, {+1, 0, "1", 1, "j"}},
                            {{+1, 0, "1", 0, "k"}, {-1, 0, "1", 1, "l"}}));
        r.push_back(makeRow("HHH",
                            {{+1, 0, "1", 0, "1"}, {-1, 1, "1", 1, "1"},
                             {+1, 0, "1", 1, "j"}, {+1, 1, "1", 0, "j"}},
                            {{+1, 0, "1", 0, "k"}, {+1, 1, "1", 1, "k"},
                             {-1, 0, "1", 1, "l"}, {+1, 1, "1", 0, "l"}}));
        r.push_back(makeRow("HHC",
                            {{+1, 0, "r1", 0, "1"}, {+1, 0, "r1", 1, "j"}},
                            {{+1, 0, "r1", 0, "k"}, {-1, 0, "r1", 1, "l"}}));
        r.push_back(makeRow("HRR",
                            {{+1, 0, "1", 0, "1"}, {+1, 1, "1", 0, "j"}},
                            {{+1, 0, "1", 0, "1"}, {-1, 1, "1", 0, "j"}}));
        r.push_back(makeRow("CRR",
                            {{+1, 0, "1", 0, "1"}, {+1, 1, "1", 0, "i"}},
                            {{+1, 0, "1", 0, "1"}, {-1, 1, "1", 0, "i"}}));
        r.push_back(makeRow("RHH",
                            {{+1, 0, "1", 0, "1"}, {+1, 1, "1", 0, "j"}},
                            {{+1, 0, "k", 0, "1"}, {+1, 1, "l", 0, "1"}}));
        r.push_back(makeRow("CHH",
                            {{+1, 0, "1", 0, "c1"}, {+1, 1, "j", 0, "c1"}},
                            {{+1, 0, "k", 0, "c1"}, {+1, 1, "l", 0, "c1"}}));
        r.push_back(makeRow("HRH",
                            {{+1, 0, "1", 0, "1"}, {-1, 0, "j", 0, "j"}},
                            {{+1, 0, "1", 0, "1"}, {+1, 0, "j", 0, "j"}}));
        r.push_back(makeRow("HRC",
                            {{+1, 0, "1", 0, "1"}, {-1, 0, "i", 0, "j"}},
                            {{+1, 0, "1", 0, "1"}, {+1, 0, "i", 0, "j"}}));
        r.push_back(makeRow("CRH",
                            {{+1, 0, "1", 0, "1"}, {-1, 0, "j", 0, "i"}},
                            {{+1, 0, "1", 0, "1"}, {+1, 0, "j", 0, "i"}}));
        r.push_back(makeRow("CRC",
                            {{+1, 0, "1", 0, "1"}, {-1, 0, "i", 0, "i"}},
                            {{+1, 0, "1", 0, "1"}, {+1, 0, "i", 0, "i"}}));
        r.push_back(makeRow("RHC", {{+1, 0, "r1", 0, "1"}}, {{+1, 0, "r1", 0, "k"}}));
        r.push_back(makeRow("CHR", {{+1, 0, "1", 0, "c1"}}, {{-1, 0, "k", 0, "c1"}}));
        r.push_back(makeRow("CHC", {{+1, 0, "r1", 0, "c1"}}, {{+1, 0, "r1", 0, "c2"}}));
        r.push_back(makeRow("RHR", {{+1, 0, "1", 0, "1"}}, {{+1, 0, "1", 0, "k"}},
                            {{+1, 0, "1", 0, "j"}}, {{+1, 0, "1", 0, "l"}}));
        return r;
    }();
    return rows;
}

const Table1Row* table1RowByTag(std::string_view tag) {
    for (const auto& row : table1Rows())
        if (tag == row.tag) return &row;
    return nullptr;
}

namespace {

// Orders a doubled side so the lexicographically smaller name takes the
// plain role.
void assignRoles(const ModQuiver& q, std::vector<int> arrows, bool doubled, int& plain,
                 int& partner) {
    if (doubled) {
        const std::string& n0 = q.arrows[static_cast<std::size_t>(arrows[0])].name;
        const std::string& n1 = q.arrows[static_cast<std::size_t>(arrows[1])].name;
        if (n1 < n0) std::swap(arrows[0], arrows[1]);
        plain = arrows[0];
        partner = arrows[1];
    } else {
        plain = arrows[0];
        partner = -1;
    }
}

}  // namespace

std::optional<Table1Match> matchTable1Shape(const ModQuiver& q, int v) {
    Ring rv = q.vertices[static_cast<std::size_t>(v)].ring;
    if (rv == Ring::C) return std::nullopt;
    std::vector<int> out = q.outArrows(v);
    std::vector<int> in = q.inArrows(v);
    if (out.empty() || in.empty()) return std::nullopt;
    int w = q.arrows[static_cast<std::size_t>(out[0])].tgt;
    int u = q.arrows[static_cast<std::size_t>(in[0])].src;
    for (int a : out)
        if (q.arrows[static_cast<std::size_t>(a)].tgt != w) return std::nullopt;
    for (int b : in)
        if (q.arrows[static_cast<std::size_t>(b)].src != u) return std::nullopt;
    Ring ru = q.vertices[static_cast<std::size_t>(u)].ring;
    Ring rw = q.vertices[static_cast<std::size_t>(w)].ring;
    std::string tag = {ringName(ru)[0], ringName(rv)[0], ringName(rw)[0]};
    const Table1Row* row = table1RowByTag(tag);
    if (!row) return std::nullopt;
    std::size_t wantOut = row->doubledOut ? 2 : 1;
    std::size_t wantIn = row->doubledIn ? 2 : 1;
    // A loop vertex (N_v = {v}) uses the same arrows in both roles.
    if (u == v && w == v) {
        if (out.size() != 2 || in.size() != 2) return std::nullopt;
    } else if (out.size() != wantOut || in.size() != wantIn) {
        return std::nullopt;
    }
    Table1Match m;
    m.row = row;
    assignRoles(q, out, out.size() == 2, m.a, m.ai);
    assignRoles(q, in, in.size() == 2, m.b, m.bi);
    return m;
}

std::optional<std::string> matchDegenerateShape(const ModQuiver& q, int v) {
    Ring rv = q.vertices[static_cast<std::size_t>(v)].ring;
    if (rv == Ring::C) return std::nullopt;
    std::vector<int> out = q.outArrows(v);
    std::vector<int> in = q.inArrows(v);
    if (!out.empty() && !in.empty()) return std::nullopt;
    std::string base = ringName(rv);
    if (out.empty() && in.empty()) return base + "_isolated";
    const std::vector<int>& side = out.empty() ? in : out;
    int other = out.empty() ? q.arrows[static_cast<std::size_t>(side[0])].src
                            : q.arrows[static_cast<std::size_t>(side[0])].tgt;
    for (int a : side) {
        int o = out.empty() ? q.arrows[static_cast<std::size_t>(a)].src
                            : q.arrows[static_cast<std::size_t>(a)].tgt;
        if (o != other) return std::nullopt;
    }
    if (other == v) return std::nullopt;  // loops never make v a source or sink
    Ring ro = q.vertices[static_cast<std::size_t>(other)].ring;
    std::size_t want = (ro == rv) ? 2 : 1;
    if (side.size() != want) return std::nullopt;
    std::string shape = out.empty() ? ringName(ro) + "->" + base + "_v"
                                    : base + "_v->" + ringName(ro);
    return shape;
}

QVec instantiateGens(const Deg2Ambient& amb, const Table1Match& match,
                     const std::vector<GenTerm>& terms) {
    QVec out(amb.totalDim(), Rational(0));
    for (const auto& t : terms) {
        int a = t.roleA == 0 ? match.a : match.ai;
        int b = t.roleB == 0 ? match.b : match.bi;
        if (a < 0 || b < 0) throw std::logic_error("generator uses an absent partner arrow");
        int pi = amb.pairIndex(a, b);
        if (pi < 0) throw std::logic_error("generator pair not composable");
        const auto& pr = amb.pairs()[static_cast<std::size_t>(pi)];
        int ia = basisIndex(pr.space->kindA(), t.tokenA);
        int ib = basisIndex(pr.space->kindB(), t.tokenB);
        if (ia < 0 || ib < 0) throw std::logic_error("generator token not in basis");
        QVec comp = pr.space->pureTensor(
            unitVec(static_cast<std::size_t>(realDim(pr.space->kindA())),
                    static_cast<std::size_t>(ia)),
            unitVec(static_cast<std::size_t>(realDim(pr.space->kindB())),
                    static_cast<std::size_t>(ib)));
        QVec emb = amb.embedPair(pi, comp);
        for (std::size_t x = 0; x < out.size(); ++x)
            out[x] += Rational(t.sign) * emb[x];
    }
    return out;
}

Table1Case table1Generators(const Deg2Ambient& amb, const Table1Match& match) {
    Table1Case c;
    c.match = match;
    c.gens0.push_back(instantiateGens(amb, match, match.row->r0));
    if (!match.row->r0i.empty()) c.gens0.push_back(instantiateGens(amb, match, match.row->r0i));
    c.gens1.push_back(instantiateGens(amb, match, match.row->r1));
    if (!match.row->r1i.empty()) c.gens1.push_back(instantiateGens(amb, match, match.row->r1i));
    c.i0 = amb.bimoduleSpan(c.gens0);
    c.i1 = amb.bimoduleSpan(c.gens1);
    return c;
}

std::string VertexVerdict::summary() const {
    std::vector<std::string> parts;
    if (ordinaryR) parts.push_back("OrdinaryR");
    if (ordinaryH) parts.push_back("OrdinaryH");
    if (ordinaryC) parts.push_back("OrdinaryC");
    if (specialNondeg) parts.push_back("Special(" + rowTag + ",p=" + std::to_string(p) + ")");
    if (specialDegenerate) parts.push_back("SpecialDegenerate(" + degTag + ")");
    if (parts.empty()) return "NotGentle";
    std::string s = parts[0];
    for (std::size_t t = 1; t < parts.size(); ++t) s += "+" + parts[t];
    return s;
}

namespace {

bool pairContained(const Deg2Ambient& amb, const QSubspace& iv, int a, int b) {
    int pi = amb.pairIndex(a, b);
    if (pi < 0) return false;
    const auto& pr = amb.pairs()[static_cast<std::size_t>(pi)];
    for (std::size_t t = 0; t < pr.space->dim(); ++t) {
        QVec comp(pr.space->dim(), Rational(0));
        comp[t] = Rational(1);
        if (!iv.contains(amb.embedPair(pi, comp))) return false;
    }
    return true;
}

// G2 at v for the ideal part iv, clause-by-clause; appends failures.
bool checkG2(const Deg2Ambient& amb, const QSubspace& iv, int v, std::vector<std::string>& notes) {
    const ModQuiver& q = amb.quiver();
    bool ok = true;
    std::vector<int> out = q.outArrows(v);
    std::vector<int> in = q.inArrows(v);
    if (in.size() == 2) {
        for (int a : out) {
            bool one = pairContained(amb, iv, a, in[0]);
            bool two = pairContained(amb, iv, a, in[1]);
            if (one == two) {
                ok = false;
                notes.push_back("G2 fails at '" + q.vertices[static_cast<std::size_t>(v)].name +
                                "': " + q.arrows[static_cast<std::size_t>(a)].name +
                                " composes with both or neither incoming arrow");
            }
        }
    }
    if (out.size() == 2) {
        for (int b : in) {
            bool one = pairContained(amb, iv, out[0], b);
            bool two = pairContained(amb, iv, out[1], b);
            if (one == two) {
                ok = false;
                notes.push_back("G2 fails at '" + q.vertices[static_cast<std::size_t>(v)].name +
                                "': " + q.arrows[static_cast<std::size_t>(b)].name +
                                " composes with both or neither outgoing arrow");
            }
        }
    }
    return ok;
}

// G3 at a C vertex: for pairs whose outer rings are both non-complex, the
// ideal meets M(ab) in 0 or all of it.
bool checkG3(const Deg2Ambient& amb, const QSubspace& iv, int v, std::vector<std::string>& notes) {
    const ModQuiver& q = amb.quiver();
    bool ok = true;
    for (int a : q.outArrows(v)) {
        for (int b : q.inArrows(v)) {
            Ring rw = q.vertices[static_cast<std::size_t>(
                q.arrows[static_cast<std::size_t>(a)].tgt)].ring;
            Ring ru = q.vertices[static_cast<std::size_t>(
                q.arrows[static_cast<std::size_t>(b)].src)].ring;
            if (rw == Ring::C || ru == Ring::C) continue;
            int pi = amb.pairIndex(a, b);
            if (pi < 0) continue;
            QSubspace meet = iv.restrictedTo(amb.pairMask(pi));
            std::size_t full = amb.pairs()[static_cast<std::size_t>(pi)].space->dim();
            if (meet.dim() != 0 && meet.dim() != full) {
                ok = false;
                notes.push_back("G3 fails at '" + q.vertices[static_cast<std::size_t>(v)].name +
                                "': ideal meets M(" +
                                q.arrows[static_cast<std::size_t>(a)].name + "." +
                                q.arrows[static_cast<std::size_t>(b)].name +
                                ") in a proper nonzero subspace");
            }
        }
    }
    return ok;
}

}  // namespace

VertexVerdict classifyVertex(const Deg2Ambient& amb, const Degree2Ideal& ideal, int v) {
    const ModQuiver& q = amb.quiver();
    VertexVerdict verdict;
    verdict.vertex = v;
    std::vector<int> out = q.outArrows(v);
    std::vector<int> in = q.inArrows(v);
    verdict.g1 = out.size() <= 2 && in.size() <= 2;
    if (!verdict.g1) {
        verdict.notes.push_back("G1 fails at '" + q.vertices[static_cast<std::size_t>(v)].name +
                                "': " + std::to_string(out.size()) + " outgoing, " +
                                std::to_string(in.size()) + " incoming");
        return verdict;
    }
    QSubspace iv = ideal.vertexPart(amb, v);
    Ring rv = q.vertices[static_cast<std::size_t>(v)].ring;
    bool neighborsUniform = true;
    for (int n : q.neighbors(v))
        neighborsUniform &= q.vertices[static_cast<std::size_t>(n)].ring == rv;
    if (rv != Ring::C && neighborsUniform) {
        std::vector<std::string> g2notes;
        if (checkG2(amb, iv, v, g2notes)) {
            (rv == Ring::R ? verdict.ordinaryR : verdict.ordinaryH) = true;
        } else {
            verdict.notes.insert(verdict.notes.end(), g2notes.begin(), g2notes.end());
        }
    }
    if (rv == Ring::C) {
        std::vector<std::string> g2notes;
        bool g2 = checkG2(amb, iv, v, g2notes);
        bool g3 = checkG3(amb, iv, v, g2notes);
        if (g2 && g3)
            verdict.ordinaryC = true;
        else
            verdict.notes.insert(verdict.notes.end(), g2notes.begin(), g2notes.end());
    }
    if (rv != Ring::C) {
        if (auto match = matchTable1Shape(q, v)) {
            Table1Case c = table1Generators(amb, *match);
            if (iv == c.i0) {
                verdict.specialNondeg = true;
                verdict.rowTag = match->row->tag;
                verdict.p = 0;
            } else if (iv == c.i1) {
                verdict.specialNondeg = true;
                verdict.rowTag = match->row->tag;
                verdict.p = 1;
            } else {
                verdict.notes.push_back(
                    "vertex '" + q.vertices[static_cast<std::size_t>(v)].name + "' matches row " +
                    match->row->tag + " but I_v is neither I^0 nor I^1");
            }
        } else if (auto deg = matchDegenerateShape(q, v)) {
            verdict.specialDegenerate = true;
            verdict.degTag = *deg;
        }
    }
    if (!verdict.gentle() && verdict.notes.empty())
        verdict.notes.push_back("vertex '" + q.vertices[static_cast<std::size_t>(v)].name +
                                "' matches no gentle-vertex criterion");
    return verdict;
}

std::string algebraTypeName(AlgebraType t) {
    switch (t) {
        case AlgebraType::UniformR: return "UniformR";
        case AlgebraType::UniformH: return "UniformH";
        case AlgebraType::SpecialType: return "SpecialType";
        case AlgebraType::NotClassified: return "NotClassified";
    }
    return "?";
}

AlgebraVerdict classifyAlgebra(const Deg2Ambient& amb, const Degree2Ideal& ideal) {
    AlgebraVerdict verdict;
    const ModQuiver& q = amb.quiver();
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        verdict.vertices.push_back(classifyVertex(amb, ideal, static_cast<int>(v)));
    verdict.generatedByVertexParts = ideal.generatedByVertexParts(amb);
    if (!verdict.generatedByVertexParts)
        verdict.reasons.push_back("ideal is not generated by its per-vertex parts");
    bool allR = true, allH = true, allSpecial = true;
    for (const auto& vv : verdict.vertices) {
        allR &= vv.ordinaryR;
        allH &= vv.ordinaryH;
        allSpecial &= vv.ordinaryC || vv.special();
        if (!vv.gentle())
            verdict.reasons.insert(verdict.reasons.end(), vv.notes.begin(), vv.notes.end());
    }
    if (verdict.generatedByVertexParts && allR)
        verdict.type = AlgebraType::UniformR;
    else if (verdict.generatedByVertexParts && allH)
        verdict.type = AlgebraType::UniformH;
    else if (verdict.generatedByVertexParts && allSpecial)
        verdict.type = AlgebraType::SpecialType;
    else {
        verdict.type = AlgebraType::NotClassified;
        if (verdict.reasons.empty())
            verdict.reasons.push_back("vertex verdicts fit neither a uniform nor the special pattern");
    }
    return verdict;
}

std::vector<std::pair<int, int>> dPairs(const ModQuiver& q, const ComplexQuiver& g,
                                        const AlgebraVerdict& verdict) {
    std::set<std::pair<int, int>> qPairs;
    for (const auto& vv : verdict.vertices) {
        if (!vv.specialNondeg) continue;
        auto match = matchTable1Shape(q, vv.vertex);
        if (!match) continue;
        if (match->ai >= 0) qPairs.insert({match->a, match->ai});
        if (match->bi >= 0) qPairs.insert({match->b, match->bi});
    }
    std::vector<std::pair<int, int>> out;
    for (const auto& [qa, qai] : qPairs) {
        // Both endpoints must sanction the rewrite.
        for (int end : {q.arrows[static_cast<std::size_t>(qa)].src,
                        q.arrows[static_cast<std::size_t>(qa)].tgt}) {
            const VertexVerdict& vv = verdict.vertices[static_cast<std::size_t>(end)];
            bool sourceOrSink = q.outArrows(end).empty() || q.inArrows(end).empty();
            if ((vv.ordinaryR || vv.ordinaryH) && !vv.special() && !sourceOrSink)
                throw std::invalid_argument(
                    "d-rewrite of pair '" + q.arrows[static_cast<std::size_t>(qa)].name + "','" +
                    q.arrows[static_cast<std::size_t>(qai)].name +
                    "' touches an ordinary interior vertex");
        }
        out.push_back({g.arrowFibers(qa).at(0), g.arrowFibers(qai).at(0)});
    }
    return out;
}

ComplexPresentation dTransform(const ComplexPresentation& cp,
                               const std::vector<std::pair<int, int>>& pairs) {
    const ComplexQuiver& g = cp.gamma;
    // Substitution per Gamma arrow: list of (arrow, coefficient).
    std::vector<std::vector<std::pair<int, Gaussian>>> subst(g.arrows.size());
    for (std::size_t a = 0; a < g.arrows.size(); ++a) subst[a] = {{static_cast<int>(a), Gaussian(1)}};
    Gaussian half(Rational(1, 2));
    Gaussian halfI(Rational(0), Rational(1, 2));
    for (const auto& [fa, fai] : pairs) {
        subst[static_cast<std::size_t>(fa)] = {{fa, half}, {fai, half}};
        subst[static_cast<std::size_t>(fai)] = {{fa, -halfI}, {fai, halfI}};
    }
    ComplexPresentation out;
    out.gamma = cp.gamma;
    out.blocks = emptyBlocks(out.gamma);
    auto blockAt = [&](int src, int tgt) -> PathPairBlock& {
        for (auto& blk : out.blocks)
            if (blk.src == src && blk.tgt == tgt) return blk;
        throw std::logic_error("block not found");
    };
    for (const auto& blk : cp.blocks) {
        for (const auto& row : blk.sub.basis()) {
            PathVec img;
            for (std::size_t t = 0; t < blk.paths.size(); ++t) {
                if (row[t].isZero()) continue;
                for (const auto& [a1, c1] : subst[static_cast<std::size_t>(blk.paths[t].first)])
                    for (const auto& [a2, c2] :
                         subst[static_cast<std::size_t>(blk.paths[t].second)])
                        addTerm(img, GammaPath{-1, {a1, a2}}, row[t] * c1 * c2);
            }
            for (auto& [key, coords] : splitIntoBlocks(out.blocks, img))
                blockAt(key.first, key.second).sub.add(coords);
        }
    }
    for (const auto& blk : out.blocks)
        for (const auto& row : blk.sub.basis()) out.generators.push_back(blockElem(blk, row));
    return out;
}

GentleReport isLocallyGentle(const ComplexPresentation& cp) {
    GentleReport report;
    const ComplexQuiver& g = cp.gamma;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        std::size_t outDeg = 0, inDeg = 0;
        for (const auto& a : g.arrows) {
            if (a.src == static_cast<int>(v)) ++outDeg;
            if (a.tgt == static_cast<int>(v)) ++inDeg;
        }
        if (outDeg > 2 || inDeg > 2) {
            report.pass = false;
            report.failures.push_back("G1 fails at Gamma vertex '" + g.vertices[v].name + "'");
        }
    }
    // Monomiality: each block must be spanned by the unit paths it contains.
    std::set<std::pair<int, int>> inJ;
    for (const auto& blk : cp.blocks) {
        if (blk.sub.dim() == 0) continue;
        GSubspace mono(blk.paths.size());
        for (std::size_t t = 0; t < blk.paths.size(); ++t) {
            std::vector<Gaussian> unit(blk.paths.size(), Gaussian(0));
            unit[t] = Gaussian(1);
            if (blk.sub.contains(unit)) {
                mono.add(unit);
                inJ.insert(blk.paths[t]);
            }
        }
        if (!(mono == blk.sub)) {
            report.pass = false;
            std::string msg = "relations from '" + g.vertices[static_cast<std::size_t>(blk.src)].name +
                              "' to '" + g.vertices[static_cast<std::size_t>(blk.tgt)].name +
                              "' are not monomial:";
            for (const auto& rowv : blk.sub.basis()) msg += " " + pathVecStr(g, blockElem(blk, rowv));
            report.failures.push_back(msg);
        }
    }
    if (!report.pass) return report;
    // G2 with xor over monomial membership.
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        std::vector<int> out, in;
        for (std::size_t a = 0; a < g.arrows.size(); ++a) {
            if (g.arrows[a].src == static_cast<int>(v)) out.push_back(static_cast<int>(a));
            if (g.arrows[a].tgt == static_cast<int>(v)) in.push_back(static_cast<int>(a));
        }
        auto member = [&](int a, int b) { return inJ.count({a, b}) > 0; };
        if (in.size() == 2) {
            for (int a : out) {
                if (member(a, in[0]) == member(a, in[1])) {
                    report.pass = false;
                    report.failures.push_back("G2 fails at Gamma vertex '" + g.vertices[v].name +
                                              "' through arrow '" +
                                              g.arrows[static_cast<std::size_t>(a)].name + "'");
                }
            }
        }
        if (out.size() == 2) {
            for (int b : in) {
                if (member(out[0], b) == member(out[1], b)) {
                    report.pass = false;
                    report.failures.push_back("G2 fails at Gamma vertex '" + g.vertices[v].name +
                                              "' through arrow '" +
                                              g.arrows[static_cast<std::size_t>(b)].name + "'");
                }
            }
        }
    }
    return report;
}

}  // namespace cxg
