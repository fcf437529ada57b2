#include "cxg/complexify.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cxg {

namespace {

const std::string kBarSuffix = "~";

}  // namespace

int ComplexQuiver::tauVertex(int gv) const {
    const auto& v = vertices[static_cast<std::size_t>(gv)];
    for (std::size_t t = 0; t < vertices.size(); ++t)
        if (vertices[t].fiberOf == v.fiberOf && vertices[t].bar != v.bar)
            return static_cast<int>(t);
    return gv;
}

int ComplexQuiver::tauArrow(int ga) const {
    const auto& a = arrows[static_cast<std::size_t>(ga)];
    for (std::size_t t = 0; t < arrows.size(); ++t)
        if (arrows[t].fiberOf == a.fiberOf && arrows[t].bar != a.bar)
            return static_cast<int>(t);
    return ga;
}

std::vector<int> ComplexQuiver::vertexFibers(int qv) const {
    std::vector<int> out;
    for (std::size_t t = 0; t < vertices.size(); ++t)
        if (vertices[t].fiberOf == qv) out.push_back(static_cast<int>(t));
    return out;
}

std::vector<int> ComplexQuiver::arrowFibers(int qa) const {
    std::vector<int> out;
    for (std::size_t t = 0; t < arrows.size(); ++t)
        if (arrows[t].fiberOf == qa) out.push_back(static_cast<int>(t));
    return out;
}

int ComplexQuiver::vertexFiber(int qv, bool bar) const {
    for (std::size_t t = 0; t < vertices.size(); ++t)
        if (vertices[t].fiberOf == qv && vertices[t].bar == bar) return static_cast<int>(t);
    return -1;
}

ComplexQuiver buildGamma(const ModQuiver& q) {
    ComplexQuiver g;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        g.vertices.push_back({q.vertices[v].name, static_cast<int>(v), false});
        if (q.vertices[v].ring == Ring::C)
            g.vertices.push_back({q.vertices[v].name + kBarSuffix, static_cast<int>(v), true});
    }
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const MqArrow& ar = q.arrows[a];
        // Endpoint fibers of the plain and bar arrow, per the ten cases.
        bool srcBarPlain = false, tgtBarPlain = false;
        bool hasBar = true;
        bool srcBarBar = false, tgtBarBar = false;
        switch (ar.kind) {
            case BimKind::RR:
            case BimKind::HH:
                hasBar = false;
                break;
            case BimKind::RC:      // alpha: i -> j, bar: ibar -> j
            case BimKind::HCcol:
                srcBarBar = true;
                break;
            case BimKind::CR:      // alpha: i -> j, bar: i -> jbar
            case BimKind::CHrow:
                tgtBarBar = true;
                break;
            case BimKind::RH:
            case BimKind::HR:      // two parallel fibers
                break;
            case BimKind::CC:      // alpha: i -> j, bar: ibar -> jbar
                srcBarBar = tgtBarBar = true;
                break;
            case BimKind::CCbar:   // alpha: ibar -> j, bar: i -> jbar
                srcBarPlain = true;
                tgtBarBar = true;
                break;
        }
        int sPlain = g.vertexFiber(ar.src, srcBarPlain);
        int tPlain = g.vertexFiber(ar.tgt, tgtBarPlain);
        g.arrows.push_back({ar.name, sPlain, tPlain, static_cast<int>(a), false});
        if (hasBar) {
            int sBar = g.vertexFiber(ar.src, srcBarBar);
            int tBar = g.vertexFiber(ar.tgt, tgtBarBar);
            g.arrows.push_back({ar.name + kBarSuffix, sBar, tBar, static_cast<int>(a), true});
        }
    }
    return g;
}

std::vector<std::vector<int>> fibersOfPath(const ModQuiver&, const ComplexQuiver& g,
                                           const std::vector<int>& qPath) {
    std::vector<std::vector<int>> acc = {{}};
    // Build from the right (first-applied arrow) to keep composability local.
    for (auto it = qPath.rbegin(); it != qPath.rend(); ++it) {
        std::vector<std::vector<int>> next;
        for (int f : g.arrowFibers(*it)) {
            for (const auto& partial : acc) {
                if (!partial.empty()) {
                    int prev = partial.front();  // most recently placed arrow
                    if (g.arrows[static_cast<std::size_t>(f)].src !=
                        g.arrows[static_cast<std::size_t>(prev)].tgt)
                        continue;
                }
                std::vector<int> ext;
                ext.push_back(f);
                ext.insert(ext.end(), partial.begin(), partial.end());
                next.push_back(std::move(ext));
            }
        }
        acc = std::move(next);
    }
    return acc;
}

CVec complexify(const QVec& v) {
    CVec out;
    out.reserve(v.size());
    for (const auto& r : v) out.emplace_back(r);
    return out;
}

CVec scaled(CVec v, const Gaussian& c) {
    for (auto& x : v) x *= c;
    return v;
}

CVec idempotentE(Ring ring) {
    switch (ring) {
        case Ring::R: return {Gaussian(1)};
        case Ring::C: return {Gaussian(1), Gaussian(0)};
        case Ring::H:
            return {Gaussian(Rational(1, 2)), Gaussian(Rational(0), Rational(-1, 2)),
                    Gaussian(0), Gaussian(0)};
    }
    throw std::logic_error("unreachable");
}

namespace {

Mat2G thetaHC(const CVec& coords) {
    // theta on H (x) C in the quaternion basis: 1, j, k, l.
    static const Mat2G t1 = Mat2G::identity();
    static const Mat2G tj(Gaussian::i(), 0, 0, -Gaussian::i());
    static const Mat2G tk(0, 1, Gaussian(-1), 0);
    static const Mat2G tl(0, Gaussian::i(), Gaussian::i(), 0);
    Mat2G m = coords[0] * t1;
    m += coords[1] * tj;
    m += coords[2] * tk;
    m += coords[3] * tl;
    return m;
}

CVec thetaHCInverse(const Mat2G& m) {
    Gaussian two(2);
    Gaussian twoI = Gaussian(2) * Gaussian::i();
    return {(m.at(0, 0) + m.at(1, 1)) / two, (m.at(0, 0) - m.at(1, 1)) / twoI,
            (m.at(0, 1) - m.at(1, 0)) / two, (m.at(0, 1) + m.at(1, 0)) / twoI};
}

}  // namespace

bool isIdempotentHC(const CVec& e) {
    Mat2G m = thetaHC(e);
    // round-trip through the inverse to pin the coordinate conventions
    if (thetaHC(thetaHCInverse(m)) != m) return false;
    return m * m == m;
}

ThetaMat thetaBasis(BimKind k, int basisIdx) {
    ThetaMat t;
    const Gaussian I = Gaussian::i();
    switch (k) {
        case BimKind::RR:
            t.rows = t.cols = 1;
            t.m.at(0, 0) = Gaussian(1);
            return t;
        case BimKind::HH:
        case BimKind::RH:
        case BimKind::HR: {
            t.rows = t.cols = 2;
            CVec c(4, Gaussian(0));
            c[static_cast<std::size_t>(basisIdx)] = Gaussian(1);
            t.m = thetaHC(c);
            return t;
        }
        case BimKind::RC:
            t.rows = 1;
            t.cols = 2;
            if (basisIdx == 0) {
                t.m.at(0, 0) = Gaussian(1);
                t.m.at(0, 1) = Gaussian(1);
            } else {
                t.m.at(0, 0) = I;
                t.m.at(0, 1) = -I;
            }
            return t;
        case BimKind::CR:
            t.rows = 2;
            t.cols = 1;
            if (basisIdx == 0) {
                t.m.at(0, 0) = Gaussian(1);
                t.m.at(1, 0) = Gaussian(1);
            } else {
                t.m.at(0, 0) = I;
                t.m.at(1, 0) = -I;
            }
            return t;
        case BimKind::CC:
            t.rows = t.cols = 2;
            if (basisIdx == 0) {
                t.m.at(0, 0) = Gaussian(1);
                t.m.at(1, 1) = Gaussian(1);
            } else {
                t.m.at(0, 0) = I;
                t.m.at(1, 1) = -I;
            }
            return t;
        case BimKind::CCbar:
            t.rows = t.cols = 2;
            if (basisIdx == 0) {
                t.m.at(0, 1) = Gaussian(1);
                t.m.at(1, 0) = Gaussian(1);
            } else {
                t.m.at(0, 1) = I;
                t.m.at(1, 0) = -I;
            }
            return t;
        case BimKind::HCcol: {
            // basis c1, i c1, c2, i c2 maps to [a -conj(b); b conj(a)] columns
            t.rows = t.cols = 2;
            Gaussian a(0), b(0);
            switch (basisIdx) {
                case 0: a = Gaussian(1); break;
                case 1: a = I; break;
                case 2: b = Gaussian(1); break;
                case 3: b = I; break;
            }
            t.m = Mat2G(a, -b.conj(), b, a.conj());
            return t;
        }
        case BimKind::CHrow: {
            // basis r1, i r1, r2, i r2 maps to [a b; -conj(b) conj(a)] rows
            t.rows = t.cols = 2;
            Gaussian a(0), b(0);
            switch (basisIdx) {
                case 0: a = Gaussian(1); break;
                case 1: a = I; break;
                case 2: b = Gaussian(1); break;
                case 3: b = I; break;
            }
            t.m = Mat2G(a, b, -b.conj(), a.conj());
            return t;
        }
    }
    throw std::logic_error("unreachable");
}

ThetaMat theta(BimKind k, const CVec& coords) {
    ThetaMat acc = thetaBasis(k, 0);
    acc.m = coords[0] * acc.m;
    for (int t = 1; t < realDim(k); ++t) {
        ThetaMat b = thetaBasis(k, t);
        acc.m += coords[static_cast<std::size_t>(t)] * b.m;
    }
    return acc;
}

FiberAddr fiberAddr(BimKind k, bool bar) {
    switch (k) {
        case BimKind::RR:
        case BimKind::HH:
            return {0, 0};
        case BimKind::RC:
        case BimKind::HCcol:
        case BimKind::HR:
            return bar ? FiberAddr{0, 1} : FiberAddr{0, 0};
        case BimKind::CR:
        case BimKind::CHrow:
        case BimKind::RH:
            return bar ? FiberAddr{1, 0} : FiberAddr{0, 0};
        case BimKind::CC:
            return bar ? FiberAddr{1, 1} : FiberAddr{0, 0};
        case BimKind::CCbar:
            return bar ? FiberAddr{1, 0} : FiberAddr{0, 1};
    }
    throw std::logic_error("unreachable");
}

void addTerm(PathVec& v, const GammaPath& p, const Gaussian& c) {
    if (c.isZero()) return;
    auto it = v.find(p);
    if (it == v.end()) {
        v.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) v.erase(it);
}

PathVec& operator+=(PathVec& a, const PathVec& b) {
    for (const auto& [p, c] : b) addTerm(a, p, c);
    return a;
}

PathVec scaled(PathVec v, const Gaussian& c) {
    PathVec out;
    for (auto& [p, x] : v) addTerm(out, p, x * c);
    return out;
}

PathVec mulPathVec(const ComplexQuiver& g, const PathVec& a, const PathVec& b) {
    PathVec out;
    auto srcOf = [&](const GammaPath& p) {
        return p.trivialVertex >= 0 ? p.trivialVertex
                                    : g.arrows[static_cast<std::size_t>(p.arrows.back())].src;
    };
    auto tgtOf = [&](const GammaPath& p) {
        return p.trivialVertex >= 0 ? p.trivialVertex
                                    : g.arrows[static_cast<std::size_t>(p.arrows.front())].tgt;
    };
    for (const auto& [pa, ca] : a) {
        for (const auto& [pb, cb] : b) {
            if (srcOf(pa) != tgtOf(pb)) continue;
            GammaPath p;
            if (pa.trivialVertex >= 0 && pb.trivialVertex >= 0) {
                p.trivialVertex = pa.trivialVertex;
            } else {
                p.arrows = pa.arrows;
                p.arrows.insert(p.arrows.end(), pb.arrows.begin(), pb.arrows.end());
                if (p.arrows.size() > 2)
                    throw std::invalid_argument("path product of degree above two");
            }
            addTerm(out, p, ca * cb);
        }
    }
    return out;
}

std::string pathVecStr(const ComplexQuiver& g, const PathVec& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : v) {
        std::string coef = c.str();
        if (!first) os << (coef[0] == '-' ? " " : " + ");
        first = false;
        std::string pathStr;
        if (p.trivialVertex >= 0) {
            pathStr = "e_" + g.vertices[static_cast<std::size_t>(p.trivialVertex)].name;
        } else {
            for (std::size_t t = 0; t < p.arrows.size(); ++t) {
                if (t) pathStr += ".";
                pathStr += g.arrows[static_cast<std::size_t>(p.arrows[t])].name;
            }
        }
        if (coef == "1")
            os << pathStr;
        else if (coef == "-1")
            os << "-" << pathStr;
        else if (c.im.isZero() || c.re.isZero())
            os << coef << "*" << pathStr;
        else
            os << "(" << coef << ")*" << pathStr;
    }
    return os.str();
}

PathVec psiVertex(const ModQuiver& q, const ComplexQuiver& g, int qVertex, const CVec& x) {
    Ring ring = q.vertices[static_cast<std::size_t>(qVertex)].ring;
    PathVec out;
    switch (ring) {
        case Ring::R:
            addTerm(out, GammaPath{g.vertexFiber(qVertex, false), {}}, x[0]);
            return out;
        case Ring::C: {
            // a (x) c maps to a c e_i + conj(a) c e_ibar
            Gaussian plain = x[0] + Gaussian::i() * x[1];
            Gaussian bar = x[0] - Gaussian::i() * x[1];
            addTerm(out, GammaPath{g.vertexFiber(qVertex, false), {}}, plain);
            addTerm(out, GammaPath{g.vertexFiber(qVertex, true), {}}, bar);
            return out;
        }
        case Ring::H: {
            Mat2G e = Mat2G::corner();
            Mat2G m = e * thetaHC(x) * e;
            addTerm(out, GammaPath{g.vertexFiber(qVertex, false), {}}, m.at(0, 0));
            return out;
        }
    }
    throw std::logic_error("unreachable");
}

PathVec psiArrow(const ModQuiver& q, const ComplexQuiver& g, int qArrow, const CVec& x) {
    BimKind k = q.arrows[static_cast<std::size_t>(qArrow)].kind;
    ThetaMat m = theta(k, x);
    PathVec out;
    for (int f : g.arrowFibers(qArrow)) {
        FiberAddr ad = fiberAddr(k, g.arrows[static_cast<std::size_t>(f)].bar);
        addTerm(out, GammaPath{-1, {f}}, m.m.at(ad.row, ad.col));
    }
    return out;
}

PathVec psiPair(const ModQuiver& q, const ComplexQuiver& g, int qArrowA, const CVec& x,
                int qArrowB, const CVec& y, const Gaussian& c, bool cornerMiddle) {
    const MqArrow& aQ = q.arrows[static_cast<std::size_t>(qArrowA)];
    const MqArrow& bQ = q.arrows[static_cast<std::size_t>(qArrowB)];
    if (aQ.src != bQ.tgt) throw std::invalid_argument("psiPair: arrows not composable");
    Ring midRing = q.vertices[static_cast<std::size_t>(aQ.src)].ring;
    ThetaMat ma = theta(aQ.kind, x);
    ma.m = c * ma.m;
    ThetaMat mb = theta(bQ.kind, y);
    PathVec out;
    for (int fa : g.arrowFibers(qArrowA)) {
        for (int fb : g.arrowFibers(qArrowB)) {
            const auto& ga = g.arrows[static_cast<std::size_t>(fa)];
            const auto& gb = g.arrows[static_cast<std::size_t>(fb)];
            if (ga.src != gb.tgt) continue;
            FiberAddr adA = fiberAddr(aQ.kind, ga.bar);
            FiberAddr adB = fiberAddr(bQ.kind, gb.bar);
            Gaussian coef;
            if (midRing == Ring::H) {
                int slots = cornerMiddle ? 1 : 2;
                for (int mIdx = 0; mIdx < slots; ++mIdx)
                    coef += ma.m.at(adA.row, mIdx) * mb.m.at(mIdx, adB.col);
            } else {
                coef = ma.m.at(adA.row, adA.col) * mb.m.at(adB.row, adB.col);
            }
            addTerm(out, GammaPath{-1, {fa, fb}}, coef);
        }
    }
    return out;
}

PathVec psiAmbient(const Deg2Ambient& amb, const ComplexQuiver& g, const QVec& h,
                   const Gaussian& c) {
    PathVec out;
    const ModQuiver& q = amb.quiver();
    for (std::size_t pi = 0; pi < amb.pairs().size(); ++pi) {
        const auto& pr = amb.pairs()[pi];
        QVec comp = amb.pairComponent(static_cast<int>(pi), h);
        for (std::size_t t = 0; t < comp.size(); ++t) {
            if (comp[t].isZero()) continue;
            auto [i, j] = pr.space->liftOf(t);
            CVec x = complexify(unitVec(static_cast<std::size_t>(realDim(pr.space->kindA())),
                                        static_cast<std::size_t>(i)));
            CVec y = complexify(unitVec(static_cast<std::size_t>(realDim(pr.space->kindB())),
                                        static_cast<std::size_t>(j)));
            PathVec piece = psiPair(q, g, pr.a, x, pr.b, y, c * Gaussian(comp[t]), false);
            out += piece;
        }
    }
    return out;
}

std::vector<PathPairBlock> emptyBlocks(const ComplexQuiver& g) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> grouped;
    for (std::size_t a = 0; a < g.arrows.size(); ++a)
        for (std::size_t b = 0; b < g.arrows.size(); ++b)
            if (g.arrows[a].src == g.arrows[b].tgt)
                grouped[{g.arrows[b].src, g.arrows[a].tgt}].emplace_back(static_cast<int>(a),
                                                                         static_cast<int>(b));
    std::vector<PathPairBlock> blocks;
    for (auto& [key, paths] : grouped) {
        PathPairBlock blk;
        blk.src = key.first;
        blk.tgt = key.second;
        blk.paths = std::move(paths);
        blk.sub = GSubspace(blk.paths.size());
        blocks.push_back(std::move(blk));
    }
    return blocks;
}

PathVec blockElem(const PathPairBlock& blk, const std::vector<Gaussian>& coords) {
    PathVec out;
    for (std::size_t t = 0; t < blk.paths.size(); ++t)
        addTerm(out, GammaPath{-1, {blk.paths[t].first, blk.paths[t].second}}, coords[t]);
    return out;
}

std::map<std::pair<int, int>, std::vector<Gaussian>> splitIntoBlocks(
    const std::vector<PathPairBlock>& blocks, const PathVec& v) {
    std::map<std::pair<int, int>, std::vector<Gaussian>> out;
    for (const auto& [p, c] : v) {
        if (p.arrows.size() != 2)
            throw std::invalid_argument("splitIntoBlocks: not a degree-2 element");
        bool placed = false;
        for (std::size_t bi = 0; bi < blocks.size() && !placed; ++bi) {
            const auto& blk = blocks[bi];
            for (std::size_t t = 0; t < blk.paths.size(); ++t) {
                if (blk.paths[t].first == p.arrows[0] && blk.paths[t].second == p.arrows[1]) {
                    auto& vec = out[{blk.src, blk.tgt}];
                    if (vec.empty()) vec.assign(blk.paths.size(), Gaussian(0));
                    vec[t] += c;
                    placed = true;
                    break;
                }
            }
        }
        if (!placed) throw std::logic_error("splitIntoBlocks: path not found in any block");
    }
    return out;
}

ComplexPresentation complexifyIdeal(const ModQuiver& q, const Deg2Ambient& amb,
                                    const Degree2Ideal& ideal) {
    ComplexPresentation cp;
    cp.gamma = buildGamma(q);
    cp.blocks = emptyBlocks(cp.gamma);
    auto blockIndex = [&](int src, int tgt) -> PathPairBlock& {
        for (auto& blk : cp.blocks)
            if (blk.src == src && blk.tgt == tgt) return blk;
        throw std::logic_error("block not found");
    };
    for (const auto& h : ideal.span.basis()) {
        PathVec img = psiAmbient(amb, cp.gamma, h, Gaussian(1));
        for (auto& [key, coords] : splitIntoBlocks(cp.blocks, img))
            blockIndex(key.first, key.second).sub.add(coords);
    }
    for (const auto& blk : cp.blocks)
        for (const auto& row : blk.sub.basis()) cp.generators.push_back(blockElem(blk, row));
    return cp;
}

std::string complexPresentationToJson(const ModQuiver& q, const ComplexPresentation& cp) {
    const ComplexQuiver& g = cp.gamma;
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices) {
        nlohmann::json jv = {{"name", v.name},
                             {"fiber_of", q.vertices[static_cast<std::size_t>(v.fiberOf)].name},
                             {"bar", v.bar}};
        if (v.bar) jv["bar_of"] = q.vertices[static_cast<std::size_t>(v.fiberOf)].name;
        j["vertices"].push_back(jv);
    }
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : g.arrows) {
        j["arrows"].push_back({{"name", a.name},
                               {"src", g.vertices[static_cast<std::size_t>(a.src)].name},
                               {"tgt", g.vertices[static_cast<std::size_t>(a.tgt)].name},
                               {"fiber_of", q.arrows[static_cast<std::size_t>(a.fiberOf)].name},
                               {"bar", a.bar}});
    }
    j["tau"] = nlohmann::json::array();
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        int t = g.tauVertex(static_cast<int>(v));
        if (t > static_cast<int>(v))
            j["tau"].push_back({g.vertices[v].name, g.vertices[static_cast<std::size_t>(t)].name});
    }
    for (std::size_t a = 0; a < g.arrows.size(); ++a) {
        int t = g.tauArrow(static_cast<int>(a));
        if (t > static_cast<int>(a))
            j["tau"].push_back({g.arrows[a].name, g.arrows[static_cast<std::size_t>(t)].name});
    }
    j["relations"] = nlohmann::json::array();
    for (const auto& gen : cp.generators) {
        nlohmann::json rel = nlohmann::json::array();
        for (const auto& [p, c] : gen) {
            nlohmann::json term;
            term["path"] = nlohmann::json::array();
            for (int a : p.arrows)
                term["path"].push_back(g.arrows[static_cast<std::size_t>(a)].name);
            term["coef"] = c.str();
            rel.push_back(term);
        }
        j["relations"].push_back(rel);
    }
    return j.dump(2);
}

bool tauStable(const ComplexPresentation& cp) {
    const ComplexQuiver& g = cp.gamma;
    for (const auto& blk : cp.blocks) {
        for (const auto& row : blk.sub.basis()) {
            PathVec img;
            for (std::size_t t = 0; t < blk.paths.size(); ++t) {
                if (row[t].isZero()) continue;
                GammaPath p{-1,
                            {g.tauArrow(blk.paths[t].first), g.tauArrow(blk.paths[t].second)}};
                addTerm(img, p, row[t].conj());
            }
            auto split = splitIntoBlocks(cp.blocks, img);
            for (auto& [key, coords] : split) {
                bool ok = false;
                for (const auto& b2 : cp.blocks)
                    if (b2.src == key.first && b2.tgt == key.second) ok = b2.sub.contains(coords);
                if (!ok) return false;
            }
        }
    }
    return true;
}

}  // namespace cxg
