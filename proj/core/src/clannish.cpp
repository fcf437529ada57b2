#include "cxg/clannish.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cxg {

Gaussian applyTwist(Twist t, const Gaussian& c) { return t == Twist::Conj ? c.conj() : c; }

int SlqPresentation::vertexIndex(std::string_view name) const {
    for (std::size_t t = 0; t < vertices.size(); ++t)
        if (vertices[t] == name) return static_cast<int>(t);
    return -1;
}

int SlqPresentation::arrowIndex(std::string_view name) const {
    for (std::size_t t = 0; t < arrows.size(); ++t)
        if (arrows[t].name == name) return static_cast<int>(t);
    return -1;
}

int SlqPresentation::loopAt(int v) const {
    for (std::size_t t = 0; t < arrows.size(); ++t)
        if (arrows[t].special && arrows[t].src == v) return static_cast<int>(t);
    return -1;
}

Ring SlqPresentation::groupOf(int v) const {
    int s = loopAt(v);
    if (s < 0) return Ring::C;
    return arrows[static_cast<std::size_t>(s)].tag == LoopTag::XSquareMinusOne ? Ring::R : Ring::H;
}

std::vector<int> SlqPresentation::ordinaryOut(int v) const {
    std::vector<int> out;
    for (std::size_t t = 0; t < arrows.size(); ++t)
        if (!arrows[t].special && arrows[t].src == v) out.push_back(static_cast<int>(t));
    return out;
}

std::vector<int> SlqPresentation::ordinaryIn(int v) const {
    std::vector<int> in;
    for (std::size_t t = 0; t < arrows.size(); ++t)
        if (!arrows[t].special && arrows[t].tgt == v) in.push_back(static_cast<int>(t));
    return in;
}

bool SlqPresentation::zContains(const ZPath& p) const {
    return std::find(z.begin(), z.end(), p) != z.end();
}

// --- text format -------------------------------------------------------------

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> splitLines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream is(text);
    std::string raw;
    int n = 0;
    while (std::getline(is, raw)) {
        ++n;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::size_t a = raw.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = raw.find_last_not_of(" \t\r");
        lines.push_back({n, raw.substr(a, b - a + 1)});
    }
    return lines;
}

std::string trim(std::string s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> splitWs(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> splitChar(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

SlqPresentation parseSlq(const std::string& text) {
    SlqPresentation p;
    enum class Section { None, Vertices, Loops, Arrows, Relations };
    Section sec = Section::None;
    std::vector<Line> lines = splitLines(text);
    std::vector<Line> loopLines, arrowLines, relLines;
    for (const Line& ln : lines) {
        if (ln.text == "vertices:") { sec = Section::Vertices; continue; }
        if (ln.text == "special_loops:") { sec = Section::Loops; continue; }
        if (ln.text == "arrows:") { sec = Section::Arrows; continue; }
        if (ln.text == "relations Z:") { sec = Section::Relations; continue; }
        switch (sec) {
            case Section::None:
                throw ParseError(ln.number, 1, "content before any section header");
            case Section::Vertices:
                for (const std::string& name : splitWs(ln.text)) {
                    if (p.vertexIndex(name) >= 0)
                        throw ParseError(ln.number, 1, "duplicate vertex '" + name + "'");
                    p.vertices.push_back(name);
                }
                break;
            case Section::Loops: loopLines.push_back(ln); break;
            case Section::Arrows: arrowLines.push_back(ln); break;
            case Section::Relations: relLines.push_back(ln); break;
        }
    }
    for (const Line& ln : loopLines) {
        std::size_t at = ln.text.find(" at ");
        std::size_t colon = ln.text.find(':');
        if (at == std::string::npos || colon == std::string::npos || colon < at)
            throw ParseError(ln.number, 1, "expected 'name at v: x^2-1|x^2+1'");
        std::string name = trim(ln.text.substr(0, at));
        std::string vname = trim(ln.text.substr(at + 4, colon - at - 4));
        std::string tag = trim(ln.text.substr(colon + 1));
        int v = p.vertexIndex(vname);
        if (v < 0) throw ParseError(ln.number, 1, "unknown vertex '" + vname + "'");
        if (p.loopAt(v) >= 0)
            throw ParseError(ln.number, 1, "vertex '" + vname + "' already has a special loop");
        if (p.arrowIndex(name) >= 0)
            throw ParseError(ln.number, 1, "duplicate arrow name '" + name + "'");
        LoopTag lt;
        if (tag == "x^2-1")
            lt = LoopTag::XSquareMinusOne;
        else if (tag == "x^2+1")
            lt = LoopTag::XSquarePlusOne;
        else
            throw ParseError(ln.number, 1, "unknown loop polynomial '" + tag + "'");
        p.arrows.push_back({name, v, v, Twist::Conj, true, lt});
    }
    for (const Line& ln : arrowLines) {
        std::size_t colon = ln.text.find(':');
        std::size_t arrowPos = ln.text.find("->");
        if (colon == std::string::npos || arrowPos == std::string::npos)
            throw ParseError(ln.number, 1, "expected 'name: src -> tgt [twist id|conj]'");
        std::string name = trim(ln.text.substr(0, colon));
        std::string src = trim(ln.text.substr(colon + 1, arrowPos - colon - 1));
        std::string rest = trim(ln.text.substr(arrowPos + 2));
        Twist twist = Twist::Id;
        std::size_t lb = rest.find('[');
        if (lb != std::string::npos) {
            std::size_t rb = rest.find(']');
            if (rb == std::string::npos) throw ParseError(ln.number, 1, "unterminated bracket");
            std::string inside = trim(rest.substr(lb + 1, rb - lb - 1));
            rest = trim(rest.substr(0, lb));
            if (inside == "twist id")
                twist = Twist::Id;
            else if (inside == "twist conj")
                twist = Twist::Conj;
            else
                throw ParseError(ln.number, 1, "expected [twist id] or [twist conj]");
        }
        int si = p.vertexIndex(src);
        int ti = p.vertexIndex(rest);
        if (si < 0) throw ParseError(ln.number, 1, "unknown vertex '" + src + "'");
        if (ti < 0) throw ParseError(ln.number, 1, "unknown vertex '" + rest + "'");
        if (p.arrowIndex(name) >= 0)
            throw ParseError(ln.number, 1, "duplicate arrow name '" + name + "'");
        p.arrows.push_back({name, si, ti, twist, false});
    }
    for (const Line& ln : relLines) {
        ZPath zp;
        for (const std::string& segRaw : splitChar(ln.text, '.')) {
            std::string seg = trim(segRaw);
            int exp = 1;
            std::size_t caret = seg.find('^');
            if (caret != std::string::npos) {
                std::string e = seg.substr(caret + 1);
                seg = seg.substr(0, caret);
                if (e == "0")
                    exp = 0;
                else if (e == "1")
                    exp = 1;
                else
                    throw ParseError(ln.number, 1, "loop exponent must be 0 or 1");
            }
            int a = p.arrowIndex(seg);
            if (a < 0) throw ParseError(ln.number, 1, "unknown arrow '" + seg + "'");
            if (caret != std::string::npos && !p.arrows[static_cast<std::size_t>(a)].special)
                throw ParseError(ln.number, 1, "exponent on a non-loop arrow '" + seg + "'");
            if (exp == 1) zp.arrows.push_back(a);
        }
        if (zp.arrows.size() < 2) throw ParseError(ln.number, 1, "relation path too short");
        auto isLoop = [&](int a) { return p.arrows[static_cast<std::size_t>(a)].special; };
        if (isLoop(zp.arrows.front()) || isLoop(zp.arrows.back()))
            throw ParseError(ln.number, 1, "relation path starts or ends with a special loop");
        for (std::size_t t = 0; t + 1 < zp.arrows.size(); ++t) {
            const auto& hi = p.arrows[static_cast<std::size_t>(zp.arrows[t])];
            const auto& lo = p.arrows[static_cast<std::size_t>(zp.arrows[t + 1])];
            if (hi.src != lo.tgt)
                throw ParseError(ln.number, 1, "relation path is not composable");
            if (zp.arrows[t] == zp.arrows[t + 1] && hi.special)
                throw ParseError(ln.number, 1, "relation path contains s.s");
        }
        p.z.push_back(std::move(zp));
    }
    return p;
}

std::string serializeSlq(const SlqPresentation& p) {
    std::ostringstream os;
    os << "vertices:\n  ";
    for (std::size_t t = 0; t < p.vertices.size(); ++t) os << (t ? " " : "") << p.vertices[t];
    os << "\nspecial_loops:\n";
    for (const auto& a : p.arrows) {
        if (!a.special) continue;
        os << "  " << a.name << " at " << p.vertices[static_cast<std::size_t>(a.src)] << ": "
           << (a.tag == LoopTag::XSquareMinusOne ? "x^2-1" : "x^2+1") << "\n";
    }
    os << "arrows:\n";
    for (const auto& a : p.arrows) {
        if (a.special) continue;
        os << "  " << a.name << ": " << p.vertices[static_cast<std::size_t>(a.src)] << " -> "
           << p.vertices[static_cast<std::size_t>(a.tgt)] << " [twist "
           << (a.twist == Twist::Id ? "id" : "conj") << "]\n";
    }
    os << "relations Z:\n";
    for (const auto& zp : p.z) {
        os << "  ";
        for (std::size_t t = 0; t < zp.arrows.size(); ++t)
            os << (t ? "." : "") << p.arrows[static_cast<std::size_t>(zp.arrows[t])].name;
        os << "\n";
    }
    return os.str();
}

std::string slqToJson(const SlqPresentation& p) {
    nlohmann::json j;
    j["vertices"] = p.vertices;
    j["special_loops"] = nlohmann::json::array();
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : p.arrows) {
        if (a.special) {
            j["special_loops"].push_back(
                {{"name", a.name},
                 {"at", p.vertices[static_cast<std::size_t>(a.src)]},
                 {"polynomial", a.tag == LoopTag::XSquareMinusOne ? "x^2-1" : "x^2+1"}});
        } else {
            j["arrows"].push_back({{"name", a.name},
                                   {"src", p.vertices[static_cast<std::size_t>(a.src)]},
                                   {"tgt", p.vertices[static_cast<std::size_t>(a.tgt)]},
                                   {"twist", a.twist == Twist::Id ? "id" : "conj"}});
        }
    }
    j["Z"] = nlohmann::json::array();
    for (const auto& zp : p.z) {
        nlohmann::json path = nlohmann::json::array();
        for (int a : zp.arrows) path.push_back(p.arrows[static_cast<std::size_t>(a)].name);
        j["Z"].push_back(path);
    }
    return j.dump(2);
}

GentleTypeReport checkGentleType(const SlqPresentation& p) {
    GentleTypeReport report;
    auto fail = [&](std::string msg) {
        report.pass = false;
        report.failures.push_back(std::move(msg));
    };
    for (std::size_t v = 0; v < p.vertices.size(); ++v) {
        std::size_t out = 0, in = 0;
        for (const auto& a : p.arrows) {
            if (a.src == static_cast<int>(v)) ++out;
            if (a.tgt == static_cast<int>(v)) ++in;
        }
        if (out > 2 || in > 2) fail("G1 fails at '" + p.vertices[v] + "'");
    }
    // G2: the counts range over all arrows, special loops included; a path
    // ending in a loop is never in Z, so a loop occupies the non-relation
    // slot of its vertex.
    for (std::size_t a = 0; a < p.arrows.size(); ++a) {
        if (p.arrows[a].special) continue;
        int inZ = 0, notZ = 0;
        for (std::size_t b = 0; b < p.arrows.size(); ++b) {
            if (p.arrows[b].tgt != p.arrows[a].src) continue;
            ZPath cand{{static_cast<int>(a), static_cast<int>(b)}};
            (p.zContains(cand) ? inZ : notZ)++;
        }
        if (inZ > 1)
            fail("G2 fails: '" + p.arrows[a].name + "' starts two relation paths");
        if (notZ > 1)
            fail("G2 fails: '" + p.arrows[a].name + "' composes with two arrows outside Z");
        inZ = notZ = 0;
        for (std::size_t g = 0; g < p.arrows.size(); ++g) {
            if (p.arrows[g].src != p.arrows[a].tgt) continue;
            ZPath cand{{static_cast<int>(g), static_cast<int>(a)}};
            (p.zContains(cand) ? inZ : notZ)++;
        }
        if (inZ > 1)
            fail("G2 fails: '" + p.arrows[a].name + "' ends two relation paths");
        if (notZ > 1)
            fail("G2 fails: two arrows compose with '" + p.arrows[a].name + "' outside Z");
    }
    for (const auto& zp : p.z) {
        if (zp.arrows.size() != 2)
            fail("G3 fails: a relation path does not have length two");
        else
            for (int a : zp.arrows)
                if (p.arrows[static_cast<std::size_t>(a)].special)
                    fail("G3 fails: a relation path passes through a special loop");
    }
    return report;
}

// --- words -------------------------------------------------------------------

Word trivialWord(const SlqPresentation&, int vertex, const Gaussian& c) {
    Word w;
    w.coef = c;
    w.vertexIfEmpty = vertex;
    return w;
}

Twist wordTwist(const SlqPresentation& p, const std::vector<int>& arrows) {
    int conj = 0;
    for (int a : arrows)
        if (p.arrows[static_cast<std::size_t>(a)].twist == Twist::Conj) ++conj;
    return conj % 2 ? Twist::Conj : Twist::Id;
}

Word normalizeWord(const SlqPresentation& p, Word w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t t = 0; t + 1 < w.arrows.size(); ++t) {
            const auto& a = p.arrows[static_cast<std::size_t>(w.arrows[t])];
            if (w.arrows[t] == w.arrows[t + 1] && a.special) {
                if (a.tag == LoopTag::XSquarePlusOne) w.coef = -w.coef;
                if (w.arrows.size() == 2) w.vertexIfEmpty = a.src;
                w.arrows.erase(w.arrows.begin() + static_cast<std::ptrdiff_t>(t),
                               w.arrows.begin() + static_cast<std::ptrdiff_t>(t) + 2);
                changed = true;
                break;
            }
        }
    }
    if (!w.arrows.empty()) w.vertexIfEmpty = -1;
    return w;
}

namespace {

int wordSrc(const SlqPresentation& p, const Word& w) {
    return w.arrows.empty() ? w.vertexIfEmpty
                            : p.arrows[static_cast<std::size_t>(w.arrows.back())].src;
}

int wordTgt(const SlqPresentation& p, const Word& w) {
    return w.arrows.empty() ? w.vertexIfEmpty
                            : p.arrows[static_cast<std::size_t>(w.arrows.front())].tgt;
}

}  // namespace

Word mulWords(const SlqPresentation& p, const Word& a, const Word& b) {
    if (wordSrc(p, a) != wordTgt(p, b))
        throw std::invalid_argument("word product is not composable");
    Word w;
    w.coef = a.coef * applyTwist(wordTwist(p, a.arrows), b.coef);
    w.arrows = a.arrows;
    w.arrows.insert(w.arrows.end(), b.arrows.begin(), b.arrows.end());
    w.vertexIfEmpty = w.arrows.empty() ? wordSrc(p, a) : -1;
    return normalizeWord(p, std::move(w));
}

std::string wordStr(const SlqPresentation& p, const Word& w) {
    std::string s = w.coef.str();
    if (w.arrows.empty()) return s + "*e_" + p.vertices[static_cast<std::size_t>(w.vertexIfEmpty)];
    for (std::size_t t = 0; t < w.arrows.size(); ++t)
        s += (t ? "." : "*") + p.arrows[static_cast<std::size_t>(w.arrows[t])].name;
    return s;
}

// --- basic presentation --------------------------------------------------------

BasicPresentation buildQb(const SlqPresentation& p, const PartnerNamer& namer) {
    PartnerNamer name = namer ? namer : [](const std::string& s) { return s + "_i"; };
    BasicPresentation b;
    for (std::size_t v = 0; v < p.vertices.size(); ++v)
        b.q.vertices.push_back({p.vertices[v], p.groupOf(static_cast<int>(v))});
    b.arrowImage.assign(p.arrows.size(), {-1, -1});
    for (std::size_t a = 0; a < p.arrows.size(); ++a) {
        const SlqArrow& ar = p.arrows[a];
        if (ar.special) continue;
        Ring tg = p.groupOf(ar.tgt);
        Ring sg = p.groupOf(ar.src);
        BimKind kind;
        if (tg == Ring::C && sg == Ring::C)
            kind = ar.twist == Twist::Id ? BimKind::CC : BimKind::CCbar;
        else
            kind = kindsBetween(tg, sg).front();
        b.arrowImage[a][0] = static_cast<int>(b.q.arrows.size());
        b.q.arrows.push_back({ar.name, ar.src, ar.tgt, kind});
        bool doubles = (tg == sg) && (tg == Ring::R || tg == Ring::H);
        if (doubles) {
            b.arrowImage[a][1] = static_cast<int>(b.q.arrows.size());
            b.q.arrows.push_back({name(ar.name), ar.src, ar.tgt, kind});
        }
    }
    b.amb = std::make_shared<Deg2Ambient>(b.q);
    return b;
}

// --- Phi -----------------------------------------------------------------------

namespace {

// Matrix of entries over a fixed coordinate space; rows/cols are 2 exactly
// when the corresponding end vertex lies in Q_R.
struct SlotMat {
    int rows = 1;
    int cols = 1;
    std::size_t entryDim = 0;
    std::array<QVec, 4> e;

    QVec& at(int r, int c) { return e[static_cast<std::size_t>(r * 2 + c)]; }
    const QVec& at(int r, int c) const { return e[static_cast<std::size_t>(r * 2 + c)]; }

    void init(int r, int c, std::size_t dim) {
        rows = r;
        cols = c;
        entryDim = dim;
        for (auto& v : e) v.assign(dim, Rational(0));
    }
};

using EntryAct = std::function<QVec(const RingElem&, const QVec&)>;

void slotScale(SlotMat& m, const Rational& s) {
    for (auto& v : m.e)
        for (auto& x : v) x *= s;
}

SlotMat slotAdd(const SlotMat& a, const SlotMat& b) {
    SlotMat out = a;
    for (std::size_t t = 0; t < 4; ++t)
        for (std::size_t x = 0; x < out.entryDim; ++x) out.e[t][x] += b.e[t][x];
    return out;
}

// Left multiplication by a coefficient a+bi at the target group.
void slotLeftCoef(SlotMat& m, Ring group, const Gaussian& c, const EntryAct& leftEntry) {
    if (group == Ring::R) {
        // a*I + b*Rot acting on rows; Rot*M swaps rows with a sign.
        SlotMat rot = m;
        for (int col = 0; col < m.cols; ++col) {
            rot.at(0, col) = m.at(1, col);
            for (auto& x : rot.at(0, col)) x *= Rational(-1);
            rot.at(1, col) = m.at(0, col);
        }
        slotScale(m, c.re);
        slotScale(rot, c.im);
        m = slotAdd(m, rot);
        return;
    }
    RingElem r = group == Ring::H ? RingElem{Ring::H, {c.re, c.im, Rational(0), Rational(0)}}
                                  : RingElem{Ring::C, {c.re, c.im}};
    for (auto& v : m.e) v = leftEntry(r, v);
}

void slotRightCoef(SlotMat& m, Ring group, const Gaussian& c, const EntryAct& rightEntry) {
    if (group == Ring::R) {
        SlotMat rot = m;
        for (int row = 0; row < m.rows; ++row) {
            rot.at(row, 0) = m.at(row, 1);
            rot.at(row, 1) = m.at(row, 0);
            for (auto& x : rot.at(row, 1)) x *= Rational(-1);
        }
        slotScale(m, c.re);
        slotScale(rot, c.im);
        m = slotAdd(m, rot);
        return;
    }
    RingElem r = group == Ring::H ? RingElem{Ring::H, {c.re, c.im, Rational(0), Rational(0)}}
                                  : RingElem{Ring::C, {c.re, c.im}};
    for (auto& v : m.e) v = rightEntry(r, v);
}

void slotLeftLoop(SlotMat& m, Ring group, const EntryAct& leftEntry) {
    if (group == Ring::R) {
        for (int col = 0; col < m.cols; ++col)
            for (auto& x : m.at(1, col)) x *= Rational(-1);
        return;
    }
    if (group == Ring::H) {
        RingElem k{Ring::H, {Rational(0), Rational(0), Rational(1), Rational(0)}};
        for (auto& v : m.e) v = leftEntry(k, v);
        return;
    }
    throw std::logic_error("special loop at a Q_C vertex");
}

void slotRightLoop(SlotMat& m, Ring group, const EntryAct& rightEntry) {
    if (group == Ring::R) {
        for (int row = 0; row < m.rows; ++row)
            for (auto& x : m.at(row, 1)) x *= Rational(-1);
        return;
    }
    if (group == Ring::H) {
        RingElem k{Ring::H, {Rational(0), Rational(0), Rational(1), Rational(0)}};
        for (auto& v : m.e) v = rightEntry(k, v);
        return;
    }
    throw std::logic_error("special loop at a Q_C vertex");
}

struct ArrowBlocks {
    BimKind kind;
    int plainDim;
    bool hasPartner;
    std::size_t dim;  // plainDim or 2*plainDim
};

ArrowBlocks blocksOf(const BasicPresentation& b, int slqArrow) {
    ArrowBlocks ab;
    int plain = b.arrowImage[static_cast<std::size_t>(slqArrow)][0];
    ab.kind = b.q.arrows[static_cast<std::size_t>(plain)].kind;
    ab.plainDim = realDim(ab.kind);
    ab.hasPartner = b.arrowImage[static_cast<std::size_t>(slqArrow)][1] >= 0;
    ab.dim = static_cast<std::size_t>(ab.plainDim) * (ab.hasPartner ? 2 : 1);
    return ab;
}

EntryAct entryLeft(const ArrowBlocks& ab) {
    return [ab](const RingElem& r, const QVec& v) {
        QVec out(v.size(), Rational(0));
        int blocks = ab.hasPartner ? 2 : 1;
        for (int blk = 0; blk < blocks; ++blk) {
            QVec part(v.begin() + blk * ab.plainDim, v.begin() + (blk + 1) * ab.plainDim);
            QVec acted = leftAct(ab.kind, r, part);
            std::copy(acted.begin(), acted.end(), out.begin() + blk * ab.plainDim);
        }
        return out;
    };
}

EntryAct entryRight(const ArrowBlocks& ab) {
    return [ab](const RingElem& r, const QVec& v) {
        QVec out(v.size(), Rational(0));
        int blocks = ab.hasPartner ? 2 : 1;
        for (int blk = 0; blk < blocks; ++blk) {
            QVec part(v.begin() + blk * ab.plainDim, v.begin() + (blk + 1) * ab.plainDim);
            QVec acted = rightAct(ab.kind, r, part);
            std::copy(acted.begin(), acted.end(), out.begin() + blk * ab.plainDim);
        }
        return out;
    };
}

// phi_1 of a single ordinary arrow, from the case list of the basic-algebra
// construction.
SlotMat phi1Arrow(const SlqPresentation& p, const BasicPresentation& b, int slqArrow) {
    const SlqArrow& ar = p.arrows[static_cast<std::size_t>(slqArrow)];
    Ring tg = p.groupOf(ar.tgt);
    Ring sg = p.groupOf(ar.src);
    bool conj = ar.twist == Twist::Conj;
    ArrowBlocks ab = blocksOf(b, slqArrow);
    SlotMat m;
    m.init(tg == Ring::R ? 2 : 1, sg == Ring::R ? 2 : 1, ab.dim);
    auto set = [&](int r, int c, int block, const char* token, int sign) {
        int idx = basisIndex(ab.kind, token);
        m.at(r, c)[static_cast<std::size_t>(block * ab.plainDim + idx)] = Rational(sign);
    };
    if (tg == Ring::R && sg == Ring::R) {
        if (!conj) {
            set(0, 0, 0, "1", 1), set(1, 1, 0, "1", 1);          // identity matrix, plain slot
            set(0, 1, 1, "1", -1), set(1, 0, 1, "1", 1);         // rotation, partner slot
        } else {
            set(0, 0, 0, "1", 1), set(1, 1, 0, "1", -1);         // diag(1,-1)
            set(0, 1, 1, "1", 1), set(1, 0, 1, "1", 1);          // antidiagonal
        }
    } else if (tg == Ring::R && sg == Ring::H) {
        set(0, 0, 0, "1", 1);
        set(1, 0, 0, "j", conj ? 1 : -1);
    } else if (tg == Ring::R && sg == Ring::C) {
        set(0, 0, 0, "1", 1);
        set(1, 0, 0, "i", conj ? 1 : -1);
    } else if (tg == Ring::H && sg == Ring::R) {
        set(0, 0, 0, "1", 1);
        set(0, 1, 0, "j", conj ? -1 : 1);
    } else if (tg == Ring::H && sg == Ring::H) {
        if (!conj) {
            set(0, 0, 0, "1", 1);
            set(0, 0, 1, "j", 1);
        } else {
            set(0, 0, 0, "k", 1);
            set(0, 0, 1, "l", 1);
        }
    } else if (tg == Ring::H && sg == Ring::C) {
        set(0, 0, 0, conj ? "c2" : "c1", 1);
    } else if (tg == Ring::C && sg == Ring::R) {
        set(0, 0, 0, "1", 1);
        set(0, 1, 0, "i", conj ? -1 : 1);
    } else if (tg == Ring::C && sg == Ring::H) {
        set(0, 0, 0, conj ? "r2" : "r1", 1);
    } else {
        set(0, 0, 0, "1", 1);
    }
    return m;
}

}  // namespace

PhiValue phi(const SlqPresentation& p, const BasicPresentation& b, const Word& wIn) {
    Word w = normalizeWord(p, wIn);
    std::vector<int> ordinaries;
    for (int a : w.arrows)
        if (!p.arrows[static_cast<std::size_t>(a)].special) ordinaries.push_back(a);
    PhiValue out;

    if (ordinaries.empty()) {
        // degree 0: a coefficient times loop powers at one vertex
        int v = wordSrc(p, w);
        Ring g = p.groupOf(v);
        SlotMat m;
        std::size_t dim = static_cast<std::size_t>(realDim(g));
        m.init(g == Ring::R ? 2 : 1, g == Ring::R ? 2 : 1, dim);
        if (g == Ring::R) {
            m.at(0, 0)[0] = Rational(1);
            m.at(1, 1)[0] = Rational(1);
        } else {
            m.at(0, 0) = RingElem::one(g).coords;
        }
        EntryAct left = [g](const RingElem& r, const QVec& v2) {
            return ringMul(r, RingElem{g, v2}).coords;
        };
        for (auto it = w.arrows.rbegin(); it != w.arrows.rend(); ++it)
            slotLeftLoop(m, g, left);
        slotLeftCoef(m, g, w.coef, left);
        out.degree = 0;
        if (g == Ring::R)
            out.scalar = RingElem{Ring::R, {m.at(0, 0)[0]}};
        else
            out.scalar = RingElem{g, m.at(0, 0)};
        return out;
    }

    if (ordinaries.size() > 2)
        throw std::invalid_argument("phi: more than two ordinary arrows in the word");

    // Split the word into loop runs around the ordinary arrows.
    std::vector<std::vector<int>> loopRuns(ordinaries.size() + 1);
    std::size_t seg = 0;
    for (int a : w.arrows) {
        if (p.arrows[static_cast<std::size_t>(a)].special)
            loopRuns[seg].push_back(a);
        else
            ++seg;
    }

    if (ordinaries.size() == 1) {
        int arrow = ordinaries[0];
        const SlqArrow& ar = p.arrows[static_cast<std::size_t>(arrow)];
        ArrowBlocks ab = blocksOf(b, arrow);
        SlotMat m = phi1Arrow(p, b, arrow);
        for (std::size_t t = 0; t < loopRuns[0].size(); ++t)
            slotLeftLoop(m, p.groupOf(ar.tgt), entryLeft(ab));
        for (std::size_t t = 0; t < loopRuns[1].size(); ++t)
            slotRightLoop(m, p.groupOf(ar.src), entryRight(ab));
        slotLeftCoef(m, p.groupOf(ar.tgt), w.coef, entryLeft(ab));
        out.degree = 1;
        out.slqArrow = arrow;
        out.deg1 = m.at(0, 0);  // outer truncation keeps the corner
        return out;
    }

    int arrowA = ordinaries[0];
    int arrowB = ordinaries[1];
    const SlqArrow& arA = p.arrows[static_cast<std::size_t>(arrowA)];
    const SlqArrow& arB = p.arrows[static_cast<std::size_t>(arrowB)];
    if (loopRuns[1].size() > 1)
        throw std::invalid_argument("phi: more than one interior special loop");
    ArrowBlocks abA = blocksOf(b, arrowA);
    ArrowBlocks abB = blocksOf(b, arrowB);
    SlotMat ma = phi1Arrow(p, b, arrowA);
    for (std::size_t t = 0; t < loopRuns[0].size(); ++t)
        slotLeftLoop(ma, p.groupOf(arA.tgt), entryLeft(abA));
    // the interior loop attaches to the right of the first factor
    for (std::size_t t = 0; t < loopRuns[1].size(); ++t)
        slotRightLoop(ma, p.groupOf(arA.src), entryRight(abA));
    SlotMat mb = phi1Arrow(p, b, arrowB);
    for (std::size_t t = 0; t < loopRuns[2].size(); ++t)
        slotRightLoop(mb, p.groupOf(arB.src), entryRight(abB));
    slotLeftCoef(ma, p.groupOf(arA.tgt), w.coef, entryLeft(abA));

    // Middle contraction over the slots shared at s(arrowA) = t(arrowB),
    // then the outer epsilon truncation keeps the (0, 0) entry.
    const Deg2Ambient& amb = *b.amb;
    QVec acc(amb.totalDim(), Rational(0));
    int midSlots = p.groupOf(arA.src) == Ring::R ? 2 : 1;
    for (int mid = 0; mid < midSlots; ++mid) {
        const QVec& ea = ma.at(0, mid);
        const QVec& eb = mb.at(mid, 0);
        int blocksA = abA.hasPartner ? 2 : 1;
        int blocksB = abB.hasPartner ? 2 : 1;
        for (int ba = 0; ba < blocksA; ++ba) {
            QVec xa(ea.begin() + ba * abA.plainDim, ea.begin() + (ba + 1) * abA.plainDim);
            int qa = b.arrowImage[static_cast<std::size_t>(arrowA)][static_cast<std::size_t>(ba)];
            for (int bb = 0; bb < blocksB; ++bb) {
                QVec xb(eb.begin() + bb * abB.plainDim, eb.begin() + (bb + 1) * abB.plainDim);
                int qb2 =
                    b.arrowImage[static_cast<std::size_t>(arrowB)][static_cast<std::size_t>(bb)];
                int pi = amb.pairIndex(qa, qb2);
                if (pi < 0) throw std::logic_error("phi: basic arrows do not compose");
                const auto& pr = amb.pairs()[static_cast<std::size_t>(pi)];
                QVec comp = pr.space->pureTensor(xa, xb);
                QVec emb = amb.embedPair(pi, comp);
                for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += emb[t];
            }
        }
    }
    out.degree = 2;
    out.deg2 = std::move(acc);
    return out;
}

Degree2Ideal inducedIdeal(const SlqPresentation& p, const BasicPresentation& b) {
    std::vector<QVec> gens;
    for (const auto& zp : p.z) {
        std::vector<int> ords;
        for (int a : zp.arrows)
            if (!p.arrows[static_cast<std::size_t>(a)].special) ords.push_back(a);
        if (ords.size() != 2)
            throw std::invalid_argument("induced ideal: relation is not a length-two path");
        int alpha = ords[0];
        int beta = ords[1];
        int v = p.arrows[static_cast<std::size_t>(alpha)].src;
        Ring vg = p.groupOf(v);
        if (vg == Ring::C) {
            int pi = b.amb->pairIndex(b.arrowImage[static_cast<std::size_t>(alpha)][0],
                                      b.arrowImage[static_cast<std::size_t>(beta)][0]);
            if (pi < 0) throw std::logic_error("induced ideal: relation pair not composable");
            const auto& pr = b.amb->pairs()[static_cast<std::size_t>(pi)];
            for (std::size_t t = 0; t < pr.space->dim(); ++t) {
                QVec comp(pr.space->dim(), Rational(0));
                comp[t] = Rational(1);
                gens.push_back(b.amb->embedPair(pi, comp));
            }
            continue;
        }
        Word w;
        w.coef = Gaussian(1);
        w.arrows = zp.arrows;
        std::vector<QVec> relGens;
        relGens.push_back(phi(p, b, w).deg2);
        Ring ug = p.groupOf(p.arrows[static_cast<std::size_t>(beta)].src);
        Ring wg = p.groupOf(p.arrows[static_cast<std::size_t>(alpha)].tgt);
        if (ug == Ring::R && wg == Ring::R) {
            Word wi = w;
            wi.coef = Gaussian::i();
            relGens.push_back(phi(p, b, wi).deg2);
        }
        QSubspace span = b.amb->bimoduleSpan(relGens);
        auto match = matchTable1Shape(b.q, v);
        if (!match) throw std::logic_error("induced ideal: middle vertex matches no local shape");
        Table1Case t1 = table1Generators(*b.amb, *match);
        if (!(span == t1.i0) && !(span == t1.i1))
            throw std::logic_error("induced ideal: span is neither I^0 nor I^1");
        for (const auto& g : relGens) gens.push_back(g);
    }
    return Degree2Ideal::fromGenerators(*b.amb, std::move(gens));
}

// --- Q^s ----------------------------------------------------------------------

namespace {

std::string freshName(const ModQuiver& q, std::set<std::string>& used, std::string base) {
    while (used.count(base) || q.arrowIndex(base) >= 0 || q.vertexIndex(base) >= 0) base += "_";
    used.insert(base);
    return base;
}

}  // namespace

QsOutput buildQs(const ModQuiver& q, const Deg2Ambient& amb, const Degree2Ideal& ideal,
                 const AlgebraVerdict& verdict) {
    if (verdict.type != AlgebraType::SpecialType)
        throw std::invalid_argument("Q^s construction needs a SpecialType verdict");
    QsOutput out;
    SlqPresentation& s = out.straight;

    // Partner classes: parallel arrows between equal non-complex labels.
    std::vector<int> partnerOf(q.arrows.size(), -1);
    std::vector<bool> dropped(q.arrows.size(), false);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        for (std::size_t c = a + 1; c < q.arrows.size(); ++c) {
            if (q.arrows[a].src != q.arrows[c].src || q.arrows[a].tgt != q.arrows[c].tgt) continue;
            Ring rs = q.vertices[static_cast<std::size_t>(q.arrows[a].src)].ring;
            Ring rt = q.vertices[static_cast<std::size_t>(q.arrows[a].tgt)].ring;
            if (rs != rt || rs == Ring::C) continue;
            std::size_t keep = q.arrows[a].name <= q.arrows[c].name ? a : c;
            std::size_t drop = keep == a ? c : a;
            partnerOf[keep] = static_cast<int>(drop);
            dropped[drop] = true;
            out.droppedPartners[q.arrows[keep].name] = q.arrows[drop].name;
        }
    }

    for (const auto& v : q.vertices) s.vertices.push_back(v.name);
    std::set<std::string> usedNames;
    std::vector<int> loopOf(q.vertices.size(), -1);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        if (q.vertices[v].ring == Ring::C) continue;
        std::string name = freshName(q, usedNames, "s_" + q.vertices[v].name);
        loopOf[v] = static_cast<int>(s.arrows.size());
        s.arrows.push_back({name, static_cast<int>(v), static_cast<int>(v), Twist::Conj, true,
                            q.vertices[v].ring == Ring::R ? LoopTag::XSquareMinusOne
                                                          : LoopTag::XSquarePlusOne});
    }
    std::vector<int> slqArrowOf(q.arrows.size(), -1);
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (dropped[a]) continue;
        slqArrowOf[a] = static_cast<int>(s.arrows.size());
        s.arrows.push_back({q.arrows[a].name, q.arrows[a].src, q.arrows[a].tgt, Twist::Id, false});
    }

    // Relations.
    std::vector<ZPath> zPlain, zPrime;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        if (q.vertices[v].ring != Ring::C) {
            int alpha = -1, beta = -1;
            for (int a : q.outArrows(static_cast<int>(v)))
                if (!dropped[static_cast<std::size_t>(a)]) alpha = a;
            for (int b2 : q.inArrows(static_cast<int>(v)))
                if (!dropped[static_cast<std::size_t>(b2)]) beta = b2;
            if (alpha < 0 || beta < 0) continue;
            const VertexVerdict& vv = verdict.vertices[v];
            if (!vv.specialNondeg)
                throw std::logic_error("interior non-complex vertex without a special verdict");
            zPlain.push_back({{slqArrowOf[static_cast<std::size_t>(alpha)],
                               slqArrowOf[static_cast<std::size_t>(beta)]}});
            ZPath zp;
            zp.arrows.push_back(slqArrowOf[static_cast<std::size_t>(alpha)]);
            if (vv.p == 1) zp.arrows.push_back(loopOf[v]);
            zp.arrows.push_back(slqArrowOf[static_cast<std::size_t>(beta)]);
            zPrime.push_back(std::move(zp));
        } else {
            QSubspace iv = ideal.vertexPart(amb, static_cast<int>(v));
            for (int pi : amb.pairsThrough(static_cast<int>(v))) {
                const auto& pr = amb.pairs()[static_cast<std::size_t>(pi)];
                QSubspace meet = iv.restrictedTo(amb.pairMask(pi));
                if (meet.dim() == 0) continue;
                if (meet.dim() != pr.space->dim())
                    throw std::logic_error("complex-vertex relation is not a full pair");
                ZPath zp{{slqArrowOf[static_cast<std::size_t>(pr.a)],
                          slqArrowOf[static_cast<std::size_t>(pr.b)]}};
                zPlain.push_back(zp);
                zPrime.push_back(zp);
            }
        }
    }
    s.z = zPrime;
    out.twisted = s;
    out.twisted.z = zPlain;

    // sigma' : identity on special-path arrows, conjugation on Cbar arrows.
    auto isComplexComplex = [&](std::size_t qa) {
        return q.vertices[static_cast<std::size_t>(q.arrows[qa].src)].ring == Ring::C &&
               q.vertices[static_cast<std::size_t>(q.arrows[qa].tgt)].ring == Ring::C;
    };
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (dropped[a] || !isComplexComplex(a)) continue;
        Twist tw = q.arrows[a].kind == BimKind::CCbar ? Twist::Conj : Twist::Id;
        s.arrows[static_cast<std::size_t>(slqArrowOf[a])].twist = tw;
        out.twisted.arrows[static_cast<std::size_t>(slqArrowOf[a])].twist = tw;
    }

    // sigma on the twisted presentation: walk maximal special paths.
    auto keptOut = [&](int v) {
        std::vector<int> r;
        for (int a : q.outArrows(v))
            if (!dropped[static_cast<std::size_t>(a)] && !isComplexComplex(static_cast<std::size_t>(a)))
                r.push_back(a);
        return r;
    };
    auto keptIn = [&](int v) {
        std::vector<int> r;
        for (int a : q.inArrows(v))
            if (!dropped[static_cast<std::size_t>(a)] && !isComplexComplex(static_cast<std::size_t>(a)))
                r.push_back(a);
        return r;
    };
    std::vector<bool> visited(q.arrows.size(), false);
    for (std::size_t seed = 0; seed < q.arrows.size(); ++seed) {
        if (dropped[seed] || visited[seed] || isComplexComplex(seed)) continue;
        std::vector<int> path = {static_cast<int>(seed)};  // target-first
        bool cycle = false;
        while (true) {  // extend at the front: arrows leaving t(front)
            int head = q.arrows[static_cast<std::size_t>(path.front())].tgt;
            if (q.vertices[static_cast<std::size_t>(head)].ring == Ring::C) break;
            std::vector<int> next = keptOut(head);
            if (next.empty()) break;
            if (std::find(path.begin(), path.end(), next[0]) != path.end()) {
                cycle = true;
                break;
            }
            path.insert(path.begin(), next[0]);
        }
        if (!cycle) {
            while (true) {  // extend at the back: arrows into s(back)
                int tail = q.arrows[static_cast<std::size_t>(path.back())].src;
                if (q.vertices[static_cast<std::size_t>(tail)].ring == Ring::C) break;
                std::vector<int> prev = keptIn(tail);
                if (prev.empty()) break;
                if (std::find(path.begin(), path.end(), prev[0]) != path.end()) {
                    cycle = true;
                    break;
                }
                path.push_back(prev[0]);
            }
        }
        for (std::size_t t = 0; t < path.size(); ++t) {
            visited[static_cast<std::size_t>(path[t])] = true;
            int src = q.arrows[static_cast<std::size_t>(path[t])].src;
            bool lastApplied = !cycle && t + 1 == path.size();
            Twist tw = Twist::Id;
            if (!lastApplied && q.vertices[static_cast<std::size_t>(src)].ring != Ring::C) {
                const VertexVerdict& vv = verdict.vertices[static_cast<std::size_t>(src)];
                tw = (vv.specialNondeg && vv.p == 1) ? Twist::Conj : Twist::Id;
            }
            out.twisted.arrows[static_cast<std::size_t>(slqArrowOf[static_cast<std::size_t>(
                                   path[t])])].twist = tw;
        }
    }
    return out;
}

// --- twist change ---------------------------------------------------------------

namespace {

// g1 : C_sigma Q^s -> C_sigma' Q^s and its inverse g2, on single arrows. The
// loop power is always read off the sigma twists, whichever direction runs.
Word mapArrow(const SlqPresentation& twistSource, int arrow, bool inverse) {
    const SlqArrow& ar = twistSource.arrows[static_cast<std::size_t>(arrow)];
    Word w;
    w.coef = Gaussian(1);
    w.arrows = {arrow};
    if (ar.special) return w;
    int loop = twistSource.loopAt(ar.src);
    if (loop < 0 || ar.twist != Twist::Conj) return w;
    w.arrows.push_back(loop);
    if (inverse &&
        twistSource.arrows[static_cast<std::size_t>(loop)].tag == LoopTag::XSquarePlusOne)
        w.coef = -w.coef;  // s^{-1} = -s when s^2 = -e
    return w;
}

Word applyMap(const SlqPresentation& from, const SlqPresentation& to,
              const SlqPresentation& twistSource, const Word& w, bool inverse) {
    Word acc = trivialWord(to, wordTgt(from, w), w.coef);
    for (int a : w.arrows) acc = mulWords(to, acc, mapArrow(twistSource, a, inverse));
    return acc;
}

// ordered index of two-ordinary-arrow words for the span comparison
struct WordSpace {
    std::map<std::pair<int, std::vector<int>>, std::size_t> index;
    std::size_t idOf(const Word& w) {
        auto key = std::make_pair(w.vertexIfEmpty, w.arrows);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        std::size_t id = index.size();
        index.emplace(key, id);
        return id;
    }
};

}  // namespace

TwistChangeReport twistChangeIso(const QsOutput& qs) {
    TwistChangeReport report;
    const SlqPresentation& a = qs.twisted;    // (Z, sigma)
    const SlqPresentation& b = qs.straight;   // (Z', sigma')
    // Inverse on generators.
    for (std::size_t t = 0; t < a.arrows.size(); ++t) {
        Word w;
        w.coef = Gaussian(1);
        w.arrows = {static_cast<int>(t)};
        Word image = applyMap(a, b, a, w, false);
        Word back = applyMap(b, a, a, image, true);
        back = normalizeWord(a, back);
        if (back.arrows != w.arrows || back.coef != w.coef) {
            report.pass = false;
            report.failures.push_back("g2(g1(" + a.arrows[t].name + ")) = " + wordStr(a, back));
        }
    }
    // Degree-2 spans of <Z> and <Z'> match under g1.
    WordSpace ws;
    std::vector<std::pair<std::size_t, Word>> zImages, zPrimeWords;
    auto expandBimodule = [&](const SlqPresentation& pres, const Word& g,
                              std::vector<Word>& out) {
        int tv = wordTgt(pres, g);
        int sv = wordSrc(pres, g);
        std::vector<Word> lefts = {trivialWord(pres, tv, Gaussian(1))};
        if (int lp = pres.loopAt(tv); lp >= 0) {
            Word l;
            l.coef = Gaussian(1);
            l.arrows = {lp};
            lefts.push_back(l);
        }
        std::vector<Word> rights = {trivialWord(pres, sv, Gaussian(1))};
        if (int lp = pres.loopAt(sv); lp >= 0) {
            Word r;
            r.coef = Gaussian(1);
            r.arrows = {lp};
            rights.push_back(r);
        }
        for (const auto& l : lefts)
            for (const auto& r : rights) out.push_back(mulWords(pres, mulWords(pres, l, g), r));
    };
    std::vector<Word> vz, vzp;
    for (const auto& zp : a.z) {
        Word w;
        w.coef = Gaussian(1);
        w.arrows = zp.arrows;
        Word img = applyMap(a, b, a, w, false);
        report.images.push_back(wordStr(b, img));
        expandBimodule(b, img, vz);
    }
    for (const auto& zp : b.z) {
        Word w;
        w.coef = Gaussian(1);
        w.arrows = zp.arrows;
        expandBimodule(b, w, vzp);
    }
    for (const auto& w : vz) ws.idOf(w);
    for (const auto& w : vzp) ws.idOf(w);
    std::size_t dim = ws.index.size();
    GSubspace sa(dim), sb(dim);
    for (const auto& w : vz) {
        std::vector<Gaussian> vec(dim, Gaussian(0));
        vec[ws.idOf(w)] = w.coef;
        sa.add(vec);
    }
    for (const auto& w : vzp) {
        std::vector<Gaussian> vec(dim, Gaussian(0));
        vec[ws.idOf(w)] = w.coef;
        sb.add(vec);
    }
    if (!(sa == sb)) {
        report.pass = false;
        report.failures.push_back("g1(<Z>) and <Z'> differ in degree two");
    }
    return report;
}

// --- roundtrip -------------------------------------------------------------------

namespace {

bool sameQuiver(const ModQuiver& a, const ModQuiver& b, std::string& why) {
    if (a.vertices.size() != b.vertices.size() || a.arrows.size() != b.arrows.size()) {
        why = "vertex or arrow counts differ";
        return false;
    }
    for (const auto& v : a.vertices) {
        int idx = b.vertexIndex(v.name);
        if (idx < 0 || b.vertices[static_cast<std::size_t>(idx)].ring != v.ring) {
            why = "vertex '" + v.name + "' differs";
            return false;
        }
    }
    for (const auto& ar : a.arrows) {
        int idx = b.arrowIndex(ar.name);
        if (idx < 0) {
            why = "arrow '" + ar.name + "' missing";
            return false;
        }
        const auto& br = b.arrows[static_cast<std::size_t>(idx)];
        if (a.vertices[static_cast<std::size_t>(ar.src)].name !=
                b.vertices[static_cast<std::size_t>(br.src)].name ||
            a.vertices[static_cast<std::size_t>(ar.tgt)].name !=
                b.vertices[static_cast<std::size_t>(br.tgt)].name ||
            ar.kind != br.kind) {
            why = "arrow '" + ar.name + "' differs";
            return false;
        }
    }
    return true;
}

// Rewrites a subspace of one ambient in the coordinates of another with the
// same quiver up to arrow names.
QSubspace remapSpan(const Deg2Ambient& from, const Deg2Ambient& to, const QSubspace& span) {
    QSubspace out(to.totalDim());
    for (const auto& row : span.basis()) {
        QVec v(to.totalDim(), Rational(0));
        for (std::size_t pi = 0; pi < from.pairs().size(); ++pi) {
            const auto& pr = from.pairs()[pi];
            QVec comp = from.pairComponent(static_cast<int>(pi), row);
            bool zero = true;
            for (const auto& x : comp) zero &= x.isZero();
            if (zero) continue;
            int a2 = to.quiver().arrowIndex(
                from.quiver().arrows[static_cast<std::size_t>(pr.a)].name);
            int b2 = to.quiver().arrowIndex(
                from.quiver().arrows[static_cast<std::size_t>(pr.b)].name);
            int pi2 = to.pairIndex(a2, b2);
            if (pi2 < 0) throw std::logic_error("remap: pair missing in target ambient");
            QVec emb = to.embedPair(pi2, comp);
            for (std::size_t t = 0; t < v.size(); ++t) v[t] += emb[t];
        }
        out.add(v);
    }
    return out;
}

}  // namespace

RoundtripReport roundtripCheck(const ModQuiver& q, const Deg2Ambient& amb,
                               const Degree2Ideal& ideal) {
    RoundtripReport report;
    AlgebraVerdict verdict = classifyAlgebra(amb, ideal);
    if (verdict.type != AlgebraType::SpecialType) {
        report.pass = false;
        report.failures.push_back("input is not of special type: " +
                                  algebraTypeName(verdict.type));
        return report;
    }
    QsOutput qs = buildQs(q, amb, ideal, verdict);
    PartnerNamer namer = [&qs](const std::string& base) {
        auto it = qs.droppedPartners.find(base);
        return it != qs.droppedPartners.end() ? it->second : base + "_i";
    };
    BasicPresentation qb = buildQb(qs.straight, namer);
    std::string why;
    if (!sameQuiver(q, qb.q, why)) {
        report.pass = false;
        report.failures.push_back("(Q^s)^b differs from Q: " + why);
        return report;
    }
    report.notes.push_back("(Q^s)^b reproduces (Q, M) on the nose");
    Degree2Ideal induced = inducedIdeal(qs.straight, qb);
    QSubspace remapped = remapSpan(*qb.amb, amb, induced.span);
    if (!(remapped == ideal.span)) {
        report.pass = false;
        report.failures.push_back("Phi(<Z'>) differs from I in degree two");
    } else {
        report.notes.push_back("Phi(<Z'>) = I degree-2-wise");
    }
    TwistChangeReport tc = twistChangeIso(qs);
    if (!tc.pass) {
        report.pass = false;
        for (const auto& f : tc.failures) report.failures.push_back(f);
    } else {
        report.notes.push_back("twist change g1/g2 verified");
    }
    GentleTypeReport gt = checkGentleType(qs.twisted);
    if (!gt.pass) {
        report.pass = false;
        for (const auto& f : gt.failures) report.failures.push_back("(Z,sigma): " + f);
    } else {
        report.notes.push_back("(Z, sigma) output is of gentle type");
    }
    return report;
}

}  // namespace cxg
