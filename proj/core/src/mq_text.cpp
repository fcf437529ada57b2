#include "cxg/mq_text.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

#include "cxg/gentle.hpp"

namespace cxg {

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

std::optional<BimKind> kindForBracket(const std::string& token, Ring lt, Ring rs) {
    for (BimKind k : kindsBetween(lt, rs))
        if (kindName(k) == token) return k;
    return std::nullopt;
}

// One tensor factor "coef*token[arrow]" of an elem term.
struct Factor {
    Rational coef;
    std::string token;
    std::string arrow;
};

Factor parseFactor(int lineNo, std::string text) {
    text = trim(std::move(text));
    Factor f;
    f.coef = Rational(1);
    std::size_t lb = text.find('[');
    std::size_t rb = text.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw ParseError(lineNo, 1, "expected token[arrow] in '" + text + "'");
    f.arrow = trim(text.substr(lb + 1, rb - lb - 1));
    std::string head = trim(text.substr(0, lb));
    std::size_t star = head.rfind('*');
    if (star != std::string::npos) {
        f.coef = Rational::parse(trim(head.substr(0, star)));
        f.token = trim(head.substr(star + 1));
    } else {
        f.token = head;
    }
    if (f.token.empty()) throw ParseError(lineNo, 1, "missing basis token in '" + text + "'");
    return f;
}

}  // namespace

MqPresentation parseMq(const std::string& text) {
    std::vector<Line> lines = splitLines(text);
    MqPresentation pres;
    enum class Section { None, Vertices, Arrows, Relations };
    Section sec = Section::None;

    std::vector<Line> relationLines;
    for (const Line& ln : lines) {
        if (ln.text == "vertices:") { sec = Section::Vertices; continue; }
        if (ln.text == "arrows:") { sec = Section::Arrows; continue; }
        if (ln.text == "relations:") { sec = Section::Relations; continue; }
        switch (sec) {
            case Section::None:
                throw ParseError(ln.number, 1, "content before any section header");
            case Section::Vertices: {
                std::size_t colon = ln.text.find(':');
                if (colon == std::string::npos)
                    throw ParseError(ln.number, 1, "expected 'name: R|C|H'");
                std::string name = trim(ln.text.substr(0, colon));
                std::string ring = trim(ln.text.substr(colon + 1));
                auto r = ringFromName(ring);
                if (!r)
                    throw ParseError(ln.number, static_cast<int>(colon) + 2,
                                     "unknown ring '" + ring + "'");
                if (pres.q.vertexIndex(name) >= 0)
                    throw ParseError(ln.number, 1, "duplicate vertex '" + name + "'");
                pres.q.vertices.push_back({name, *r});
                break;
            }
            case Section::Arrows: {
                std::size_t colon = ln.text.find(':');
                std::size_t arrowPos = ln.text.find("->");
                if (colon == std::string::npos || arrowPos == std::string::npos)
                    throw ParseError(ln.number, 1, "expected 'name: src -> tgt [kind]'");
                std::string name = trim(ln.text.substr(0, colon));
                std::string src = trim(ln.text.substr(colon + 1, arrowPos - colon - 1));
                std::string rest = trim(ln.text.substr(arrowPos + 2));
                std::string kindTok;
                std::size_t lb = rest.find('[');
                if (lb != std::string::npos) {
                    std::size_t rb = rest.find(']');
                    if (rb == std::string::npos)
                        throw ParseError(ln.number, 1, "unterminated kind bracket");
                    kindTok = trim(rest.substr(lb + 1, rb - lb - 1));
                    rest = trim(rest.substr(0, lb));
                }
                std::string tgt = rest;
                int si = pres.q.vertexIndex(src);
                int ti = pres.q.vertexIndex(tgt);
                if (si < 0) throw ParseError(ln.number, 1, "unknown vertex '" + src + "'");
                if (ti < 0) throw ParseError(ln.number, 1, "unknown vertex '" + tgt + "'");
                if (pres.q.arrowIndex(name) >= 0)
                    throw ParseError(ln.number, 1, "duplicate arrow '" + name + "'");
                Ring lt = pres.q.vertices[static_cast<std::size_t>(ti)].ring;
                Ring rs = pres.q.vertices[static_cast<std::size_t>(si)].ring;
                BimKind kind;
                if (kindTok.empty()) {
                    if (lt == Ring::C && rs == Ring::C)
                        throw ParseError(ln.number, 1,
                                         "arrow '" + name +
                                             "' between C vertices needs [C] or [Cbar]");
                    kind = kindsBetween(lt, rs).front();
                } else {
                    auto k = kindForBracket(kindTok, lt, rs);
                    if (!k)
                        throw ParseError(ln.number, 1,
                                         "kind '" + kindTok + "' does not fit a " + ringName(lt) +
                                             "-" + ringName(rs) + " arrow");
                    kind = *k;
                }
                pres.q.arrows.push_back({name, si, ti, kind});
                break;
            }
            case Section::Relations:
                relationLines.push_back(ln);
                break;
        }
    }
    auto violations = pres.q.validate();
    if (!violations.empty()) throw ParseError(0, 0, violations.front());

    pres.amb = std::make_shared<Deg2Ambient>(pres.q);
    std::vector<QVec> gens;
    for (const Line& ln : relationLines) {
        if (ln.text.rfind("at ", 0) == 0) {
            std::size_t colon = ln.text.find(':');
            if (colon == std::string::npos)
                throw ParseError(ln.number, 1, "expected 'at v: I0|I1'");
            std::string vname = trim(ln.text.substr(3, colon - 3));
            std::string which = trim(ln.text.substr(colon + 1));
            int v = pres.q.vertexIndex(vname);
            if (v < 0) throw ParseError(ln.number, 1, "unknown vertex '" + vname + "'");
            auto match = matchTable1Shape(pres.q, v);
            if (!match)
                throw ParseError(ln.number, 1,
                                 "vertex '" + vname + "' matches no Table-1 local shape");
            if (which == "I0") {
                gens.push_back(instantiateGens(*pres.amb, *match, match->row->r0));
                if (!match->row->r0i.empty())
                    gens.push_back(instantiateGens(*pres.amb, *match, match->row->r0i));
            } else if (which == "I1") {
                gens.push_back(instantiateGens(*pres.amb, *match, match->row->r1));
                if (!match->row->r1i.empty())
                    gens.push_back(instantiateGens(*pres.amb, *match, match->row->r1i));
            } else {
                throw ParseError(ln.number, 1, "expected I0 or I1, got '" + which + "'");
            }
        } else if (ln.text.rfind("path ", 0) == 0) {
            std::size_t colon = ln.text.find(':');
            if (colon == std::string::npos)
                throw ParseError(ln.number, 1, "expected 'path a.b: full'");
            std::string pathStr = trim(ln.text.substr(5, colon - 5));
            std::string which = trim(ln.text.substr(colon + 1));
            if (which != "full")
                throw ParseError(ln.number, 1, "only 'full' is allowed for path relations");
            std::size_t dot = pathStr.find('.');
            if (dot == std::string::npos)
                throw ParseError(ln.number, 1, "expected a length-two path 'a.b'");
            int a = pres.q.arrowIndex(trim(pathStr.substr(0, dot)));
            int b = pres.q.arrowIndex(trim(pathStr.substr(dot + 1)));
            if (a < 0 || b < 0) throw ParseError(ln.number, 1, "unknown arrow in path");
            int pi = pres.amb->pairIndex(a, b);
            if (pi < 0) throw ParseError(ln.number, 1, "path is not composable");
            const auto& pr = pres.amb->pairs()[static_cast<std::size_t>(pi)];
            for (std::size_t t = 0; t < pr.space->dim(); ++t) {
                QVec comp(pr.space->dim(), Rational(0));
                comp[t] = Rational(1);
                gens.push_back(pres.amb->embedPair(pi, comp));
            }
        } else if (ln.text.rfind("elem:", 0) == 0) {
            gens.push_back(parseElemBody(*pres.amb, trim(ln.text.substr(5)), ln.number));
        } else {
            throw ParseError(ln.number, 1, "unrecognized relation line '" + ln.text + "'");
        }
    }
    pres.ideal = Degree2Ideal::fromGenerators(*pres.amb, std::move(gens));
    return pres;
}

QVec parseElemBody(const Deg2Ambient& amb, const std::string& body, int lineNo) {
    const ModQuiver& q = amb.quiver();
    QVec acc(amb.totalDim(), Rational(0));
    // Split into signed terms at '+'/'-' after a completed term.
    std::vector<std::pair<int, std::string>> terms;
    int sign = 1;
    std::string cur;
    for (char ch : body) {
        std::size_t tensorAt = cur.find("(x)");
        bool complete = tensorAt != std::string::npos && cur.find(']', tensorAt) != std::string::npos;
        if ((ch == '+' || ch == '-') && complete) {
            terms.push_back({sign, cur});
            sign = ch == '-' ? -1 : 1;
            cur.clear();
        } else if (ch == '-' && trim(cur).empty()) {
            sign = -sign;
        } else {
            cur.push_back(ch);
        }
    }
    if (!trim(cur).empty()) terms.push_back({sign, cur});
    if (terms.empty()) throw ParseError(lineNo, 1, "empty elem relation");
    for (auto& [tsign, termText] : terms) {
        std::size_t tensor = termText.find("(x)");
        if (tensor == std::string::npos) throw ParseError(lineNo, 1, "term is missing '(x)'");
        Factor fa = parseFactor(lineNo, termText.substr(0, tensor));
        Factor fb = parseFactor(lineNo, termText.substr(tensor + 3));
        int a = q.arrowIndex(fa.arrow);
        int b = q.arrowIndex(fb.arrow);
        if (a < 0) throw ParseError(lineNo, 1, "unknown arrow '" + fa.arrow + "'");
        if (b < 0) throw ParseError(lineNo, 1, "unknown arrow '" + fb.arrow + "'");
        int pi = amb.pairIndex(a, b);
        if (pi < 0)
            throw ParseError(lineNo, 1,
                             "arrows '" + fa.arrow + "', '" + fb.arrow + "' do not compose");
        const auto& pr = amb.pairs()[static_cast<std::size_t>(pi)];
        int ia = basisIndex(pr.space->kindA(), fa.token);
        int ib = basisIndex(pr.space->kindB(), fb.token);
        if (ia < 0)
            throw ParseError(lineNo, 1, "token '" + fa.token + "' is not a basis element of M(" +
                                            fa.arrow + ")");
        if (ib < 0)
            throw ParseError(lineNo, 1, "token '" + fb.token + "' is not a basis element of M(" +
                                            fb.arrow + ")");
        QVec va(static_cast<std::size_t>(realDim(pr.space->kindA())), Rational(0));
        va[static_cast<std::size_t>(ia)] = fa.coef;
        QVec vb(static_cast<std::size_t>(realDim(pr.space->kindB())), Rational(0));
        vb[static_cast<std::size_t>(ib)] = fb.coef;
        QVec comp = pr.space->pureTensor(va, vb);
        QVec emb = amb.embedPair(pi, comp);
        for (std::size_t t = 0; t < acc.size(); ++t) acc[t] += Rational(tsign) * emb[t];
    }
    return acc;
}

namespace {

std::string elemBody(const Deg2Ambient& amb, const QVec& v) {
    std::string out;
    for (std::size_t pi = 0; pi < amb.pairs().size(); ++pi) {
        const auto& pr = amb.pairs()[pi];
        QVec comp = amb.pairComponent(static_cast<int>(pi), v);
        for (std::size_t t = 0; t < comp.size(); ++t) {
            if (comp[t].isZero()) continue;
            auto [i, j] = pr.space->liftOf(t);
            Rational c = comp[t];
            std::string piece;
            if (c.sign() < 0) {
                piece = out.empty() ? "-" : " - ";
                c = -c;
            } else if (!out.empty()) {
                piece = " + ";
            }
            std::string coefStr = c == Rational(1) ? "" : c.str() + "*";
            const auto& q = amb.quiver();
            piece += coefStr + basisTokens(pr.space->kindA())[static_cast<std::size_t>(i)] + "[" +
                     q.arrows[static_cast<std::size_t>(pr.a)].name + "] (x) " +
                     basisTokens(pr.space->kindB())[static_cast<std::size_t>(j)] + "[" +
                     q.arrows[static_cast<std::size_t>(pr.b)].name + "]";
            out += piece;
        }
    }
    return out;
}

}  // namespace

std::string serializeMq(const MqPresentation& pres) {
    std::ostringstream os;
    os << "vertices:\n";
    for (const auto& v : pres.q.vertices) os << "  " << v.name << ": " << ringName(v.ring) << "\n";
    os << "arrows:\n";
    for (const auto& a : pres.q.arrows) {
        os << "  " << a.name << ": " << pres.q.vertices[static_cast<std::size_t>(a.src)].name
           << " -> " << pres.q.vertices[static_cast<std::size_t>(a.tgt)].name << " ["
           << kindName(a.kind) << "]\n";
    }
    os << "relations:\n";
    for (const auto& row : pres.ideal.span.basis())
        os << "  elem: " << elemBody(*pres.amb, row) << "\n";
    return os.str();
}

std::string mqToJson(const MqPresentation& pres) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : pres.q.vertices)
        j["vertices"].push_back({{"name", v.name}, {"ring", ringName(v.ring)}});
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : pres.q.arrows) {
        j["arrows"].push_back({{"name", a.name},
                               {"src", pres.q.vertices[static_cast<std::size_t>(a.src)].name},
                               {"tgt", pres.q.vertices[static_cast<std::size_t>(a.tgt)].name},
                               {"kind", kindName(a.kind)}});
    }
    j["relations"] = nlohmann::json::array();
    for (const auto& row : pres.ideal.span.basis()) {
        nlohmann::json rel = nlohmann::json::array();
        for (std::size_t pi = 0; pi < pres.amb->pairs().size(); ++pi) {
            const auto& pr = pres.amb->pairs()[pi];
            QVec comp = pres.amb->pairComponent(static_cast<int>(pi), row);
            for (std::size_t t = 0; t < comp.size(); ++t) {
                if (comp[t].isZero()) continue;
                auto [x, y] = pr.space->liftOf(t);
                rel.push_back(
                    {{"coef", comp[t].str()},
                     {"a", pres.q.arrows[static_cast<std::size_t>(pr.a)].name},
                     {"a_basis", basisTokens(pr.space->kindA())[static_cast<std::size_t>(x)]},
                     {"b", pres.q.arrows[static_cast<std::size_t>(pr.b)].name},
                     {"b_basis", basisTokens(pr.space->kindB())[static_cast<std::size_t>(y)]}});
            }
        }
        j["relations"].push_back(rel);
    }
    return j.dump(2);
}

}  // namespace cxg
