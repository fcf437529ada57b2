#include "cxg/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cxg/complexify.hpp"
#include "tables_fixture.hpp"

namespace cxg {

const std::string& defaultTablesFixture() {
    static const std::string text = kTablesFixtureText;
    return text;
}

MqPresentation rowQuiver(const Table1Row& row) {
    MqPresentation pres;
    pres.q.vertices = {{"u", row.u}, {"v", row.v}, {"w", row.w}};
    auto kindFor = [](Ring t, Ring s) { return kindsBetween(t, s).front(); };
    pres.q.arrows.push_back({"b", 0, 1, kindFor(row.v, row.u)});
    if (row.doubledIn) pres.q.arrows.push_back({"bi", 0, 1, kindFor(row.v, row.u)});
    pres.q.arrows.push_back({"a", 1, 2, kindFor(row.w, row.v)});
    if (row.doubledOut) pres.q.arrows.push_back({"ai", 1, 2, kindFor(row.w, row.v)});
    pres.amb = std::make_shared<Deg2Ambient>(pres.q);
    pres.ideal = Degree2Ideal::fromGenerators(*pres.amb, {});
    return pres;
}

MqPresentation rowQuiverWithIdeal(const Table1Row& row, int p) {
    MqPresentation pres = rowQuiver(row);
    auto match = matchTable1Shape(pres.q, 1);
    if (!match) throw std::logic_error("row quiver does not match its own shape");
    Table1Case t1 = table1Generators(*pres.amb, *match);
    pres.ideal = Degree2Ideal::fromGenerators(*pres.amb, p == 0 ? t1.gens0 : t1.gens1);
    return pres;
}

SlqPresentation rowSlq(const Table1Row& row, Twist twistA, Twist twistB) {
    SlqPresentation p;
    p.vertices = {"u", "v", "w"};
    auto addLoop = [&](int v, Ring r) {
        if (r == Ring::C) return;
        std::string name = std::string("s") + p.vertices[static_cast<std::size_t>(v)];
        p.arrows.push_back({name, v, v, Twist::Conj, true,
                            r == Ring::R ? LoopTag::XSquareMinusOne : LoopTag::XSquarePlusOne});
    };
    addLoop(0, row.u);
    addLoop(1, row.v);
    addLoop(2, row.w);
    p.arrows.push_back({"b", 0, 1, twistB, false});
    p.arrows.push_back({"a", 1, 2, twistA, false});
    return p;
}

namespace {

struct FixtureLine {
    int number;
    std::vector<std::string> tokens;
    std::string rest;  // raw text after the first three tokens
};

std::vector<FixtureLine> fixtureLines(const std::string& text, const std::string& table) {
    std::vector<FixtureLine> out;
    std::istringstream is(text);
    std::string raw;
    int n = 0;
    while (std::getline(is, raw)) {
        ++n;
        std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty() || toks[0] != table) continue;
        FixtureLine fl;
        fl.number = n;
        fl.tokens = toks;
        // raw text after the third whitespace-separated token
        std::size_t pos = 0;
        for (int skip = 0; skip < 3; ++skip) {
            pos = raw.find_first_not_of(" \t", pos);
            pos = raw.find_first_of(" \t", pos);
        }
        fl.rest = pos == std::string::npos ? "" : raw.substr(pos);
        out.push_back(std::move(fl));
    }
    return out;
}

std::string pathVecDiff(const ComplexQuiver& g, const PathVec& got, const PathVec& want) {
    return "computed " + pathVecStr(g, got) + ", expected " + pathVecStr(g, want);
}

int gammaArrowByName(const ComplexQuiver& g, const std::string& name) {
    for (std::size_t t = 0; t < g.arrows.size(); ++t)
        if (g.arrows[t].name == name) return static_cast<int>(t);
    return -1;
}

int gammaVertexByName(const ComplexQuiver& g, const std::string& name) {
    for (std::size_t t = 0; t < g.vertices.size(); ++t)
        if (g.vertices[t].name == name) return static_cast<int>(t);
    return -1;
}

// Right side of a T2 line: signed terms "coef*f1.f2" with Gaussian coef.
PathVec parseGammaExpr(const ComplexQuiver& g, const std::vector<std::string>& toks,
                       std::size_t from) {
    PathVec out;
    Gaussian pending(1);
    for (std::size_t t = from; t < toks.size(); ++t) {
        std::string term = toks[t];
        if (term == "+") continue;
        if (term == "-") {
            pending = -pending;
            continue;
        }
        Gaussian sign = pending;
        pending = Gaussian(1);
        if (term[0] == '-') {
            sign = -sign;
            term = term.substr(1);
        } else if (term[0] == '+') {
            term = term.substr(1);
        }
        Gaussian coef(1);
        std::size_t star = term.find('*');
        if (star != std::string::npos) {
            coef = Gaussian::parse(term.substr(0, star));
            term = term.substr(star + 1);
        }
        std::size_t dot = term.find('.');
        if (dot == std::string::npos) throw std::runtime_error("fixture: bad path " + term);
        int fa = gammaArrowByName(g, term.substr(0, dot));
        int fb = gammaArrowByName(g, term.substr(dot + 1));
        if (fa < 0 || fb < 0) throw std::runtime_error("fixture: unknown fiber in " + term);
        addTerm(out, GammaPath{-1, {fa, fb}}, sign * coef);
    }
    return out;
}

}  // namespace

TableCheckResult verifyTable1(const std::string& fixtureText) {
    TableCheckResult res;
    // expected generators from the fixture, grouped by row
    std::map<std::string, std::map<std::string, std::string>> expected;
    for (const auto& fl : fixtureLines(fixtureText, "T1"))
        expected[fl.tokens.at(1)][fl.tokens.at(2)] = fl.rest;
    for (const Table1Row& row : table1Rows()) {
        std::string detail;
        bool pass = true;
        MqPresentation pres = rowQuiver(row);
        auto match = matchTable1Shape(pres.q, 1);
        if (!match) {
            res.items.push_back({row.tag, false, "local shape did not match its own row"});
            continue;
        }
        Table1Case t1 = table1Generators(*pres.amb, *match);
        auto wantIt = expected.find(row.tag);
        if (wantIt == expected.end()) {
            res.items.push_back({row.tag, false, "row missing from fixture"});
            continue;
        }
        // generator-by-generator diff against the fixture
        std::map<std::string, const std::vector<GenTerm>*> slots = {
            {"r0", &row.r0}, {"r0i", &row.r0i}, {"r1", &row.r1}, {"r1i", &row.r1i}};
        for (const auto& [slot, terms] : slots) {
            bool inFixture = wantIt->second.count(slot) > 0;
            if (terms->empty() != !inFixture) {
                pass = false;
                detail += slot + " presence differs from fixture; ";
                continue;
            }
            if (terms->empty()) continue;
            QVec fromFixture = parseElemBody(*pres.amb, wantIt->second.at(slot), 0);
            QVec fromCode = instantiateGens(*pres.amb, *match, *terms);
            if (fromFixture != fromCode) {
                pass = false;
                detail += slot + " differs from fixture; ";
            }
        }
        // the decomposition law
        std::size_t ambientDim = 0;
        for (int pi : pres.amb->pairsThrough(1))
            ambientDim += pres.amb->pairs()[static_cast<std::size_t>(pi)].space->dim();
        if (intersect(t1.i0, t1.i1).dim() != 0) {
            pass = false;
            detail += "I^0 and I^1 intersect; ";
        }
        if (sum(t1.i0, t1.i1).dim() != ambientDim) {
            pass = false;
            detail += "I^0 + I^1 is not the whole of M(ab); ";
        }
        res.items.push_back({row.tag, pass, detail});
    }
    return res;
}

TableCheckResult verifyTable2(const std::string& fixtureText) {
    TableCheckResult res;
    for (const Table1Row& row : table1Rows()) {
        MqPresentation pres = rowQuiver(row);
        ComplexQuiver g = buildGamma(pres.q);
        auto match = matchTable1Shape(pres.q, 1);
        std::map<std::string, QVec> rElems;
        rElems["r0"] = instantiateGens(*pres.amb, *match, row.r0);
        rElems["r1"] = instantiateGens(*pres.amb, *match, row.r1);
        if (!row.r0i.empty()) rElems["r0i"] = instantiateGens(*pres.amb, *match, row.r0i);
        if (!row.r1i.empty()) rElems["r1i"] = instantiateGens(*pres.amb, *match, row.r1i);
        for (const auto& fl : fixtureLines(fixtureText, "T2")) {
            if (fl.tokens.at(1) != row.tag) continue;
            std::string name = row.tag + std::string(" ") + fl.tokens.at(2);
            // lhs tokens up to "=", then rhs
            std::size_t eq = 3;
            while (eq < fl.tokens.size() && fl.tokens[eq] != "=") ++eq;
            PathVec got;
            Gaussian scale(1);
            int projT = -1, projS = -1;
            for (std::size_t t = 3; t < eq; ++t) {
                std::string tok = fl.tokens[t];
                if (tok == "/2") {
                    scale = Gaussian(Rational(1, 2));
                    continue;
                }
                if (tok.rfind("projT=", 0) == 0) {
                    projT = gammaVertexByName(g, tok.substr(6));
                    continue;
                }
                if (tok.rfind("projS=", 0) == 0) {
                    projS = gammaVertexByName(g, tok.substr(6));
                    continue;
                }
                Gaussian sign(1);
                if (tok[0] == '-') {
                    sign = Gaussian(-1);
                    tok = tok.substr(1);
                } else if (tok[0] == '+') {
                    tok = tok.substr(1);
                }
                bool preK = tok.rfind("k.", 0) == 0;
                if (preK) tok = tok.substr(2);
                std::size_t at = tok.find('@');
                if (at == std::string::npos)
                    throw std::runtime_error("fixture: T2 term missing @: " + fl.tokens[t]);
                std::string tensor = tok.substr(at + 1);
                tok = tok.substr(0, at);
                bool postK = tok.size() > 2 && tok.rfind(".k") == tok.size() - 2;
                if (postK) tok = tok.substr(0, tok.size() - 2);
                auto rIt = rElems.find(tok);
                if (rIt == rElems.end())
                    throw std::runtime_error("fixture: unknown generator " + tok);
                QVec vec = rIt->second;
                RingElem k = RingElem::basis(Ring::H, 2);
                if (preK) vec = pres.amb->leftActVertex(2, k, vec);
                if (postK) vec = pres.amb->rightActVertex(0, k, vec);
                Gaussian factor = tensor == "i" ? Gaussian::i() : Gaussian(1);
                PathVec piece = psiAmbient(*pres.amb, g, vec, factor);
                got += scaled(piece, sign);
            }
            got = scaled(got, scale);
            if (projT >= 0 || projS >= 0) {
                PathVec filtered;
                for (const auto& [p, c] : got) {
                    int tgt = g.arrows[static_cast<std::size_t>(p.arrows.front())].tgt;
                    int src = g.arrows[static_cast<std::size_t>(p.arrows.back())].src;
                    if (projT >= 0 && tgt != projT) continue;
                    if (projS >= 0 && src != projS) continue;
                    addTerm(filtered, p, c);
                }
                got = filtered;
            }
            PathVec want = parseGammaExpr(g, fl.tokens, eq + 1);
            bool pass = got == want;
            res.items.push_back({name, pass, pass ? "" : pathVecDiff(g, got, want)});
        }
    }
    return res;
}

TableCheckResult verifyTable3(const std::string& fixtureText) {
    TableCheckResult res;
    auto twistsOf = [](const std::string& col) -> std::pair<Twist, Twist> {
        if (col == "II") return {Twist::Id, Twist::Id};
        if (col == "IC") return {Twist::Id, Twist::Conj};
        if (col == "CI") return {Twist::Conj, Twist::Id};
        return {Twist::Conj, Twist::Conj};
    };
    PartnerNamer namer = [](const std::string& s) { return s + "i"; };
    for (const Table1Row& row : table1Rows()) {
        for (const std::string col : {"II", "IC", "CI", "CC"}) {
            auto [ta, tb] = twistsOf(col);
            SlqPresentation slq = rowSlq(row, ta, tb);
            BasicPresentation qb = buildQb(slq, namer);
            int aIdx = slq.arrowIndex("a");
            int bIdx = slq.arrowIndex("b");
            int loopV = slq.loopAt(1);
            auto phiOf = [&](const std::string& which) {
                Word w;
                w.coef = which[0] == 'i' ? Gaussian::i() : Gaussian(1);
                bool withLoop = which == "asb" || which == "iasb";
                w.arrows = {aIdx};
                if (withLoop) {
                    if (loopV < 0) throw std::runtime_error("fixture: loop entry at a loopless row");
                    w.arrows.push_back(loopV);
                }
                w.arrows.push_back(bIdx);
                return phi(slq, qb, w).deg2;
            };
            bool any = false;
            for (const auto& fl : fixtureLines(fixtureText, "T3")) {
                if (fl.tokens.at(1) != row.tag || fl.tokens.at(2) != col) continue;
                any = true;
                std::string which = fl.tokens.at(3);
                std::size_t pos = fl.rest.find(which);
                std::string expr = fl.rest.substr(pos + which.size());
                QVec want = parseElemBody(*qb.amb, expr, fl.number);
                QVec got = phiOf(which);
                bool pass = got == want;
                res.items.push_back({row.tag + std::string(" ") + col + " " + which, pass,
                                     pass ? "" : "Phi value differs from fixture"});
            }
            if (!any)
                res.items.push_back({row.tag + std::string(" ") + col, false,
                                     "column missing from fixture"});
            // span law: the generated bimodule is exactly one of I^0, I^1
            std::vector<QVec> gens = {phiOf("ab")};
            if ((row.u == Ring::R && row.w == Ring::R)) gens.push_back(phiOf("iab"));
            QSubspace span = qb.amb->bimoduleSpan(gens);
            auto match = matchTable1Shape(qb.q, 1);
            bool lawPass = false;
            if (match) {
                Table1Case t1 = table1Generators(*qb.amb, *match);
                lawPass = (span == t1.i0) != (span == t1.i1);
            }
            res.items.push_back({row.tag + std::string(" ") + col + " span-law", lawPass,
                                 lawPass ? "" : "span is not exactly one of I^0, I^1"});
        }
    }
    return res;
}

}  // namespace cxg
