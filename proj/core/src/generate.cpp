#include "cxg/generate.hpp"

#include <algorithm>

#include "cxg/gentle.hpp"

namespace cxg {

namespace {

int pick(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

// Full-pair relations through the given middle vertices, chosen so the xor
// clauses of (G2) hold at each of them.
void sampleGentleRelations(const ModQuiver& q, const Deg2Ambient& amb, std::mt19937_64& rng,
                           const std::vector<int>& middles, std::vector<QVec>& gens) {
    auto addFull = [&](int a, int b) {
        int pi = amb.pairIndex(a, b);
        const auto& pr = amb.pairs()[static_cast<std::size_t>(pi)];
        for (std::size_t t = 0; t < pr.space->dim(); ++t) {
            QVec comp(pr.space->dim(), Rational(0));
            comp[t] = Rational(1);
            gens.push_back(amb.embedPair(pi, comp));
        }
    };
    for (int v : middles) {
        std::vector<int> outs = q.outArrows(v);
        std::vector<int> ins = q.inArrows(v);
        if (outs.empty() || ins.empty()) continue;
        if (outs.size() == 1 && ins.size() == 1) {
            if (pick(rng, 2)) addFull(outs[0], ins[0]);
        } else if (outs.size() == 1) {
            addFull(outs[0], ins[static_cast<std::size_t>(pick(rng, 2))]);
        } else if (ins.size() == 1) {
            addFull(outs[static_cast<std::size_t>(pick(rng, 2))], ins[0]);
        } else {
            int flip = pick(rng, 2);
            addFull(outs[0], ins[static_cast<std::size_t>(flip)]);
            addFull(outs[1], ins[static_cast<std::size_t>(1 - flip)]);
        }
    }
}

}  // namespace

MqPresentation genUniform(std::mt19937_64& rng, Ring ring, int maxVertices) {
    MqPresentation pres;
    int n = 1 + pick(rng, maxVertices);
    for (int v = 0; v < n; ++v) pres.q.vertices.push_back({"v" + std::to_string(v), ring});
    std::vector<int> outDeg(static_cast<std::size_t>(n), 0), inDeg(static_cast<std::size_t>(n), 0);
    int edges = n + pick(rng, n + 1);
    BimKind kind = ring == Ring::R ? BimKind::RR : BimKind::HH;
    for (int e = 0; e < edges; ++e) {
        int x = pick(rng, n);
        int y = pick(rng, n);
        if (outDeg[static_cast<std::size_t>(x)] >= 2 || inDeg[static_cast<std::size_t>(y)] >= 2)
            continue;
        std::string name = "e" + std::to_string(pres.q.arrows.size());
        pres.q.arrows.push_back({name, x, y, kind});
        outDeg[static_cast<std::size_t>(x)]++;
        inDeg[static_cast<std::size_t>(y)]++;
    }
    pres.amb = std::make_shared<Deg2Ambient>(pres.q);
    std::vector<int> middles;
    for (int v = 0; v < n; ++v) middles.push_back(v);
    std::vector<QVec> gens;
    sampleGentleRelations(pres.q, *pres.amb, rng, middles, gens);
    pres.ideal = Degree2Ideal::fromGenerators(*pres.amb, std::move(gens));
    return pres;
}

MqPresentation genSpecialType(std::mt19937_64& rng, int maxVertices) {
    MqPresentation pres;
    int n = 1 + pick(rng, maxVertices);
    for (int v = 0; v < n; ++v) {
        Ring r = std::array<Ring, 3>{Ring::R, Ring::C, Ring::H}[static_cast<std::size_t>(
            pick(rng, 3))];
        pres.q.vertices.push_back({"v" + std::to_string(v), r});
    }
    auto ringOf = [&](int v) { return pres.q.vertices[static_cast<std::size_t>(v)].ring; };
    // Backbone degrees: one slot per side at non-complex vertices (doubling
    // fills the second), two at complex ones.
    auto capOf = [&](int v) { return ringOf(v) == Ring::C ? 2 : 1; };
    std::vector<int> outDeg(static_cast<std::size_t>(n), 0), inDeg(static_cast<std::size_t>(n), 0);
    int edges = n + pick(rng, n + 1);
    int arrowCount = 0;
    for (int e = 0; e < edges; ++e) {
        int x = pick(rng, n);
        int y = pick(rng, n);
        if (outDeg[static_cast<std::size_t>(x)] >= capOf(x) ||
            inDeg[static_cast<std::size_t>(y)] >= capOf(y))
            continue;
        if (x == y && ringOf(x) != Ring::C &&
            (outDeg[static_cast<std::size_t>(x)] || inDeg[static_cast<std::size_t>(x)]))
            continue;
        bool doubled = x != y ? ringOf(x) == ringOf(y) && ringOf(x) != Ring::C
                              : ringOf(x) != Ring::C;
        BimKind kind;
        if (ringOf(y) == Ring::C && ringOf(x) == Ring::C)
            kind = pick(rng, 2) ? BimKind::CCbar : BimKind::CC;
        else
            kind = kindsBetween(ringOf(y), ringOf(x)).front();
        std::string base = "e" + std::to_string(arrowCount++);
        pres.q.arrows.push_back({base, x, y, kind});
        if (doubled) pres.q.arrows.push_back({base + "x", x, y, kind});
        outDeg[static_cast<std::size_t>(x)]++;
        inDeg[static_cast<std::size_t>(y)]++;
    }
    pres.amb = std::make_shared<Deg2Ambient>(pres.q);
    std::vector<QVec> gens;
    std::vector<int> complexMiddles;
    for (int v = 0; v < n; ++v) {
        if (ringOf(v) == Ring::C) {
            complexMiddles.push_back(v);
            continue;
        }
        auto match = matchTable1Shape(pres.q, v);
        if (!match) continue;  // source, sink or isolated: degenerate, I_v = 0
        Table1Case t1 = table1Generators(*pres.amb, *match);
        const auto& chosen = pick(rng, 2) ? t1.gens1 : t1.gens0;
        for (const auto& g : chosen) gens.push_back(g);
    }
    sampleGentleRelations(pres.q, *pres.amb, rng, complexMiddles, gens);
    pres.ideal = Degree2Ideal::fromGenerators(*pres.amb, std::move(gens));
    return pres;
}

}  // namespace cxg
