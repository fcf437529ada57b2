#include "cxg/modquiver.hpp"

#include <algorithm>
#include <stdexcept>

namespace cxg {

int ModQuiver::vertexIndex(std::string_view name) const {
    for (std::size_t t = 0; t < vertices.size(); ++t)
        if (vertices[t].name == name) return static_cast<int>(t);
    return -1;
}

int ModQuiver::arrowIndex(std::string_view name) const {
    for (std::size_t t = 0; t < arrows.size(); ++t)
        if (arrows[t].name == name) return static_cast<int>(t);
    return -1;
}

std::vector<int> ModQuiver::outArrows(int v) const {
    std::vector<int> out;
    for (std::size_t t = 0; t < arrows.size(); ++t)
        if (arrows[t].src == v) out.push_back(static_cast<int>(t));
    return out;
}

std::vector<int> ModQuiver::inArrows(int v) const {
    std::vector<int> in;
    for (std::size_t t = 0; t < arrows.size(); ++t)
        if (arrows[t].tgt == v) in.push_back(static_cast<int>(t));
    return in;
}

std::vector<int> ModQuiver::neighbors(int v) const {
    std::vector<int> n;
    auto push = [&](int x) {
        if (std::find(n.begin(), n.end(), x) == n.end()) n.push_back(x);
    };
    for (const auto& a : arrows) {
        if (a.src == v) push(a.tgt);
        if (a.tgt == v) push(a.src);
    }
    std::sort(n.begin(), n.end());
    return n;
}

std::vector<std::string> ModQuiver::validate() const {
    std::vector<std::string> report;
    for (const auto& a : arrows) {
        Ring lt = vertices[static_cast<std::size_t>(a.tgt)].ring;
        Ring rs = vertices[static_cast<std::size_t>(a.src)].ring;
        if (leftRing(a.kind) != lt || rightRing(a.kind) != rs) {
            report.push_back("arrow '" + a.name + "': kind " + kindName(a.kind) +
                             " is not a simple " + ringName(lt) + "-" + ringName(rs) +
                             "-bimodule");
        }
    }
    return report;
}

Deg2Ambient::Deg2Ambient(const ModQuiver& q) : q_(q) {
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        for (std::size_t b = 0; b < q.arrows.size(); ++b) {
            if (q.arrows[a].src != q.arrows[b].tgt) continue;
            Pair p;
            p.a = static_cast<int>(a);
            p.b = static_cast<int>(b);
            p.space = std::make_shared<PairSpace>(q.arrows[a].kind, q.arrows[b].kind);
            p.offset = total_;
            total_ += p.space->dim();
            pairs_.push_back(std::move(p));
        }
    }
}

int Deg2Ambient::pairIndex(int a, int b) const {
    for (std::size_t t = 0; t < pairs_.size(); ++t)
        if (pairs_[t].a == a && pairs_[t].b == b) return static_cast<int>(t);
    return -1;
}

std::vector<int> Deg2Ambient::pairsThrough(int v) const {
    std::vector<int> out;
    for (std::size_t t = 0; t < pairs_.size(); ++t)
        if (q_.arrows[static_cast<std::size_t>(pairs_[t].a)].src == v)
            out.push_back(static_cast<int>(t));
    return out;
}

std::vector<bool> Deg2Ambient::vertexMask(int v) const {
    std::vector<bool> mask(total_, false);
    for (int idx : pairsThrough(v)) {
        const Pair& p = pairs_[static_cast<std::size_t>(idx)];
        for (std::size_t t = 0; t < p.space->dim(); ++t) mask[p.offset + t] = true;
    }
    return mask;
}

std::vector<bool> Deg2Ambient::pairMask(int idx) const {
    std::vector<bool> mask(total_, false);
    const Pair& p = pairs_[static_cast<std::size_t>(idx)];
    for (std::size_t t = 0; t < p.space->dim(); ++t) mask[p.offset + t] = true;
    return mask;
}

QVec Deg2Ambient::embedPair(int idx, const QVec& component) const {
    QVec out(total_, Rational(0));
    const Pair& p = pairs_[static_cast<std::size_t>(idx)];
    for (std::size_t t = 0; t < component.size(); ++t) out[p.offset + t] = component[t];
    return out;
}

QVec Deg2Ambient::pairComponent(int idx, const QVec& global) const {
    const Pair& p = pairs_[static_cast<std::size_t>(idx)];
    QVec out(p.space->dim(), Rational(0));
    for (std::size_t t = 0; t < out.size(); ++t) out[t] = global[p.offset + t];
    return out;
}

QVec Deg2Ambient::leftActVertex(int vertex, const RingElem& r, const QVec& v) const {
    QVec out(total_, Rational(0));
    for (const Pair& p : pairs_) {
        if (q_.arrows[static_cast<std::size_t>(p.a)].tgt != vertex) continue;
        QVec comp(p.space->dim(), Rational(0));
        for (std::size_t t = 0; t < comp.size(); ++t) comp[t] = v[p.offset + t];
        QVec acted = p.space->leftAct(r, comp);
        for (std::size_t t = 0; t < comp.size(); ++t) out[p.offset + t] = acted[t];
    }
    return out;
}

QVec Deg2Ambient::rightActVertex(int vertex, const RingElem& r, const QVec& v) const {
    QVec out(total_, Rational(0));
    for (const Pair& p : pairs_) {
        if (q_.arrows[static_cast<std::size_t>(p.b)].src != vertex) continue;
        QVec comp(p.space->dim(), Rational(0));
        for (std::size_t t = 0; t < comp.size(); ++t) comp[t] = v[p.offset + t];
        QVec acted = p.space->rightAct(r, comp);
        for (std::size_t t = 0; t < comp.size(); ++t) out[p.offset + t] = acted[t];
    }
    return out;
}

QSubspace Deg2Ambient::bimoduleSpan(const std::vector<QVec>& gens) const {
    QSubspace s(total_);
    for (const auto& g : gens) s.add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<QVec> cur = s.basis();
        for (const auto& v : cur) {
            for (std::size_t x = 0; x < q_.vertices.size(); ++x) {
                Ring ring = q_.vertices[x].ring;
                for (int t = 0; t < realDim(ring); ++t) {
                    RingElem r = RingElem::basis(ring, t);
                    grew |= s.add(leftActVertex(static_cast<int>(x), r, v));
                    grew |= s.add(rightActVertex(static_cast<int>(x), r, v));
                }
            }
        }
    }
    return s;
}

Degree2Ideal Degree2Ideal::fromGenerators(const Deg2Ambient& amb, std::vector<QVec> gens) {
    Degree2Ideal ideal;
    ideal.generators = std::move(gens);
    ideal.span = amb.bimoduleSpan(ideal.generators);
    return ideal;
}

QSubspace Degree2Ideal::vertexPart(const Deg2Ambient& amb, int v) const {
    return span.restrictedTo(amb.vertexMask(v));
}

bool Degree2Ideal::generatedByVertexParts(const Deg2Ambient& amb) const {
    QSubspace acc(amb.totalDim());
    for (std::size_t v = 0; v < amb.quiver().vertices.size(); ++v)
        acc = sum(acc, vertexPart(amb, static_cast<int>(v)));
    return acc == span;
}

QVec VertexLocalData::toGlobal(const Deg2Ambient& amb, const QVec& local) const {
    QVec out(amb.totalDim(), Rational(0));
    std::size_t pos = 0;
    for (int idx : pairIdx) {
        const auto& p = amb.pairs()[static_cast<std::size_t>(idx)];
        for (std::size_t t = 0; t < p.space->dim(); ++t) out[p.offset + t] = local[pos + t];
        pos += p.space->dim();
    }
    return out;
}

QVec VertexLocalData::toLocal(const Deg2Ambient& amb, const QVec& global) const {
    QVec out(ambientDim, Rational(0));
    std::size_t pos = 0;
    for (int idx : pairIdx) {
        const auto& p = amb.pairs()[static_cast<std::size_t>(idx)];
        for (std::size_t t = 0; t < p.space->dim(); ++t) out[pos + t] = global[p.offset + t];
        pos += p.space->dim();
    }
    return out;
}

VertexLocalData localData(const Deg2Ambient& amb, const Degree2Ideal& ideal, int v) {
    VertexLocalData d;
    d.vertex = v;
    const ModQuiver& q = amb.quiver();
    d.out = q.outArrows(v);
    d.in = q.inArrows(v);
    d.neighbors = q.neighbors(v);
    d.pairIdx = amb.pairsThrough(v);
    d.ambientDim = 0;
    for (int idx : d.pairIdx) d.ambientDim += amb.pairs()[static_cast<std::size_t>(idx)].space->dim();
    QSubspace global = ideal.vertexPart(amb, v);
    d.iv = QSubspace(d.ambientDim);
    for (const auto& row : global.basis()) d.iv.add(d.toLocal(amb, row));
    return d;
}

}  // namespace cxg
