#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cxg/bimodule.hpp"

namespace cxg {

struct MqVertex {
    std::string name;
    Ring ring;
};

struct MqArrow {
    std::string name;
    int src;
    int tgt;
    BimKind kind;
};

struct ModQuiver {
    std::vector<MqVertex> vertices;
    std::vector<MqArrow> arrows;

    int vertexIndex(std::string_view name) const;  // -1 if absent
    int arrowIndex(std::string_view name) const;
    std::vector<int> outArrows(int v) const;  // v^+
    std::vector<int> inArrows(int v) const;   // v^-
    std::vector<int> neighbors(int v) const;  // N_v

    // One line per arrow whose kind contradicts its endpoint rings; empty
    // means valid.
    std::vector<std::string> validate() const;
};

// The degree-2 component of T(Q, M): the direct sum of M(ab) over ordered
// composable arrow pairs (a, b) with s(a) = t(b), in a fixed global
// coordinate order.
class Deg2Ambient {
public:
    struct Pair {
        int a;  // outgoing arrow of the middle vertex
        int b;  // incoming arrow
        std::shared_ptr<const PairSpace> space;
        std::size_t offset;
    };

    explicit Deg2Ambient(const ModQuiver& q);

    const ModQuiver& quiver() const { return q_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    std::size_t totalDim() const { return total_; }
    int pairIndex(int a, int b) const;  // -1 if not composable
    std::vector<int> pairsThrough(int v) const;
    std::vector<bool> vertexMask(int v) const;   // coordinates of pairs through v
    std::vector<bool> pairMask(int idx) const;

    // Assemble a global vector from one pair component.
    QVec embedPair(int idx, const QVec& component) const;
    QVec pairComponent(int idx, const QVec& global) const;

    QVec leftActVertex(int vertex, const RingElem& r, const QVec& v) const;
    QVec rightActVertex(int vertex, const RingElem& r, const QVec& v) const;

    // Bimodule span: closure of the generators under the degree-0 actions
    // (including the idempotent projections, so the span splits over outer
    // vertex pairs).
    QSubspace bimoduleSpan(const std::vector<QVec>& gens) const;

private:
    ModQuiver q_;  // owned copy: an ambient outlives the quiver it was built from
    std::vector<Pair> pairs_;
    std::size_t total_ = 0;
};

// Degree-2 ideal: generator list as entered plus the reduced degree-2
// subspace (the bimodule span of the generators).
struct Degree2Ideal {
    std::vector<QVec> generators;  // in ambient coordinates
    QSubspace span;

    static Degree2Ideal fromGenerators(const Deg2Ambient& amb, std::vector<QVec> gens);

    // I_v: the part of the ideal supported on pairs through v.
    QSubspace vertexPart(const Deg2Ambient& amb, int v) const;
    // Whether the ideal decomposes as the sum of its per-vertex parts.
    bool generatedByVertexParts(const Deg2Ambient& amb) const;
};

struct VertexLocalData {
    int vertex;
    std::vector<int> out;        // v^+
    std::vector<int> in;         // v^-
    std::vector<int> neighbors;  // N_v
    std::vector<int> pairIdx;    // ambient pairs through v
    std::size_t ambientDim;      // dim of the local ambient
    QSubspace iv;                // I_v in local coordinates

    // Translate between local coordinates (concatenated pair components in
    // pairIdx order) and global ambient coordinates.
    QVec toGlobal(const Deg2Ambient& amb, const QVec& local) const;
    QVec toLocal(const Deg2Ambient& amb, const QVec& global) const;
};

VertexLocalData localData(const Deg2Ambient& amb, const Degree2Ideal& ideal, int v);

}  // namespace cxg
