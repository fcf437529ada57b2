#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxg/complexify.hpp"
#include "cxg/modquiver.hpp"

namespace cxg {

// One term sign * tokenA[arrow roleA] (x) tokenB[arrow roleB] of a Table-1
// generator; roles 0/1 pick the plain arrow or its parallel partner.
struct GenTerm {
    int sign;
    int roleA;
    const char* tokenA;
    int roleB;
    const char* tokenB;
};

struct Table1Row {
    const char* tag;  // "RRR" ... "RHR": rings of u, v, w
    Ring u, v, w;
    bool doubledIn;   // u == v (parallel pair beta, beta^i)
    bool doubledOut;  // v == w
    std::vector<GenTerm> r0, r0i, r1, r1i;  // r0i/r1i only for RRR and RHR
};

const std::vector<Table1Row>& table1Rows();
const Table1Row* table1RowByTag(std::string_view tag);

// A matched non-degenerate Table-1 shape at a vertex: the row plus the role
// assignment of the arrows (partner slots are -1 on single sides).
struct Table1Match {
    const Table1Row* row;
    int a, ai;  // v^+ roles (alpha, alpha^i)
    int b, bi;  // v^- roles
};

std::optional<Table1Match> matchTable1Shape(const ModQuiver& q, int v);

// Degenerate source/sink/isolated shapes of the specially-gentle definition.
std::optional<std::string> matchDegenerateShape(const ModQuiver& q, int v);

struct Table1Case {
    Table1Match match;
    std::vector<QVec> gens0, gens1;  // generators in global ambient coordinates
    QSubspace i0, i1;                // their bimodule spans
};

Table1Case table1Generators(const Deg2Ambient& amb, const Table1Match& match);

// Instantiate a generator term list in global ambient coordinates.
QVec instantiateGens(const Deg2Ambient& amb, const Table1Match& match,
                     const std::vector<GenTerm>& terms);

// --- vertex and algebra classification -------------------------------------

struct VertexVerdict {
    int vertex = -1;
    bool g1 = false;
    bool ordinaryR = false;
    bool ordinaryH = false;
    bool ordinaryC = false;
    bool specialNondeg = false;
    std::string rowTag;  // for specialNondeg
    int p = -1;          // I_v == I_v^p
    bool specialDegenerate = false;
    std::string degTag;
    std::vector<std::string> notes;  // clause-level evidence

    bool gentle() const {
        return ordinaryR || ordinaryH || ordinaryC || specialNondeg || specialDegenerate;
    }
    bool special() const { return specialNondeg || specialDegenerate; }
    std::string summary() const;
};

VertexVerdict classifyVertex(const Deg2Ambient& amb, const Degree2Ideal& ideal, int v);

enum class AlgebraType { UniformR, UniformH, SpecialType, NotClassified };

std::string algebraTypeName(AlgebraType t);

struct AlgebraVerdict {
    AlgebraType type = AlgebraType::NotClassified;
    std::vector<VertexVerdict> vertices;
    bool generatedByVertexParts = false;
    std::vector<std::string> reasons;
};

AlgebraVerdict classifyAlgebra(const Deg2Ambient& amb, const Degree2Ideal& ideal);

// --- the normalizing substitution d ----------------------------------------

// Gamma-arrow pairs to rewrite: the fibers of the doubled sides of every
// non-degenerate specially gentle vertex. Throws if a pair's other endpoint
// is ordinary but not a source or sink.
std::vector<std::pair<int, int>> dPairs(const ModQuiver& q, const ComplexQuiver& g,
                                        const AlgebraVerdict& verdict);

// d(gamma) = (gamma + gamma^i)/2, d(gamma^i) = (gamma - gamma^i)/2i on the
// listed parallel Gamma-arrow pairs, identity elsewhere; returns the
// transformed relation blocks.
ComplexPresentation dTransform(const ComplexPresentation& cp,
                               const std::vector<std::pair<int, int>>& pairs);

// --- the locally gentle test on a complexified presentation ----------------

struct GentleReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

GentleReport isLocallyGentle(const ComplexPresentation& cp);

}  // namespace cxg
