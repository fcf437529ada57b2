#pragma once

#include <map>
#include <string>
#include <vector>

#include "cxg/modquiver.hpp"

namespace cxg {

struct GammaVertex {
    std::string name;
    int fiberOf;  // vertex of Q
    bool bar;
};

struct GammaArrow {
    std::string name;
    int src;  // Gamma vertex indices
    int tgt;
    int fiberOf;  // arrow of Q
    bool bar;
};

// The complexified quiver with its involution tau and fiber map pi (held as
// the fiberOf fields).
struct ComplexQuiver {
    std::vector<GammaVertex> vertices;
    std::vector<GammaArrow> arrows;

    int tauVertex(int gv) const;
    int tauArrow(int ga) const;
    std::vector<int> vertexFibers(int qv) const;
    std::vector<int> arrowFibers(int qa) const;
    int vertexFiber(int qv, bool bar) const;  // -1 if absent
};

ComplexQuiver buildGamma(const ModQuiver& q);

// All Gamma-paths lying over a Q-path (arrows listed target-first, matching
// the composition convention: path {a, b} is "b then a").
std::vector<std::vector<int>> fibersOfPath(const ModQuiver& q, const ComplexQuiver& g,
                                           const std::vector<int>& qPath);

// --- elements of M(i) (x) C and M(alpha) (x) C in complex coordinates ------

using CVec = std::vector<Gaussian>;  // complex coordinates over the real basis

CVec complexify(const QVec& v);
CVec scaled(CVec v, const Gaussian& c);

// e_i per vertex: 1 (x) 1 at R and C vertices, (1 (x) 1 - j (x) i)/2 at H.
CVec idempotentE(Ring ring);
bool isIdempotentHC(const CVec& e);  // multiplication in H (x) C via theta

// theta: M(alpha) (x) C into complex matrices (shape depends on the kind).
struct ThetaMat {
    int rows = 1;
    int cols = 1;
    Mat2G m;
};

ThetaMat thetaBasis(BimKind k, int basisIdx);
ThetaMat theta(BimKind k, const CVec& coords);

// Matrix position holding the coefficient of the plain/bar arrow fiber after
// the idempotent truncation.
struct FiberAddr {
    int row;
    int col;
};
FiberAddr fiberAddr(BimKind k, bool bar);

// --- formal C-linear combinations of Gamma-paths of degree <= 2 ------------

struct GammaPath {
    int trivialVertex = -1;   // degree 0 when >= 0
    std::vector<int> arrows;  // target-first: {a, b} is "b then a"

    friend bool operator<(const GammaPath& x, const GammaPath& y) {
        if (x.trivialVertex != y.trivialVertex) return x.trivialVertex < y.trivialVertex;
        return x.arrows < y.arrows;
    }
    friend bool operator==(const GammaPath& x, const GammaPath& y) {
        return x.trivialVertex == y.trivialVertex && x.arrows == y.arrows;
    }
};

using PathVec = std::map<GammaPath, Gaussian>;

void addTerm(PathVec& v, const GammaPath& p, const Gaussian& c);
PathVec& operator+=(PathVec& a, const PathVec& b);
PathVec scaled(PathVec v, const Gaussian& c);
// Product by path concatenation (degree sum must stay <= 2).
PathVec mulPathVec(const ComplexQuiver& g, const PathVec& a, const PathVec& b);
std::string pathVecStr(const ComplexQuiver& g, const PathVec& v);

// --- the isomorphism Psi on corner elements of degree <= 2 -----------------

PathVec psiVertex(const ModQuiver& q, const ComplexQuiver& g, int qVertex, const CVec& x);
PathVec psiArrow(const ModQuiver& q, const ComplexQuiver& g, int qArrow, const CVec& x);

// Psi on e((x (x) y) (x) c)e for x in M(a), y in M(b). With cornerMiddle the
// middle factor is truncated by e first (the product of the degree-1
// corners); without it this is the full degree-2 Psi.
PathVec psiPair(const ModQuiver& q, const ComplexQuiver& g, int qArrowA, const CVec& x,
                int qArrowB, const CVec& y, const Gaussian& c, bool cornerMiddle);

// Psi of an ambient degree-2 element tensored with c, via pure-tensor lifts.
PathVec psiAmbient(const Deg2Ambient& amb, const ComplexQuiver& g, const QVec& h,
                   const Gaussian& c);

// --- complexified presentations --------------------------------------------

// J_2 split into blocks by (source, target) Gamma-vertex pair; coordinates of
// a block enumerate the composable arrow pairs (a, b) from src to tgt.
struct PathPairBlock {
    int src;
    int tgt;
    std::vector<std::pair<int, int>> paths;  // (a, b) meaning "b then a"
    GSubspace sub;
};

struct ComplexPresentation {
    ComplexQuiver gamma;
    std::vector<PathPairBlock> blocks;       // subspace form (authoritative)
    std::vector<PathVec> generators;         // reduced per-block generator list
};

// All composable length-2 path pairs grouped into empty blocks.
std::vector<PathPairBlock> emptyBlocks(const ComplexQuiver& g);
PathVec blockElem(const PathPairBlock& blk, const std::vector<Gaussian>& coords);
// Splits a degree-2 PathVec into per-block coordinate vectors.
std::map<std::pair<int, int>, std::vector<Gaussian>> splitIntoBlocks(
    const std::vector<PathPairBlock>& blocks, const PathVec& v);

ComplexPresentation complexifyIdeal(const ModQuiver& q, const Deg2Ambient& amb,
                                    const Degree2Ideal& ideal);

// tau-stability of J_2 under coefficient conjugation plus tau on paths.
bool tauStable(const ComplexPresentation& cp);

// JSON export: vertices with bar_of, arrows with fiber_of and bar, tau as
// pairs, relations as lists of {path, coef}.
std::string complexPresentationToJson(const ModQuiver& q, const ComplexPresentation& cp);

}  // namespace cxg
