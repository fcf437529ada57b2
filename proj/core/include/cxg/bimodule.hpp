#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cxg/linalg.hpp"
#include "cxg/scalars.hpp"

namespace cxg {

enum class Ring { R, C, H };

int realDim(Ring r);
std::string ringName(Ring r);
std::optional<Ring> ringFromName(std::string_view s);

// Element of a division ring in its canonical real basis:
// R: {1}, C: {1, i}, H: {1, j, k, l}.
struct RingElem {
    Ring ring;
    std::vector<Rational> coords;

    static RingElem one(Ring r);
    static RingElem basis(Ring r, int idx);
    Gaussian asGaussian() const;    // ring must be R or C
    Quaternion asQuaternion() const;  // ring must be H

    friend bool operator==(const RingElem& a, const RingElem& b) {
        return a.ring == b.ring && a.coords == b.coords;
    }
};

RingElem ringMul(const RingElem& a, const RingElem& b);

// The ten isomorphism classes of simple bimodules between R, C, H.
// Names read left ring then right ring; CC and CCbar are the two C-C classes.
enum class BimKind { RR, HH, RC, CR, RH, HR, HCcol, CHrow, CC, CCbar };

Ring leftRing(BimKind k);
Ring rightRing(BimKind k);
int realDim(BimKind k);
std::string kindName(BimKind k);
const std::vector<std::string>& basisTokens(BimKind k);
int basisIndex(BimKind k, std::string_view token);  // -1 if unknown

// All kinds with the given end rings (two for (C, C), one otherwise).
std::vector<BimKind> kindsBetween(Ring left, Ring right);

// Canonical simple bimodule for an ordered ring pair; the variant flag picks
// the conjugated C-C class and must be absent otherwise.
BimKind simpleBimodule(Ring left, Ring right, std::optional<bool> conjugated);

QVec unitVec(std::size_t dim, std::size_t idx);

// Two-sided actions in coordinates. The left action of r in M(t) and the
// right action of r in M(s); both are Q-linear in the module argument.
QVec leftAct(BimKind k, const RingElem& r, const QVec& m);
QVec rightAct(BimKind k, const RingElem& r, const QVec& m);

// Smallest subspace containing the generators and closed under both ring
// actions on a single bimodule space.
QSubspace bimoduleSpan(BimKind k, const std::vector<QVec>& gens);

// M(a) tensor_D M(b) for composable kinds (rightRing(a) == leftRing(b) == D),
// realized as the quotient of the real tensor square by m.d (x) n - m (x) d.n.
// Quotient coordinates are the non-pivot grid coordinates; each lifts to a
// pure basis tensor.
class PairSpace {
public:
    PairSpace(BimKind a, BimKind b);

    BimKind kindA() const { return ka_; }
    BimKind kindB() const { return kb_; }
    Ring middle() const { return mid_; }
    std::size_t dim() const { return free_.size(); }
    std::size_t gridDim() const { return static_cast<std::size_t>(dimA_) * dimB_; }

    // Project a full-grid vector (index i*dimB + j) to quotient coordinates.
    QVec project(QVec grid) const;
    // Image of a pure tensor of coordinate vectors.
    QVec pureTensor(const QVec& a, const QVec& b) const;
    // The pure basis tensor (i, j) representing quotient coordinate q.
    std::pair<int, int> liftOf(std::size_t q) const;

    QVec leftAct(const RingElem& r, const QVec& v) const;
    QVec rightAct(const RingElem& r, const QVec& v) const;

private:
    BimKind ka_, kb_;
    Ring mid_;
    int dimA_, dimB_;
    QSubspace relations_;
    std::vector<std::size_t> free_;
};

// Closure of a generator list inside a PairSpace under the outer actions.
QSubspace bimoduleSpanPair(const PairSpace& p, const std::vector<QVec>& gens);

}  // namespace cxg
