#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cxg/gentle.hpp"
#include "cxg/modquiver.hpp"
#include "cxg/mq_text.hpp"

namespace cxg {

enum class Twist { Id, Conj };

Gaussian applyTwist(Twist t, const Gaussian& c);

// Skew polynomial attached to a special loop: x^2-1 marks a Q_R vertex,
// x^2+1 a Q_H vertex.
enum class LoopTag { XSquareMinusOne, XSquarePlusOne };

struct SlqArrow {
    std::string name;
    int src;
    int tgt;
    Twist twist;   // special loops always conjugate
    bool special;  // member of the loop set S
    LoopTag tag = LoopTag::XSquareMinusOne;
};

// A relation path, arrows listed target-first ("b then a" is {a, b}).
// Interior special loops are allowed so both Z and Z' serialize.
struct ZPath {
    std::vector<int> arrows;
    friend bool operator==(const ZPath& x, const ZPath& y) { return x.arrows == y.arrows; }
};

struct SlqPresentation {
    std::vector<std::string> vertices;
    std::vector<SlqArrow> arrows;
    std::vector<ZPath> z;

    int vertexIndex(std::string_view name) const;
    int arrowIndex(std::string_view name) const;
    int loopAt(int v) const;  // -1 when v has no special loop
    // Vertex group: Q_R, Q_H or Q_C read off the loop tags.
    Ring groupOf(int v) const;
    std::vector<int> ordinaryOut(int v) const;
    std::vector<int> ordinaryIn(int v) const;
    bool zContains(const ZPath& p) const;
};

// .slq format:
//   vertices:      whitespace-separated names
//   special_loops: lines "name at v: x^2-1|x^2+1"
//   arrows:        lines "name: src -> tgt [twist id|conj]"
//   relations Z:   dot-joined paths "a.b", "a.s.b", "a.s^1.b" (target-last)
SlqPresentation parseSlq(const std::string& text);
std::string serializeSlq(const SlqPresentation& p);
std::string slqToJson(const SlqPresentation& p);

struct GentleTypeReport {
    bool pass = true;
    std::vector<std::string> failures;
};

GentleTypeReport checkGentleType(const SlqPresentation& p);

// --- words of C_sigma Q / <S> -----------------------------------------------

// Normal form: coefficient on the left, no repeated special loop adjacent to
// itself (s^2 rewrites to +-e per its tag).
struct Word {
    Gaussian coef;
    int vertexIfEmpty = -1;
    std::vector<int> arrows;  // target-first
};

Word trivialWord(const SlqPresentation& p, int vertex, const Gaussian& c);
Word normalizeWord(const SlqPresentation& p, Word w);
Word mulWords(const SlqPresentation& p, const Word& a, const Word& b);
Twist wordTwist(const SlqPresentation& p, const std::vector<int>& arrows);
std::string wordStr(const SlqPresentation& p, const Word& w);

// --- the basic presentation T(Q^b, M) ---------------------------------------

struct BasicPresentation {
    ModQuiver q;
    std::shared_ptr<Deg2Ambient> amb;
    // slq arrow id -> {plain q-arrow, partner or -1}; loops get {-1, -1}
    std::vector<std::array<int, 2>> arrowImage;
};

using PartnerNamer = std::function<std::string(const std::string&)>;

BasicPresentation buildQb(const SlqPresentation& p, const PartnerNamer& namer = {});

// --- Phi = phi2 . phi1 on epsilon-truncated words ----------------------------

struct PhiValue {
    int degree = 0;
    RingElem scalar{Ring::R, {Rational(0)}};  // degree 0
    int slqArrow = -1;                        // degree 1
    QVec deg1;                                // over M^b(arrow): plain then partner block
    QVec deg2;                                // Q^b ambient coordinates
};

// Words may hold at most two ordinary arrows and one interior special loop.
PhiValue phi(const SlqPresentation& p, const BasicPresentation& b, const Word& w);

// The ideal I = Phi(eps <Z> eps): full M(ab) at Q_C middles, otherwise the
// bimodule span of Phi(eps path eps) (plus the i-variant in the RRR and RHR
// shapes), which must land on exactly one of I^0, I^1.
Degree2Ideal inducedIdeal(const SlqPresentation& p, const BasicPresentation& b);

// --- the reverse construction Q^s -------------------------------------------

struct QsOutput {
    SlqPresentation twisted;       // (Z, sigma)
    SlqPresentation straight;      // (Z', sigma')
    // Q-arrow partner names dropped when passing to Q^s (plain name -> partner).
    std::map<std::string, std::string> droppedPartners;
};

QsOutput buildQs(const ModQuiver& q, const Deg2Ambient& amb, const Degree2Ideal& ideal,
                 const AlgebraVerdict& verdict);

struct TwistChangeReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> images;  // g1 of each Z generator, printed
};

// Verifies g1(<Z>) = <Z'> degree-2-wise and that g1, g2 are mutually inverse
// on generators.
TwistChangeReport twistChangeIso(const QsOutput& qs);

struct RoundtripReport {
    bool pass = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
};

// SpecialType input -> (Q^s, Z', sigma') -> basic presentation; checks
// ((Q^s)^b, M') = (Q, M) on the nose and Phi(<Z'>) = I in degree 2, plus the
// twist-change and gentle-type properties of the (Z, sigma) output.
RoundtripReport roundtripCheck(const ModQuiver& q, const Deg2Ambient& amb,
                               const Degree2Ideal& ideal);

}  // namespace cxg
