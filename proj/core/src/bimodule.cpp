#include "cxg/bimodule.hpp"

#include <stdexcept>

namespace cxg {

int realDim(Ring r) {
    switch (r) {
        case Ring::R: return 1;
        case Ring::C: return 2;
        case Ring::H: return 4;
    }
    return 0;
}

std::string ringName(Ring r) {
    switch (r) {
        case Ring::R: return "R";
        case Ring::C: return "C";
        case Ring::H: return "H";
    }
    return "?";
}

std::optional<Ring> ringFromName(std::string_view s) {
    if (s == "R") return Ring::R;
    if (s == "C") return Ring::C;
    if (s == "H") return Ring::H;
    return std::nullopt;
}

RingElem RingElem::one(Ring r) { return basis(r, 0); }

RingElem RingElem::basis(Ring r, int idx) {
    RingElem e{r, QVec(static_cast<std::size_t>(realDim(r)), Rational(0))};
    e.coords[static_cast<std::size_t>(idx)] = Rational(1);
    return e;
}

Gaussian RingElem::asGaussian() const {
    if (ring == Ring::R) return Gaussian(coords[0]);
    if (ring == Ring::C) return Gaussian(coords[0], coords[1]);
    throw std::logic_error("ring element is not complex");
}

Quaternion RingElem::asQuaternion() const {
    if (ring != Ring::H) throw std::logic_error("ring element is not quaternionic");
    return Quaternion(coords[0], coords[1], coords[2], coords[3]);
}

RingElem ringMul(const RingElem& a, const RingElem& b) {
    if (a.ring != b.ring) throw std::logic_error("ring mismatch in multiplication");
    switch (a.ring) {
        case Ring::R: return RingElem{Ring::R, {a.coords[0] * b.coords[0]}};
        case Ring::C: {
            Gaussian g = a.asGaussian() * b.asGaussian();
            return RingElem{Ring::C, {g.re, g.im}};
        }
        case Ring::H: {
            Quaternion q = a.asQuaternion() * b.asQuaternion();
            return RingElem{Ring::H, {q.c1, q.cj, q.ck, q.cl}};
        }
    }
    throw std::logic_error("unreachable");
}

Ring leftRing(BimKind k) {
    switch (k) {
        case BimKind::RR: case BimKind::RC: case BimKind::RH: return Ring::R;
        case BimKind::CR: case BimKind::CC: case BimKind::CCbar: case BimKind::CHrow: return Ring::C;
        case BimKind::HH: case BimKind::HR: case BimKind::HCcol: return Ring::H;
    }
    throw std::logic_error("unreachable");
}

Ring rightRing(BimKind k) {
    switch (k) {
        case BimKind::RR: case BimKind::CR: case BimKind::HR: return Ring::R;
        case BimKind::RC: case BimKind::CC: case BimKind::CCbar: case BimKind::HCcol: return Ring::C;
        case BimKind::RH: case BimKind::HH: case BimKind::CHrow: return Ring::H;
    }
    throw std::logic_error("unreachable");
}

int realDim(BimKind k) {
    switch (k) {
        case BimKind::RR: return 1;
        case BimKind::RC: case BimKind::CR: case BimKind::CC: case BimKind::CCbar: return 2;
        default: return 4;
    }
}

std::string kindName(BimKind k) {
    switch (k) {
        case BimKind::RR: return "R";
        case BimKind::HH: return "H";
        case BimKind::RC: case BimKind::CR: return "C";
        case BimKind::RH: case BimKind::HR: return "H";
        case BimKind::HCcol: return "C2col";
        case BimKind::CHrow: return "C2row";
        case BimKind::CC: return "C";
        case BimKind::CCbar: return "Cbar";
    }
    return "?";
}

const std::vector<std::string>& basisTokens(BimKind k) {
    static const std::vector<std::string> one = {"1"};
    static const std::vector<std::string> cplx = {"1", "i"};
    static const std::vector<std::string> quat = {"1", "j", "k", "l"};
    static const std::vector<std::string> col = {"c1", "ic1", "c2", "ic2"};
    static const std::vector<std::string> row = {"r1", "ir1", "r2", "ir2"};
    switch (k) {
        case BimKind::RR: return one;
        case BimKind::RC: case BimKind::CR: case BimKind::CC: case BimKind::CCbar: return cplx;
        case BimKind::HH: case BimKind::RH: case BimKind::HR: return quat;
        case BimKind::HCcol: return col;
        case BimKind::CHrow: return row;
    }
    return one;
}

int basisIndex(BimKind k, std::string_view token) {
    const auto& toks = basisTokens(k);
    for (std::size_t t = 0; t < toks.size(); ++t)
        if (toks[t] == token) return static_cast<int>(t);
    return -1;
}

std::vector<BimKind> kindsBetween(Ring left, Ring right) {
    if (left == Ring::R && right == Ring::R) return {BimKind::RR};
    if (left == Ring::H && right == Ring::H) return {BimKind::HH};
    if (left == Ring::R && right == Ring::C) return {BimKind::RC};
    if (left == Ring::C && right == Ring::R) return {BimKind::CR};
    if (left == Ring::R && right == Ring::H) return {BimKind::RH};
    if (left == Ring::H && right == Ring::R) return {BimKind::HR};
    if (left == Ring::H && right == Ring::C) return {BimKind::HCcol};
    if (left == Ring::C && right == Ring::H) return {BimKind::CHrow};
    return {BimKind::CC, BimKind::CCbar};
}

BimKind simpleBimodule(Ring left, Ring right, std::optional<bool> conjugated) {
    if (left == Ring::C && right == Ring::C) {
        if (!conjugated)
            throw std::invalid_argument("a C-C bimodule needs the plain/conjugated variant");
        return *conjugated ? BimKind::CCbar : BimKind::CC;
    }
    if (conjugated)
        throw std::invalid_argument("variant flag is only meaningful for C-C bimodules");
    return kindsBetween(left, right).front();
}

QVec unitVec(std::size_t dim, std::size_t idx) {
    QVec v(dim, Rational(0));
    v[idx] = Rational(1);
    return v;
}

namespace {

// Coordinate <-> model conversions for the action implementations.

Gaussian asC(const QVec& m) { return Gaussian(m[0], m[1]); }
QVec fromC(const Gaussian& g) { return {g.re, g.im}; }

Quaternion asH(const QVec& m) { return Quaternion(m[0], m[1], m[2], m[3]); }
QVec fromH(const Quaternion& q) { return {q.c1, q.cj, q.ck, q.cl}; }

std::pair<Gaussian, Gaussian> asC2(const QVec& m) {
    return {Gaussian(m[0], m[1]), Gaussian(m[2], m[3])};
}
QVec fromC2(const Gaussian& a, const Gaussian& b) { return {a.re, a.im, b.re, b.im}; }

QVec scale(const Rational& s, QVec m) {
    for (auto& x : m) x *= s;
    return m;
}

}  // namespace

QVec leftAct(BimKind k, const RingElem& r, const QVec& m) {
    if (r.ring != leftRing(k)) throw std::invalid_argument("left action: ring mismatch");
    switch (k) {
        case BimKind::RR: case BimKind::RC: case BimKind::RH:
            return scale(r.coords[0], m);
        case BimKind::CR: case BimKind::CC: case BimKind::CCbar:
            return fromC(r.asGaussian() * asC(m));
        case BimKind::HH: case BimKind::HR:
            return fromH(r.asQuaternion() * asH(m));
        case BimKind::HCcol: {
            // embed(q) times the column (z1; z2)
            Mat2G q = embedQuat(r.asQuaternion());
            auto [z1, z2] = asC2(m);
            return fromC2(q.at(0, 0) * z1 + q.at(0, 1) * z2,
                          q.at(1, 0) * z1 + q.at(1, 1) * z2);
        }
        case BimKind::CHrow: {
            auto [z1, z2] = asC2(m);
            Gaussian c = r.asGaussian();
            return fromC2(c * z1, c * z2);
        }
    }
    throw std::logic_error("unreachable");
}

QVec rightAct(BimKind k, const RingElem& r, const QVec& m) {
    if (r.ring != rightRing(k)) throw std::invalid_argument("right action: ring mismatch");
    switch (k) {
        case BimKind::RR: case BimKind::CR: case BimKind::HR:
            return scale(r.coords[0], m);
        case BimKind::RC: case BimKind::CC:
            return fromC(asC(m) * r.asGaussian());
        case BimKind::CCbar:
            // The conjugated class: the right factor acts through conjugation.
            return fromC(asC(m) * r.asGaussian().conj());
        case BimKind::HH: case BimKind::RH:
            return fromH(asH(m) * r.asQuaternion());
        case BimKind::HCcol: {
            auto [z1, z2] = asC2(m);
            Gaussian c = r.asGaussian();
            return fromC2(z1 * c, z2 * c);
        }
        case BimKind::CHrow: {
            // row (z1 z2) times embed(q)
            Mat2G q = embedQuat(r.asQuaternion());
            auto [z1, z2] = asC2(m);
            return fromC2(z1 * q.at(0, 0) + z2 * q.at(1, 0),
                          z1 * q.at(0, 1) + z2 * q.at(1, 1));
        }
    }
    throw std::logic_error("unreachable");
}

QSubspace bimoduleSpan(BimKind k, const std::vector<QVec>& gens) {
    std::size_t dim = static_cast<std::size_t>(realDim(k));
    QSubspace s(dim);
    for (const auto& g : gens) s.add(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<QVec> cur = s.basis();
        for (const auto& v : cur) {
            for (int t = 0; t < realDim(leftRing(k)); ++t)
                grew |= s.add(leftAct(k, RingElem::basis(leftRing(k), t), v));
            for (int t = 0; t < realDim(rightRing(k)); ++t)
                grew |= s.add(rightAct(k, RingElem::basis(rightRing(k), t), v));
        }
    }
    return s;
}

namespace {

// Relations are reduced in reversed coordinate order so low grid indices
// survive as quotient coordinates (a pure tensor like 1 (x) 1 stays a basis
// vector).
QVec reversed(QVec v) {
    std::reverse(v.begin(), v.end());
    return v;
}

}  // namespace

PairSpace::PairSpace(BimKind a, BimKind b) : ka_(a), kb_(b) {
    if (rightRing(a) != leftRing(b))
        throw std::invalid_argument("tensor: middle ring mismatch");
    mid_ = rightRing(a);
    dimA_ = realDim(a);
    dimB_ = realDim(b);
    std::size_t grid = gridDim();
    relations_ = QSubspace(grid);
    for (int d = 0; d < realDim(mid_); ++d) {
        RingElem rd = RingElem::basis(mid_, d);
        for (int i = 0; i < dimA_; ++i) {
            QVec ad = cxg::rightAct(ka_, rd, unitVec(static_cast<std::size_t>(dimA_),
                                                     static_cast<std::size_t>(i)));
            for (int j = 0; j < dimB_; ++j) {
                QVec db = cxg::leftAct(kb_, rd, unitVec(static_cast<std::size_t>(dimB_),
                                                        static_cast<std::size_t>(j)));
                QVec rel(grid, Rational(0));
                for (int x = 0; x < dimA_; ++x)
                    rel[static_cast<std::size_t>(x * dimB_ + j)] += ad[static_cast<std::size_t>(x)];
                for (int y = 0; y < dimB_; ++y)
                    rel[static_cast<std::size_t>(i * dimB_ + y)] -= db[static_cast<std::size_t>(y)];
                relations_.add(reversed(std::move(rel)));
            }
        }
    }
    std::vector<bool> isPivot(grid, false);
    for (std::size_t p : relations_.pivots()) isPivot[grid - 1 - p] = true;
    for (std::size_t t = 0; t < grid; ++t)
        if (!isPivot[t]) free_.push_back(t);
}

QVec PairSpace::project(QVec grid) const {
    grid = reversed(relations_.reduced(reversed(std::move(grid))));
    QVec out;
    out.reserve(free_.size());
    for (std::size_t t : free_) out.push_back(grid[t]);
    return out;
}

QVec PairSpace::pureTensor(const QVec& a, const QVec& b) const {
    QVec grid(gridDim(), Rational(0));
    for (int i = 0; i < dimA_; ++i)
        for (int j = 0; j < dimB_; ++j)
            grid[static_cast<std::size_t>(i * dimB_ + j)] =
                a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    return project(std::move(grid));
}

std::pair<int, int> PairSpace::liftOf(std::size_t q) const {
    std::size_t g = free_[q];
    return {static_cast<int>(g) / dimB_, static_cast<int>(g) % dimB_};
}

QVec PairSpace::leftAct(const RingElem& r, const QVec& v) const {
    QVec out(dim(), Rational(0));
    for (std::size_t q = 0; q < dim(); ++q) {
        if (v[q].isZero()) continue;
        auto [i, j] = liftOf(q);
        QVec ra = cxg::leftAct(ka_, r, unitVec(static_cast<std::size_t>(dimA_),
                                               static_cast<std::size_t>(i)));
        QVec grid(gridDim(), Rational(0));
        for (int x = 0; x < dimA_; ++x)
            grid[static_cast<std::size_t>(x * dimB_ + j)] = ra[static_cast<std::size_t>(x)];
        QVec piece = project(std::move(grid));
        for (std::size_t t = 0; t < dim(); ++t) out[t] += v[q] * piece[t];
    }
    return out;
}

QVec PairSpace::rightAct(const RingElem& r, const QVec& v) const {
    QVec out(dim(), Rational(0));
    for (std::size_t q = 0; q < dim(); ++q) {
        if (v[q].isZero()) continue;
        auto [i, j] = liftOf(q);
        QVec rb = cxg::rightAct(kb_, r, unitVec(static_cast<std::size_t>(dimB_),
                                                static_cast<std::size_t>(j)));
        QVec grid(gridDim(), Rational(0));
        for (int y = 0; y < dimB_; ++y)
            grid[static_cast<std::size_t>(i * dimB_ + y)] = rb[static_cast<std::size_t>(y)];
        QVec piece = project(std::move(grid));
        for (std::size_t t = 0; t < dim(); ++t) out[t] += v[q] * piece[t];
    }
    return out;
}

QSubspace bimoduleSpanPair(const PairSpace& p, const std::vector<QVec>& gens) {
    QSubspace s(p.dim());
    for (const auto& g : gens) s.add(g);
    bool grew = true;
    Ring lr = leftRing(p.kindA());
    Ring rr = rightRing(p.kindB());
    while (grew) {
        grew = false;
        std::vector<QVec> cur = s.basis();
        for (const auto& v : cur) {
            for (int t = 0; t < realDim(lr); ++t)
                grew |= s.add(p.leftAct(RingElem::basis(lr, t), v));
            for (int t = 0; t < realDim(rr); ++t)
                grew |= s.add(p.rightAct(RingElem::basis(rr, t), v));
        }
    }
    return s;
}

}  // namespace cxg
