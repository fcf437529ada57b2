#include "cxg/scalars.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

namespace cxg {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw ArithmeticError("rational arithmetic overflow");
    return static_cast<i64>(v);
}

i64 mulChecked(i64 a, i64 b) { return narrow(i128(a) * i128(b)); }
i64 addChecked(i64 a, i64 b) { return narrow(i128(a) + i128(b)); }

}  // namespace

Rational::Rational(i64 n, i64 d) : num_(n), den_(d) {
    if (d == 0) throw ArithmeticError("rational with zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_ < 0) {
        num_ = narrow(-i128(num_));
        den_ = narrow(-i128(den_));
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    i64 g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-i128(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    i64 n = addChecked(mulChecked(num_, o.den_), mulChecked(o.num_, den_));
    i64 d = mulChecked(den_, o.den_);
    num_ = n;
    den_ = d;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    num_ = mulChecked(num_, o.num_);
    den_ = mulChecked(den_, o.den_);
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw ArithmeticError("rational division by zero");
    num_ = mulChecked(num_, o.den_);
    den_ = mulChecked(den_, o.num_);
    reduce();
    return *this;
}

bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * i128(b.den_) < i128(b.num_) * i128(a.den_);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw ArithmeticError("bad rational: '" + std::string(s) + "'"); };
    std::string t(s);
    std::size_t slash = t.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            i64 n = std::stoll(t, &used);
            if (used != t.size()) bad();
            return Rational(n);
        }
        i64 n = std::stoll(t.substr(0, slash), &used);
        if (used != slash) bad();
        i64 d = std::stoll(t.substr(slash + 1), &used);
        if (used != t.size() - slash - 1) bad();
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        bad();
    } catch (const std::out_of_range&) {
        bad();
    }
    return Rational();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Gaussian& Gaussian::operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (n.isZero()) throw ArithmeticError("gaussian division by zero");
    Gaussian c = o.conj();
    *this *= c;
    re /= n;
    im /= n;
    return *this;
}

std::string Gaussian::str() const {
    if (im.isZero()) return re.str();
    std::string imPart;
    if (im == Rational(1))
        imPart = "i";
    else if (im == Rational(-1))
        imPart = "-i";
    else
        imPart = im.str() + "i";
    if (re.isZero()) return imPart;
    if (im.sign() > 0) return re.str() + "+" + imPart;
    return re.str() + imPart;
}

Gaussian Gaussian::parse(std::string_view s) {
    auto bad = [&] { throw ArithmeticError("bad gaussian: '" + std::string(s) + "'"); };
    std::string t(s);
    if (t.empty()) bad();
    if (t.back() != 'i') return Gaussian(Rational::parse(t));
    // Split off the trailing imaginary term at the last top-level +/- that is
    // not a leading sign or an exponent-free numerator sign.
    std::size_t split = std::string::npos;
    for (std::size_t p = t.size() - 1; p > 0; --p) {
        if ((t[p] == '+' || t[p] == '-') && t[p - 1] != '/' && t[p - 1] != '+' && t[p - 1] != '-') {
            split = p;
            break;
        }
    }
    auto parseImag = [&](std::string u) {
        if (u.empty() || u.back() != 'i') bad();
        u.pop_back();
        if (u.empty() || u == "+") return Rational(1);
        if (u == "-") return Rational(-1);
        return Rational::parse(u);
    };
    if (split == std::string::npos) return Gaussian(Rational(0), parseImag(t));
    return Gaussian(Rational::parse(t.substr(0, split)), parseImag(t.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.str(); }

Quaternion Quaternion::basis(int idx) {
    switch (idx) {
        case 0: return one();
        case 1: return j();
        case 2: return k();
        case 3: return l();
        default: throw ArithmeticError("quaternion basis index out of range");
    }
}

bool Quaternion::isZero() const {
    return c1.isZero() && cj.isZero() && ck.isZero() && cl.isZero();
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
    c1 += o.c1;
    cj += o.cj;
    ck += o.ck;
    cl += o.cl;
    return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) { return *this += -o; }

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return quatMultiply(a, b);
}

Quaternion operator*(const Rational& s, Quaternion q) {
    q.c1 *= s;
    q.cj *= s;
    q.ck *= s;
    q.cl *= s;
    return q;
}

std::string Quaternion::str() const {
    const std::array<std::pair<const Rational*, const char*>, 4> parts = {
        {{&c1, ""}, {&cj, "j"}, {&ck, "k"}, {&cl, "l"}}};
    std::string out;
    for (const auto& [coef, sym] : parts) {
        if (coef->isZero()) continue;
        std::string c = coef->str();
        if (*sym && (c == "1")) c.clear();
        if (*sym && (c == "-1")) c = "-";
        if (!out.empty() && coef->sign() > 0) out += "+";
        out += c + sym;
    }
    return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) { return os << q.str(); }

bool Mat2G::isZero() const {
    for (const auto& g : e_)
        if (!g.isZero()) return false;
    return true;
}

Mat2G Mat2G::operator-() const {
    Mat2G m;
    for (std::size_t t = 0; t < 4; ++t) m.e_[t] = -e_[t];
    return m;
}

Mat2G& Mat2G::operator+=(const Mat2G& o) {
    for (std::size_t t = 0; t < 4; ++t) e_[t] += o.e_[t];
    return *this;
}

Mat2G& Mat2G::operator-=(const Mat2G& o) {
    for (std::size_t t = 0; t < 4; ++t) e_[t] -= o.e_[t];
    return *this;
}

Mat2G operator*(const Mat2G& a, const Mat2G& b) {
    Mat2G m;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            m.at(r, c) = a.at(r, 0) * b.at(0, c) + a.at(r, 1) * b.at(1, c);
    return m;
}

Mat2G operator*(const Gaussian& s, Mat2G m) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m.at(r, c) *= s;
    return m;
}

std::string Mat2G::str() const {
    std::ostringstream os;
    os << "[" << e_[0] << " " << e_[1] << "; " << e_[2] << " " << e_[3] << "]";
    return os.str();
}

Mat2G embedQuat(const Quaternion& q) {
    Gaussian a(q.c1, q.cj);
    Gaussian b(q.ck, q.cl);
    return Mat2G(a, b, -b.conj(), a.conj());
}

Quaternion quatFromMat(const Mat2G& m) {
    Gaussian a = m.at(0, 0);
    Gaussian b = m.at(0, 1);
    if (m.at(1, 0) != -b.conj() || m.at(1, 1) != a.conj())
        throw ArithmeticError("matrix is not in the image of the quaternion embedding");
    return Quaternion(a.re, a.im, b.re, b.im);
}

Quaternion quatMultiply(const Quaternion& a, const Quaternion& b) {
    return quatFromMat(embedQuat(a) * embedQuat(b));
}

Quaternion quatConj(const Quaternion& q) {
    return Quaternion(q.c1, -q.cj, -q.ck, -q.cl);
}

}  // namespace cxg
