#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cxg {

struct ArithmeticError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduced fraction over checked 64-bit integers. All coefficients appearing in
// this toolkit live in {0, +-1, +-1/2, ...} and stay tiny through row
// reduction, so a fixed-width numerator with overflow detection is enough;
// any overflow throws instead of wrapping.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool isZero() const { return num_ == 0; }
    int sign() const { return num_ > 0 ? 1 : num_ < 0 ? -1 : 0; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);

    std::string str() const;
    // Accepts "p" or "p/q", optionally signed.
    static Rational parse(std::string_view s);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    void reduce();
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// Gaussian rational a + b*i, the exact sublattice of C used after
// complexification.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(r) {}
    Gaussian(std::int64_t r) : re(r) {}
    Gaussian(Rational r, Rational i) : re(r), im(i) {}

    static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

    bool isZero() const { return re.isZero() && im.isZero(); }
    Gaussian conj() const { return Gaussian(re, -im); }

    Gaussian operator-() const { return Gaussian(-re, -im); }
    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }

    friend bool operator==(const Gaussian& a, const Gaussian& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }

    std::string str() const;
    // Accepts "a", "bi", "a+bi", "a-bi" with rational a, b; "i" and "-i" work.
    static Gaussian parse(std::string_view s);
};

std::ostream& operator<<(std::ostream& os, const Gaussian& g);

class Mat2G;

// Quaternion with rational coordinates in the basis {1, j, k, l}. The product
// is pulled back through the fixed matrix embedding so the sign table
// (jk = l, kl = j, lj = k) is forced rather than chosen.
struct Quaternion {
    Rational c1, cj, ck, cl;

    Quaternion() = default;
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : c1(a), cj(b), ck(c), cl(d) {}

    static Quaternion one() { return Quaternion(1, 0, 0, 0); }
    static Quaternion j() { return Quaternion(0, 1, 0, 0); }
    static Quaternion k() { return Quaternion(0, 0, 1, 0); }
    static Quaternion l() { return Quaternion(0, 0, 0, 1); }
    static Quaternion basis(int idx);

    bool isZero() const;

    Quaternion operator-() const { return Quaternion(-c1, -cj, -ck, -cl); }
    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);
    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator*(const Rational& s, Quaternion q);

    friend bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.c1 == b.c1 && a.cj == b.cj && a.ck == b.ck && a.cl == b.cl;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

    std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

// 2x2 matrix over the Gaussian rationals, row-major.
class Mat2G {
public:
    Mat2G() = default;
    Mat2G(Gaussian a, Gaussian b, Gaussian c, Gaussian d) : e_{a, b, c, d} {}

    static Mat2G zero() { return Mat2G(); }
    static Mat2G identity() { return Mat2G(1, 0, 0, 1); }
    static Mat2G corner() { return Mat2G(1, 0, 0, 0); }  // E_11

    Gaussian& at(int r, int c) { return e_[static_cast<std::size_t>(r * 2 + c)]; }
    const Gaussian& at(int r, int c) const { return e_[static_cast<std::size_t>(r * 2 + c)]; }

    bool isZero() const;

    Mat2G operator-() const;
    Mat2G& operator+=(const Mat2G& o);
    Mat2G& operator-=(const Mat2G& o);
    friend Mat2G operator+(Mat2G a, const Mat2G& b) { return a += b; }
    friend Mat2G operator-(Mat2G a, const Mat2G& b) { return a -= b; }
    friend Mat2G operator*(const Mat2G& a, const Mat2G& b);
    friend Mat2G operator*(const Gaussian& s, Mat2G m);

    friend bool operator==(const Mat2G& a, const Mat2G& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Mat2G& a, const Mat2G& b) { return !(a == b); }

    std::string str() const;

private:
    std::array<Gaussian, 4> e_{};
};

// The fixed embedding H -> M_2(C): a quaternion with complex form (a, b)
// maps to [a b; -conj(b) conj(a)], where a = c1 + cj*i and b = ck + cl*i.
Mat2G embedQuat(const Quaternion& q);

// Pullback through the embedding; throws if the matrix is not in the image.
Quaternion quatFromMat(const Mat2G& m);

Quaternion quatMultiply(const Quaternion& a, const Quaternion& b);
Quaternion quatConj(const Quaternion& q);

}  // namespace cxg
