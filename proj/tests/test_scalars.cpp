#include <doctest.h>

#include <random>

#include "cxg/scalars.hpp"

using namespace cxg;

TEST_CASE("rationals reduce and stay exact") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational::parse("3/9") == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1, 0), ArithmeticError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ArithmeticError);
    CHECK_THROWS_AS(Rational::parse("x"), ArithmeticError);
}

TEST_CASE("gaussian arithmetic and conjugation") {
    Gaussian z(Rational(1), Rational(1));
    CHECK(z.conj() == Gaussian(Rational(1), Rational(-1)));
    CHECK(Gaussian(Rational(3, 2)).conj() == Gaussian(Rational(3, 2)));
    CHECK(Gaussian::i().conj().conj() == Gaussian::i());
    CHECK((Gaussian::i() * Gaussian::i()) == Gaussian(-1));
    CHECK((z * z.conj()) == Gaussian(2));
    CHECK((Gaussian(1) / z) == Gaussian(Rational(1, 2), Rational(-1, 2)));
    // conjugation is a field automorphism
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        auto rnd = [&] {
            return Gaussian(Rational(static_cast<int>(rng() % 11) - 5, 1 + rng() % 3),
                            Rational(static_cast<int>(rng() % 11) - 5, 1 + rng() % 3));
        };
        Gaussian a = rnd(), b = rnd();
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
    CHECK(Gaussian::parse("1+i") == Gaussian(Rational(1), Rational(1)));
    CHECK(Gaussian::parse("-i") == Gaussian(Rational(0), Rational(-1)));
    CHECK(Gaussian::parse("3/2") == Gaussian(Rational(3, 2)));
    CHECK(Gaussian::parse("1-1/2i") == Gaussian(Rational(1), Rational(-1, 2)));
    CHECK(Gaussian(Rational(0), Rational(-1, 2)).str() == "-1/2i");
}

TEST_CASE("quaternion embedding fixes the basis matrices") {
    CHECK(embedQuat(Quaternion::one()) == Mat2G::identity());
    CHECK(embedQuat(Quaternion::j()) == Mat2G(Gaussian::i(), 0, 0, -Gaussian::i()));
    CHECK(embedQuat(Quaternion::k()) == Mat2G(0, 1, Gaussian(-1), 0));
    CHECK(embedQuat(Quaternion::l()) == Mat2G(0, Gaussian::i(), Gaussian::i(), 0));
    // j + k as the sum of the two listed matrices
    CHECK(embedQuat(Quaternion::j() + Quaternion::k()) ==
          Mat2G(Gaussian::i(), 1, Gaussian(-1), -Gaussian::i()));
}

TEST_CASE("quaternion product is the pullback of the matrix product") {
    CHECK(quatMultiply(Quaternion::j(), Quaternion::k()) == Quaternion::l());
    CHECK(quatMultiply(Quaternion::k(), Quaternion::j()) == -Quaternion::l());
    CHECK(quatMultiply(Quaternion::k(), Quaternion::l()) == Quaternion::j());
    CHECK(quatMultiply(Quaternion::l(), Quaternion::j()) == Quaternion::k());
    Quaternion q(Rational(1), Rational(-2), Rational(1, 2), Rational(3));
    CHECK(quatMultiply(Quaternion::one(), q) == q);
    CHECK(quatMultiply(q, Quaternion::one()) == q);
    // exhaustive over basis pairs and a few random products
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            Quaternion qa = Quaternion::basis(a), qb = Quaternion::basis(b);
            CHECK(embedQuat(quatMultiply(qa, qb)) == embedQuat(qa) * embedQuat(qb));
        }
    }
    std::mt19937_64 rng(11);
    for (int t = 0; t < 50; ++t) {
        auto rnd = [&] {
            auto c = [&] { return Rational(static_cast<int>(rng() % 7) - 3, 1 + rng() % 2); };
            return Quaternion(c(), c(), c(), c());
        };
        Quaternion a = rnd(), b = rnd();
        CHECK(embedQuat(quatMultiply(a, b)) == embedQuat(a) * embedQuat(b));
    }
    CHECK(Quaternion(Rational(1), Rational(1), Rational(0), Rational(-1, 2)).str() == "1+j-1/2l");
}

TEST_CASE("matrix pullback rejects values outside the embedding") {
    CHECK_THROWS_AS(quatFromMat(Mat2G(1, 0, 0, 0)), ArithmeticError);
}
