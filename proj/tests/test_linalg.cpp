#include <doctest.h>

#include <random>

#include "cxg/linalg.hpp"

using namespace cxg;

namespace {

QSubspace spanOf(std::size_t dim, std::initializer_list<std::vector<int>> rows) {
    QSubspace s(dim);
    for (const auto& r : rows) {
        QVec v;
        for (int x : r) v.push_back(Rational(x));
        s.add(v);
    }
    return s;
}

}  // namespace

TEST_CASE("subspaces have canonical bases") {
    QSubspace a = spanOf(3, {{1, 1, 0}, {0, 1, 1}});
    QSubspace b = spanOf(3, {{1, 2, 1}, {2, 1, -1}});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.contains({Rational(1), Rational(0), Rational(-1)}));
    CHECK(!a.contains({Rational(1), Rational(0), Rational(0)}));
    QSubspace whole = spanOf(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(whole.contains(a));
    CHECK(!a.contains(whole));
}

TEST_CASE("intersection agrees with brute-force membership") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t dim = 4 + rng() % 3;
        auto randomSpace = [&] {
            QSubspace s(dim);
            int k = 1 + static_cast<int>(rng() % 3);
            for (int t = 0; t < k; ++t) {
                QVec v;
                for (std::size_t x = 0; x < dim; ++x)
                    v.push_back(Rational(static_cast<int>(rng() % 5) - 2));
                s.add(v);
            }
            return s;
        };
        QSubspace a = randomSpace(), b = randomSpace();
        QSubspace meet = intersect(a, b);
        for (const auto& row : meet.basis()) {
            CHECK(a.contains(row));
            CHECK(b.contains(row));
        }
        CHECK(meet.dim() == a.dim() + b.dim() - sum(a, b).dim());
        CHECK(sum(meet, a) == a);
    }
}

TEST_CASE("restriction to a coordinate mask") {
    QSubspace a = spanOf(3, {{1, 1, 0}, {0, 0, 1}});
    std::vector<bool> mask = {true, true, false};
    QSubspace r = a.restrictedTo(mask);
    CHECK(r.dim() == 1);
    CHECK(r.contains({Rational(1), Rational(1), Rational(0)}));
}
