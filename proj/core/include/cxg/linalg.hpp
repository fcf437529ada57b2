#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cxg/scalars.hpp"

namespace cxg {

// Row space in reduced row echelon form over an exact field (Rational or
// Gaussian). Equality of subspaces is equality of the canonical RREF bases.
template <class F>
class Subspace {
public:
    using Vec = std::vector<F>;

    Subspace() = default;
    explicit Subspace(std::size_t ambientDim) : ambient_(ambientDim) {}

    static Subspace span(std::size_t ambientDim, const std::vector<Vec>& gens) {
        Subspace s(ambientDim);
        for (const auto& g : gens) s.add(g);
        return s;
    }

    std::size_t ambientDim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vec>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Canonical representative of v modulo this row space.
    Vec reduced(Vec v) const {
        if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
        reduceAgainst(v);
        return v;
    }

    // Inserts a vector, returns true if the dimension grew.
    bool add(Vec v) {
        if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
        reduceAgainst(v);
        std::size_t p = pivotOf(v);
        if (p == ambient_) return false;
        F inv = F(1) / v[p];
        for (auto& x : v) x *= inv;
        // Clear the new pivot column from existing rows.
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            F c = rows_[r][p];
            if (!c.isZero()) axpy(rows_[r], -c, v);
        }
        std::size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
        return true;
    }

    bool contains(Vec v) const {
        if (v.size() != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
        reduceAgainst(v);
        return pivotOf(v) == ambient_;
    }

    bool contains(const Subspace& other) const {
        if (other.ambient_ != ambient_) throw std::invalid_argument("subspace: ambient mismatch");
        for (const auto& r : other.rows_)
            if (!contains(r)) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

    friend Subspace sum(const Subspace& a, const Subspace& b) {
        Subspace s = a;
        for (const auto& r : b.rows_) s.add(r);
        return s;
    }

    // Zassenhaus: row reduce [A|A; B|0], rows with zero left half carry the
    // intersection in their right half.
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        if (a.ambient_ != b.ambient_) throw std::invalid_argument("subspace: ambient mismatch");
        std::size_t n = a.ambient_;
        Subspace big(2 * n);
        for (const auto& r : a.rows_) {
            Vec v(2 * n, F(0));
            for (std::size_t t = 0; t < n; ++t) v[t] = v[n + t] = r[t];
            big.add(std::move(v));
        }
        for (const auto& r : b.rows_) {
            Vec v(2 * n, F(0));
            for (std::size_t t = 0; t < n; ++t) v[t] = r[t];
            big.add(std::move(v));
        }
        Subspace out(n);
        for (const auto& row : big.rows_) {
            bool leftZero = true;
            for (std::size_t t = 0; t < n && leftZero; ++t) leftZero = row[t].isZero();
            if (!leftZero) continue;
            Vec v(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
            out.add(std::move(v));
        }
        return out;
    }

    // Restriction to a coordinate mask: the set of elements supported on the
    // selected coordinates, as a subspace of the same ambient.
    Subspace restrictedTo(const std::vector<bool>& mask) const {
        Subspace coords(ambient_);
        for (std::size_t t = 0; t < ambient_; ++t) {
            if (!mask[t]) continue;
            Vec v(ambient_, F(0));
            v[t] = F(1);
            coords.add(std::move(v));
        }
        return intersect(*this, coords);
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;

    static void axpy(Vec& dst, const F& c, const Vec& src) {
        for (std::size_t t = 0; t < dst.size(); ++t) dst[t] += c * src[t];
    }

    std::size_t pivotOf(const Vec& v) const {
        for (std::size_t t = 0; t < v.size(); ++t)
            if (!v[t].isZero()) return t;
        return ambient_;
    }

    void reduceAgainst(Vec& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            F c = v[pivots_[r]];
            if (!c.isZero()) axpy(v, -c, rows_[r]);
        }
    }
};

using QVec = std::vector<Rational>;
using QSubspace = Subspace<Rational>;
using GSubspace = Subspace<Gaussian>;

}  // namespace cxg
