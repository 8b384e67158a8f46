#pragma once

// Quasi-polynomials with periodic rational coefficients:
//
//     f(k) = c_d(k) k^d + ... + c_1(k) k + c_0(k),
//
// where each coefficient function c_i has some integer period. The value
// table is indexed by residue class; construction from counting data is
// exact Lagrange interpolation per residue class. The periods of a function
// on Z/N form a subgroup of Z/N, so each coefficient has a well-defined
// minimal period dividing N, found by scanning the divisors of N in order.

#include "qpc/rational.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qpc {

class QuasiPolynomial {
public:
    /// coefficients[r][i] is the coefficient of k^i on the residue class
    /// r mod period; each row must have degree + 1 entries.
    QuasiPolynomial(int degree, std::int64_t period,
                    std::vector<std::vector<Rat>> coefficients)
        : degree_(degree), period_(period), coeffs_(std::move(coefficients))
    {
        if (degree_ < 0)
            throw std::invalid_argument("quasi-polynomial degree must be >= 0");
        if (period_ < 1)
            throw std::invalid_argument("quasi-polynomial period must be >= 1");
        if (coeffs_.size() != static_cast<std::size_t>(period_))
            throw std::invalid_argument("coefficient table needs one row per residue");
        for (const auto& row : coeffs_)
            if (row.size() != static_cast<std::size_t>(degree_) + 1)
                throw std::invalid_argument("coefficient row needs degree + 1 entries");
    }

    /// An honest polynomial: period 1, coefficients ascending in the power.
    static QuasiPolynomial from_polynomial(std::vector<Rat> ascending)
    {
        if (ascending.empty())
            ascending.push_back(Rat(0));
        const int d = static_cast<int>(ascending.size()) - 1;
        return QuasiPolynomial(d, 1, {std::move(ascending)});
    }

    int degree() const { return degree_; }
    std::int64_t period() const { return period_; }

    const Rat& coefficient(std::int64_t residue, int i) const
    {
        if (i < 0 || i > degree_)
            throw std::out_of_range("coefficient index out of range");
        return coeffs_[static_cast<std::size_t>(mod_residue(residue, period_))]
                      [static_cast<std::size_t>(i)];
    }

    /// Value at any integer k, including negative arguments (the residue is
    /// the true mathematical k mod period).
    Rat evaluate(std::int64_t k) const
    {
        const auto& row = coeffs_[static_cast<std::size_t>(mod_residue(k, period_))];
        Rat v = 0;
        Rat pw = 1;
        for (const auto& c : row) {
            v += c * pw;
            pw *= k;
        }
        return v;
    }

    /// The same function with the period written as a multiple of the
    /// current one.
    QuasiPolynomial lifted(std::int64_t new_period) const
    {
        if (new_period < period_ || new_period % period_ != 0)
            throw std::invalid_argument("lifted: new period must be a multiple");
        std::vector<std::vector<Rat>> table;
        table.reserve(static_cast<std::size_t>(new_period));
        for (std::int64_t r = 0; r < new_period; ++r)
            table.push_back(coeffs_[static_cast<std::size_t>(r % period_)]);
        return QuasiPolynomial(degree_, new_period, std::move(table));
    }

    /// Minimal period of the coefficient function of k^i (divides period()).
    std::int64_t minimal_coefficient_period(int i) const
    {
        if (i < 0 || i > degree_)
            throw std::out_of_range("coefficient index out of range");
        for (std::int64_t m = 1; m <= period_; ++m) {
            if (period_ % m != 0)
                continue;
            bool ok = true;
            for (std::int64_t r = 0; r < period_ && ok; ++r)
                ok = coeffs_[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] ==
                     coeffs_[static_cast<std::size_t>(r % m)][static_cast<std::size_t>(i)];
            if (ok)
                return m;
        }
        return period_;  // unreachable: m == period_ always passes
    }

    /// Least common multiple of all minimal coefficient periods: the
    /// smallest period the whole function admits.
    std::int64_t minimal_quasi_period() const
    {
        Int l = 1;
        for (int i = 0; i <= degree_; ++i)
            l = lcm_int(l, Int(minimal_coefficient_period(i)));
        return to_int64(l);
    }

    /// Rewrites the table on the minimal quasi-period.
    QuasiPolynomial reduced_to_minimal_period() const
    {
        const std::int64_t m = minimal_quasi_period();
        std::vector<std::vector<Rat>> table(coeffs_.begin(),
                                            coeffs_.begin() + static_cast<std::ptrdiff_t>(m));
        return QuasiPolynomial(degree_, m, std::move(table));
    }

    /// Representation-independent equality: same function of k, regardless
    /// of stated period or trailing zero coefficients.
    friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b)
    {
        const std::int64_t n = to_int64(lcm_int(Int(a.period_), Int(b.period_)));
        const int d = a.degree_ > b.degree_ ? a.degree_ : b.degree_;
        for (std::int64_t r = 0; r < n; ++r)
            for (int i = 0; i <= d; ++i) {
                const Rat ca = i <= a.degree_ ? a.coefficient(r, i) : Rat(0);
                const Rat cb = i <= b.degree_ ? b.coefficient(r, i) : Rat(0);
                if (ca != cb)
                    return false;
            }
        return true;
    }
    friend bool operator!=(const QuasiPolynomial& a, const QuasiPolynomial& b)
    {
        return !(a == b);
    }

    friend QuasiPolynomial operator+(const QuasiPolynomial& a, const QuasiPolynomial& b)
    {
        return combine(a, b, false);
    }
    friend QuasiPolynomial operator-(const QuasiPolynomial& a, const QuasiPolynomial& b)
    {
        return combine(a, b, true);
    }
    friend QuasiPolynomial operator*(const Rat& f, const QuasiPolynomial& a)
    {
        auto table = a.coeffs_;
        for (auto& row : table)
            for (auto& c : row)
                c *= f;
        return QuasiPolynomial(a.degree_, a.period_, std::move(table));
    }

private:
    static QuasiPolynomial combine(const QuasiPolynomial& a, const QuasiPolynomial& b,
                                   bool subtract)
    {
        const std::int64_t n = to_int64(lcm_int(Int(a.period_), Int(b.period_)));
        const int d = a.degree_ > b.degree_ ? a.degree_ : b.degree_;
        std::vector<std::vector<Rat>> table(static_cast<std::size_t>(n));
        for (std::int64_t r = 0; r < n; ++r) {
            auto& row = table[static_cast<std::size_t>(r)];
            row.resize(static_cast<std::size_t>(d) + 1);
            for (int i = 0; i <= d; ++i) {
                const Rat ca = i <= a.degree_ ? a.coefficient(r, i) : Rat(0);
                const Rat cb = i <= b.degree_ ? b.coefficient(r, i) : Rat(0);
                row[static_cast<std::size_t>(i)] = subtract ? Rat(ca - cb) : Rat(ca + cb);
            }
        }
        return QuasiPolynomial(d, n, std::move(table));
    }

    int degree_;
    std::int64_t period_;
    std::vector<std::vector<Rat>> coeffs_;
};

namespace detail {

// Exact Lagrange interpolation through (x_j, y_j); returns ascending
// coefficients of the unique polynomial of degree < #points.
inline std::vector<Rat> lagrange(const std::vector<std::pair<std::int64_t, Rat>>& pts)
{
    const std::size_t m = pts.size();
    std::vector<Rat> acc(m, Rat(0));
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Rat> numer{Rat(1)};
        Rat denom = 1;
        for (std::size_t l = 0; l < m; ++l) {
            if (l == j)
                continue;
            // numer *= (x - x_l)
            std::vector<Rat> next(numer.size() + 1, Rat(0));
            for (std::size_t i = 0; i < numer.size(); ++i) {
                next[i] += numer[i] * Rat(-pts[l].first);
                next[i + 1] += numer[i];
            }
            numer = std::move(next);
            denom *= Rat(pts[j].first - pts[l].first);
        }
        const Rat scale = pts[j].second / denom;
        for (std::size_t i = 0; i < numer.size(); ++i)
            acc[i] += numer[i] * scale;
    }
    return acc;
}

}  // namespace detail

/// Builds the degree-d, period-N quasi-polynomial through the given samples:
/// each residue class mod N must contribute at least d + 1 sample keys, and
/// every sample (including surplus ones) must lie on the result, otherwise
/// std::invalid_argument is thrown — interpolation is reconstruction here,
/// never fitting.
inline QuasiPolynomial interpolate_counts(const std::map<std::int64_t, Int>& counts,
                                          int degree, std::int64_t period)
{
    if (degree < 0 || period < 1)
        throw std::invalid_argument("interpolate_counts: bad degree or period");
    std::vector<std::vector<std::pair<std::int64_t, Rat>>> per_residue(
        static_cast<std::size_t>(period));
    for (const auto& [k, v] : counts) {
        auto& bucket = per_residue[static_cast<std::size_t>(mod_residue(k, period))];
        if (bucket.size() < static_cast<std::size_t>(degree) + 1)
            bucket.emplace_back(k, Rat(v));
    }
    std::vector<std::vector<Rat>> table;
    table.reserve(static_cast<std::size_t>(period));
    for (std::int64_t r = 0; r < period; ++r) {
        auto& bucket = per_residue[static_cast<std::size_t>(r)];
        if (bucket.size() < static_cast<std::size_t>(degree) + 1)
            throw std::invalid_argument("interpolate_counts: not enough samples in residue class " +
                                        std::to_string(r));
        auto row = detail::lagrange(bucket);
        row.resize(static_cast<std::size_t>(degree) + 1, Rat(0));
        table.push_back(std::move(row));
    }
    QuasiPolynomial q(degree, period, std::move(table));
    for (const auto& [k, v] : counts)
        if (q.evaluate(k) != Rat(v))
            throw std::invalid_argument(
                "interpolate_counts: samples are not consistent with the degree and period");
    return q;
}

}  // namespace qpc
