#pragma once

// Dense exact linear algebra over Q at desk sizes: row reduction, rank,
// determinants, linear solves, inverses and kernels. Pivoting just takes the
// first nonzero entry in a column; with exact rationals that is all the
// stability we need.

#include "qpc/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qpc {

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;  // row-major
using ZVec = std::vector<Int>;
using ZMat = std::vector<ZVec>;

// Points are bare coordinate vectors; every container holding them knows its
// own ambient dimension.
using Point = QVec;

inline QMat qmat_identity(std::size_t n)
{
    QMat m(n, QVec(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

inline QMat qmat_from_int(const ZMat& a)
{
    QMat m(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        m[i].assign(a[i].begin(), a[i].end());
    return m;
}

inline Rat dot(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

inline QVec vec_add(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vec_add: size mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

inline QVec vec_sub(const QVec& a, const QVec& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("vec_sub: size mismatch");
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

inline QVec vec_scale(const Rat& f, const QVec& a)
{
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = f * a[i];
    return r;
}

inline QVec mat_vec(const QMat& m, const QVec& v)
{
    QVec r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size())
            throw std::invalid_argument("mat_vec: size mismatch");
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] += m[i][j] * v[j];
    }
    return r;
}

inline QMat mat_mul(const QMat& a, const QMat& b)
{
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner ? b[0].size() : 0;
    QMat r(rows, QVec(cols, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != inner)
            throw std::invalid_argument("mat_mul: size mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                r[i][j] += a[i][k] * b[k][j];
        }
    }
    return r;
}

/// In-place reduced row echelon form. Returns the pivot column of each pivot
/// row, in order; the number of pivots is the rank.
inline std::vector<std::size_t> rref(QMat& m)
{
    std::vector<std::size_t> pivots;
    if (m.empty())
        return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[r]);
        const Rat piv = m[r][c];
        for (auto& x : m[r])
            x /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            const Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(QMat m) { return rref(m).size(); }

inline Rat det(QMat m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("det: matrix not square");
    Rat result = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            result = -result;
        }
        const Rat piv = m[c][c];
        result *= piv;
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c] == 0)
                continue;
            const Rat f = m[i][c] / piv;
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return result;
}

/// One solution of A x = b with free variables pinned to zero, or nullopt if
/// the system is inconsistent.
inline std::optional<QVec> solve(const QMat& a, const QVec& b)
{
    const std::size_t rows = a.size();
    if (b.size() != rows)
        throw std::invalid_argument("solve: size mismatch");
    const std::size_t cols = rows ? a[0].size() : 0;
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        if (a[i].size() != cols)
            throw std::invalid_argument("solve: ragged matrix");
        for (std::size_t j = 0; j < cols; ++j)
            aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols)
        return std::nullopt;  // a pivot in the rhs column: inconsistent
    QVec x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug[i][cols];
    return x;
}

inline std::optional<QMat> inverse(const QMat& m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("inverse: matrix not square");
    QMat aug(n, QVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n || (n && pivots.back() != n - 1))
        return std::nullopt;
    QMat inv(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = aug[i][n + j];
    return inv;
}

/// Basis of { x : A x = 0 }, one basis vector per row of the result. An
/// empty result means the kernel is trivial.
inline QMat kernel(const QMat& a)
{
    if (a.empty())
        return {};
    const std::size_t cols = a[0].size();
    QMat m = a;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots)
        is_pivot[c] = true;
    QMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        QVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace qpc
