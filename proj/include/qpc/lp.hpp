#pragma once

// Exact two-phase simplex over Q in dense tableau form, using Bland's rule,
// which rules out cycling without any further guards. Problems here are tiny
// (a handful of rows and a few dozen columns), so dense is fine.
//
//     maximize c.x   subject to   A x = b,  x >= 0
//
// On top of the raw solver sit the two geometric queries the library
// actually asks: how deep inside a convex hull an affine combination can be
// ("interiority margin"), and whether the relative interiors of two hulls
// share a point.

#include "qpc/linalg.hpp"
#include "qpc/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qpc {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPSolution {
    LPStatus status = LPStatus::Infeasible;
    Rat value;  // objective at the optimum, meaningful only when Optimal
    QVec x;     // primal solution, empty unless Optimal
};

namespace detail {

// Tableau rows 0..m-1 are the constraints, row m the reduced-cost row; the
// last column is the right-hand side. basis[i] is the column whose variable
// is basic in row i.
struct Tableau {
    QMat t;
    std::vector<std::size_t> basis;
    std::size_t ncols = 0;  // structural columns (excludes the rhs)
};

inline void pivot(Tableau& tab, std::size_t row, std::size_t col)
{
    auto& t = tab.t;
    const Rat piv = t[row][col];
    for (auto& x : t[row])
        x /= piv;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i == row || t[i][col] == 0)
            continue;
        const Rat f = t[i][col];
        for (std::size_t j = 0; j <= tab.ncols; ++j)
            t[i][j] -= f * t[row][j];
    }
    tab.basis[row] = col;
}

// Runs simplex iterations until optimal (true) or unbounded (false).
// Bland's rule: entering column is the smallest index with positive reduced
// cost; leaving row breaks ratio ties by smallest basic variable index.
inline bool run_simplex(Tableau& tab, std::size_t active_cols)
{
    const std::size_t m = tab.basis.size();
    auto& t = tab.t;
    for (;;) {
        std::size_t enter = active_cols;
        for (std::size_t j = 0; j < active_cols; ++j) {
            if (t[m][j] > 0) {
                enter = j;
                break;
            }
        }
        if (enter == active_cols)
            return true;  // no improving column: optimal
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0)
                continue;
            const Rat ratio = t[i][tab.ncols] / t[i][enter];
            if (leave == m || ratio < best ||
                (ratio == best && tab.basis[i] < tab.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m)
            return false;  // entering column unbounded
        pivot(tab, leave, enter);
    }
}

// Rebuilds the reduced-cost row for objective c (sized ncols) from the
// current basis: row = c - c_B . B^-1 A, rhs = -objective value.
inline void set_objective(Tableau& tab, const QVec& c)
{
    const std::size_t m = tab.basis.size();
    auto& obj = tab.t[m];
    for (std::size_t j = 0; j <= tab.ncols; ++j)
        obj[j] = (j < c.size()) ? c[j] : Rat(0);
    obj[tab.ncols] = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t b = tab.basis[i];
        const Rat cb = (b < c.size()) ? c[b] : Rat(0);
        if (cb == 0)
            continue;
        for (std::size_t j = 0; j <= tab.ncols; ++j)
            obj[j] -= cb * tab.t[i][j];
    }
}

}  // namespace detail

/// Solves max c.x subject to A x = b, x >= 0 exactly.
inline LPSolution solve_lp(const QMat& a, const QVec& b, const QVec& c)
{
    const std::size_t m = a.size();
    if (b.size() != m)
        throw std::invalid_argument("solve_lp: row count mismatch");
    const std::size_t n = m ? a[0].size() : c.size();
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("solve_lp: ragged matrix");
    if (c.size() != n)
        throw std::invalid_argument("solve_lp: objective size mismatch");

    // Phase 1 tableau: [A | I] with artificial variables basic, b >= 0.
    detail::Tableau tab;
    tab.ncols = n + m;
    tab.t.assign(m + 1, QVec(tab.ncols + 1, Rat(0)));
    tab.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j)
            tab.t[i][j] = flip ? -a[i][j] : a[i][j];
        tab.t[i][n + i] = 1;
        tab.t[i][tab.ncols] = flip ? -b[i] : b[i];
        tab.basis[i] = n + i;
    }
    QVec phase1(tab.ncols, Rat(0));
    for (std::size_t j = n; j < tab.ncols; ++j)
        phase1[j] = -1;
    detail::set_objective(tab, phase1);
    if (!detail::run_simplex(tab, tab.ncols))
        throw std::logic_error("solve_lp: phase 1 cannot be unbounded");
    if (tab.t[m][tab.ncols] != 0)  // -value != 0  =>  sum of artificials > 0
        return {LPStatus::Infeasible, Rat(0), {}};

    // Drive any artificial variables out of the basis; rows where that is
    // impossible are redundant and dropped.
    for (std::size_t i = 0; i < tab.basis.size();) {
        if (tab.basis[i] < n) {
            ++i;
            continue;
        }
        std::size_t col = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col < n) {
            detail::pivot(tab, i, col);
            ++i;
        } else {
            tab.t.erase(tab.t.begin() + static_cast<std::ptrdiff_t>(i));
            tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    // Phase 2 on the structural columns only.
    detail::set_objective(tab, c);
    if (!detail::run_simplex(tab, n))
        return {LPStatus::Unbounded, Rat(0), {}};

    LPSolution sol;
    sol.status = LPStatus::Optimal;
    sol.value = -tab.t[tab.basis.size()][tab.ncols];
    sol.x.assign(n, Rat(0));
    for (std::size_t i = 0; i < tab.basis.size(); ++i)
        if (tab.basis[i] < n)
            sol.x[tab.basis[i]] = tab.t[i][tab.ncols];
    return sol;
}

/// Does A x = b admit any x >= 0?
inline bool lp_feasible(const QMat& a, const QVec& b)
{
    const std::size_t n = a.empty() ? 0 : a[0].size();
    return solve_lp(a, b, QVec(n, Rat(0))).status == LPStatus::Optimal;
}

/// Maximize t such that x = sum lambda_i pts_i, sum lambda_i = 1 and every
/// lambda_i >= t. Returns nullopt when x is not even an affine combination
/// of pts; otherwise the optimal t (positive iff x lies in the relative
/// interior of conv(pts), zero iff on its relative boundary, negative iff in
/// the affine hull but outside).
inline std::optional<Rat> interiority_margin(const std::vector<Point>& pts,
                                             const Point& x)
{
    if (pts.empty())
        throw std::invalid_argument("interiority_margin: no points");
    const std::size_t n = x.size();
    const std::size_t m = pts.size();
    for (const auto& p : pts)
        if (p.size() != n)
            throw std::invalid_argument("interiority_margin: dimension mismatch");

    // Variables: p(0), q(1), a_0..a_{m-1}; lambda_i = (p - q) + a_i with
    // a_i >= 0, t = p - q free.
    QMat a(n + 1, QVec(m + 2, Rat(0)));
    QVec b(n + 1, Rat(0));
    for (std::size_t cdim = 0; cdim < n; ++cdim) {
        Rat s = 0;
        for (std::size_t i = 0; i < m; ++i) {
            a[cdim][2 + i] = pts[i][cdim];
            s += pts[i][cdim];
        }
        a[cdim][0] = s;
        a[cdim][1] = -s;
        b[cdim] = x[cdim];
    }
    for (std::size_t i = 0; i < m; ++i)
        a[n][2 + i] = 1;
    a[n][0] = Rat(static_cast<long>(m));
    a[n][1] = -Rat(static_cast<long>(m));
    b[n] = 1;

    QVec c(m + 2, Rat(0));
    c[0] = 1;
    c[1] = -1;
    const LPSolution sol = solve_lp(a, b, c);
    if (sol.status == LPStatus::Infeasible)
        return std::nullopt;
    if (sol.status != LPStatus::Optimal)
        throw std::logic_error("interiority_margin: margin is bounded by 1/m");
    return sol.value;
}

struct CommonInteriorPoint {
    Rat margin;     // optimal joint barycentric floor
    Point witness;  // a point of both relative interiors when margin > 0
};

/// Maximize t such that some point is a barycentric combination of us and of
/// ws with all coordinates >= t in both. margin > 0 iff the relative
/// interiors of conv(us) and conv(ws) intersect, and then witness is a
/// common relative-interior point. Returns nullopt when even the affine
/// situation is infeasible (disjoint affine hulls).
inline std::optional<CommonInteriorPoint>
common_interior_margin(const std::vector<Point>& us, const std::vector<Point>& ws)
{
    if (us.empty() || ws.empty())
        throw std::invalid_argument("common_interior_margin: no points");
    const std::size_t n = us[0].size();
    for (const auto& p : us)
        if (p.size() != n)
            throw std::invalid_argument("common_interior_margin: dimension mismatch");
    for (const auto& p : ws)
        if (p.size() != n)
            throw std::invalid_argument("common_interior_margin: dimension mismatch");
    const std::size_t m = us.size();
    const std::size_t r = ws.size();

    // Variables: p(0), q(1), a_0..a_{m-1}, b_0..b_{r-1};
    // lambda_i = (p-q) + a_i, mu_j = (p-q) + b_j, t = p - q.
    const std::size_t ncols = 2 + m + r;
    QMat a(n + 2, QVec(ncols, Rat(0)));
    QVec b(n + 2, Rat(0));
    for (std::size_t cdim = 0; cdim < n; ++cdim) {
        Rat su = 0, sw = 0;
        for (std::size_t i = 0; i < m; ++i) {
            a[cdim][2 + i] = us[i][cdim];
            su += us[i][cdim];
        }
        for (std::size_t j = 0; j < r; ++j) {
            a[cdim][2 + m + j] = -ws[j][cdim];
            sw += ws[j][cdim];
        }
        a[cdim][0] = su - sw;
        a[cdim][1] = -(su - sw);
    }
    for (std::size_t i = 0; i < m; ++i)
        a[n][2 + i] = 1;
    a[n][0] = Rat(static_cast<long>(m));
    a[n][1] = -Rat(static_cast<long>(m));
    b[n] = 1;
    for (std::size_t j = 0; j < r; ++j)
        a[n + 1][2 + m + j] = 1;
    a[n + 1][0] = Rat(static_cast<long>(r));
    a[n + 1][1] = -Rat(static_cast<long>(r));
    b[n + 1] = 1;

    QVec c(ncols, Rat(0));
    c[0] = 1;
    c[1] = -1;
    const LPSolution sol = solve_lp(a, b, c);
    if (sol.status == LPStatus::Infeasible)
        return std::nullopt;
    if (sol.status != LPStatus::Optimal)
        throw std::logic_error("common_interior_margin: margin is bounded");

    CommonInteriorPoint out;
    out.margin = sol.value;
    const Rat t = sol.x[0] - sol.x[1];
    out.witness.assign(n, Rat(0));
    for (std::size_t i = 0; i < m; ++i) {
        const Rat lambda = t + sol.x[2 + i];
        for (std::size_t cdim = 0; cdim < n; ++cdim)
            out.witness[cdim] += lambda * us[i][cdim];
    }
    return out;
}

}  // namespace qpc
