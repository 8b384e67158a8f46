#pragma once

// The lattice-point counting function of a rational polytope, assembled
// exactly. With D the denominator and d the dimension, the counts at
// k = 1..D(d+1) pin a degree-d quasi-polynomial of period D uniquely, so
// counting those dilates and interpolating per residue class reconstructs
// the counting function — for every k, not a fit. On top of that sit the
// quasi-period collapse report (is the minimal period smaller than the
// denominator?), the reciprocity check against interior counts, and the
// quadrilateral counting identity of the collapse family.

#include "qpc/counting.hpp"
#include "qpc/fixtures.hpp"
#include "qpc/polytope.hpp"
#include "qpc/quasipoly.hpp"
#include "qpc/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace qpc {

/// Counting function of the closed polytope as a quasi-polynomial of degree
/// dim(P) and period denominator(P). Supports dim(P) <= 3.
inline QuasiPolynomial ehrhart_of(const RationalPolytope& p)
{
    const std::int64_t period = to_int64(denominator(p));
    const int degree = static_cast<int>(p.dim());
    std::map<std::int64_t, Int> counts;
    for (std::int64_t k = 1; k <= period * (degree + 1); ++k)
        counts[k] = count_points(p, k);
    return interpolate_counts(counts, degree, period);
}

struct CollapseReport {
    Int denominator;
    std::int64_t minimal_quasi_period = 1;
    bool collapsed = false;  // minimal quasi-period strictly below denominator
    QuasiPolynomial quasi_polynomial;  // written on the minimal quasi-period
};

/// Computes the counting function and reduces it to its minimal quasi-period.
inline CollapseReport minimal_quasi_period(const RationalPolytope& p)
{
    const QuasiPolynomial q = ehrhart_of(p);
    const std::int64_t m = q.minimal_quasi_period();
    return CollapseReport{denominator(p), m, Int(m) < denominator(p),
                          q.reduced_to_minimal_period()};
}

struct ReciprocityResult {
    bool pass = false;
    std::optional<std::int64_t> failed_k;
};

/// Checks (-1)^dim(P) f(-k) == #(interior lattice points of the k-th dilate)
/// for k = 1..k_max, with f the counting function of P.
inline ReciprocityResult reciprocity_check(const RationalPolytope& p, std::int64_t k_max)
{
    const QuasiPolynomial q = ehrhart_of(p);
    const bool odd = p.dim() % 2 == 1;
    for (std::int64_t k = 1; k <= k_max; ++k) {
        Rat predicted = q.evaluate(-k);
        if (odd)
            predicted = -predicted;
        if (predicted != Rat(count_interior(p, k)))
            return {false, k};
    }
    return {true, std::nullopt};
}

/// The counting identity of the reflected quadrilateral: with T the collapse
/// triangle and Q the quadrilateral, L_Q(k) = 2 L_T(k) - (Dk + 1) as
/// quasi-polynomials (the doubled x-axis segment is counted twice).
inline bool quadrilateral_identity_check(std::int64_t d)
{
    const QuasiPolynomial lq = ehrhart_of(reflected_quadrilateral(d));
    const QuasiPolynomial lt = ehrhart_of(collapse_triangle(d));
    const QuasiPolynomial axis =
        QuasiPolynomial::from_polynomial({Rat(1), Rat(d)});  // Dk + 1
    return lq == (Rat(2) * lt) - axis;
}

}  // namespace qpc
