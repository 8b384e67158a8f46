#pragma once

// Integer affine certificates for membership in dilated regions. Each form
// evaluates a.x + c*k at a lattice point x and dilation k >= 1; equalities
// must vanish on the region's affine hull and inequalities must be
// nonnegative on the closed region (strictly positive exactly on its
// relative interior). Building the forms costs one exact elimination per
// region; testing a point afterwards is a handful of integer dot products.
//
// For a simplex the inequalities are the cleared barycentric functionals:
// solving [V^T; 1] mu = (x, k) for mu = k*lambda expresses each mu_j as an
// integer form in (x, k), with the non-pivot rows of the elimination giving
// the affine-hull equalities. For a polytope they are its facet inequalities
// (dimension <= 3), computed in exact frame coordinates on the affine hull.

#include "qpc/linalg.hpp"
#include "qpc/polytope.hpp"
#include "qpc/rational.hpp"
#include "qpc/simplex.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qpc {

struct DilatedForm {
    ZVec a;  // lattice coefficient per coordinate
    Int c;   // dilation coefficient: value(x, k) = a.x + c*k
};

struct RegionForms {
    std::vector<DilatedForm> equalities;    // == 0 on the dilated hull
    std::vector<DilatedForm> inequalities;  // >= 0 closed, > 0 relative interior
};

/// Evaluates a.x + c*k at a rational point of the k-th dilate.
inline Rat form_value(const DilatedForm& f, const Point& x, const Int& k)
{
    if (f.a.size() != x.size())
        throw std::invalid_argument("form_value: dimension mismatch");
    Rat v = Rat(f.c) * Rat(k);
    for (std::size_t i = 0; i < x.size(); ++i)
        v += Rat(f.a[i]) * x[i];
    return v;
}

namespace detail {

// Clears denominators of (coeffs, cst) by their positive lcm, preserving
// signs, and returns the integer form.
inline DilatedForm cleared_form(const QVec& coeffs, const Rat& cst)
{
    Int l = rat_den(cst);
    for (const auto& e : coeffs)
        l = lcm_int(l, rat_den(e));
    DilatedForm f;
    f.a.reserve(coeffs.size());
    for (const auto& e : coeffs)
        f.a.push_back(rat_num(e * Rat(l)));
    f.c = rat_num(cst * Rat(l));
    return f;
}

// Reduces an integer form by the gcd of all entries (for deduplication).
inline void reduce_form(DilatedForm& f)
{
    Int g = 0;
    for (const auto& e : f.a)
        g = gcd_int(g, e);
    g = gcd_int(g, f.c);
    if (g > 1) {
        for (auto& e : f.a)
            e /= g;
        f.c /= g;
    }
}

inline bool same_form(const DilatedForm& x, const DilatedForm& y)
{
    return x.a == y.a && x.c == y.c;
}

}  // namespace detail

/// Barycentric membership forms of a simplex: one inequality per vertex and
/// one equality per codimension of the affine hull. The openness of s is
/// irrelevant here; callers choose strict or non-strict comparison.
inline RegionForms simplex_forms(const Simplex& s)
{
    const std::size_t n = s.ambient_dim();
    const std::size_t m = s.vertices().size();
    // Augmented elimination of A = [V^T; 1]: rref([A | I]) = [R | E] with
    // E A = R. Rank is m, so R has an identity in its pivot rows and the
    // remaining rows of E annihilate the column space.
    QMat aug(n + 1, QVec(m + n + 1, Rat(0)));
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t j = 0; j < m; ++j)
            aug[c][j] = s.vertices()[j][c];
    for (std::size_t j = 0; j < m; ++j)
        aug[n][j] = 1;
    for (std::size_t i = 0; i <= n; ++i)
        aug[i][m + i] = 1;
    const auto pivots = rref(aug);
    // Affine independence makes the first m columns a full pivot block.
    for (std::size_t i = 0; i < m; ++i)
        if (i >= pivots.size() || pivots[i] != i)
            throw std::logic_error("simplex_forms: vertex matrix lost rank");

    RegionForms forms;
    for (std::size_t i = 0; i <= n; ++i) {
        QVec coeffs(n);
        for (std::size_t c = 0; c < n; ++c)
            coeffs[c] = aug[i][m + c];
        const Rat cst = aug[i][m + n];  // multiplies k
        auto f = detail::cleared_form(coeffs, cst);
        if (i < m)
            forms.inequalities.push_back(std::move(f));
        else
            forms.equalities.push_back(std::move(f));
    }
    return forms;
}

/// Facet description of a polytope of dimension <= 3: affine-hull equalities
/// plus one inequality per facet, all as integer dilated forms.
inline RegionForms polytope_forms(const RationalPolytope& p)
{
    const auto& v = p.vertices();
    const std::size_t n = p.ambient_dim();
    const std::size_t d = p.dim();
    if (d > 3)
        throw std::domain_error("polytope_forms: only dimensions <= 3 are supported");

    RegionForms forms;
    const Point& v0 = v[0];

    // Affine-hull equalities: kernel vectors of the direction span give
    // e.x = (e.v0) k.
    QMat dirs;
    for (std::size_t i = 1; i < v.size(); ++i)
        dirs.push_back(vec_sub(v[i], v0));
    QMat normals;
    if (dirs.empty()) {
        normals = qmat_identity(n);
    } else {
        normals = kernel(dirs);
    }
    for (const auto& e : normals) {
        auto f = detail::cleared_form(e, -dot(e, v0));
        forms.equalities.push_back(std::move(f));
    }
    if (d == 0)
        return forms;  // a point has no facet inequalities

    const auto frame = detail::make_frame(v);
    std::vector<QVec> u;
    u.reserve(v.size());
    for (const auto& x : v)
        u.push_back(frame.to_frame(x));

    // Facet inequalities in frame coordinates: (normal, offset) pairs with
    // normal.y >= offset on the frame polytope.
    std::vector<std::pair<QVec, Rat>> frame_facets;
    if (d == 1) {
        Rat lo = u[0][0], hi = u[0][0];
        for (const auto& y : u) {
            lo = std::min(lo, y[0]);
            hi = std::max(hi, y[0]);
        }
        frame_facets.push_back({QVec{Rat(1)}, lo});
        frame_facets.push_back({QVec{Rat(-1)}, -hi});
    } else if (d == 2) {
        const auto order = detail::ccw_order(u);
        for (std::size_t i = 0; i < order.size(); ++i) {
            const QVec& a = u[order[i]];
            const QVec& b = u[order[(i + 1) % order.size()]];
            // inward normal of the counterclockwise edge a -> b
            QVec nvec{a[1] - b[1], b[0] - a[0]};
            frame_facets.push_back({nvec, dot(nvec, a)});
        }
    } else {  // d == 3
        for (std::size_t ip = 0; ip < u.size(); ++ip)
            for (std::size_t q = ip + 1; q < u.size(); ++q)
                for (std::size_t r = q + 1; r < u.size(); ++r) {
                    QVec e1 = vec_sub(u[q], u[ip]);
                    QVec e2 = vec_sub(u[r], u[ip]);
                    QVec nvec{e1[1] * e2[2] - e1[2] * e2[1],
                              e1[2] * e2[0] - e1[0] * e2[2],
                              e1[0] * e2[1] - e1[1] * e2[0]};
                    if (nvec[0] == 0 && nvec[1] == 0 && nvec[2] == 0)
                        continue;
                    bool pos = false, neg = false;
                    for (const auto& y : u) {
                        const Rat s = dot(nvec, vec_sub(y, u[ip]));
                        if (s > 0)
                            pos = true;
                        else if (s < 0)
                            neg = true;
                    }
                    if (pos && neg)
                        continue;
                    if (neg)
                        for (auto& e : nvec)
                            e = -e;
                    frame_facets.push_back({nvec, dot(nvec, u[ip])});
                }
    }

    // Pull each frame inequality back to the ambient space and the dilation:
    // n.y(x) >= c becomes alpha.x >= beta * k with alpha = n^T G and
    // beta = c + alpha.v0.
    std::vector<DilatedForm> ineqs;
    for (const auto& [nvec, cst] : frame_facets) {
        QVec alpha(n, Rat(0));
        for (std::size_t j = 0; j < frame.to_frame_matrix.size(); ++j)
            for (std::size_t c = 0; c < n; ++c)
                alpha[c] += nvec[j] * frame.to_frame_matrix[j][c];
        const Rat beta = cst + dot(alpha, v0);
        auto f = detail::cleared_form(alpha, -beta);
        detail::reduce_form(f);
        bool dup = false;
        for (const auto& g : ineqs)
            if (detail::same_form(g, f)) {
                dup = true;
                break;
            }
        if (!dup)
            ineqs.push_back(std::move(f));
    }
    forms.inequalities = std::move(ineqs);
    return forms;
}

}  // namespace qpc
