#pragma once

// Rational polytopes in vertex representation. Construction reduces any
// finite point list to its extreme points by exact LP feasibility — no
// tolerances — so a stored polytope always carries an irredundant,
// lexicographically sorted vertex list. Triangulation (up to dimension 3)
// works in exact coordinates on the affine hull, so lower-dimensional
// polytopes in a bigger ambient space are fine.

#include "qpc/affine_map.hpp"
#include "qpc/linalg.hpp"
#include "qpc/lp.hpp"
#include "qpc/rational.hpp"
#include "qpc/simplex.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qpc {

class RationalPolytope {
public:
    /// Convex hull of the given points, reduced to extreme points.
    explicit RationalPolytope(std::vector<Point> points)
    {
        if (points.empty())
            throw std::invalid_argument("polytope needs at least one point");
        ambient_ = points[0].size();
        if (ambient_ == 0)
            throw std::invalid_argument("polytope points need coordinates");
        for (const auto& p : points)
            if (p.size() != ambient_)
                throw std::invalid_argument("polytope points must share a dimension");
        std::sort(points.begin(), points.end());
        points.erase(std::unique(points.begin(), points.end()), points.end());

        // Drop every point expressible as a convex combination of the rest.
        for (std::size_t i = 0; i < points.size();) {
            if (points.size() == 1)
                break;
            QMat a(ambient_ + 1, QVec(points.size() - 1));
            QVec b(ambient_ + 1);
            std::size_t col = 0;
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (j == i)
                    continue;
                for (std::size_t c = 0; c < ambient_; ++c)
                    a[c][col] = points[j][c];
                a[ambient_][col] = 1;
                ++col;
            }
            for (std::size_t c = 0; c < ambient_; ++c)
                b[c] = points[i][c];
            b[ambient_] = 1;
            if (lp_feasible(a, b))
                points.erase(points.begin() + static_cast<std::ptrdiff_t>(i));
            else
                ++i;
        }
        verts_ = std::move(points);

        QMat dirs;
        for (std::size_t i = 1; i < verts_.size(); ++i)
            dirs.push_back(vec_sub(verts_[i], verts_[0]));
        dim_ = rank(dirs);
    }

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t ambient_dim() const { return ambient_; }
    /// Dimension of the affine hull.
    std::size_t dim() const { return dim_; }

    /// The vertex list is canonical (sorted, irredundant), so polytopes are
    /// equal iff they are the same point set.
    friend bool operator==(const RationalPolytope& a, const RationalPolytope& b)
    {
        return a.verts_ == b.verts_;
    }
    friend bool operator!=(const RationalPolytope& a, const RationalPolytope& b)
    {
        return !(a == b);
    }

private:
    std::vector<Point> verts_;
    std::size_t ambient_ = 0;
    std::size_t dim_ = 0;
};

inline RationalPolytope reduce_to_vertices(std::vector<Point> points)
{
    return RationalPolytope(std::move(points));
}

/// Least common multiple of the denominators of all vertex coordinates; the
/// smallest k >= 1 for which the k-th dilate is a lattice polytope.
inline Int denominator(const RationalPolytope& p)
{
    Int d = 1;
    for (const auto& v : p.vertices())
        for (const auto& c : v)
            d = lcm_int(d, rat_den(c));
    return d;
}

inline bool is_integral(const RationalPolytope& p) { return denominator(p) == 1; }

inline RationalPolytope dilate(const RationalPolytope& p, const Int& k)
{
    if (k < 1)
        throw std::invalid_argument("dilate: factor must be >= 1");
    std::vector<Point> vs = p.vertices();
    for (auto& v : vs)
        for (auto& c : v)
            c *= Rat(k);
    return RationalPolytope(std::move(vs));
}

inline RationalPolytope apply_map(const AffineUnimodularMap& u, const RationalPolytope& p)
{
    std::vector<Point> vs;
    vs.reserve(p.vertices().size());
    for (const auto& v : p.vertices())
        vs.push_back(apply_map(u, v));
    return RationalPolytope(std::move(vs));
}

enum class Location { Interior, Boundary, Outside };

/// Exact location of x relative to P. "Interior" means the relative
/// interior of P inside its own affine hull, which for full-dimensional P is
/// the topological interior.
inline Location membership_classify(const RationalPolytope& p, const Point& x)
{
    const auto margin = interiority_margin(p.vertices(), x);
    if (!margin || *margin < 0)
        return Location::Outside;
    return (*margin == 0) ? Location::Boundary : Location::Interior;
}

/// Closed membership.
inline bool contains(const RationalPolytope& p, const Point& x)
{
    return membership_classify(p, x) != Location::Outside;
}

namespace detail {

// Exact coordinates on the affine hull of a polytope: y(x) = G (x - origin)
// restricts to a bijection hull -> Q^d with from_frame as its inverse.
struct AffineFrame {
    Point origin;
    QMat basis;  // d x n, rows span the direction space
    QMat to_frame_matrix;  // G = (B B^T)^-1 B, d x n

    QVec to_frame(const Point& x) const
    {
        return mat_vec(to_frame_matrix, vec_sub(x, origin));
    }
    Point from_frame(const QVec& y) const
    {
        Point x = origin;
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t c = 0; c < x.size(); ++c)
                x[c] += y[j] * basis[j][c];
        return x;
    }
};

inline AffineFrame make_frame(const std::vector<Point>& pts)
{
    AffineFrame f;
    f.origin = pts.at(0);
    QMat seen;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        const QVec d = vec_sub(pts[i], f.origin);
        seen.push_back(d);
        if (rank(seen) == f.basis.size() + 1)
            f.basis.push_back(d);
        else
            seen.pop_back();
    }
    if (f.basis.empty()) {
        f.to_frame_matrix = {};
        return f;
    }
    QMat gram(f.basis.size(), QVec(f.basis.size()));
    for (std::size_t i = 0; i < f.basis.size(); ++i)
        for (std::size_t j = 0; j < f.basis.size(); ++j)
            gram[i][j] = dot(f.basis[i], f.basis[j]);
    const auto ginv = inverse(gram);
    if (!ginv)
        throw std::logic_error("make_frame: Gram matrix of a basis is invertible");
    f.to_frame_matrix = mat_mul(*ginv, f.basis);
    return f;
}

// Strict counterclockwise angular order around an interior point. Distinct
// extreme points seen from an interior point have pairwise distinct
// directions, so the order is total.
inline std::vector<std::size_t> ccw_order(const std::vector<QVec>& pts2d)
{
    QVec center(2, Rat(0));
    for (const auto& u : pts2d) {
        center[0] += u[0];
        center[1] += u[1];
    }
    center[0] /= Rat(static_cast<long>(pts2d.size()));
    center[1] /= Rat(static_cast<long>(pts2d.size()));
    auto half = [&](std::size_t i) {
        const Rat dx = pts2d[i][0] - center[0];
        const Rat dy = pts2d[i][1] - center[1];
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    auto cross = [&](std::size_t i, std::size_t j) -> Rat {
        const Rat ax = pts2d[i][0] - center[0];
        const Rat ay = pts2d[i][1] - center[1];
        const Rat bx = pts2d[j][0] - center[0];
        const Rat by = pts2d[j][1] - center[1];
        return ax * by - ay * bx;
    };
    std::vector<std::size_t> order(pts2d.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        if (half(i) != half(j))
            return half(i) < half(j);
        return cross(i, j) > 0;
    });
    return order;
}

// Vertex index sets of the facets of a 3-dimensional polytope given by frame
// coordinates: supporting planes through affinely independent vertex
// triples, keeping only planes with all vertices on one side. The triple
// test finds exactly the 2-dimensional faces.
inline std::vector<std::vector<std::size_t>> facets_3d(const std::vector<QVec>& u)
{
    std::vector<std::vector<std::size_t>> facets;
    const std::size_t m = u.size();
    auto sub3 = [&](const QVec& a, const QVec& b) {
        return QVec{a[0] - b[0], a[1] - b[1], a[2] - b[2]};
    };
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = p + 1; q < m; ++q)
            for (std::size_t r = q + 1; r < m; ++r) {
                const QVec e1 = sub3(u[q], u[p]);
                const QVec e2 = sub3(u[r], u[p]);
                const QVec n = {e1[1] * e2[2] - e1[2] * e2[1],
                                e1[2] * e2[0] - e1[0] * e2[2],
                                e1[0] * e2[1] - e1[1] * e2[0]};
                if (n[0] == 0 && n[1] == 0 && n[2] == 0)
                    continue;  // collinear triple
                bool pos = false, neg = false;
                std::vector<std::size_t> on_plane;
                for (std::size_t v = 0; v < m; ++v) {
                    const Rat s = dot(n, sub3(u[v], u[p]));
                    if (s > 0)
                        pos = true;
                    else if (s < 0)
                        neg = true;
                    else
                        on_plane.push_back(v);
                }
                if (pos && neg)
                    continue;  // not a supporting plane
                if (std::find(facets.begin(), facets.end(), on_plane) == facets.end())
                    facets.push_back(on_plane);
            }
    std::sort(facets.begin(), facets.end());
    return facets;
}

}  // namespace detail

/// Decomposes P into closed simplices with pairwise disjoint interiors whose
/// union is P, each spanned by vertices of P. Supports dim(P) <= 3 in any
/// ambient dimension; higher dimensions throw std::domain_error. The result
/// is deterministic for a given vertex set.
inline std::vector<Simplex> triangulate(const RationalPolytope& p)
{
    const auto& v = p.vertices();
    const std::size_t d = p.dim();
    if (d == 0)
        return {Simplex({v[0]}, Openness::Closed)};
    if (d == 1)
        // extreme points of a segment: exactly two, already sorted
        return {Simplex({v.front(), v.back()}, Openness::Closed)};
    if (d > 3)
        throw std::domain_error("triangulate: only dimensions <= 3 are supported");

    const auto frame = detail::make_frame(v);
    std::vector<QVec> u;
    u.reserve(v.size());
    for (const auto& x : v)
        u.push_back(frame.to_frame(x));

    std::vector<Simplex> out;
    if (d == 2) {
        auto order = detail::ccw_order(u);
        // rotate so the fan apex is the lexicographically least vertex
        const auto pos = std::find(order.begin(), order.end(), std::size_t{0});
        std::rotate(order.begin(), pos, order.end());
        for (std::size_t i = 1; i + 1 < order.size(); ++i)
            out.emplace_back(std::vector<Point>{v[order[0]], v[order[i]], v[order[i + 1]]},
                             Openness::Closed);
        return out;
    }

    // d == 3: cone the lexicographically least vertex over the triangulated
    // facets that do not contain it.
    const auto facets = detail::facets_3d(u);
    for (const auto& facet : facets) {
        if (std::find(facet.begin(), facet.end(), std::size_t{0}) != facet.end())
            continue;
        // 2d coordinates within the facet: drop to a frame of the facet
        std::vector<QVec> f2;
        std::vector<Point> fpts;
        for (auto idx : facet)
            fpts.push_back(v[idx]);
        const auto fframe = detail::make_frame(fpts);
        for (const auto& x : fpts)
            f2.push_back(fframe.to_frame(x));
        auto order = detail::ccw_order(f2);
        const auto pos = std::find(order.begin(), order.end(), std::size_t{0});
        std::rotate(order.begin(), pos, order.end());
        for (std::size_t i = 1; i + 1 < order.size(); ++i)
            out.emplace_back(std::vector<Point>{v[0], fpts[order[0]], fpts[order[i]],
                                                fpts[order[i + 1]]},
                             Openness::Closed);
    }
    return out;
}

/// Volume in the measure of the ambient space (zero when dim(P) < n).
inline Rat volume(const RationalPolytope& p)
{
    Rat v = 0;
    for (const auto& s : triangulate(p))
        v += simplex_volume(s);
    return v;
}

}  // namespace qpc
