#pragma once

// Lattice polygons in the plane: lattice length of the boundary, reflexivity
// (exactly one interior lattice point), polar duality for convex reflexive
// polygons centered at the origin, and the check that lattice length plus
// dual lattice length is twelve.
//
// A polygon is given by its vertices in cyclic order. Construction verifies
// integrality and records whether the cycle is strictly convex; convexity-
// dependent operations refuse non-convex input. Convex polygons are
// normalized to counterclockwise orientation, starting at the
// lexicographically least vertex, so equal polygons compare equal.

#include "qpc/counting.hpp"
#include "qpc/linalg.hpp"
#include "qpc/polytope.hpp"
#include "qpc/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qpc {

class LatticePolygon {
public:
    /// Vertices in cyclic order (either orientation); all coordinates must
    /// be integers and consecutive vertices distinct.
    explicit LatticePolygon(std::vector<Point> cyclic_vertices)
        : verts_(std::move(cyclic_vertices))
    {
        if (verts_.size() < 3)
            throw std::invalid_argument("polygon needs at least three vertices");
        for (const auto& v : verts_) {
            if (v.size() != 2)
                throw std::invalid_argument("polygon vertices must be planar");
            if (!is_integer(v[0]) || !is_integer(v[1]))
                throw std::invalid_argument("polygon vertices must be lattice points");
        }
        const std::size_t m = verts_.size();
        for (std::size_t i = 0; i < m; ++i)
            if (verts_[i] == verts_[(i + 1) % m])
                throw std::invalid_argument("polygon has repeated consecutive vertices");

        // Strict convexity: all turns in the same direction, none straight.
        bool pos = false, neg = false, flat = false;
        for (std::size_t i = 0; i < m; ++i) {
            const Point& a = verts_[i];
            const Point& b = verts_[(i + 1) % m];
            const Point& c = verts_[(i + 2) % m];
            const Rat cross = (b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]);
            if (cross > 0)
                pos = true;
            else if (cross < 0)
                neg = true;
            else
                flat = true;
        }
        convex_ = !flat && (pos != neg);
        if (convex_) {
            if (neg)
                std::reverse(verts_.begin(), verts_.end());
            const auto least = std::min_element(verts_.begin(), verts_.end());
            std::rotate(verts_.begin(), least, verts_.end());
        }
    }

    const std::vector<Point>& vertices() const { return verts_; }
    bool convex() const { return convex_; }

    friend bool operator==(const LatticePolygon& a, const LatticePolygon& b)
    {
        return a.verts_ == b.verts_;
    }

private:
    std::vector<Point> verts_;
    bool convex_ = false;
};

/// Number of lattice points on the boundary = sum of gcd(|dx|, |dy|) over
/// the edges (each edge contributes its interior lattice points plus one
/// endpoint).
inline Int lattice_length(const LatticePolygon& p)
{
    const auto& v = p.vertices();
    Int total = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        total += gcd_int(abs(rat_num(b[0] - a[0])), abs(rat_num(b[1] - a[1])));
    }
    return total;
}

inline RationalPolytope as_polytope(const LatticePolygon& p)
{
    return RationalPolytope(p.vertices());
}

/// A convex lattice polygon is reflexive iff its interior contains exactly
/// one lattice point.
inline bool is_reflexive(const LatticePolygon& p)
{
    if (!p.convex())
        throw std::domain_error("is_reflexive needs a strictly convex polygon");
    return count_interior(as_polytope(p), 1) == 1;
}

/// The unique interior lattice point of a reflexive polygon.
inline Point interior_lattice_point(const LatticePolygon& p)
{
    if (!is_reflexive(p))
        throw std::domain_error("polygon has no unique interior lattice point");
    const RationalPolytope poly = as_polytope(p);
    const RegionForms forms = polytope_forms(poly);
    const LatticeBox box = bounding_box(poly, 1);
    const DilateTester interior(forms, true, box, 1);
    Point found;
    for_each_lattice_point(box, [&](const std::vector<std::int64_t>& x) {
        if (found.empty() && interior.contains(x))
            found = detail::to_rational_point(x);
    });
    return found;
}

inline LatticePolygon translated(const LatticePolygon& p, const Point& by)
{
    if (by.size() != 2)
        throw std::invalid_argument("translated: planar vector required");
    std::vector<Point> vs = p.vertices();
    for (auto& v : vs) {
        v[0] += by[0];
        v[1] += by[1];
    }
    return LatticePolygon(std::move(vs));
}

/// Moves the unique interior lattice point of a reflexive polygon to the
/// origin.
inline LatticePolygon centered(const LatticePolygon& p)
{
    const Point c = interior_lattice_point(p);
    return translated(p, Point{-c[0], -c[1]});
}

/// Polar dual { y : <x, y> <= 1 for all x in P } of a convex reflexive
/// polygon whose unique interior lattice point is the origin. Reflexivity
/// makes the dual a lattice polygon again; its vertices solve
/// <v_i, y> = <v_{i+1}, y> = 1 for consecutive vertex pairs.
inline LatticePolygon dual_polygon(const LatticePolygon& p)
{
    if (!p.convex())
        throw std::domain_error("dual_polygon needs a strictly convex polygon");
    if (!is_reflexive(p))
        throw std::domain_error("dual_polygon needs a reflexive polygon");
    const Point origin{Rat(0), Rat(0)};
    if (membership_classify(as_polytope(p), origin) != Location::Interior)
        throw std::domain_error("dual_polygon needs the interior lattice point at the origin");

    const auto& v = p.vertices();  // counterclockwise
    std::vector<Point> dual;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        // Solve a.y = 1, b.y = 1; the determinant is nonzero because a and b
        // are not collinear with the interior origin.
        const Rat dt = a[0] * b[1] - a[1] * b[0];
        if (dt == 0)
            throw std::logic_error("dual_polygon: consecutive vertices collinear with origin");
        Point y{(b[1] - a[1]) / dt, (a[0] - b[0]) / dt};
        if (!is_integer(y[0]) || !is_integer(y[1]))
            throw std::logic_error("dual_polygon: dual vertex is not integral");
        dual.push_back(std::move(y));
    }
    return LatticePolygon(std::move(dual));
}

struct TwelveCheckResult {
    bool pass = false;
    Int length;
    Int dual_length;
};

/// lattice_length(P) + lattice_length(dual(P)) == 12 for every convex
/// reflexive polygon with its interior lattice point at the origin.
inline TwelveCheckResult twelve_check(const LatticePolygon& p)
{
    TwelveCheckResult r;
    r.length = lattice_length(p);
    r.dual_length = lattice_length(dual_polygon(p));
    r.pass = (r.length + r.dual_length == 12);
    return r;
}

}  // namespace qpc
