#pragma once

// The worked objects every test and demo uses. Each fixture is generated on
// demand from its integer parameters, never stored, so parameter sweeps stay
// cheap and the constructions are readable.
//
// The headline family: the triangle with vertices (0,0), (D,0) and
// (1, (D-1)/D) has denominator D, yet its lattice-point counting function is
// the honest polynomial ((D-1)/2) k^2 + ((D+1)/2) k + 1 — the quasi-period
// collapses all the way to 1. The certificate below explains why: cutting
// the triangle along x = 1 and mapping the left part by a unimodular map
// reassembles it into an integral triangle with the same counting function.

#include "qpc/affine_map.hpp"
#include "qpc/equidecomp.hpp"
#include "qpc/polytope.hpp"
#include "qpc/rational.hpp"
#include "qpc/reflexive.hpp"
#include "qpc/simplex.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qpc {

inline RationalPolytope unit_square()
{
    return RationalPolytope({{Rat(0), Rat(0)},
                             {Rat(1), Rat(0)},
                             {Rat(0), Rat(1)},
                             {Rat(1), Rat(1)}});
}

inline RationalPolytope segment(const Rat& a, const Rat& b)
{
    return RationalPolytope({{a}, {b}});
}

/// conv{(0,0), (D,0), (1, (D-1)/D)}: denominator D, quasi-period 1.
inline RationalPolytope collapse_triangle(std::int64_t d)
{
    if (d < 2)
        throw std::invalid_argument("collapse_triangle: D must be >= 2");
    const Rat f(Int(d) - 1, Int(d));
    return RationalPolytope({{Rat(0), Rat(0)}, {Rat(d), Rat(0)}, {Rat(1), f}});
}

/// conv{(1,0), (1,1), (D,0)}: the integral triangle the family reassembles
/// into.
inline RationalPolytope collapse_triangle_target(std::int64_t d)
{
    if (d < 2)
        throw std::invalid_argument("collapse_triangle_target: D must be >= 2");
    return RationalPolytope({{Rat(1), Rat(0)}, {Rat(1), Rat(1)}, {Rat(d), Rat(0)}});
}

/// Cut the triangle at x = 1 into L (left of the cut, keeping the cut edge
/// out) and R (right, keeping it); map L by x -> [[D-1,-D],[-1,1]] x + (1,1)
/// and leave R alone. The images tile the integral target triangle.
inline DecompositionCertificate collapse_triangle_certificate(std::int64_t d)
{
    if (d < 2)
        throw std::invalid_argument("collapse_triangle_certificate: D must be >= 2");
    const Rat f(Int(d) - 1, Int(d));

    const Simplex left({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1), f}},
                       Openness::Closed);
    const Simplex right({{Rat(1), Rat(0)}, {Rat(d), Rat(0)}, {Rat(1), f}},
                        Openness::Closed);
    // The cut edge x = 1 of L is the facet opposite its vertex 0.
    const auto left_pieces = half_open_decompose(left, {0});
    const auto right_pieces = half_open_decompose(right, {});

    AffineUnimodularMap u;
    u.matrix = {{Int(d) - 1, -Int(d)}, {Int(-1), Int(1)}};
    u.translation = {Rat(1), Rat(1)};
    u.mode = MapMode::Strict;

    DecompositionCertificate cert{collapse_triangle(d),
                                  collapse_triangle_target(d),
                                  {},
                                  {},
                                  CertMode::Strict,
                                  1};
    for (const auto& s : left_pieces) {
        cert.pieces.push_back(s);
        cert.maps.push_back(u);
    }
    for (const auto& s : right_pieces) {
        cert.pieces.push_back(s);
        cert.maps.push_back(identity_map(2));
    }
    return cert;
}

/// Pyramid over the unit square with apex (1/2, 0, 1/2): denominator 2,
/// counting function (1/6) k^3 + k^2 + (11/6) k + 1 — an honest polynomial.
inline RationalPolytope collapse_pyramid()
{
    const Rat h(1, 2);
    return RationalPolytope({{Rat(0), Rat(0), Rat(0)},
                             {Rat(1), Rat(0), Rat(0)},
                             {Rat(1), Rat(1), Rat(0)},
                             {Rat(0), Rat(1), Rat(0)},
                             {h, Rat(0), h}});
}

/// conv{(0,0,0), (1,0,0), (1,1,0), (0,0,1)}: the integral tetrahedron the
/// pyramid reassembles into.
inline RationalPolytope collapse_pyramid_target()
{
    return RationalPolytope({{Rat(0), Rat(0), Rat(0)},
                             {Rat(1), Rat(0), Rat(0)},
                             {Rat(1), Rat(1), Rat(0)},
                             {Rat(0), Rat(0), Rat(1)}});
}

/// Cut the pyramid along the plane -x + y + z = 0 into two tetrahedra
/// sharing the facet {(0,0,0), (1,1,0), (1/2,0,1/2)}. The map fixes that
/// plane pointwise and carries (0,1,0) to (0,0,1); applied to the positive
/// half (with the negative half kept, minus the shared facet) it reassembles
/// the pyramid into the integral tetrahedron.
inline DecompositionCertificate collapse_pyramid_certificate()
{
    const Rat h(1, 2);
    const Point o{Rat(0), Rat(0), Rat(0)};
    const Point diag{Rat(1), Rat(1), Rat(0)};
    const Point apex{h, Rat(0), h};

    const Simplex plus({o, diag, apex, {Rat(0), Rat(1), Rat(0)}}, Openness::Closed);
    const Simplex minus({o, diag, apex, {Rat(1), Rat(0), Rat(0)}}, Openness::Closed);
    const auto plus_pieces = half_open_decompose(plus, {});
    // The shared facet of the negative half is opposite its vertex 3.
    const auto minus_pieces = half_open_decompose(minus, {3});

    AffineUnimodularMap m;
    m.matrix = {{Int(1), Int(0), Int(0)},
                {Int(1), Int(0), Int(-1)},
                {Int(-1), Int(1), Int(2)}};
    m.translation = {Rat(0), Rat(0), Rat(0)};
    m.mode = MapMode::Strict;

    DecompositionCertificate cert{collapse_pyramid(),
                                  collapse_pyramid_target(),
                                  {},
                                  {},
                                  CertMode::Strict,
                                  1};
    for (const auto& s : plus_pieces) {
        cert.pieces.push_back(s);
        cert.maps.push_back(m);
    }
    for (const auto& s : minus_pieces) {
        cert.pieces.push_back(s);
        cert.maps.push_back(identity_map(3));
    }
    return cert;
}

/// The triangle glued to its mirror image across the x-axis:
/// conv{(0,0), (D,0), (1, (D-1)/D), (1, -(D-1)/D)}. Its counting function is
/// 2 L_T(k) - (Dk + 1), since the x-axis segment is counted twice.
inline RationalPolytope reflected_quadrilateral(std::int64_t d)
{
    if (d < 2)
        throw std::invalid_argument("reflected_quadrilateral: D must be >= 2");
    const Rat f(Int(d) - 1, Int(d));
    return RationalPolytope(
        {{Rat(0), Rat(0)}, {Rat(d), Rat(0)}, {Rat(1), f}, {Rat(1), -f}});
}

/// Convex reflexive polygons (interior lattice point at the origin) of
/// lattice lengths 8, 4, 9, 3, 6 and 6.
inline std::vector<LatticePolygon> reflexive_samples()
{
    auto pt = [](long x, long y) { return Point{Rat(x), Rat(y)}; };
    std::vector<LatticePolygon> out;
    out.push_back(LatticePolygon({pt(-1, -1), pt(1, -1), pt(1, 1), pt(-1, 1)}));
    out.push_back(LatticePolygon({pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)}));
    out.push_back(LatticePolygon({pt(-1, -1), pt(2, -1), pt(-1, 2)}));
    out.push_back(LatticePolygon({pt(1, 0), pt(0, 1), pt(-1, -1)}));
    out.push_back(LatticePolygon(
        {pt(1, 0), pt(0, 1), pt(-1, 1), pt(-1, 0), pt(0, -1), pt(1, -1)}));
    out.push_back(LatticePolygon(
        {pt(1, 1), pt(0, 1), pt(-1, 0), pt(-1, -1), pt(0, -1), pt(1, 0)}));
    return out;
}

/// The segment [0, 1/2] carried onto [1/2, 1] by the rational translation
/// x -> x + 1/2: not equidecomposable over integer translations, but weakly
/// so — scaling everything by 2 makes the translation integral.
inline DecompositionCertificate weak_segment_certificate(std::int64_t scale)
{
    const Rat h(1, 2);
    const Simplex base({{Rat(0)}, {h}}, Openness::Closed);
    DecompositionCertificate cert{segment(Rat(0), h),
                                  segment(h, Rat(1)),
                                  {},
                                  {},
                                  CertMode::Weak,
                                  scale};
    for (const auto& s : half_open_decompose(base, {})) {
        cert.pieces.push_back(s);
        cert.maps.push_back(translation_map({h}, MapMode::Weak));
    }
    return cert;
}

}  // namespace qpc
