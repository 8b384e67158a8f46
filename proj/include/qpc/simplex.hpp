#pragma once

// Simplices with explicit openness. The relatively open simplex — the
// interior of a simplex within its own affine span, which for a single
// vertex is the vertex itself — is the atomic piece of every decomposition
// in this library; open faces and half-open decompositions are how closed
// regions get carved into such atoms without overlap.

#include "qpc/affine_map.hpp"
#include "qpc/linalg.hpp"
#include "qpc/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qpc {

enum class Openness { Closed, RelativelyOpen };

class Simplex {
public:
    explicit Simplex(std::vector<Point> vertices, Openness openness = Openness::Closed)
        : verts_(std::move(vertices)), openness_(openness)
    {
        if (verts_.empty())
            throw std::invalid_argument("simplex needs at least one vertex");
        const std::size_t n = verts_[0].size();
        if (n == 0)
            throw std::invalid_argument("simplex vertices need coordinates");
        for (const auto& v : verts_)
            if (v.size() != n)
                throw std::invalid_argument("simplex vertices must share a dimension");
        QMat dirs;
        for (std::size_t i = 1; i < verts_.size(); ++i)
            dirs.push_back(vec_sub(verts_[i], verts_[0]));
        if (rank(dirs) != verts_.size() - 1)
            throw std::invalid_argument("simplex vertices must be affinely independent");
    }

    const std::vector<Point>& vertices() const { return verts_; }
    std::size_t ambient_dim() const { return verts_[0].size(); }
    std::size_t dim() const { return verts_.size() - 1; }
    Openness openness() const { return openness_; }
    bool is_open() const { return openness_ == Openness::RelativelyOpen; }

    Simplex with_openness(Openness o) const { return Simplex(verts_, o); }
    Simplex closure() const { return with_openness(Openness::Closed); }

    /// Equality is by vertex sequence and openness. The vertex order is
    /// significant: facet indexing is by opposite vertex.
    friend bool operator==(const Simplex& a, const Simplex& b)
    {
        return a.openness_ == b.openness_ && a.verts_ == b.verts_;
    }
    friend bool operator!=(const Simplex& a, const Simplex& b) { return !(a == b); }

private:
    std::vector<Point> verts_;
    Openness openness_;
};

/// Barycentric coordinates of x with respect to the simplex vertices, or
/// nullopt when x is outside the affine hull. The coordinates are unique by
/// affine independence.
inline std::optional<QVec> barycentric_coordinates(const Simplex& s, const Point& x)
{
    const std::size_t n = s.ambient_dim();
    if (x.size() != n)
        throw std::invalid_argument("barycentric_coordinates: dimension mismatch");
    const std::size_t m = s.vertices().size();
    QMat a(n + 1, QVec(m));
    QVec b(n + 1);
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t j = 0; j < m; ++j)
            a[c][j] = s.vertices()[j][c];
        b[c] = x[c];
    }
    for (std::size_t j = 0; j < m; ++j)
        a[n][j] = 1;
    b[n] = 1;
    return solve(a, b);
}

/// Membership honoring the simplex's openness: all barycentric coordinates
/// >= 0 when closed, > 0 when relatively open.
inline bool simplex_contains(const Simplex& s, const Point& x)
{
    const auto lam = barycentric_coordinates(s, x);
    if (!lam)
        return false;
    for (const auto& l : *lam) {
        if (s.is_open() ? (l <= 0) : (l < 0))
            return false;
    }
    return true;
}

/// Volume in the measure of the ambient space: |det of edge vectors| / d!.
/// Zero whenever the simplex is not full-dimensional in its ambient space.
/// Openness does not matter — a relatively open simplex and its closure have
/// the same volume.
inline Rat simplex_volume(const Simplex& s)
{
    const std::size_t d = s.dim();
    if (d != s.ambient_dim())
        return 0;
    QMat edges;
    for (std::size_t i = 1; i < s.vertices().size(); ++i)
        edges.push_back(vec_sub(s.vertices()[i], s.vertices()[0]));
    Rat v = det(edges);
    if (v < 0)
        v = -v;
    Int fact = 1;
    for (std::size_t i = 2; i <= d; ++i)
        fact *= static_cast<long>(i);
    return v / Rat(fact);
}

/// Least common multiple of the denominators of all vertex coordinates.
inline Int denominator(const Simplex& s)
{
    Int d = 1;
    for (const auto& v : s.vertices())
        for (const auto& c : v)
            d = lcm_int(d, rat_den(c));
    return d;
}

inline bool is_integral(const Simplex& s) { return denominator(s) == 1; }

inline Simplex dilate(const Simplex& s, const Int& k)
{
    if (k < 1)
        throw std::invalid_argument("dilate: factor must be >= 1");
    std::vector<Point> vs = s.vertices();
    for (auto& v : vs)
        for (auto& c : v)
            c *= Rat(k);
    return Simplex(std::move(vs), s.openness());
}

/// Affine images of simplices are simplices of the same dimension and
/// openness (affine unimodular maps are homeomorphisms onto their image).
inline Simplex apply_map(const AffineUnimodularMap& u, const Simplex& s)
{
    std::vector<Point> vs;
    vs.reserve(s.vertices().size());
    for (const auto& v : s.vertices())
        vs.push_back(apply_map(u, v));
    return Simplex(std::move(vs), s.openness());
}

/// All relatively open faces of the closed simplex with the given vertices:
/// one per nonempty subset of vertices, 2^(d+1) - 1 in total. The closure is
/// their disjoint union. Faces are ordered by decreasing vertex count, then
/// lexicographically by vertex index set.
inline std::vector<Simplex> open_faces(const Simplex& s)
{
    const std::size_t m = s.vertices().size();
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < m; ++j)
            if (mask & (std::size_t{1} << j))
                idx.push_back(j);
        subsets.push_back(std::move(idx));
    }
    std::sort(subsets.begin(), subsets.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size())
                      return a.size() > b.size();
                  return a < b;
              });
    std::vector<Simplex> faces;
    faces.reserve(subsets.size());
    for (const auto& idx : subsets) {
        std::vector<Point> vs;
        vs.reserve(idx.size());
        for (auto j : idx)
            vs.push_back(s.vertices()[j]);
        faces.emplace_back(std::move(vs), Openness::RelativelyOpen);
    }
    return faces;
}

/// Open-face partition of the closed simplex minus some closed facets.
/// Facets are named by the index of the opposite vertex; the result contains
/// exactly the open faces whose vertex set includes every excluded facet's
/// opposite vertex (the faces not lying inside any excluded facet). With no
/// exclusions this is the full open-face partition of the closure.
inline std::vector<Simplex> half_open_decompose(const Simplex& s,
                                                const std::vector<std::size_t>& excluded_facets)
{
    const std::size_t m = s.vertices().size();
    std::vector<bool> required(m, false);
    for (auto f : excluded_facets) {
        if (f >= m)
            throw std::invalid_argument("half_open_decompose: facet index out of range");
        if (required[f])
            throw std::invalid_argument("half_open_decompose: duplicate facet index");
        required[f] = true;
    }
    std::vector<Simplex> pieces;
    for (const auto& face : open_faces(s)) {
        // recover the vertex index set of this face
        bool keep = true;
        for (std::size_t j = 0; j < m && keep; ++j) {
            if (!required[j])
                continue;
            bool present = false;
            for (const auto& v : face.vertices())
                if (v == s.vertices()[j]) {
                    present = true;
                    break;
                }
            if (!present)
                keep = false;
        }
        if (keep)
            pieces.push_back(face);
    }
    return pieces;
}

}  // namespace qpc
