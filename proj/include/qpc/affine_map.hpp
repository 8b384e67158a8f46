#pragma once

// Affine unimodular transformations x -> M x + t with M an integer matrix of
// determinant +1 or -1. Strict maps translate by integer vectors and so
// preserve the lattice Z^n exactly; weak maps allow rational translations
// and only preserve a lattice after a suitable dilation of the whole
// configuration.

#include "qpc/linalg.hpp"
#include "qpc/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qpc {

enum class MapMode { Strict, Weak };

struct AffineUnimodularMap {
    ZMat matrix;
    QVec translation;
    MapMode mode = MapMode::Strict;
};

inline AffineUnimodularMap identity_map(std::size_t n, MapMode mode = MapMode::Strict)
{
    AffineUnimodularMap u;
    u.matrix.assign(n, ZVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        u.matrix[i][i] = 1;
    u.translation.assign(n, Rat(0));
    u.mode = mode;
    return u;
}

inline AffineUnimodularMap translation_map(QVec by, MapMode mode = MapMode::Strict)
{
    AffineUnimodularMap u = identity_map(by.size(), mode);
    u.translation = std::move(by);
    return u;
}

/// Checks |det M| = 1, and in strict mode that the translation is integral.
/// A non-square matrix or a matrix/translation size mismatch is malformed
/// input and throws std::invalid_argument.
inline bool is_unimodular(const AffineUnimodularMap& u)
{
    const std::size_t n = u.matrix.size();
    for (const auto& row : u.matrix)
        if (row.size() != n)
            throw std::invalid_argument("map matrix must be square");
    if (u.translation.size() != n)
        throw std::invalid_argument("map translation size must match the matrix");
    const Rat d = det(qmat_from_int(u.matrix));
    if (d != 1 && d != -1)
        return false;
    if (u.mode == MapMode::Strict)
        for (const auto& t : u.translation)
            if (!is_integer(t))
                return false;
    return true;
}

inline Point apply_map(const AffineUnimodularMap& u, const Point& x)
{
    const std::size_t n = u.matrix.size();
    if (x.size() != n || u.translation.size() != n)
        throw std::invalid_argument("apply_map: dimension mismatch");
    Point y(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            y[i] += Rat(u.matrix[i][j]) * x[j];
        y[i] += u.translation[i];
    }
    return y;
}

/// f after g: (f . g)(x) = f(g(x)).
inline AffineUnimodularMap compose(const AffineUnimodularMap& f,
                                   const AffineUnimodularMap& g)
{
    const std::size_t n = f.matrix.size();
    if (g.matrix.size() != n)
        throw std::invalid_argument("compose: dimension mismatch");
    AffineUnimodularMap h;
    h.matrix.assign(n, ZVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (f.matrix[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                h.matrix[i][j] += f.matrix[i][k] * g.matrix[k][j];
        }
    h.translation = apply_map(f, g.translation);
    h.mode = (f.mode == MapMode::Weak || g.mode == MapMode::Weak) ? MapMode::Weak
                                                                  : MapMode::Strict;
    return h;
}

inline AffineUnimodularMap inverse_map(const AffineUnimodularMap& u)
{
    if (!is_unimodular(u))
        throw std::invalid_argument("inverse_map: |det| must be 1");
    const std::size_t n = u.matrix.size();
    const auto minv = inverse(qmat_from_int(u.matrix));
    AffineUnimodularMap v;
    v.mode = u.mode;
    v.matrix.assign(n, ZVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& e = (*minv)[i][j];
            // |det| = 1 makes the inverse integral
            v.matrix[i][j] = rat_num(e);
        }
    v.translation.assign(n, Rat(0));
    const Point mt = apply_map(v, u.translation);
    for (std::size_t i = 0; i < n; ++i)
        v.translation[i] = -mt[i];
    return v;
}

}  // namespace qpc
