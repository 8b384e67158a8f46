#pragma once

// Shared test helpers: terse exact-point constructors, counting oracles
// derived by hand from facet descriptions (deliberately not routed through
// the library's form machinery, so library counts are checked against an
// independent second derivation), and a deterministic sampler of random
// strict unimodular maps.

#include "qpc/qpc.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

namespace support {

using qpc::Int;
using qpc::Point;
using qpc::Rat;

inline Rat q(const std::string& s) { return qpc::parse_rational(s); }

inline Point pt(std::initializer_list<const char*> cs)
{
    Point p;
    for (const char* c : cs)
        p.push_back(qpc::parse_rational(c));
    return p;
}

inline Point pti(std::initializer_list<long> cs)
{
    Point p;
    for (long c : cs)
        p.push_back(Rat(c));
    return p;
}

// --- independent counting oracles ---------------------------------------

// Triangle conv{(0,0), (D,0), (1,(D-1)/D)} dilated by k:
// y >= 0, (D-1) x >= D y, x + D y <= D k.
inline long triangle_count(long d, long k)
{
    long n = 0;
    for (long x = 0; x <= d * k; ++x)
        for (long y = 0; y <= k; ++y)
            if ((d - 1) * x >= d * y && x + d * y <= d * k)
                ++n;
    return n;
}

inline long triangle_interior_count(long d, long k)
{
    long n = 0;
    for (long x = 0; x <= d * k; ++x)
        for (long y = 1; y <= k; ++y)
            if ((d - 1) * x > d * y && x + d * y < d * k)
                ++n;
    return n;
}

// Pyramid conv{(0,0,0), (1,0,0), (1,1,0), (0,1,0), (1/2,0,1/2)} dilated by
// k: z >= 0, y >= 0, x >= z, x + z <= k, y + 2z <= k.
inline long pyramid_count(long k)
{
    long n = 0;
    for (long x = 0; x <= k; ++x)
        for (long y = 0; y <= k; ++y)
            for (long z = 0; z <= k; ++z)
                if (x >= z && x + z <= k && y + 2 * z <= k)
                    ++n;
    return n;
}

inline long pyramid_interior_count(long k)
{
    long n = 0;
    for (long x = 0; x <= k; ++x)
        for (long y = 1; y <= k; ++y)
            for (long z = 1; z <= k; ++z)
                if (x > z && x + z < k && y + 2 * z < k)
                    ++n;
    return n;
}

// The reflected quadrilateral conv{(0,0), (D,0), (1,(D-1)/D), (1,-(D-1)/D)}:
// (D-1) x >= D |y|, x + D |y| <= D k.
inline long quadrilateral_count(long d, long k)
{
    long n = 0;
    for (long x = 0; x <= d * k; ++x)
        for (long y = -k; y <= k; ++y) {
            const long ay = y < 0 ? -y : y;
            if ((d - 1) * x >= d * ay && x + d * ay <= d * k)
                ++n;
        }
    return n;
}

// Segment [0, p/q] dilated by k: floor(k p / q) + 1.
inline long segment_count(long p, long qden, long k) { return (k * p) / qden + 1; }

// Lattice-polygon counting polynomial A k^2 + (B/2) k + 1 evaluated at k,
// from the shoelace area and boundary gcd sum of an integral polygon given
// in cyclic order.
inline Rat pick_polynomial_at(const std::vector<Point>& cyclic, long k)
{
    Rat twice_area = 0;
    Int boundary = 0;
    const std::size_t m = cyclic.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point& a = cyclic[i];
        const Point& b = cyclic[(i + 1) % m];
        twice_area += a[0] * b[1] - a[1] * b[0];
        boundary += qpc::gcd_int(abs(qpc::rat_num(b[0] - a[0])),
                                 abs(qpc::rat_num(b[1] - a[1])));
    }
    if (twice_area < 0)
        twice_area = -twice_area;
    const Rat area = twice_area / 2;
    return area * k * k + Rat(boundary, 2) * k + 1;
}

// --- random strict unimodular maps --------------------------------------

// Products of elementary integer shears and coordinate swaps, with matrix
// entries kept within +-max_entry (at most 10) by rejection, plus a small
// integer translation. Deterministic for a fixed seed.
class MapSampler {
public:
    MapSampler(std::uint64_t seed, std::size_t dim, long max_entry = 10)
        : rng_(seed), dim_(dim), max_entry_(max_entry)
    {
    }

    qpc::AffineUnimodularMap next()
    {
        for (;;) {
            qpc::AffineUnimodularMap u = qpc::identity_map(dim_);
            std::uniform_int_distribution<int> nops(2, 5);
            std::uniform_int_distribution<int> kind(0, 2);
            std::uniform_int_distribution<std::size_t> idx(0, dim_ - 1);
            std::uniform_int_distribution<int> mult(1, 2);
            std::uniform_int_distribution<int> sign(0, 1);
            const int ops = nops(rng_);
            for (int t = 0; t < ops; ++t) {
                std::size_t i = idx(rng_), j = idx(rng_);
                if (i == j)
                    j = (j + 1) % dim_;
                if (kind(rng_) == 0) {
                    std::swap(u.matrix[i], u.matrix[j]);
                } else {
                    const Int lambda = (sign(rng_) ? 1 : -1) * mult(rng_);
                    for (std::size_t c = 0; c < dim_; ++c)
                        u.matrix[i][c] += lambda * u.matrix[j][c];
                }
            }
            bool small = true;
            for (const auto& row : u.matrix)
                for (const auto& e : row)
                    if (e > max_entry_ || e < -max_entry_)
                        small = false;
            if (!small)
                continue;
            std::uniform_int_distribution<long> tr(-3, 3);
            for (auto& t : u.translation)
                t = Rat(tr(rng_));
            return u;
        }
    }

private:
    std::mt19937_64 rng_;
    std::size_t dim_;
    long max_entry_;
};

}  // namespace support
