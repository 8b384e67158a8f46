#pragma once

// Exact lattice-point counting by brute-force box enumeration: every dilate
// is enumerated over its integer bounding box and each point classified by
// the region's integer forms. Nothing is sampled, floated or approximated.
// A guarded int64 fast path keeps the inner loop allocation-free; the guard
// is an exact worst-case bound computed in big integers, and regions that
// exceed it fall back to big-integer evaluation with the same semantics.

#include "qpc/forms.hpp"
#include "qpc/polytope.hpp"
#include "qpc/rational.hpp"
#include "qpc/simplex.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qpc {

struct LatticeBox {
    std::vector<std::int64_t> lo, hi;  // inclusive bounds per coordinate

    bool empty() const
    {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (lo[i] > hi[i])
                return true;
        return lo.empty();
    }
};

inline LatticeBox bounding_box(const std::vector<Point>& verts, std::int64_t k)
{
    if (verts.empty())
        throw std::invalid_argument("bounding_box: no vertices");
    if (k < 1)
        throw std::invalid_argument("bounding_box: dilation must be >= 1");
    const std::size_t n = verts[0].size();
    LatticeBox box;
    box.lo.resize(n);
    box.hi.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
        Rat mn = verts[0][c], mx = verts[0][c];
        for (const auto& v : verts) {
            if (v[c] < mn)
                mn = v[c];
            if (v[c] > mx)
                mx = v[c];
        }
        box.lo[c] = to_int64(floor_rat(mn * k));
        box.hi[c] = to_int64(ceil_rat(mx * k));
    }
    return box;
}

inline LatticeBox bounding_box(const RationalPolytope& p, std::int64_t k)
{
    return bounding_box(p.vertices(), k);
}

inline LatticeBox bounding_box(const Simplex& s, std::int64_t k)
{
    return bounding_box(s.vertices(), k);
}

/// Visits every lattice point of the box in lexicographic order (first
/// coordinate most significant).
template <typename F>
inline void for_each_lattice_point(const LatticeBox& box, F&& f)
{
    if (box.empty())
        return;
    std::vector<std::int64_t> x = box.lo;
    const std::size_t n = x.size();
    for (;;) {
        f(x);
        std::size_t i = n;
        while (i > 0 && x[i - 1] == box.hi[i - 1])
            --i;
        if (i == 0)
            return;
        ++x[i - 1];
        for (std::size_t j = i; j < n; ++j)
            x[j] = box.lo[j];
    }
}

/// Membership test of lattice points in one dilate of a region, prepared for
/// points inside a fixed box. Strictness turns the inequalities into strict
/// ones, which tests for the relative interior.
class DilateTester {
public:
    DilateTester(const RegionForms& forms, bool strict, const LatticeBox& box,
                 std::int64_t k)
        : forms_(&forms), strict_(strict), k_(k)
    {
        fast_ = prepare_fast(box);
    }

    bool contains(const std::vector<std::int64_t>& x) const
    {
        if (fast_) {
            for (const auto& f : fast_eq_)
                if (eval_fast(f, x) != 0)
                    return false;
            for (const auto& f : fast_ge_) {
                const std::int64_t v = eval_fast(f, x);
                if (strict_ ? (v <= 0) : (v < 0))
                    return false;
            }
            return true;
        }
        for (const auto& f : forms_->equalities)
            if (eval_big(f, x) != 0)
                return false;
        for (const auto& f : forms_->inequalities) {
            const Int v = eval_big(f, x);
            if (strict_ ? (v <= 0) : (v < 0))
                return false;
        }
        return true;
    }

private:
    struct FastForm {
        std::vector<std::int64_t> a;
        std::int64_t ck;  // c * k, precomputed
    };

    static std::int64_t eval_fast(const FastForm& f, const std::vector<std::int64_t>& x)
    {
        std::int64_t v = f.ck;
        for (std::size_t i = 0; i < f.a.size(); ++i)
            v += f.a[i] * x[i];
        return v;
    }

    Int eval_big(const DilatedForm& f, const std::vector<std::int64_t>& x) const
    {
        Int v = f.c * k_;
        for (std::size_t i = 0; i < f.a.size(); ++i)
            v += f.a[i] * x[i];
        return v;
    }

    bool prepare_fast(const LatticeBox& box)
    {
        // Worst-case |value| over the box must stay clear of int64 range;
        // the bound is exact, so the fast path can never wrap.
        const Int limit = (Int(1) << 62);
        auto try_narrow = [&](const std::vector<DilatedForm>& src,
                              std::vector<FastForm>& dst) {
            for (const auto& f : src) {
                Int bound = abs(f.c) * k_;
                FastForm nf;
                nf.a.reserve(f.a.size());
                for (std::size_t i = 0; i < f.a.size(); ++i) {
                    const Int lo_mag = abs(Int(box.lo[i]));
                    const Int hi_mag = abs(Int(box.hi[i]));
                    const Int mag = lo_mag > hi_mag ? lo_mag : hi_mag;
                    bound += abs(f.a[i]) * mag;
                    if (abs(f.a[i]) >= limit)
                        return false;
                    nf.a.push_back(to_int64(f.a[i]));
                }
                if (bound >= limit)
                    return false;
                nf.ck = to_int64(f.c * k_);
                dst.push_back(std::move(nf));
            }
            return true;
        };
        fast_eq_.clear();
        fast_ge_.clear();
        return try_narrow(forms_->equalities, fast_eq_) &&
               try_narrow(forms_->inequalities, fast_ge_);
    }

    const RegionForms* forms_;
    bool strict_;
    std::int64_t k_;
    bool fast_ = false;
    std::vector<FastForm> fast_eq_, fast_ge_;
};

namespace detail {

inline Int count_with(const RegionForms& forms, const std::vector<Point>& verts,
                      bool strict, std::int64_t k)
{
    if (k < 1)
        throw std::invalid_argument("count: dilation must be >= 1");
    const LatticeBox box = bounding_box(verts, k);
    const DilateTester tester(forms, strict, box, k);
    Int cnt = 0;
    for_each_lattice_point(box, [&](const std::vector<std::int64_t>& x) {
        if (tester.contains(x))
            ++cnt;
    });
    return cnt;
}

}  // namespace detail

/// Number of lattice points in the k-th dilate of the closed polytope.
inline Int count_points(const RationalPolytope& p, std::int64_t k)
{
    return detail::count_with(polytope_forms(p), p.vertices(), false, k);
}

/// Number of lattice points in the k-th dilate of the simplex, honoring its
/// openness.
inline Int count_points(const Simplex& s, std::int64_t k)
{
    return detail::count_with(simplex_forms(s), s.vertices(), s.is_open(), k);
}

/// Number of lattice points in the relative interior of the k-th dilate.
inline Int count_interior(const RationalPolytope& p, std::int64_t k)
{
    return detail::count_with(polytope_forms(p), p.vertices(), true, k);
}

}  // namespace qpc
