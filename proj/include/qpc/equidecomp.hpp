#pragma once

// Verification of lattice equidecomposability certificates. A certificate
// claims that a source polytope can be written as a disjoint union of
// relatively open simplices whose images under paired affine unimodular maps
// tile a target region. The verifier checks, exactly:
//
//   1. every map is unimodular (and has an integral translation in strict
//      mode),
//   2. the pieces partition the source: contained, pairwise disjoint,
//      volumes summing to the source volume, and covering every lattice
//      point of every dilate k in a fixed finite set K exactly once,
//   3. the images partition the target the same way.
//
// K = {1, ..., D'(d+1)} with D' the lcm of all denominators in sight and
// d the source dimension: enough dilates to pin degree-d period-D'
// quasi-polynomials, so agreement on K means agreement of the counting
// functions everywhere. Disjointness of open simplices is an exact LP;
// the lattice sweeps are brute-force box enumerations.
//
// Weak mode differs only in allowing rational translations; its data is
// checked by scaling the whole configuration by the declared factor, after
// which every translation must have become integral and the strict verifier
// must accept.

#include "qpc/affine_map.hpp"
#include "qpc/counting.hpp"
#include "qpc/forms.hpp"
#include "qpc/lp.hpp"
#include "qpc/polytope.hpp"
#include "qpc/rational.hpp"
#include "qpc/simplex.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qpc {

enum class CertMode { Strict, Weak };

/// Target of a certificate: either a polytope or an explicit disjoint union
/// of relatively open simplices (for targets that are not convex).
using CertTarget = std::variant<RationalPolytope, std::vector<Simplex>>;

struct DecompositionCertificate {
    RationalPolytope source;
    CertTarget target;
    std::vector<Simplex> pieces;           // relatively open, one per map
    std::vector<AffineUnimodularMap> maps;
    CertMode mode = CertMode::Strict;
    std::int64_t weak_scale = 1;           // meaningful in weak mode only
};

enum class FailedCheck {
    Unimodularity,
    Containment,
    Disjointness,
    Coverage,
    Volume,
    EhrhartEquality,
};

inline const char* failed_check_name(FailedCheck f)
{
    switch (f) {
    case FailedCheck::Unimodularity: return "unimodularity";
    case FailedCheck::Containment: return "containment";
    case FailedCheck::Disjointness: return "disjointness";
    case FailedCheck::Coverage: return "coverage";
    case FailedCheck::Volume: return "volume";
    case FailedCheck::EhrhartEquality: return "ehrhart-equality";
    }
    return "unknown";
}

struct VerificationReport {
    bool pass = false;
    std::optional<FailedCheck> failed_check;
    std::optional<Point> witness_point;
    std::optional<std::int64_t> witness_dilation;
    std::string detail;

    static VerificationReport ok()
    {
        VerificationReport r;
        r.pass = true;
        return r;
    }

    static VerificationReport fail(FailedCheck what, std::string why,
                                   std::optional<Point> point = std::nullopt,
                                   std::optional<std::int64_t> dilation = std::nullopt)
    {
        VerificationReport r;
        r.pass = false;
        r.failed_check = what;
        r.detail = std::move(why);
        r.witness_point = std::move(point);
        r.witness_dilation = dilation;
        return r;
    }
};

/// Exact disjointness of two relatively open simplices: their relative
/// interiors share no point iff the joint barycentric LP has no positive
/// margin.
inline bool open_disjoint(const Simplex& a, const Simplex& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw std::invalid_argument("open_disjoint: dimension mismatch");
    const auto common = common_interior_margin(a.vertices(), b.vertices());
    return !common || common->margin <= 0;
}

namespace detail {

inline std::string point_text(const Point& x)
{
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i)
            s += ", ";
        s += rational_to_string(x[i]);
    }
    return s + ")";
}

inline Point to_rational_point(const std::vector<std::int64_t>& x)
{
    Point p(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        p[i] = Rat(x[i]);
    return p;
}

// Closed membership of a rational point in the polytope's facet forms
// (dilation 1).
inline bool forms_contain(const RegionForms& forms, const Point& x)
{
    for (const auto& f : forms.equalities) {
        Rat v = Rat(f.c);
        for (std::size_t i = 0; i < x.size(); ++i)
            v += Rat(f.a[i]) * x[i];
        if (v != 0)
            return false;
    }
    for (const auto& f : forms.inequalities) {
        Rat v = Rat(f.c);
        for (std::size_t i = 0; i < x.size(); ++i)
            v += Rat(f.a[i]) * x[i];
        if (v < 0)
            return false;
    }
    return true;
}

}  // namespace detail

/// Checks that the relatively open pieces partition the closed polytope:
/// containment of every piece, pairwise disjointness, volume bookkeeping,
/// and exactly-once coverage of every lattice point of every dilate k in K.
inline VerificationReport verify_partition(const RationalPolytope& p,
                                           const std::vector<Simplex>& pieces,
                                           const std::vector<std::int64_t>& dilations,
                                           const std::string& where = "")
{
    const std::string at = where.empty() ? "" : where + ": ";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].ambient_dim() != p.ambient_dim())
            return VerificationReport::fail(
                FailedCheck::Containment,
                at + "piece " + std::to_string(i) + " lives in a different ambient space");
        if (!pieces[i].is_open())
            return VerificationReport::fail(
                FailedCheck::Containment,
                at + "piece " + std::to_string(i) + " is not relatively open");
    }

    // Containment: the closure of each piece is the hull of its vertices,
    // so vertex membership in the closed polytope is equivalent.
    const RegionForms pforms = polytope_forms(p);
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (const auto& v : pieces[i].vertices())
            if (!detail::forms_contain(pforms, v))
                return VerificationReport::fail(
                    FailedCheck::Containment,
                    at + "piece " + std::to_string(i) + " has vertex " +
                        detail::point_text(v) + " outside the region",
                    v);

    // Pairwise disjointness of relative interiors.
    for (std::size_t i = 0; i < pieces.size(); ++i)
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
            const auto common =
                common_interior_margin(pieces[i].vertices(), pieces[j].vertices());
            if (common && common->margin > 0)
                return VerificationReport::fail(
                    FailedCheck::Disjointness,
                    at + "pieces " + std::to_string(i) + " and " + std::to_string(j) +
                        " overlap at " + detail::point_text(common->witness),
                    common->witness);
        }

    // Volume: the full-dimensional pieces must account for all of the
    // volume (lower-dimensional pieces contribute zero to both sides).
    Rat piece_volume = 0;
    for (const auto& s : pieces)
        piece_volume += simplex_volume(s);
    const Rat pvol = volume(p);
    if (piece_volume != pvol)
        return VerificationReport::fail(
            FailedCheck::Volume, at + "piece volumes sum to " +
                                     rational_to_string(piece_volume) + ", region has " +
                                     rational_to_string(pvol));

    // Lattice sweep: every lattice point of every listed dilate must lie in
    // exactly one piece.
    std::vector<RegionForms> piece_forms;
    piece_forms.reserve(pieces.size());
    for (const auto& s : pieces)
        piece_forms.push_back(simplex_forms(s));
    for (const std::int64_t k : dilations) {
        const LatticeBox box = bounding_box(p, k);
        const DilateTester inside(pforms, false, box, k);
        std::vector<DilateTester> piece_testers;
        piece_testers.reserve(pieces.size());
        for (std::size_t i = 0; i < pieces.size(); ++i)
            piece_testers.emplace_back(piece_forms[i], true, box, k);
        VerificationReport fail_report = VerificationReport::ok();
        bool failed = false;
        for_each_lattice_point(box, [&](const std::vector<std::int64_t>& x) {
            if (failed || !inside.contains(x))
                return;
            int hits = 0;
            for (const auto& t : piece_testers) {
                if (t.contains(x) && ++hits > 1)
                    break;
            }
            if (hits == 1)
                return;
            failed = true;
            const Point wp = detail::to_rational_point(x);
            if (hits == 0)
                fail_report = VerificationReport::fail(
                    FailedCheck::Coverage,
                    at + "lattice point " + detail::point_text(wp) + " of dilate " +
                        std::to_string(k) + " is covered by no piece",
                    wp, k);
            else
                fail_report = VerificationReport::fail(
                    FailedCheck::Disjointness,
                    at + "lattice point " + detail::point_text(wp) + " of dilate " +
                        std::to_string(k) + " is covered more than once",
                    wp, k);
        });
        if (failed)
            return fail_report;
    }
    return VerificationReport::ok();
}

/// The dilation factors a certificate is checked at: 1..D'(d+1) where D' is
/// the lcm of the denominators of the source, the target and every piece,
/// and d = dim(source).
inline std::vector<std::int64_t> certificate_dilations(const DecompositionCertificate& cert)
{
    Int dd = denominator(cert.source);
    if (const auto* poly = std::get_if<RationalPolytope>(&cert.target))
        dd = lcm_int(dd, denominator(*poly));
    else
        for (const auto& s : std::get<std::vector<Simplex>>(cert.target))
            dd = lcm_int(dd, denominator(s));
    for (const auto& s : cert.pieces)
        dd = lcm_int(dd, denominator(s));
    const std::int64_t period = to_int64(dd);
    const std::int64_t d = static_cast<std::int64_t>(cert.source.dim());
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; k <= period * (d + 1); ++k)
        ks.push_back(k);
    return ks;
}

namespace detail {

// Tiling check against an explicit union-of-open-simplices target: the map
// images must reproduce the union exactly (same disjointness, same volume,
// and identical lattice hits on every listed dilate).
inline VerificationReport verify_union_target(const std::vector<Simplex>& target,
                                              const std::vector<Simplex>& images,
                                              const std::vector<std::int64_t>& dilations)
{
    if (target.empty())
        return VerificationReport::fail(FailedCheck::Unimodularity,
                                        "target union must not be empty");
    const std::size_t n = images.empty() ? target[0].ambient_dim()
                                         : images[0].ambient_dim();
    for (const auto& s : target) {
        if (!s.is_open())
            return VerificationReport::fail(FailedCheck::Unimodularity,
                                            "target union pieces must be relatively open");
        if (s.ambient_dim() != n)
            return VerificationReport::fail(FailedCheck::Unimodularity,
                                            "target union pieces live in different spaces");
    }

    auto pairwise = [&](const std::vector<Simplex>& list, const std::string& what)
        -> std::optional<VerificationReport> {
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                const auto common =
                    common_interior_margin(list[i].vertices(), list[j].vertices());
                if (common && common->margin > 0)
                    return VerificationReport::fail(
                        FailedCheck::Disjointness,
                        "target: " + what + " " + std::to_string(i) + " and " +
                            std::to_string(j) + " overlap at " +
                            detail::point_text(common->witness),
                        common->witness);
            }
        return std::nullopt;
    };
    if (auto bad = pairwise(target, "union pieces"))
        return *bad;
    if (auto bad = pairwise(images, "images"))
        return *bad;

    Rat tvol = 0, ivol = 0;
    for (const auto& s : target)
        tvol += simplex_volume(s);
    for (const auto& s : images)
        ivol += simplex_volume(s);
    if (tvol != ivol)
        return VerificationReport::fail(
            FailedCheck::Volume, "target: union volume " + rational_to_string(tvol) +
                                     " differs from image volume " + rational_to_string(ivol));

    // Joint box sweep: each lattice point must be hit by the union and the
    // images the same number of times (0 or 1).
    std::vector<Point> all_verts;
    for (const auto& s : target)
        for (const auto& v : s.vertices())
            all_verts.push_back(v);
    for (const auto& s : images)
        for (const auto& v : s.vertices())
            all_verts.push_back(v);
    std::vector<RegionForms> tforms, iforms;
    for (const auto& s : target)
        tforms.push_back(simplex_forms(s));
    for (const auto& s : images)
        iforms.push_back(simplex_forms(s));

    for (const std::int64_t k : dilations) {
        const LatticeBox box = bounding_box(all_verts, k);
        std::vector<DilateTester> ttest, itest;
        for (const auto& f : tforms)
            ttest.emplace_back(f, true, box, k);
        for (const auto& f : iforms)
            itest.emplace_back(f, true, box, k);
        VerificationReport fail_report = VerificationReport::ok();
        bool failed = false;
        for_each_lattice_point(box, [&](const std::vector<std::int64_t>& x) {
            if (failed)
                return;
            int th = 0, ih = 0;
            for (const auto& t : ttest)
                if (t.contains(x))
                    ++th;
            for (const auto& t : itest)
                if (t.contains(x))
                    ++ih;
            if (th == ih && th <= 1)
                return;
            failed = true;
            const Point wp = detail::to_rational_point(x);
            if (th > 1 || ih > 1)
                fail_report = VerificationReport::fail(
                    FailedCheck::Disjointness,
                    "target: lattice point " + detail::point_text(wp) + " of dilate " +
                        std::to_string(k) + " is covered more than once",
                    wp, k);
            else if (th == 1)
                fail_report = VerificationReport::fail(
                    FailedCheck::Coverage,
                    "target: lattice point " + detail::point_text(wp) + " of dilate " +
                        std::to_string(k) + " is in the union but in no image",
                    wp, k);
            else
                fail_report = VerificationReport::fail(
                    FailedCheck::Containment,
                    "target: lattice point " + detail::point_text(wp) + " of dilate " +
                        std::to_string(k) + " is in an image but not in the union",
                    wp, k);
        });
        if (failed)
            return fail_report;
    }
    return VerificationReport::ok();
}

}  // namespace detail

/// Full strict-mode verification pipeline. Weak-mode certificates must go
/// through verify_weak (or the dispatching verify()).
inline VerificationReport verify_certificate(const DecompositionCertificate& cert)
{
    if (cert.mode != CertMode::Strict)
        throw std::invalid_argument("verify_certificate handles strict certificates; "
                                    "use verify_weak for weak ones");
    if (cert.pieces.empty() || cert.pieces.size() != cert.maps.size())
        return VerificationReport::fail(
            FailedCheck::Unimodularity,
            "certificate must pair every piece with a map (got " +
                std::to_string(cert.pieces.size()) + " pieces, " +
                std::to_string(cert.maps.size()) + " maps)");
    const std::size_t n = cert.source.ambient_dim();
    for (std::size_t i = 0; i < cert.maps.size(); ++i) {
        const auto& u = cert.maps[i];
        if (u.matrix.size() != n)
            return VerificationReport::fail(FailedCheck::Unimodularity,
                                            "map " + std::to_string(i) +
                                                " has the wrong dimension");
        AffineUnimodularMap strict_map = u;
        strict_map.mode = MapMode::Strict;
        if (!is_unimodular(strict_map))
            return VerificationReport::fail(
                FailedCheck::Unimodularity,
                "map " + std::to_string(i) +
                    " is not unimodular with an integral translation");
    }

    const auto dilations = certificate_dilations(cert);
    if (auto r = verify_partition(cert.source, cert.pieces, dilations, "source"); !r.pass)
        return r;

    std::vector<Simplex> images;
    images.reserve(cert.pieces.size());
    for (std::size_t i = 0; i < cert.pieces.size(); ++i)
        images.push_back(apply_map(cert.maps[i], cert.pieces[i]));

    if (const auto* poly = std::get_if<RationalPolytope>(&cert.target))
        return verify_partition(*poly, images, dilations, "target");
    return detail::verify_union_target(std::get<std::vector<Simplex>>(cert.target),
                                       images, dilations);
}

/// Weak-mode verification: scale source, target, pieces and translations by
/// the declared factor; every translation must become integral, and the
/// scaled configuration must pass the strict verifier.
inline VerificationReport verify_weak(const DecompositionCertificate& cert)
{
    if (cert.mode != CertMode::Weak)
        throw std::invalid_argument("verify_weak handles weak certificates");
    if (cert.weak_scale < 1)
        return VerificationReport::fail(FailedCheck::Unimodularity,
                                        "weak scale must be a positive integer");
    const Int k(cert.weak_scale);

    DecompositionCertificate scaled{dilate(cert.source, k), cert.target,
                                    {},   {},
                                    CertMode::Strict, 1};
    if (const auto* poly = std::get_if<RationalPolytope>(&cert.target)) {
        scaled.target = dilate(*poly, k);
    } else {
        std::vector<Simplex> st;
        for (const auto& s : std::get<std::vector<Simplex>>(cert.target))
            st.push_back(dilate(s, k));
        scaled.target = std::move(st);
    }
    for (const auto& s : cert.pieces)
        scaled.pieces.push_back(dilate(s, k));
    for (std::size_t i = 0; i < cert.maps.size(); ++i) {
        AffineUnimodularMap u = cert.maps[i];
        u.mode = MapMode::Strict;
        for (auto& t : u.translation) {
            t *= Rat(k);
            if (!is_integer(t))
                return VerificationReport::fail(
                    FailedCheck::Unimodularity,
                    "map " + std::to_string(i) + " translation is not integral after "
                        "scaling by " + std::to_string(cert.weak_scale));
        }
        scaled.maps.push_back(std::move(u));
    }
    auto report = verify_certificate(scaled);
    if (!report.pass)
        report.detail = "after scaling by " + std::to_string(cert.weak_scale) + ": " +
                        report.detail;
    return report;
}

/// Mode-dispatching entry point.
inline VerificationReport verify(const DecompositionCertificate& cert)
{
    return cert.mode == CertMode::Strict ? verify_certificate(cert) : verify_weak(cert);
}

/// Independent cross-check on the counting level: for every dilate in the
/// certificate's check set, the source and the target must contain the same
/// number of lattice points. (A passing certificate forces this; the
/// recheck recomputes it from scratch without trusting the pieces.)
inline VerificationReport oracle_recheck(const DecompositionCertificate& cert)
{
    DecompositionCertificate base = cert;
    if (cert.mode == CertMode::Weak) {
        if (cert.weak_scale < 1)
            return VerificationReport::fail(FailedCheck::Unimodularity,
                                            "weak scale must be a positive integer");
        const Int k(cert.weak_scale);
        base.source = dilate(cert.source, k);
        if (const auto* poly = std::get_if<RationalPolytope>(&cert.target)) {
            base.target = dilate(*poly, k);
        } else {
            std::vector<Simplex> st;
            for (const auto& s : std::get<std::vector<Simplex>>(cert.target))
                st.push_back(dilate(s, k));
            base.target = std::move(st);
        }
        base.pieces.clear();
        for (const auto& s : cert.pieces)
            base.pieces.push_back(dilate(s, Int(cert.weak_scale)));
        base.mode = CertMode::Strict;
    }
    for (const std::int64_t k : certificate_dilations(base)) {
        const Int src = count_points(base.source, k);
        Int tgt = 0;
        if (const auto* poly = std::get_if<RationalPolytope>(&base.target))
            tgt = count_points(*poly, k);
        else
            for (const auto& s : std::get<std::vector<Simplex>>(base.target))
                tgt += count_points(s, k);
        if (src != tgt)
            return VerificationReport::fail(
                FailedCheck::EhrhartEquality,
                "dilate " + std::to_string(k) + " has " + src.str() +
                    " source lattice points but " + tgt.str() + " target lattice points",
                std::nullopt, k);
    }
    return VerificationReport::ok();
}

}  // namespace qpc
