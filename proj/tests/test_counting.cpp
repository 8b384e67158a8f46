#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace qpc;
using support::pt;
using support::pti;

namespace {

RationalPolytope triangle_p(long d)
{
    return RationalPolytope({pti({0, 0}), pti({d, 0}), Point{Rat(1), Rat(d - 1, d)}});
}

}  // namespace

TEST_CASE("bounding boxes are the integer hull of the dilated vertex box")
{
    auto box = bounding_box(triangle_p(3), 1);
    CHECK(box.lo == std::vector<std::int64_t>{0, 0});
    CHECK(box.hi == std::vector<std::int64_t>{3, 1});

    auto half = bounding_box(RationalPolytope({pt({"1/2"})}), 2);
    CHECK(half.lo == std::vector<std::int64_t>{1});
    CHECK(half.hi == std::vector<std::int64_t>{1});

    CHECK_THROWS_AS(bounding_box(triangle_p(3), 0), std::invalid_argument);
    CHECK_FALSE(box.empty());
}

TEST_CASE("lattice enumeration is lexicographic and complete")
{
    LatticeBox box;
    box.lo = {0, 0};
    box.hi = {1, 1};
    std::vector<std::vector<std::int64_t>> seen;
    for_each_lattice_point(box, [&](const std::vector<std::int64_t>& p) {
        seen.push_back(p);
    });
    const std::vector<std::vector<std::int64_t>> expect = {
        {0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(seen == expect);

    LatticeBox hollow;
    hollow.lo = {2};
    hollow.hi = {1};
    std::size_t n = 0;
    for_each_lattice_point(hollow, [&](const std::vector<std::int64_t>&) { ++n; });
    CHECK(n == 0);
    CHECK(hollow.empty());
}

TEST_CASE("polytope counts match the independent oracles")
{
    RationalPolytope square({pti({0, 0}), pti({1, 0}), pti({0, 1}), pti({1, 1})});
    for (long k = 1; k <= 6; ++k)
        CHECK(count_points(square, k) == Int((k + 1) * (k + 1)));

    for (long d : {2L, 3L, 4L, 5L, 8L})
        for (long k = 1; k <= 8; ++k)
            CHECK(count_points(triangle_p(d), k) == Int(support::triangle_count(d, k)));

    RationalPolytope pyr({pti({0, 0, 0}), pti({1, 0, 0}), pti({1, 1, 0}),
                          pti({0, 1, 0}), pt({"1/2", "0", "1/2"})});
    CHECK(count_points(pyr, 1) == 4);
    CHECK(count_points(pyr, 2) == 10);
    CHECK(count_points(pyr, 3) == 20);
    for (long k = 1; k <= 6; ++k)
        CHECK(count_points(pyr, k) == Int(support::pyramid_count(k)));

    for (long d : {2L, 3L, 5L})
        for (long k = 1; k <= 6; ++k) {
            RationalPolytope quad({pti({0, 0}), pti({d, 0}),
                                   Point{Rat(1), Rat(d - 1, d)},
                                   Point{Rat(1), Rat(-(d - 1), d)}});
            CHECK(count_points(quad, k) == Int(support::quadrilateral_count(d, k)));
        }
}

TEST_CASE("interior counts match the strict oracles")
{
    for (long d : {2L, 3L, 4L})
        for (long k = 1; k <= 8; ++k)
            CHECK(count_interior(triangle_p(d), k) ==
                  Int(support::triangle_interior_count(d, k)));

    RationalPolytope pyr({pti({0, 0, 0}), pti({1, 0, 0}), pti({1, 1, 0}),
                          pti({0, 1, 0}), pt({"1/2", "0", "1/2"})});
    for (long k = 1; k <= 6; ++k)
        CHECK(count_interior(pyr, k) == Int(support::pyramid_interior_count(k)));

    RationalPolytope square({pti({0, 0}), pti({1, 0}), pti({0, 1}), pti({1, 1})});
    for (long k = 1; k <= 5; ++k)
        CHECK(count_interior(square, k) == Int((k - 1) * (k - 1)));

    // Relative interior of a segment: endpoints excluded.
    RationalPolytope seg({pti({0}), pti({3})});
    CHECK(count_interior(seg, 1) == 2);
    CHECK(count_points(seg, 1) == 4);
}

TEST_CASE("lower-dimensional and open simplices count correctly")
{
    // Segment [0, 1/2] along a diagonal of the plane.
    RationalPolytope diag({pti({0, 0}), Point{Rat(1, 2), Rat(1, 2)}});
    CHECK(count_points(diag, 1) == 1);
    CHECK(count_points(diag, 2) == 2);
    CHECK(count_points(diag, 4) == 3);

    Simplex closed_seg({pti({0}), pti({1})});
    Simplex open_seg = closed_seg.with_openness(Openness::RelativelyOpen);
    CHECK(count_points(closed_seg, 3) == 4);
    CHECK(count_points(open_seg, 3) == 2);

    Simplex half_pt({pt({"1/2"})});
    CHECK(count_points(half_pt, 1) == 0);
    CHECK(count_points(half_pt, 2) == 1);
    CHECK(count_points(half_pt, 3) == 0);

    // Open triangle: strictly interior points of the dilate.
    Simplex tri({pti({0, 0}), pti({3, 0}), pti({0, 3})},
                Openness::RelativelyOpen);
    CHECK(count_points(tri, 1) == 1);
    CHECK(count_points(tri.closure(), 1) == 10);
}

TEST_CASE("segment counts follow the floor formula")
{
    for (long p : {1L, 2L, 3L, 5L})
        for (long qden : {2L, 3L, 4L, 5L})
            for (long k = 1; k <= 10; ++k) {
                RationalPolytope seg({pti({0}), Point{Rat(p, qden)}});
                CHECK(count_points(seg, k) == Int(support::segment_count(p, qden, k)));
            }
}

TEST_CASE("huge-coefficient forms fall back to exact big-integer evaluation")
{
    // Two descriptions of x >= 0 on the segment [0, 1]: unit coefficients
    // (fast path) and the same inequality scaled by 2^70 (exact path).
    const Int huge = Int(1) << 70;
    RegionForms small_f, big_f;
    small_f.inequalities.push_back({{Int(1)}, Int(0)});         // x >= 0
    small_f.inequalities.push_back({{Int(-1)}, Int(1)});        // x <= k
    big_f.inequalities.push_back({{huge}, Int(0)});             // 2^70 x >= 0
    big_f.inequalities.push_back({{-huge}, huge});              // scaled x <= k

    LatticeBox box;
    box.lo = {-2};
    box.hi = {5};
    for (std::int64_t k = 1; k <= 3; ++k) {
        DilateTester fast(small_f, false, box, k);
        DilateTester slow(big_f, false, box, k);
        for (std::int64_t x = box.lo[0]; x <= box.hi[0]; ++x) {
            CHECK(fast.contains({x}) == slow.contains({x}));
        }
    }
}

TEST_CASE("form evaluation matches the tester verdicts")
{
    RationalPolytope t3 = triangle_p(3);
    RegionForms forms = polytope_forms(t3);
    const std::int64_t k = 2;
    LatticeBox box = bounding_box(t3, k);
    DilateTester tester(forms, false, box, k);
    Int total = 0;
    for_each_lattice_point(box, [&](const std::vector<std::int64_t>& p) {
        bool manual = true;
        Point x;
        for (auto c : p)
            x.push_back(Rat(c));
        for (const auto& f : forms.inequalities)
            if (form_value(f, x, k) < 0)
                manual = false;
        for (const auto& f : forms.equalities)
            if (form_value(f, x, k) != 0)
                manual = false;
        CHECK(tester.contains(p) == manual);
        if (manual)
            ++total;
    });
    CHECK(total == count_points(t3, k));
    CHECK(total == Int(support::triangle_count(3, k)));
}
