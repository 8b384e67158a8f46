#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <string>

#include "support.hpp"
#include "qpc/io.hpp"

using namespace qpc;
using support::pt;
using support::pti;

TEST_CASE("rationals read back from strings and plain integers")
{
    CHECK(rational_from_json(Json("3/4"), "x") == Rat(3, 4));
    CHECK(rational_from_json(Json(5), "x") == Rat(5));
    CHECK(rational_from_json(Json(-2), "x") == Rat(-2));
    CHECK_THROWS_AS(rational_from_json(Json(1.5), "x"), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json("1/0"), "x"), std::invalid_argument);
    CHECK(rational_to_json(Rat(-10, 4)) == Json("-5/2"));
}

TEST_CASE("polytope documents are canonical and stable")
{
    const std::string golden =
        "{\n"
        "  \"dim\": 1,\n"
        "  \"vertices\": [\n"
        "    [\n"
        "      \"0\"\n"
        "    ],\n"
        "    [\n"
        "      \"1/2\"\n"
        "    ]\n"
        "  ]\n"
        "}\n";
    CHECK(emit(polytope_to_json(segment(Rat(0), Rat(1, 2)))) == golden);

    // Redundant input points vanish; vertex order is canonical.
    Json j;
    j["dim"] = 2;
    j["vertices"] = Json::array();
    for (const char* v : {"1,1", "0,0", "1,0", "0,1"}) {
        std::string s(v);
        const auto comma = s.find(',');
        j["vertices"].push_back(
            Json::array({s.substr(0, comma), s.substr(comma + 1)}));
    }
    j["vertices"].push_back(Json::array({"1/2", "1/2"}));
    RationalPolytope p = polytope_from_json(j);
    CHECK(p == unit_square());
    CHECK(polytope_to_json(p) == polytope_to_json(unit_square()));

    // Integer coordinates may be plain JSON numbers.
    Json ints;
    ints["dim"] = 2;
    ints["vertices"] = Json::array({Json::array({0, 0}), Json::array({3, 0}),
                                    Json::array({"1", "2/3"})});
    CHECK(polytope_from_json(ints) == collapse_triangle(3));
}

TEST_CASE("malformed polytope documents are rejected")
{
    CHECK_THROWS_AS(polytope_from_json(Json::array()), std::invalid_argument);

    Json no_dim;
    no_dim["vertices"] = Json::array({Json::array({"0"})});
    CHECK_THROWS_AS(polytope_from_json(no_dim), std::invalid_argument);

    Json empty;
    empty["dim"] = 2;
    empty["vertices"] = Json::array();
    CHECK_THROWS_AS(polytope_from_json(empty), std::invalid_argument);

    Json mismatch;
    mismatch["dim"] = 2;
    mismatch["vertices"] = Json::array({Json::array({"0"})});
    CHECK_THROWS_AS(polytope_from_json(mismatch), std::invalid_argument);

    Json badrat;
    badrat["dim"] = 1;
    badrat["vertices"] = Json::array({Json::array({"1/0"})});
    CHECK_THROWS_AS(polytope_from_json(badrat), std::invalid_argument);
}

TEST_CASE("polygon documents preserve the cyclic order")
{
    auto samples = reflexive_samples();
    for (const auto& poly : samples) {
        Json j = polygon_to_json(poly);
        CHECK(polygon_from_json(j) == poly);
        CHECK(polygon_to_json(polygon_from_json(j)) == j);
    }
}

TEST_CASE("simplex documents carry openness")
{
    Simplex open_tri({pti({0, 0}), pti({1, 0}), pti({0, 1})},
                     Openness::RelativelyOpen);
    Json j = simplex_to_json(open_tri);
    CHECK(j["open"] == Json(true));
    Simplex back = simplex_from_json(j);
    CHECK(back.is_open());
    CHECK(back.vertices() == open_tri.vertices());

    // "open" defaults to false.
    Json closed;
    closed["vertices"] = Json::array({Json::array({"0"}), Json::array({"1"})});
    CHECK_FALSE(simplex_from_json(closed).is_open());

    // Affine dependence surfaces as a validation error.
    Json degenerate;
    degenerate["vertices"] = Json::array({Json::array({"0", "0"}),
                                          Json::array({"1", "1"}),
                                          Json::array({"2", "2"})});
    CHECK_THROWS_AS(simplex_from_json(degenerate), std::invalid_argument);
}

TEST_CASE("map documents require integer matrices")
{
    AffineUnimodularMap u{{{Int(2), Int(-3)}, {Int(-1), Int(1)}},
                          {Rat(1), Rat(1)},
                          MapMode::Strict};
    Json j = map_to_json(u);
    AffineUnimodularMap back = map_from_json(j, MapMode::Strict);
    CHECK(back.matrix == u.matrix);
    CHECK(back.translation == u.translation);
    CHECK(back.mode == MapMode::Strict);

    Json frac = j;
    frac["matrix"][0][0] = "1/2";
    CHECK_THROWS_AS(map_from_json(frac, MapMode::Strict), std::invalid_argument);

    Json nomat;
    nomat["translation"] = Json::array({"0"});
    CHECK_THROWS_AS(map_from_json(nomat, MapMode::Strict), std::invalid_argument);
}

TEST_CASE("certificates of every flavor round-trip exactly")
{
    auto strict = collapse_triangle_certificate(2);
    Json js = certificate_to_json(strict);
    CHECK(js["mode"] == Json("strict"));
    auto strict2 = certificate_from_json(js);
    CHECK(certificate_to_json(strict2) == js);
    CHECK(verify(strict2).pass);

    auto weak = weak_segment_certificate(2);
    Json jw = certificate_to_json(weak);
    CHECK(jw["mode"]["weak"] == Json(2));
    auto weak2 = certificate_from_json(jw);
    CHECK(weak2.mode == CertMode::Weak);
    CHECK(weak2.weak_scale == 2);
    CHECK(certificate_to_json(weak2) == jw);
    CHECK(verify(weak2).pass);

    // Union-of-simplices target.
    Simplex lower({pti({0, 0}), pti({1, 0}), pti({1, 1})});
    auto pieces = half_open_decompose(lower, {});
    DecompositionCertificate uni{
        RationalPolytope({pti({0, 0}), pti({1, 0}), pti({1, 1})}),
        pieces,
        pieces,
        std::vector<AffineUnimodularMap>(pieces.size(), identity_map(2)),
        CertMode::Strict,
        1};
    Json ju = certificate_to_json(uni);
    CHECK(ju["target"].contains("pieces"));
    auto uni2 = certificate_from_json(ju);
    CHECK(certificate_to_json(uni2) == ju);
    CHECK(verify(uni2).pass);
}

TEST_CASE("malformed certificates are rejected with clear errors")
{
    Json good = certificate_to_json(collapse_triangle_certificate(2));

    for (const char* key : {"source", "target", "pieces", "maps", "mode"}) {
        Json j = good;
        j.erase(key);
        CHECK_THROWS_AS(certificate_from_json(j), std::invalid_argument);
    }

    Json badmode = good;
    badmode["mode"] = "sloppy";
    CHECK_THROWS_AS(certificate_from_json(badmode), std::invalid_argument);

    Json zeroscale = good;
    zeroscale["mode"] = Json::object();
    zeroscale["mode"]["weak"] = 0;
    CHECK_THROWS_AS(certificate_from_json(zeroscale), std::invalid_argument);

    Json nopieces = good;
    nopieces["pieces"] = Json::array();
    CHECK_THROWS_AS(certificate_from_json(nopieces), std::invalid_argument);
}

TEST_CASE("quasi-polynomial documents round-trip and validate")
{
    const std::string golden =
        "{\n"
        "  \"degree\": 2,\n"
        "  \"period\": 1,\n"
        "  \"coefficients\": [\n"
        "    [\n"
        "      \"1\",\n"
        "      \"2\",\n"
        "      \"1\"\n"
        "    ]\n"
        "  ]\n"
        "}\n";
    auto sq = QuasiPolynomial::from_polynomial({Rat(1), Rat(2), Rat(1)});
    CHECK(emit(quasipolynomial_to_json(sq)) == golden);
    CHECK(quasipolynomial_from_json(quasipolynomial_to_json(sq)) == sq);

    auto f = ehrhart_of(segment(Rat(0), Rat(1, 3)));
    CHECK(quasipolynomial_from_json(quasipolynomial_to_json(f)) == f);

    Json bad;
    bad["degree"] = 1;
    bad["period"] = 2;
    bad["coefficients"] = Json::array({Json::array({"1", "1"})});
    CHECK_THROWS_AS(quasipolynomial_from_json(bad), std::invalid_argument);
}

TEST_CASE("report documents expose verdicts and witnesses")
{
    auto report = minimal_quasi_period(collapse_triangle(3));
    Json j = collapse_report_to_json(report);
    CHECK(j["denominator"] == Json(3));
    CHECK(j["minimal_quasi_period"] == Json(1));
    CHECK(j["collapsed"] == Json(true));
    CHECK(j["quasi_polynomial"]["degree"] == Json(2));

    CHECK(emit(verification_report_to_json(VerificationReport::ok())) ==
          "{\n  \"verdict\": \"pass\"\n}\n");

    auto fail = VerificationReport::fail(
        FailedCheck::Coverage, "point (0, 0) of dilate 1 is covered 0 times",
        Point{Rat(0), Rat(0)}, 1);
    Json jf = verification_report_to_json(fail);
    CHECK(jf["verdict"] == Json("fail"));
    CHECK(jf["failed_check"] == Json("coverage"));
    CHECK(jf["witness"]["point"] == Json::array({"0", "0"}));
    CHECK(jf["witness"]["dilation"] == Json(1));
    CHECK(jf["detail"] == Json("point (0, 0) of dilate 1 is covered 0 times"));
}

TEST_CASE("file helpers load what they store")
{
    const std::string path = "io_roundtrip_scratch.json";
    Json doc = polytope_to_json(collapse_triangle(5));
    write_text_file(path, emit(doc));
    CHECK(load_json_file(path) == doc);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_json_file("definitely_missing_file.json"),
                    std::invalid_argument);

    const std::string broken = "io_broken_scratch.json";
    write_text_file(broken, "{ not json");
    CHECK_THROWS_AS(load_json_file(broken), Json::parse_error);
    std::remove(broken.c_str());
}
