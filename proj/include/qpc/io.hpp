#pragma once

// JSON interchange for every document the CLI reads or writes. Rationals
// travel as canonical lowest-terms strings ("p" or "p/q"), never as floats;
// key order is fixed (ordered_json) and arrays are emitted in canonical
// order, so re-emitting a parsed canonical document reproduces it byte for
// byte. Readers validate shape and types and throw std::invalid_argument
// with a message naming the offending part.

#include "qpc/affine_map.hpp"
#include "qpc/ehrhart.hpp"
#include "qpc/equidecomp.hpp"
#include "qpc/polytope.hpp"
#include "qpc/quasipoly.hpp"
#include "qpc/rational.hpp"
#include "qpc/reflexive.hpp"
#include "qpc/simplex.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpc {

using Json = nlohmann::ordered_json;

inline Json rational_to_json(const Rat& r) { return rational_to_string(r); }

/// Accepts a canonical rational string or a plain JSON integer.
inline Rat rational_from_json(const Json& j, const std::string& what)
{
    if (j.is_number_integer())
        return Rat(static_cast<std::int64_t>(j.get<std::int64_t>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument(what + " must be an integer or a rational string");
}

inline Json point_to_json(const Point& p)
{
    Json arr = Json::array();
    for (const auto& c : p)
        arr.push_back(rational_to_json(c));
    return arr;
}

inline Point point_from_json(const Json& j, const std::string& what)
{
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(what + " must be a nonempty array of rationals");
    Point p;
    p.reserve(j.size());
    for (const auto& c : j)
        p.push_back(rational_from_json(c, what + " coordinate"));
    return p;
}

namespace detail {

inline std::vector<Point> vertices_from_json(const Json& j, const std::string& what)
{
    if (!j.is_object())
        throw std::invalid_argument(what + " must be an object");
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw std::invalid_argument(what + " needs an integer \"dim\"");
    if (!j.contains("vertices") || !j["vertices"].is_array() || j["vertices"].empty())
        throw std::invalid_argument(what + " needs a nonempty \"vertices\" array");
    const auto n = j["dim"].get<std::int64_t>();
    if (n < 1)
        throw std::invalid_argument(what + " dimension must be >= 1");
    std::vector<Point> verts;
    for (const auto& vj : j["vertices"]) {
        Point v = point_from_json(vj, what + " vertex");
        if (v.size() != static_cast<std::size_t>(n))
            throw std::invalid_argument(what + " vertex does not match \"dim\"");
        verts.push_back(std::move(v));
    }
    return verts;
}

}  // namespace detail

/// {"dim": n, "vertices": [[...], ...]} with the canonical (sorted,
/// irredundant) vertex list.
inline Json polytope_to_json(const RationalPolytope& p)
{
    Json j;
    j["dim"] = p.ambient_dim();
    Json verts = Json::array();
    for (const auto& v : p.vertices())
        verts.push_back(point_to_json(v));
    j["vertices"] = verts;
    return j;
}

inline RationalPolytope polytope_from_json(const Json& j, const std::string& what = "polytope")
{
    return RationalPolytope(detail::vertices_from_json(j, what));
}

/// Same document shape as a polytope, but the vertex order is the cyclic
/// boundary order and is preserved.
inline Json polygon_to_json(const LatticePolygon& p)
{
    Json j;
    j["dim"] = 2;
    Json verts = Json::array();
    for (const auto& v : p.vertices())
        verts.push_back(point_to_json(v));
    j["vertices"] = verts;
    return j;
}

inline LatticePolygon polygon_from_json(const Json& j, const std::string& what = "polygon")
{
    return LatticePolygon(detail::vertices_from_json(j, what));
}

inline Json simplex_to_json(const Simplex& s)
{
    Json j;
    Json verts = Json::array();
    for (const auto& v : s.vertices())
        verts.push_back(point_to_json(v));
    j["vertices"] = verts;
    j["open"] = s.is_open();
    return j;
}

inline Simplex simplex_from_json(const Json& j, const std::string& what = "simplex")
{
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array() ||
        j["vertices"].empty())
        throw std::invalid_argument(what + " needs a nonempty \"vertices\" array");
    std::vector<Point> verts;
    for (const auto& vj : j["vertices"])
        verts.push_back(point_from_json(vj, what + " vertex"));
    bool open = false;
    if (j.contains("open")) {
        if (!j["open"].is_boolean())
            throw std::invalid_argument(what + " \"open\" must be a boolean");
        open = j["open"].get<bool>();
    }
    return Simplex(std::move(verts), open ? Openness::RelativelyOpen : Openness::Closed);
}

inline Json map_to_json(const AffineUnimodularMap& u)
{
    Json j;
    Json mat = Json::array();
    for (const auto& row : u.matrix) {
        Json r = Json::array();
        for (const auto& e : row)
            r.push_back(to_int64(e));
        mat.push_back(r);
    }
    j["matrix"] = mat;
    Json tr = Json::array();
    for (const auto& t : u.translation)
        tr.push_back(rational_to_json(t));
    j["translation"] = tr;
    return j;
}

inline AffineUnimodularMap map_from_json(const Json& j, MapMode mode,
                                         const std::string& what = "map")
{
    if (!j.is_object() || !j.contains("matrix") || !j["matrix"].is_array() ||
        j["matrix"].empty())
        throw std::invalid_argument(what + " needs a nonempty \"matrix\" array");
    if (!j.contains("translation") || !j["translation"].is_array())
        throw std::invalid_argument(what + " needs a \"translation\" array");
    AffineUnimodularMap u;
    u.mode = mode;
    for (const auto& rj : j["matrix"]) {
        if (!rj.is_array())
            throw std::invalid_argument(what + " matrix rows must be arrays");
        ZVec row;
        for (const auto& e : rj) {
            const Rat v = rational_from_json(e, what + " matrix entry");
            if (!is_integer(v))
                throw std::invalid_argument(what + " matrix entries must be integers");
            row.push_back(rat_num(v));
        }
        u.matrix.push_back(std::move(row));
    }
    for (const auto& e : j["translation"])
        u.translation.push_back(rational_from_json(e, what + " translation entry"));
    return u;
}

inline Json certificate_to_json(const DecompositionCertificate& cert)
{
    Json j;
    j["source"] = polytope_to_json(cert.source);
    if (const auto* poly = std::get_if<RationalPolytope>(&cert.target)) {
        j["target"] = polytope_to_json(*poly);
    } else {
        Json pieces = Json::array();
        for (const auto& s : std::get<std::vector<Simplex>>(cert.target))
            pieces.push_back(simplex_to_json(s));
        Json t;
        t["pieces"] = pieces;
        j["target"] = t;
    }
    Json pieces = Json::array();
    for (const auto& s : cert.pieces)
        pieces.push_back(simplex_to_json(s));
    j["pieces"] = pieces;
    Json maps = Json::array();
    for (const auto& u : cert.maps)
        maps.push_back(map_to_json(u));
    j["maps"] = maps;
    if (cert.mode == CertMode::Strict) {
        j["mode"] = "strict";
    } else {
        Json m;
        m["weak"] = cert.weak_scale;
        j["mode"] = m;
    }
    return j;
}

inline DecompositionCertificate certificate_from_json(const Json& j)
{
    if (!j.is_object())
        throw std::invalid_argument("certificate must be an object");
    for (const char* key : {"source", "target", "pieces", "maps", "mode"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("certificate needs \"") + key + "\"");

    CertMode mode = CertMode::Strict;
    std::int64_t weak_scale = 1;
    const auto& mj = j["mode"];
    if (mj.is_string() && mj.get<std::string>() == "strict") {
        mode = CertMode::Strict;
    } else if (mj.is_object() && mj.contains("weak") && mj["weak"].is_number_integer()) {
        mode = CertMode::Weak;
        weak_scale = mj["weak"].get<std::int64_t>();
        if (weak_scale < 1)
            throw std::invalid_argument("certificate weak scale must be >= 1");
    } else {
        throw std::invalid_argument(
            "certificate \"mode\" must be \"strict\" or {\"weak\": k}");
    }

    DecompositionCertificate cert{polytope_from_json(j["source"], "certificate source"),
                                  RationalPolytope({Point{Rat(0)}}),
                                  {},
                                  {},
                                  mode,
                                  weak_scale};
    const auto& tj = j["target"];
    if (tj.is_object() && tj.contains("pieces")) {
        if (!tj["pieces"].is_array() || tj["pieces"].empty())
            throw std::invalid_argument("certificate target union needs a nonempty \"pieces\" array");
        std::vector<Simplex> pieces;
        for (const auto& sj : tj["pieces"])
            pieces.push_back(simplex_from_json(sj, "certificate target piece"));
        cert.target = std::move(pieces);
    } else {
        cert.target = polytope_from_json(tj, "certificate target");
    }
    if (!j["pieces"].is_array() || j["pieces"].empty())
        throw std::invalid_argument("certificate needs a nonempty \"pieces\" array");
    for (const auto& sj : j["pieces"])
        cert.pieces.push_back(simplex_from_json(sj, "certificate piece"));
    if (!j["maps"].is_array())
        throw std::invalid_argument("certificate needs a \"maps\" array");
    const MapMode mm = (mode == CertMode::Weak) ? MapMode::Weak : MapMode::Strict;
    for (const auto& uj : j["maps"])
        cert.maps.push_back(map_from_json(uj, mm, "certificate map"));
    return cert;
}

inline Json quasipolynomial_to_json(const QuasiPolynomial& q)
{
    Json j;
    j["degree"] = q.degree();
    j["period"] = q.period();
    Json table = Json::array();
    for (std::int64_t r = 0; r < q.period(); ++r) {
        Json row = Json::array();
        for (int i = 0; i <= q.degree(); ++i)
            row.push_back(rational_to_json(q.coefficient(r, i)));
        table.push_back(row);
    }
    j["coefficients"] = table;
    return j;
}

inline QuasiPolynomial quasipolynomial_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("degree") || !j.contains("period") ||
        !j.contains("coefficients"))
        throw std::invalid_argument(
            "quasi-polynomial needs \"degree\", \"period\" and \"coefficients\"");
    if (!j["degree"].is_number_integer() || !j["period"].is_number_integer())
        throw std::invalid_argument("quasi-polynomial degree and period must be integers");
    const int degree = static_cast<int>(j["degree"].get<std::int64_t>());
    const std::int64_t period = j["period"].get<std::int64_t>();
    if (!j["coefficients"].is_array())
        throw std::invalid_argument("quasi-polynomial \"coefficients\" must be an array");
    std::vector<std::vector<Rat>> table;
    for (const auto& rj : j["coefficients"]) {
        if (!rj.is_array())
            throw std::invalid_argument("quasi-polynomial coefficient rows must be arrays");
        std::vector<Rat> row;
        for (const auto& e : rj)
            row.push_back(rational_from_json(e, "quasi-polynomial coefficient"));
        table.push_back(std::move(row));
    }
    return QuasiPolynomial(degree, period, std::move(table));
}

inline Json collapse_report_to_json(const CollapseReport& r)
{
    Json j;
    j["denominator"] = to_int64(r.denominator);
    j["minimal_quasi_period"] = r.minimal_quasi_period;
    j["collapsed"] = r.collapsed;
    j["quasi_polynomial"] = quasipolynomial_to_json(r.quasi_polynomial);
    return j;
}

inline Json verification_report_to_json(const VerificationReport& r)
{
    Json j;
    j["verdict"] = r.pass ? "pass" : "fail";
    if (!r.pass) {
        if (r.failed_check)
            j["failed_check"] = failed_check_name(*r.failed_check);
        if (r.witness_point || r.witness_dilation) {
            Json w;
            if (r.witness_point)
                w["point"] = point_to_json(*r.witness_point);
            if (r.witness_dilation)
                w["dilation"] = *r.witness_dilation;
            j["witness"] = w;
        }
        j["detail"] = r.detail;
    }
    return j;
}

inline std::string emit(const Json& j) { return j.dump(2) + "\n"; }

inline Json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return Json::parse(buf.str());
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

}  // namespace qpc
