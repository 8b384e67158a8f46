// Command-line front end: exact lattice-point counts, Ehrhart
// quasi-polynomials, quasi-period collapse reports, equidecomposability
// certificate verification, reciprocity and twelve checks, and emission of
// the built-in example objects.
//
// All outputs are deterministic JSON on stdout. Errors are JSON on stderr.
// Exit codes: 0 success (and verification passed), 1 a verification-style
// check failed, 2 malformed input or usage error.

#include "qpc/qpc.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

namespace {

using qpc::Json;

void emit_output(const Json& j, const std::optional<std::string>& out_path)
{
    const std::string text = qpc::emit(j);
    if (out_path)
        qpc::write_text_file(*out_path, text);
    else
        std::cout << text;
}

[[noreturn]] void fail(const std::string& kind, const std::string& message)
{
    Json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    std::cerr << qpc::emit(j);
    std::exit(2);
}

// "D=5" (or a bare integer) -> 5
std::int64_t parse_param(const std::string& raw)
{
    std::string value = raw;
    if (const auto eq = raw.find('='); eq != std::string::npos) {
        if (raw.substr(0, eq) != "D")
            fail("usage", "unknown parameter '" + raw.substr(0, eq) + "' (only D is supported)");
        value = raw.substr(eq + 1);
    }
    try {
        std::size_t used = 0;
        const std::int64_t v = std::stoll(value, &used);
        if (used != value.size())
            throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        fail("usage", "parameter must be an integer, got '" + raw + "'");
    }
}

Json example_document(const std::string& name, std::optional<std::int64_t> param)
{
    const std::int64_t d = param.value_or(3);
    if (name == "unit-square")
        return qpc::polytope_to_json(qpc::unit_square());
    if (name == "collapse-triangle")
        return qpc::polytope_to_json(qpc::collapse_triangle(d));
    if (name == "collapse-triangle-target")
        return qpc::polytope_to_json(qpc::collapse_triangle_target(d));
    if (name == "collapse-triangle-certificate")
        return qpc::certificate_to_json(qpc::collapse_triangle_certificate(d));
    if (name == "collapse-pyramid")
        return qpc::polytope_to_json(qpc::collapse_pyramid());
    if (name == "collapse-pyramid-target")
        return qpc::polytope_to_json(qpc::collapse_pyramid_target());
    if (name == "collapse-pyramid-certificate")
        return qpc::certificate_to_json(qpc::collapse_pyramid_certificate());
    if (name == "quadrilateral")
        return qpc::polytope_to_json(qpc::reflected_quadrilateral(d));
    if (name == "weak-segment-certificate")
        return qpc::certificate_to_json(
            qpc::weak_segment_certificate(param.value_or(2)));
    if (name == "reflexive-samples") {
        Json arr = Json::array();
        for (const auto& p : qpc::reflexive_samples())
            arr.push_back(qpc::polygon_to_json(p));
        Json j;
        j["polygons"] = arr;
        return j;
    }
    fail("usage",
         "unknown example '" + name +
             "'; available: unit-square, collapse-triangle, collapse-triangle-target, "
             "collapse-triangle-certificate, collapse-pyramid, collapse-pyramid-target, "
             "collapse-pyramid-certificate, quadrilateral, weak-segment-certificate, "
             "reflexive-samples");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Ehrhart quasi-polynomials, quasi-period collapse and "
                 "equidecomposability certificates"};
    app.require_subcommand(1);

    std::string polytope_path, certificate_path, polygon_path, example_name;
    std::string param_raw;
    std::optional<std::string> out_path;
    std::int64_t dilation = 1;
    std::int64_t max_k = 5;

    auto* cmd_count = app.add_subcommand("count", "Lattice points in the k-th dilate");
    cmd_count->add_option("--polytope", polytope_path, "Polytope JSON file")->required();
    cmd_count->add_option("--dilation", dilation, "Dilation factor k >= 1")->required();

    auto* cmd_ehrhart =
        app.add_subcommand("ehrhart", "Counting quasi-polynomial (period = denominator)");
    cmd_ehrhart->add_option("--polytope", polytope_path, "Polytope JSON file")->required();

    auto* cmd_collapse =
        app.add_subcommand("collapse", "Minimal quasi-period and collapse report");
    cmd_collapse->add_option("--polytope", polytope_path, "Polytope JSON file")->required();

    auto* cmd_verify =
        app.add_subcommand("verify", "Verify an equidecomposability certificate");
    cmd_verify->add_option("--certificate", certificate_path, "Certificate JSON file")
        ->required();

    auto* cmd_reciprocity = app.add_subcommand(
        "reciprocity", "Check (-1)^dim f(-k) against interior counts for k = 1..K");
    cmd_reciprocity->add_option("--polytope", polytope_path, "Polytope JSON file")
        ->required();
    cmd_reciprocity->add_option("--max-k", max_k, "Largest dilate to check (default 5)");

    auto* cmd_twelve = app.add_subcommand(
        "twelve", "Lattice length of a reflexive polygon plus its dual's is 12");
    cmd_twelve->add_option("--polygon", polygon_path,
                           "Polygon JSON file (vertices in cyclic order)")
        ->required();

    auto* cmd_example = app.add_subcommand("example", "Emit a built-in example object");
    cmd_example->add_option("--name", example_name, "Example name")->required();
    cmd_example->add_option("--param", param_raw, "Integer parameter, e.g. D=5");
    std::string out_raw;
    cmd_example->add_option("--out", out_raw, "Write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        Json j;
        j["error"]["kind"] = "usage";
        j["error"]["message"] = e.what();
        std::cerr << qpc::emit(j);
        return 2;
    }

    try {
        if (*cmd_count) {
            const auto p = qpc::polytope_from_json(qpc::load_json_file(polytope_path));
            Json j;
            j["count"] = qpc::to_int64(qpc::count_points(p, dilation));
            emit_output(j, std::nullopt);
            return 0;
        }
        if (*cmd_ehrhart) {
            const auto p = qpc::polytope_from_json(qpc::load_json_file(polytope_path));
            emit_output(qpc::quasipolynomial_to_json(qpc::ehrhart_of(p)), std::nullopt);
            return 0;
        }
        if (*cmd_collapse) {
            const auto p = qpc::polytope_from_json(qpc::load_json_file(polytope_path));
            emit_output(qpc::collapse_report_to_json(qpc::minimal_quasi_period(p)),
                        std::nullopt);
            return 0;
        }
        if (*cmd_verify) {
            const auto cert =
                qpc::certificate_from_json(qpc::load_json_file(certificate_path));
            const auto report = qpc::verify(cert);
            emit_output(qpc::verification_report_to_json(report), std::nullopt);
            return report.pass ? 0 : 1;
        }
        if (*cmd_reciprocity) {
            if (max_k < 1)
                fail("usage", "--max-k must be >= 1");
            const auto p = qpc::polytope_from_json(qpc::load_json_file(polytope_path));
            const auto r = qpc::reciprocity_check(p, max_k);
            Json j;
            j["verdict"] = r.pass ? "pass" : "fail";
            if (r.pass)
                j["checked_up_to"] = max_k;
            else
                j["failed_k"] = *r.failed_k;
            emit_output(j, std::nullopt);
            return r.pass ? 0 : 1;
        }
        if (*cmd_twelve) {
            const auto p = qpc::polygon_from_json(qpc::load_json_file(polygon_path));
            const auto r = qpc::twelve_check(p);
            Json j;
            j["length"] = qpc::to_int64(r.length);
            j["dual_length"] = qpc::to_int64(r.dual_length);
            j["sum"] = qpc::to_int64(r.length + r.dual_length);
            j["verdict"] = r.pass ? "pass" : "fail";
            emit_output(j, std::nullopt);
            return r.pass ? 0 : 1;
        }
        if (*cmd_example) {
            std::optional<std::int64_t> param;
            if (!param_raw.empty())
                param = parse_param(param_raw);
            if (!out_raw.empty())
                out_path = out_raw;
            emit_output(example_document(example_name, param), out_path);
            return 0;
        }
    } catch (const Json::parse_error& e) {
        fail("parse", e.what());
    } catch (const std::invalid_argument& e) {
        fail("invalid-input", e.what());
    } catch (const std::domain_error& e) {
        fail("domain", e.what());
    } catch (const std::overflow_error& e) {
        fail("overflow", e.what());
    } catch (const std::exception& e) {
        fail("internal", e.what());
    }
    return 2;
}
