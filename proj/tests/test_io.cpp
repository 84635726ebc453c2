#include "peano/io.hpp"

#include "peano/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <sstream>

using namespace peano;

TEST_CASE("curve CSV round trip") {
    const Continuum X = make_interval(9);
    const HolderCurve hc = assemble(X, ModulusSpec::power(1.0, 2.0), default_level_count(X));
    const std::string csv = hc.curve.to_csv(X);
    std::istringstream in(csv);
    const CurveGeometry g = parse_curve_csv(in);
    REQUIRE(g.ts.size() == hc.curve.breakpoints.size());
    for (std::size_t i = 0; i < g.ts.size(); ++i) {
        CHECK(g.ts[i] == hc.curve.breakpoints[i].t);
        CHECK(g.xs[i] == X.x(hc.curve.breakpoints[i].cell));
    }
    std::istringstream bad("nope\n1,2,3,4\n");
    CHECK_THROWS_AS(parse_curve_csv(bad), error);
}

TEST_CASE("json payloads carry the declared fields") {
    const Continuum X = make_interval(9);
    const HolderCurve hc = assemble(X, ModulusSpec::power(1.0, 2.0), default_level_count(X));
    const auto cert = nlohmann::json::parse(certificate_json(hc));
    CHECK(cert["format_version"] == kFormatVersion);
    CHECK(cert["passed"].is_boolean());
    CHECK(cert["coverage"] == 1.0);
    CHECK(cert["levels"].is_array());
    REQUIRE(!cert["levels"].empty());
    CHECK(cert["levels"][0].contains("n"));
    CHECK(cert["levels"][0].contains("delta"));
    CHECK(cert["levels"][0].contains("allowed"));
    CHECK(cert["levels"][0].contains("observed"));

    const auto raw = raw_cover_levels(X, 3);
    const std::vector<Cover> covers(raw.begin() + 1, raw.end());
    const Skeleton sk = build_skeleton(X, covers, {0.75, 0.5, 0.25});
    const auto skj = nlohmann::json::parse(skeleton_json(sk));
    CHECK(skj["s"] == sk.s);
    CHECK(skj["points"].size() == sk.points.size());
    CHECK(skj["gaps"].size() == sk.gaps.size());
    CHECK(skj["gaps"][0].contains("connector_cells"));

    const auto rep = nlohmann::json::parse(
        dimension_report_json(dimension_report(make_interval(33), 4)));
    CHECK(rep.contains("box_dim"));
    CHECK(rep.contains("s_dim"));
    CHECK(rep.contains("s_dim_window"));
    CHECK(rep.contains("holder_upper"));
}

TEST_CASE("modulus csv") {
    ModulusTable t;
    t.t = {0.5, 1.0};
    t.omega_hat = {0.1, 0.2};
    const ModulusSpec omega = ModulusSpec::power(1.0, 2.0);
    const std::string csv = modulus_csv(t, &omega);
    CHECK(csv.rfind("t,omega_hat,omega_allowed\n", 0) == 0);
    CHECK(csv.find("0.5,0.1") != std::string::npos);
}

TEST_CASE("svg rendering is deterministic and structurally right") {
    const Continuum X = make_sierpinski_carpet(1);
    const HolderCurve hc = assemble(X, ModulusSpec::power(1.0, 4.0), default_level_count(X));
    const CurveGeometry g = curve_geometry(X, hc.curve);
    const std::string svg1 = render_svg(g, X);
    const std::string svg2 = render_svg(g, X);
    CHECK(svg1 == svg2); // byte-identical on identical input

    // polyline vertex count equals the breakpoint count
    const auto pos = svg1.find("points=\"");
    REQUIRE(pos != std::string::npos);
    const auto end = svg1.find('"', pos + 8);
    const std::string pts = svg1.substr(pos + 8, end - pos - 8);
    const std::size_t vertices =
        static_cast<std::size_t>(std::count(pts.begin(), pts.end(), ' ')) + 1;
    CHECK(vertices == g.ts.size());

    // viewBox is the cell bounding box (origin at 0,0 for grid shapes)
    CHECK(svg1.find("viewBox=\"0.000000 0.000000") != std::string::npos);
}
