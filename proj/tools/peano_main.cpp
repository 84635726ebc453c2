#include "peano/analysis.hpp"
#include "peano/assembler.hpp"
#include "peano/bitmap.hpp"
#include "peano/errors.hpp"
#include "peano/io.hpp"
#include "peano/kernels.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace peano;

struct SpaceArgs {
    std::string shape;
    int size = 0;
    int depth = -1;
    std::string bitmap;
    int threshold = 127;
};

void add_space_options(CLI::App* cmd, SpaceArgs& args) {
    cmd->add_option("--shape", args.shape, "generator shape")
        ->check(CLI::IsMember({"interval", "square", "carpet", "gasket"}));
    cmd->add_option("--size", args.size, "cell count per side (interval, square)");
    cmd->add_option("--depth", args.depth, "recursion depth (carpet, gasket)");
    cmd->add_option("--bitmap", args.bitmap, "PGM/PBM raster input");
    cmd->add_option("--threshold", args.threshold, "foreground threshold for PGM input");
}

Continuum make_space(const SpaceArgs& args) {
    const bool has_shape = !args.shape.empty();
    const bool has_bitmap = !args.bitmap.empty();
    if (has_shape == has_bitmap)
        throw CLI::ValidationError("space", "exactly one of --shape and --bitmap is required");
    if (has_bitmap) return load_bitmap_file(args.bitmap, args.threshold);
    if (args.shape == "interval" || args.shape == "square") {
        if (args.size < 1) throw CLI::ValidationError("space", "--size must be >= 1");
        return generate(args.shape, args.size);
    }
    if (args.depth < 0) throw CLI::ValidationError("space", "--depth must be >= 0");
    return generate(args.shape, args.depth);
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

int pipeline_error(const error& e) {
    nlohmann::json j;
    j["error"] = errc_name(e.code());
    j["message"] = e.what();
    std::cerr << j.dump() << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"surjective curves with prescribed continuity modulus on discretized continua"};
    app.require_subcommand(1);

    SpaceArgs space;
    int levels = 0;
    double alpha = 4.0;
    double holder_c = 1.0;
    std::uint64_t seed = 0;
    std::size_t budget = 20;
    std::string out_path, cert_path, svg_path, curve_path;

    auto add_common = [&](CLI::App* cmd, bool with_space = true) {
        if (with_space) add_space_options(cmd, space);
        cmd->add_option("--seed", seed, "subsampling seed");
        cmd->add_option("--out", out_path, "output file ('-' for stdout)");
        return cmd;
    };

    auto* gen = add_common(app.add_subcommand("gen", "generate a continuum, emit cells CSV"));

    auto* cover = add_common(app.add_subcommand("cover", "emit the cover-count table CSV"));
    cover->add_option("--levels", levels, "levels n = 0..N")->required();
    cover->add_option("--budget", budget, "exhaustive-search cell budget");

    auto* sdim = add_common(app.add_subcommand("sdim", "dimension report JSON"));
    sdim->add_option("--levels", levels, "levels n = 0..N")->required();
    sdim->add_option("--budget", budget, "exhaustive-search cell budget");

    auto* curve = add_common(app.add_subcommand("curve", "build a certified curve"));
    curve->add_option("--alpha", alpha, "modulus exponent: Omega(t) = C t^(1/alpha)")
        ->check(CLI::PositiveNumber);
    curve->add_option("--holder-C", holder_c, "modulus constant C")->check(CLI::PositiveNumber);
    curve->add_option("--levels", levels, "cover depth N (default: grid resolution)");
    curve->add_option("--cert", cert_path, "certificate JSON output");
    curve->add_option("--svg", svg_path, "SVG render output");
    curve->add_option("--budget", budget, "exhaustive-search cell budget");

    auto* verify = app.add_subcommand("verify", "check a curve CSV against a modulus");
    verify->add_option("--curve", curve_path, "curve CSV produced by `curve`")->required();
    verify->add_option("--alpha", alpha, "modulus exponent")->check(CLI::PositiveNumber);
    verify->add_option("--holder-C", holder_c, "modulus constant C")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "subsampling seed");
    verify->add_option("--out", out_path, "report JSON output ('-' for stdout)");

    auto* render = add_common(app.add_subcommand("render", "render a curve CSV to SVG"));
    render->add_option("--curve", curve_path, "curve CSV produced by `curve`")->required();
    render->add_option("--svg", svg_path, "SVG output path")->required();

    auto* report = add_common(app.add_subcommand("report", "dimensions + certified curve, one JSON"));
    report->add_option("--alpha", alpha, "modulus exponent")->check(CLI::PositiveNumber);
    report->add_option("--holder-C", holder_c, "modulus constant C")->check(CLI::PositiveNumber);
    report->add_option("--levels", levels, "cover depth N (default: grid resolution)");
    report->add_option("--budget", budget, "exhaustive-search cell budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) {
            const Continuum X = make_space(space);
            std::ostringstream csv;
            csv.precision(17);
            csv << "id,x,y\n";
            for (cell_id c = 0; c < static_cast<cell_id>(X.size()); ++c)
                csv << c << ',' << X.x(c) << ',' << X.y(c) << '\n';
            emit(out_path, csv.str());
            nlohmann::json j{{"format_version", kFormatVersion},
                             {"cells", X.size()},
                             {"diameter", X.diam()},
                             {"min_cell_distance", X.min_cell_distance()},
                             {"kernels", kernels::active().name}};
            std::cerr << j.dump() << "\n";
            return 0;
        }
        if (cover->parsed()) {
            const Continuum X = make_space(space);
            emit(out_path, sierpinski_table(X, levels, budget).to_csv());
            return 0;
        }
        if (sdim->parsed()) {
            const Continuum X = make_space(space);
            emit(out_path, dimension_report_json(dimension_report(X, levels, budget)));
            return 0;
        }
        if (curve->parsed()) {
            const Continuum X = make_space(space);
            const int N = levels > 0 ? levels : default_level_count(X);
            AssembleOptions opts;
            opts.budget = budget;
            opts.seed = seed;
            const HolderCurve result = assemble(X, ModulusSpec::power(holder_c, alpha), N, opts);
            emit(out_path, result.curve.to_csv(X));
            if (!cert_path.empty()) write_file(cert_path, certificate_json(result));
            if (!svg_path.empty())
                write_file(svg_path, render_svg(curve_geometry(X, result.curve), X));
            if (!result.passed) {
                nlohmann::json j{{"error", "CertificateFailure"},
                                 {"message", "certificate did not pass"},
                                 {"coverage", result.coverage},
                                 {"worst_ratio", result.worst_ratio}};
                std::cerr << j.dump() << "\n";
                return 1;
            }
            return 0;
        }
        if (verify->parsed()) {
            const CurveGeometry g = parse_curve_csv_file(curve_path);
            const ModulusSpec omega = ModulusSpec::power(holder_c, alpha);
            const auto grid = default_modulus_grid(g, 100000, seed);
            const VerifyResult res = verify_certificate(g, omega, grid, 100000, seed);
            emit(out_path.empty() ? "-" : out_path, verify_report_json(res));
            return res.passed ? 0 : 1;
        }
        if (render->parsed()) {
            const Continuum X = make_space(space);
            const CurveGeometry g = parse_curve_csv_file(curve_path);
            write_file(svg_path, render_svg(g, X));
            return 0;
        }
        if (report->parsed()) {
            const Continuum X = make_space(space);
            const int N = levels > 0 ? levels : default_level_count(X);
            AssembleOptions opts;
            opts.budget = budget;
            opts.seed = seed;
            const DimensionReport dims = dimension_report(X, std::max(N, 2), budget);
            const HolderCurve result = assemble(X, ModulusSpec::power(holder_c, alpha), N, opts);
            nlohmann::json j;
            j["format_version"] = kFormatVersion;
            j["dimensions"] = nlohmann::json::parse(dimension_report_json(dims));
            j["certificate"] = nlohmann::json::parse(certificate_json(result));
            emit(out_path, j.dump(2) + "\n");
            return result.passed ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        return pipeline_error(e);
    }
    return 2;
}
