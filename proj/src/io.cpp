#include "peano/io.hpp"

#include "peano/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace peano {

using nlohmann::json;

std::string certificate_json(const HolderCurve& result) {
    json j;
    j["format_version"] = kFormatVersion;
    j["s"] = result.s;
    j["coverage"] = result.coverage;
    j["passed"] = result.passed;
    j["levels_certified"] = result.levels;
    j["worst_ratio"] = result.worst_ratio;
    j["worst_t"] = result.worst_t;
    json rows = json::array();
    for (const auto& row : result.certificate) {
        rows.push_back({{"n", row.n},
                        {"delta", row.delta},
                        {"allowed", row.allowed},
                        {"observed", row.observed}});
    }
    j["levels"] = rows;
    return j.dump(2) + "\n";
}

std::string skeleton_json(const Skeleton& sk) {
    json j;
    j["format_version"] = kFormatVersion;
    j["s"] = sk.s;
    json points = json::array();
    for (const auto& p : sk.points) points.push_back({{"t", p.t}, {"cell", p.cell}});
    j["points"] = points;
    json gaps = json::array();
    for (const auto& gap : sk.gaps) {
        gaps.push_back({{"u", gap.u},
                        {"v", gap.v},
                        {"level", gap.level},
                        {"connector_cells", gap.connector_cells}});
    }
    j["gaps"] = gaps;
    return j.dump(2) + "\n";
}

std::string dimension_report_json(const DimensionReport& rep) {
    json j;
    j["format_version"] = kFormatVersion;
    j["box_dim"] = rep.box_dim;
    j["s_dim"] = rep.s_dim;
    j["s_dim_window"] = {rep.window_lo, rep.window_hi};
    j["holder_upper"] = rep.holder_upper;
    j["residual"] = rep.residual;
    j["box_residual"] = rep.box_residual;
    return j.dump(2) + "\n";
}

std::string verify_report_json(const VerifyResult& res) {
    json j;
    j["format_version"] = kFormatVersion;
    j["passed"] = res.passed;
    j["worst_ratio"] = res.worst_ratio;
    j["worst_t"] = res.worst_t;
    j["worst_omega_hat"] = res.worst_omega_hat;
    j["worst_pair"] = {res.worst_i, res.worst_j};
    return j.dump(2) + "\n";
}

std::string modulus_csv(const ModulusTable& table, const ModulusSpec* omega) {
    std::ostringstream out;
    out.precision(17);
    out << "t,omega_hat,omega_allowed\n";
    for (std::size_t i = 0; i < table.t.size(); ++i) {
        out << table.t[i] << ',' << table.omega_hat[i] << ',';
        if (omega) out << omega->omega(table.t[i]);
        out << '\n';
    }
    return out.str();
}

CurveGeometry parse_curve_csv(std::istream& in) {
    CurveGeometry g;
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,cell_id,x,y", 0) != 0)
        throw error(errc::bad_input, "curve CSV must start with header t,cell_id,x,y");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double t = 0, x = 0, y = 0;
        long cell = 0;
        if (std::sscanf(line.c_str(), "%lf,%ld,%lf,%lf", &t, &cell, &x, &y) != 4)
            throw error(errc::bad_input, "malformed curve CSV row: " + line);
        g.ts.push_back(t);
        g.xs.push_back(x);
        g.ys.push_back(y);
    }
    if (g.ts.empty()) throw error(errc::bad_input, "curve CSV has no rows");
    return g;
}

CurveGeometry parse_curve_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::bad_input, "cannot open curve file: " + path);
    return parse_curve_csv(in);
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

std::string render_svg(const CurveGeometry& g, const Continuum& X) {
    if (g.ts.empty()) throw error(errc::bad_input, "cannot render an empty curve");
    double minx = X.x(0), maxx = X.x(0), miny = X.y(0), maxy = X.y(0);
    for (cell_id c = 0; c < static_cast<cell_id>(X.size()); ++c) {
        minx = std::min(minx, X.x(c));
        maxx = std::max(maxx, X.x(c));
        miny = std::min(miny, X.y(c));
        maxy = std::max(maxy, X.y(c));
    }
    const double r = X.size() > 1 ? X.min_cell_distance() / 4 : 0.1;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(minx) << ' '
        << fmt(miny) << ' ' << fmt(maxx - minx) << ' ' << fmt(maxy - miny) << "\">\n";
    out << "<g fill=\"#d0d0d0\">\n";
    for (cell_id c = 0; c < static_cast<cell_id>(X.size()); ++c)
        out << "<circle cx=\"" << fmt(X.x(c)) << "\" cy=\"" << fmt(X.y(c)) << "\" r=\""
            << fmt(r) << "\"/>\n";
    out << "</g>\n";
    out << "<polyline fill=\"none\" stroke=\"#c02020\" stroke-width=\"" << fmt(r / 2)
        << "\" points=\"";
    for (std::size_t i = 0; i < g.ts.size(); ++i) {
        if (i) out << ' ';
        out << fmt(g.xs[i]) << ',' << fmt(g.ys[i]);
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw error(errc::bad_input, "cannot write file: " + path);
    out << content;
}

} // namespace peano
