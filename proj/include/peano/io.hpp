#pragma once

#include "peano/analysis.hpp"
#include "peano/assembler.hpp"
#include "peano/continuum.hpp"
#include "peano/path_builder.hpp"
#include "peano/skeleton.hpp"

#include <iosfwd>
#include <string>

namespace peano {

inline constexpr int kFormatVersion = 1;

std::string certificate_json(const HolderCurve& result);
std::string skeleton_json(const Skeleton& sk);
std::string dimension_report_json(const DimensionReport& rep);
std::string verify_report_json(const VerifyResult& res);
std::string modulus_csv(const ModulusTable& table, const ModulusSpec* omega = nullptr);

/// Parse a curve CSV (header t,cell_id,x,y) back into breakpoint geometry.
CurveGeometry parse_curve_csv(std::istream& in);
CurveGeometry parse_curve_csv_file(const std::string& path);

/// Deterministic SVG: faint cell-grid underlay plus the curve polyline in
/// breakpoint order. viewBox is the bounding box of the cells; identical
/// inputs produce byte-identical output.
std::string render_svg(const CurveGeometry& g, const Continuum& X);

void write_file(const std::string& path, const std::string& content);

} // namespace peano
