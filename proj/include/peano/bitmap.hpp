#pragma once

#include "peano/continuum.hpp"

#include <iosfwd>
#include <string>

namespace peano {

/// Parse a PGM (P2/P5) or PBM (P1/P4) raster and build a continuum with one
/// cell per foreground pixel at pixel-center coordinates, 4-adjacency, and
/// the metric normalized to diameter 1. Foreground: PGM value > threshold,
/// PBM bit 1 (black). Throws Empty when nothing is foreground and
/// Disconnected when the foreground splits into several components.
Continuum load_bitmap(std::istream& in, int threshold = 127);
Continuum load_bitmap_file(const std::string& path, int threshold = 127);

} // namespace peano
