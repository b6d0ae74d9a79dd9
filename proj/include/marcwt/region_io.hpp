#pragma once

#include <string>
#include <utility>
#include <vector>

#include "marcwt/geometry.hpp"

namespace marcwt {

// "%.9g" with lowercase exponent, locale-independent.
std::string format_g9(double v);

// Header "R1_bits,R2_bits", one CCW vertex per line, 9 significant digits.
std::string region_to_csv(const RateRegion& r);

// Inverse of region_to_csv. Rejects non-canonical or non-convex vertex
// lists (the parsed sequence must equal its own canonical hull).
RateRegion region_from_csv(const std::string& text);

// Writes via a temp file in the same directory followed by a rename.
void atomic_write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// 600x600 plain-text SVG: one polyline per named region, linear axes in
// bits auto-scaled to the largest (outer) region's bounding box.
std::string render_regions_svg(const std::vector<std::pair<std::string, RateRegion>>& named,
                               const std::string& title);

}  // namespace marcwt
