#pragma once

// File formats: curve JSON documents, "x,y" query points, report JSON.
//
// Curve documents take one of two forms:
//   {"type":"rational_bezier","degree":n,"control_points":[[x,y],...],"weights":[...]}
//   {"type":"general_rational","degree":n,"x_num":[...],"x_den":[...],"y_num":[...],"y_den":[...]}
// Numbers may be JSON numbers or strings. Strings ("8.50665", "22/7") are read
// exactly; JSON numbers with a fraction part go through double first and then
// become the exact rational equal to that double.

#include "bezinv/inversion.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace bezinv {

Curve parse_curve(std::string_view json_text);
Curve load_curve(const std::filesystem::path& path);

/// "x,y" with each coordinate a decimal or fraction string.
QueryPoint parse_point(std::string_view text);

/// Fixed field order: t0, method, nullity, singular_values, selected_index,
/// residual, status, arithmetic. Doubles use 17 significant digits; absent
/// optionals are written as null.
std::string report_to_json(const InversionReport& report);
InversionReport report_from_json(std::string_view json_text);

}  // namespace bezinv
