#include "bezinv/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace bezinv {

namespace {

using nlohmann::json;

Rational number_from_json(const json& v, std::string_view what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(std::to_string(v.get<long long>()));
  if (v.is_number_unsigned()) return Rational(std::to_string(v.get<unsigned long long>()));
  if (v.is_number_float()) return exact_from_double(v.get<double>());
  throw ParseError("expected a number in " + std::string(what));
}

std::vector<Rational> numbers_from_json(const json& doc, const char* key, std::size_t expected) {
  if (!doc.contains(key) || !doc[key].is_array()) throw ParseError(std::string("missing array '") + key + "'");
  const json& arr = doc[key];
  if (arr.size() != expected) {
    throw ParseError(std::string("'") + key + "' must have degree+1 = " + std::to_string(expected) + " entries");
  }
  std::vector<Rational> out;
  out.reserve(expected);
  for (const auto& v : arr) out.push_back(number_from_json(v, key));
  return out;
}

}  // namespace

Curve parse_curve(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("curve file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("curve document must be a JSON object");
  if (!doc.contains("type") || !doc["type"].is_string()) throw ParseError("curve document needs a string 'type'");
  if (!doc.contains("degree") || !doc["degree"].is_number_integer() || doc["degree"].get<long long>() < 0) {
    throw ParseError("curve document needs a nonnegative integer 'degree'");
  }
  const auto count = static_cast<std::size_t>(doc["degree"].get<long long>()) + 1;
  const std::string type = doc["type"].get<std::string>();

  if (type == "rational_bezier") {
    if (!doc.contains("control_points") || !doc["control_points"].is_array()) {
      throw ParseError("missing array 'control_points'");
    }
    const json& cps = doc["control_points"];
    if (cps.size() != count) throw ParseError("'control_points' must have degree+1 entries");
    std::vector<Point<Rational>> points;
    for (const auto& cp : cps) {
      if (!cp.is_array() || cp.size() != 2) throw ParseError("each control point must be [x, y]");
      points.push_back({number_from_json(cp[0], "control_points"), number_from_json(cp[1], "control_points")});
    }
    return RationalBezierCurve(std::move(points), numbers_from_json(doc, "weights", count));
  }
  if (type == "general_rational") {
    auto poly = [&](const char* key) { return BernsteinPoly<Rational>(numbers_from_json(doc, key, count)); };
    return GeneralRationalCurve(poly("x_num"), poly("x_den"), poly("y_num"), poly("y_den"));
  }
  throw ParseError("unknown curve type '" + type + "'");
}

Curve load_curve(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open curve file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_curve(buf.str());
}

QueryPoint parse_point(std::string_view text) {
  const auto comma = text.find(',');
  if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
    throw ParseError("point must be written as \"x,y\", got '" + std::string(text) + "'");
  }
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

std::string report_to_json(const InversionReport& r) {
  auto opt_double = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("null"); };
  std::string out = "{";
  out += "\"t0\":" + opt_double(r.t0);
  out += ",\"method\":\"" + to_string(r.method) + "\"";
  out += ",\"nullity\":" + std::to_string(r.nullity);
  out += ",\"singular_values\":[";
  for (std::size_t i = 0; i < r.singular_values.size(); ++i) {
    if (i) out += ",";
    out += format_double(r.singular_values[i]);
  }
  out += "]";
  out += ",\"selected_index\":" + (r.selected_index ? std::to_string(*r.selected_index) : std::string("null"));
  out += ",\"residual\":" + opt_double(r.residual);
  out += ",\"status\":\"" + to_string(r.status) + "\"";
  out += ",\"arithmetic\":\"" + to_string(r.arithmetic) + "\"";
  out += "}";
  return out;
}

InversionReport report_from_json(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    InversionReport r;
    if (!doc.at("t0").is_null()) r.t0 = doc.at("t0").get<double>();
    r.method = parse_method(doc.at("method").get<std::string>());
    r.nullity = doc.at("nullity").get<int>();
    r.singular_values = doc.at("singular_values").get<std::vector<double>>();
    if (!doc.at("selected_index").is_null()) r.selected_index = doc.at("selected_index").get<int>();
    if (!doc.at("residual").is_null()) r.residual = doc.at("residual").get<double>();
    r.status = parse_status(doc.at("status").get<std::string>());
    r.arithmetic = parse_arithmetic(doc.at("arithmetic").get<std::string>());
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace bezinv
