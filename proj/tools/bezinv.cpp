// bezinv: command-line front end for rational Bezier point inversion.
//
// Exit codes: 0 ok, 1 input error, 2 point not on curve,
// 3 unresolved (nullspace dimension > 1 or degenerate input),
// 4 batch with at least one failed line.

#include "bezinv/io.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using namespace bezinv;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotOnCurve = 2;
constexpr int kExitUnresolved = 3;
constexpr int kExitBatchFailure = 4;

int exit_code_for(Status s) {
  switch (s) {
    case Status::ok:
      return kExitOk;
    case Status::point_not_on_curve:
      return kExitNotOnCurve;
    case Status::nullspace_dim_gt_1_unresolved:
    case Status::degenerate_input:
      return kExitUnresolved;
  }
  return kExitInput;
}

struct CommonFlags {
  std::string curve_path;
  double tol_rank = RankPolicy{}.relative_threshold;
  std::string arith = "rational";
  std::string method = "auto";
  double residual_factor = InversionOptions{}.residual_factor;

  InversionOptions options() const {
    InversionOptions o;
    o.rank_policy.relative_threshold = tol_rank;
    o.arithmetic = parse_arithmetic(arith);
    o.method = method == "bezout"      ? MethodChoice::bezout
               : method == "sylvester" ? MethodChoice::sylvester
                                       : MethodChoice::automatic;
    o.residual_factor = residual_factor;
    return o;
  }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_method) {
  cmd->add_option("--curve", f.curve_path, "Curve JSON file")->required()->check(CLI::ExistingFile);
  cmd->add_option("--tol-rank", f.tol_rank, "Relative threshold for numerically zero singular values")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--arith", f.arith, "Arithmetic for building the resultant matrix")
      ->check(CLI::IsMember({"rational", "float"}));
  if (with_method) {
    cmd->add_option("--method", f.method, "Resultant matrix to use")
        ->check(CLI::IsMember({"auto", "bezout", "sylvester"}));
  }
}

std::string opt_to_text(const std::optional<double>& v) { return v ? format_double(*v) : "-"; }

void print_report_text(const InversionReport& r, std::ostream& out) {
  out << "status: " << to_string(r.status) << "\n";
  out << "t0: " << opt_to_text(r.t0) << "\n";
  out << "method: " << to_string(r.method) << "\n";
  out << "nullity: " << r.nullity << "\n";
  out << "selected_index: " << (r.selected_index ? std::to_string(*r.selected_index) : "-") << "\n";
  out << "residual: " << opt_to_text(r.residual) << "\n";
  out << "arithmetic: " << to_string(r.arithmetic) << "\n";
  out << "singular_values:";
  for (double s : r.singular_values) out << " " << format_double(s);
  out << "\n";
}

int cmd_invert(const CommonFlags& f, const std::string& point, bool json) {
  const Curve curve = load_curve(f.curve_path);
  const InversionReport r = invert(curve, parse_point(point), f.options());
  if (json) {
    std::cout << report_to_json(r) << "\n";
  } else {
    print_report_text(r, std::cout);
  }
  return exit_code_for(r.status);
}

int cmd_eval(const std::string& curve_path, const std::string& t_text, bool exact) {
  const Curve curve = load_curve(curve_path);
  const Point<Rational> p = eval_curve<Rational>(curve, parse_rational(t_text));
  if (exact) {
    std::cout << to_string(p.x) << ", " << to_string(p.y) << "\n";
  } else {
    std::cout << format_double(p.x.get_d()) << ", " << format_double(p.y.get_d()) << "\n";
  }
  return kExitOk;
}

int cmd_diag(const CommonFlags& f, const std::string& point) {
  const Curve curve = load_curve(f.curve_path);
  const InversionOptions opts = f.options();
  std::optional<Method> method;
  if (f.method != "auto") method = parse_method(f.method);
  const Diagnostics d = diagnose(curve, parse_point(point), opts, method);

  std::cout << "matrix: " << to_string(d.method) << " (order " << d.order << ")\n";
  for (std::size_t k = 0; k < d.svd.singular_values.size(); ++k) {
    std::cout << "sigma_" << k + 1 << " = " << format_double(d.svd.singular_values[k]) << "\n";
  }
  const double sigma_max = d.svd.singular_values.empty() ? 0.0 : d.svd.singular_values.front();
  std::cout << "threshold: " << format_double(opts.rank_policy.relative_threshold * sigma_max)
            << " (relative " << format_double(opts.rank_policy.relative_threshold) << ")\n";
  std::cout << "rank: " << d.nullspace.rank << "\n";
  std::cout << "nullity: " << d.nullspace.nullity << "\n";
  std::cout << "trailing V column:\n";
  for (double v : d.svd.right_vector(d.svd.order() - 1)) std::cout << "  " << format_double(v) << "\n";
  return kExitOk;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

int cmd_batch(const CommonFlags& f, const std::string& points_path, bool json_lines) {
  const Curve curve = load_curve(f.curve_path);
  const InversionOptions opts = f.options();
  std::ifstream in(points_path);
  if (!in) throw ParseError("cannot open points file '" + points_path + "'");
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);

  struct Outcome {
    std::optional<InversionReport> report;
    std::string error;
  };
  std::vector<Outcome> outcomes(lines.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < lines.size(); k = next++) {
      try {
        outcomes[k].report = invert(curve, parse_point(lines[k]), opts);
      } catch (const std::exception& e) {
        outcomes[k].error = e.what();
      }
    }
  };
  const unsigned n_threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(lines.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  }

  bool all_ok = true;
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    const auto& o = outcomes[k];
    if (!o.report) {
      all_ok = false;
      if (json_lines) {
        std::cout << "{\"line\":" << k + 1 << ",\"error\":\"" << json_escape(o.error) << "\"}\n";
      } else {
        std::cout << "line " << k + 1 << ": error: " << o.error << "\n";
      }
      continue;
    }
    if (o.report->status != Status::ok) all_ok = false;
    if (json_lines) {
      std::cout << report_to_json(*o.report) << "\n";
    } else {
      std::cout << "line " << k + 1 << ": status=" << to_string(o.report->status)
                << " t0=" << opt_to_text(o.report->t0) << " method=" << to_string(o.report->method)
                << " nullity=" << o.report->nullity << "\n";
    }
  }
  return all_ok ? kExitOk : kExitBatchFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parameter inversion for planar rational Bezier curves"};
  app.require_subcommand(1);

  CommonFlags common;
  if (const char* env = std::getenv("BEZINV_RANK_TOL")) {
    try {
      common.tol_rank = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: BEZINV_RANK_TOL is not a number\n";
      return kExitInput;
    }
  }

  std::string point;
  bool json = false;
  auto* invert_cmd = app.add_subcommand("invert", "Recover the parameter of a point on the curve");
  add_common(invert_cmd, common, true);
  invert_cmd->add_option("--point", point, "Query point \"x,y\" (decimals or fractions)")->required();
  invert_cmd->add_option("--residual-threshold", common.residual_factor,
                         "Point is on the curve when |P(t0)-P0| <= r * (1 + |P0|)")
      ->check(CLI::PositiveNumber);
  invert_cmd->add_flag("--json", json, "Print the report as JSON");

  std::string eval_curve_path;
  std::string t_text;
  bool exact = false;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate the curve at a parameter");
  eval_cmd->add_option("--curve", eval_curve_path, "Curve JSON file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--t", t_text, "Parameter value (decimal or fraction)")->required();
  eval_cmd->add_flag("--exact", exact, "Print exact fractions");

  auto* diag_cmd = app.add_subcommand("diag", "Singular values and rank decision of the resultant matrix");
  add_common(diag_cmd, common, true);
  diag_cmd->add_option("--point", point, "Query point \"x,y\"")->required();

  std::string points_path;
  bool json_lines = false;
  auto* batch_cmd = app.add_subcommand("batch", "Invert every point of a file, one \"x,y\" per line");
  add_common(batch_cmd, common, true);
  batch_cmd->add_option("--points", points_path, "Points file")->required();
  batch_cmd->add_option("--residual-threshold", common.residual_factor, "See invert")->check(CLI::PositiveNumber);
  batch_cmd->add_flag("--json-lines", json_lines, "One JSON record per input line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*invert_cmd) return cmd_invert(common, point, json);
    if (*eval_cmd) return cmd_eval(eval_curve_path, t_text, exact);
    if (*diag_cmd) return cmd_diag(common, point);
    if (*batch_cmd) return cmd_batch(common, points_path, json_lines);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
