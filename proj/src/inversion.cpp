#include "bezinv/inversion.hpp"

#include <cmath>
#include <limits>

namespace bezinv {

RationalBezierCurve::RationalBezierCurve(std::vector<Point<Rational>> control_points, std::vector<Rational> weights)
    : points_(std::move(control_points)), weights_(std::move(weights)) {
  if (points_.empty()) throw InvalidCurveError("a rational Bezier curve needs at least one control point");
  if (points_.size() != weights_.size()) {
    throw InvalidCurveError("expected " + std::to_string(points_.size()) + " weights, got " +
                            std::to_string(weights_.size()));
  }
  for (const auto& w : weights_) {
    if (is_zero(w)) throw InvalidCurveError("weights must be nonzero");
    if (sgn(w) < 0) positive_ = false;
  }
}

GeneralRationalCurve::GeneralRationalCurve(BernsteinPoly<Rational> x_num_, BernsteinPoly<Rational> x_den_,
                                           BernsteinPoly<Rational> y_num_, BernsteinPoly<Rational> y_den_)
    : x_num(std::move(x_num_)), x_den(std::move(x_den_)), y_num(std::move(y_num_)), y_den(std::move(y_den_)) {
  const int n = x_num.degree();
  if (x_den.degree() != n || y_num.degree() != n || y_den.degree() != n) {
    throw InvalidCurveError("all four polynomials of a general rational curve must share one degree");
  }
  if (x_den.is_zero() || y_den.is_zero()) throw InvalidCurveError("a curve denominator is identically zero");
}

GeneralRationalCurve to_general(const Curve& curve) {
  if (const auto* g = std::get_if<GeneralRationalCurve>(&curve)) return *g;
  const auto& c = std::get<RationalBezierCurve>(curve);
  const auto n = c.control_points().size();
  std::vector<Rational> xs(n), ys(n), ws(n);
  for (std::size_t i = 0; i < n; ++i) {
    ws[i] = c.weights()[i];
    xs[i] = ws[i] * c.control_points()[i].x;
    ys[i] = ws[i] * c.control_points()[i].y;
  }
  BernsteinPoly<Rational> den(ws);
  return {BernsteinPoly<Rational>(std::move(xs)), den, BernsteinPoly<Rational>(std::move(ys)), den};
}

int curve_degree(const Curve& curve) {
  return std::visit([](const auto& c) { return c.degree(); }, curve);
}

Recovery recover_parameter(std::span<const double> z, std::optional<int> index) {
  const int m = static_cast<int>(z.size());
  if (m < 2) throw DegenerateVectorError("a nullvector needs at least two components");

  int i = 0;
  if (index) {
    i = *index;
    if (i < 1 || i > m - 1) throw DegenerateVectorError("component index out of range");
  } else {
    int peak = 0;
    for (int k = 1; k < m; ++k)
      if (std::fabs(z[k]) > std::fabs(z[peak])) peak = k;
    if (peak == 0) {
      i = 1;
    } else if (peak == m - 1) {
      i = m - 1;
    } else {
      i = std::fabs(z[peak - 1]) >= std::fabs(z[peak + 1]) ? peak : peak + 1;
    }
  }

  const double num = i * z[i];
  const double den = num + (m - i) * z[i - 1];
  if ((z[i] == 0.0 && z[i - 1] == 0.0) || den == 0.0 || !std::isfinite(den)) {
    throw DegenerateVectorError("selected nullvector components do not determine a parameter");
  }
  return {num / den, i};
}

std::string to_string(Method m) { return m == Method::bezout ? "bezout" : "sylvester"; }

std::string to_string(Arithmetic a) { return a == Arithmetic::rational ? "rational" : "float"; }

std::string to_string(Status s) {
  switch (s) {
    case Status::ok:
      return "ok";
    case Status::nullspace_dim_gt_1_unresolved:
      return "nullspace_dim_gt_1_unresolved";
    case Status::point_not_on_curve:
      return "point_not_on_curve";
    case Status::degenerate_input:
      return "degenerate_input";
  }
  return "unknown";
}

Method parse_method(std::string_view s) {
  if (s == "bezout") return Method::bezout;
  if (s == "sylvester") return Method::sylvester;
  throw ParseError("unknown method '" + std::string(s) + "'");
}

Arithmetic parse_arithmetic(std::string_view s) {
  if (s == "rational") return Arithmetic::rational;
  if (s == "float") return Arithmetic::floating;
  throw ParseError("unknown arithmetic '" + std::string(s) + "'");
}

Status parse_status(std::string_view s) {
  for (Status st : {Status::ok, Status::nullspace_dim_gt_1_unresolved, Status::point_not_on_curve,
                    Status::degenerate_input}) {
    if (s == to_string(st)) return st;
  }
  throw ParseError("unknown status '" + std::string(s) + "'");
}

namespace {

template <Scalar T>
Point<T> to_scalar_point(const QueryPoint& p0) {
  return {from_rational<T>(p0.x), from_rational<T>(p0.y)};
}

// Resultant matrix of the requested kind, or nullopt when a Sylvester matrix
// does not exist because one of p, q is a nonzero constant (no common root).
template <Scalar T>
std::optional<Matrix<double>> resultant_for(const PolyPair<T>& pq, Method method) {
  if (method == Method::bezout) return to_double_matrix(bernstein_bezout(pq.p, pq.q).entries);
  const int dp = power_degree(pq.p);
  const int dq = power_degree(pq.q);
  if (dp == 0 || dq == 0) return std::nullopt;
  return to_double_matrix(bernstein_sylvester(degree_reduce(pq.p, dp), degree_reduce(pq.q, dq)).entries);
}

template <Scalar T>
std::optional<double> residual_at(const Curve& curve, const QueryPoint& p0, double t0) {
  try {
    if constexpr (is_exact_v<T>) {
      const auto pt = eval_curve<Rational>(curve, exact_from_double(t0));
      const double dx = Rational(pt.x - p0.x).get_d();
      const double dy = Rational(pt.y - p0.y).get_d();
      return std::hypot(dx, dy);
    } else {
      const auto pt = eval_curve<double>(curve, t0);
      return std::hypot(pt.x - p0.x.get_d(), pt.y - p0.y.get_d());
    }
  } catch (const DenominatorZeroError&) {
    return std::nullopt;
  }
}

enum class Stage { resolved, ambiguous };

// Runs SVD + rank decision + recovery on one matrix and fills the report.
template <Scalar T>
Stage solve_stage(const Curve& curve, const QueryPoint& p0, const Matrix<double>& m, Method method,
                  const InversionOptions& options, InversionReport& report) {
  const SvdResult s = svd(m, false);
  const Nullspace ns = numerical_nullspace(s, options.rank_policy);
  report.method = method;
  report.singular_values = s.singular_values;
  report.nullity = ns.nullity;
  report.t0.reset();
  report.selected_index.reset();
  report.residual.reset();

  if (ns.nullity >= 2) {
    report.status = Status::nullspace_dim_gt_1_unresolved;
    return Stage::ambiguous;
  }

  const std::vector<double> z = ns.nullity == 1 ? ns.vector(0) : s.right_vector(s.order() - 1);
  report.status = Status::point_not_on_curve;
  try {
    const Recovery r = recover_parameter(z);
    report.t0 = r.t0;
    report.selected_index = r.selected_index;
  } catch (const DegenerateVectorError&) {
    return Stage::resolved;
  }

  report.residual = residual_at<T>(curve, p0, *report.t0);
  if (!report.residual) {
    report.t0.reset();
    report.selected_index.reset();
    return Stage::resolved;
  }
  const double scale = 1.0 + std::hypot(p0.x.get_d(), p0.y.get_d());
  if (ns.nullity == 1 && *report.residual <= options.residual_factor * scale) report.status = Status::ok;
  return Stage::resolved;
}

template <Scalar T>
InversionReport run(const Curve& curve, const QueryPoint& p0, const InversionOptions& options) {
  InversionReport report;
  report.arithmetic = options.arithmetic;
  report.method = Method::bezout;

  const PolyPair<T> pq = build_pq<T>(curve, to_scalar_point<T>(p0));
  if (pq.p.is_zero() || pq.q.is_zero()) {
    report.status = Status::degenerate_input;
    return report;
  }

  // A degree-1 curve has a 1x1 Bezout matrix, which carries no parameter.
  const bool bezout_first = options.method != MethodChoice::sylvester && curve_degree(curve) >= 2;
  if (bezout_first) {
    const auto b = resultant_for(pq, Method::bezout);
    if (solve_stage<T>(curve, p0, *b, Method::bezout, options, report) == Stage::resolved ||
        options.method == MethodChoice::bezout) {
      return report;
    }
  }

  const auto s = resultant_for(pq, Method::sylvester);
  if (!s) {
    report.method = Method::sylvester;
    report.singular_values.clear();
    report.nullity = 0;
    report.status = Status::point_not_on_curve;
    return report;
  }
  solve_stage<T>(curve, p0, *s, Method::sylvester, options, report);
  return report;
}

template <Scalar T>
Diagnostics diagnose_as(const Curve& curve, const QueryPoint& p0, const InversionOptions& options, Method method) {
  const PolyPair<T> pq = build_pq<T>(curve, to_scalar_point<T>(p0));
  if (method == Method::sylvester && (pq.p.is_zero() || pq.q.is_zero())) {
    throw Error("Sylvester matrix undefined: p or q is identically zero");
  }
  const auto m = resultant_for(pq, method);
  if (!m) throw Error("Sylvester matrix undefined: p or q is a nonzero constant");
  SvdResult s = svd(*m, false);
  Nullspace ns = numerical_nullspace(s, options.rank_policy);
  return {method, static_cast<int>(m->rows()), std::move(s), std::move(ns)};
}

}  // namespace

InversionReport invert(const Curve& curve, const QueryPoint& p0, const InversionOptions& options) {
  options.rank_policy.validate();
  if (curve_degree(curve) < 1) throw InvalidCurveError("inversion needs a curve of degree >= 1");
  if (curve_degree(curve) < 2 && options.method == MethodChoice::bezout) {
    throw InvalidCurveError("the Bezout method needs a curve of degree >= 2");
  }
  if (options.arithmetic == Arithmetic::rational) return run<Rational>(curve, p0, options);
  return run<double>(curve, p0, options);
}

Diagnostics diagnose(const Curve& curve, const QueryPoint& p0, const InversionOptions& options,
                     std::optional<Method> requested) {
  options.rank_policy.validate();
  if (curve_degree(curve) < 1) throw InvalidCurveError("inversion needs a curve of degree >= 1");
  const Method method = requested.value_or(curve_degree(curve) >= 2 ? Method::bezout : Method::sylvester);
  if (options.arithmetic == Arithmetic::rational) return diagnose_as<Rational>(curve, p0, options, method);
  return diagnose_as<double>(curve, p0, options, method);
}

}  // namespace bezinv
