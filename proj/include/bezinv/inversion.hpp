#pragma once

// Point inversion for planar rational curves in Bernstein form: given P0 on
// (or near) the curve, recover the parameter t0 with P(t0) = P0 from the
// nullspace of a resultant matrix of
//   p(t) = x_num(t) - x0 * x_den(t),   q(t) = y_num(t) - y0 * y_den(t).

#include "bezinv/bernstein.hpp"
#include "bezinv/resultant.hpp"
#include "bezinv/spectral.hpp"

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace bezinv {

template <Scalar T>
struct Point {
  T x;
  T y;
};

using QueryPoint = Point<Rational>;

/// x(t) = sum w_i a_i beta_i(t) / sum w_i beta_i(t), likewise y(t) with b_i.
class RationalBezierCurve {
 public:
  /// Throws InvalidCurveError on empty input, length mismatch or a zero weight.
  RationalBezierCurve(std::vector<Point<Rational>> control_points, std::vector<Rational> weights);

  int degree() const { return static_cast<int>(points_.size()) - 1; }
  std::span<const Point<Rational>> control_points() const { return points_; }
  std::span<const Rational> weights() const { return weights_; }
  bool positive_weights() const { return positive_; }

 private:
  std::vector<Point<Rational>> points_;
  std::vector<Rational> weights_;
  bool positive_ = true;
};

/// x(t) = x_num(t) / x_den(t), y(t) = y_num(t) / y_den(t), all four in B_n.
class GeneralRationalCurve {
 public:
  /// Throws InvalidCurveError when the degrees differ or a denominator is
  /// identically zero.
  GeneralRationalCurve(BernsteinPoly<Rational> x_num, BernsteinPoly<Rational> x_den, BernsteinPoly<Rational> y_num,
                       BernsteinPoly<Rational> y_den);

  int degree() const { return x_num.degree(); }

  BernsteinPoly<Rational> x_num;
  BernsteinPoly<Rational> x_den;
  BernsteinPoly<Rational> y_num;
  BernsteinPoly<Rational> y_den;
};

using Curve = std::variant<RationalBezierCurve, GeneralRationalCurve>;

GeneralRationalCurve to_general(const Curve& curve);
int curve_degree(const Curve& curve);

/// Evaluates the curve at t. Exact under Rational. Throws
/// DenominatorZeroError when a denominator vanishes at t.
template <Scalar T>
Point<T> eval_curve(const Curve& curve, const T& t) {
  const GeneralRationalCurve g = to_general(curve);
  const T xd = eval(g.x_den.as<T>(), t);
  const T yd = eval(g.y_den.as<T>(), t);
  if (is_zero(xd) || is_zero(yd)) throw DenominatorZeroError("curve denominator vanishes at the requested parameter");
  return {T(eval(g.x_num.as<T>(), t) / xd), T(eval(g.y_num.as<T>(), t) / yd)};
}

template <Scalar T>
struct PolyPair {
  BernsteinPoly<T> p;
  BernsteinPoly<T> q;
};

/// p = x_num - x0 * x_den, q = y_num - y0 * y_den, coefficientwise in B_n.
/// For a rational Bezier curve this is p_i = w_i (a_i - x0), q_i = w_i (b_i - y0).
template <Scalar T>
PolyPair<T> build_pq(const Curve& curve, const Point<T>& p0) {
  const GeneralRationalCurve g = to_general(curve);
  return {g.x_num.as<T>() - p0.x * g.x_den.as<T>(), g.y_num.as<T>() - p0.y * g.y_den.as<T>()};
}

struct Recovery {
  double t0;
  /// Index i of the component pair (z_{i-1}, z_i) used in the ratio formula.
  int selected_index;
};

/// t0 = i z_i / (i z_i + (m - i) z_{i-1}) for a nullvector z of length m,
/// i.e. a multiple of bernstein_vector(m - 1, t0).
///
/// Without an explicit index, i is picked from the component of largest
/// magnitude and its larger-magnitude neighbour (ties go to the left pair).
/// Throws DegenerateVectorError if the chosen pair cannot determine t0.
Recovery recover_parameter(std::span<const double> z, std::optional<int> index = std::nullopt);

enum class Method { bezout, sylvester };
enum class MethodChoice { automatic, bezout, sylvester };
enum class Arithmetic { rational, floating };
enum class Status { ok, nullspace_dim_gt_1_unresolved, point_not_on_curve, degenerate_input };

std::string to_string(Method m);
std::string to_string(Arithmetic a);
std::string to_string(Status s);
Method parse_method(std::string_view s);
Arithmetic parse_arithmetic(std::string_view s);
Status parse_status(std::string_view s);

struct InversionOptions {
  RankPolicy rank_policy{};
  Arithmetic arithmetic = Arithmetic::rational;
  MethodChoice method = MethodChoice::automatic;
  /// P0 counts as on the curve when |P(t0) - P0| <= residual_factor * (1 + |P0|).
  double residual_factor = 1e-3;
};

struct InversionReport {
  /// Absent when no parameter could be recovered. With status
  /// point_not_on_curve it is a best-effort value and should not be trusted.
  std::optional<double> t0;
  Method method = Method::bezout;
  std::vector<double> singular_values;
  int nullity = 0;
  std::optional<int> selected_index;
  /// |P(t0) - P0|, absent together with t0.
  std::optional<double> residual;
  Status status = Status::ok;
  Arithmetic arithmetic = Arithmetic::rational;

  friend bool operator==(const InversionReport&, const InversionReport&) = default;
};

InversionReport invert(const Curve& curve, const QueryPoint& p0, const InversionOptions& options = {});

/// SVD and rank decision of one resultant matrix, as printed by `bezinv diag`.
/// Without an explicit method: Bezout, or Sylvester for degree-1 curves.
struct Diagnostics {
  Method method;
  int order;
  SvdResult svd;
  Nullspace nullspace;
};

Diagnostics diagnose(const Curve& curve, const QueryPoint& p0, const InversionOptions& options = {},
                     std::optional<Method> method = std::nullopt);

}  // namespace bezinv
