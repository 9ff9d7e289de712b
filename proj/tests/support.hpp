#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#include "bezinv/inversion.hpp"

#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace bezinv::testing {

inline Rational Q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  Rational rational(long max_num = 20, long max_den = 12) {
    return Q(integer(-max_num, max_num), integer(1, max_den));
  }
  BernsteinPoly<Rational> poly(int degree) {
    std::vector<Rational> c;
    for (int i = 0; i <= degree; ++i) c.push_back(rational());
    return BernsteinPoly<Rational>(std::move(c));
  }
  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// beta_i^(n)(t) straight from C(n,i) (1-t)^(n-i) t^i.
inline Rational bernstein_direct(int n, int i, const Rational& t) {
  Rational c(1);
  for (int k = 1; k <= i; ++k) c = c * (n - k + 1) / k;
  Rational r = c;
  for (int k = 0; k < n - i; ++k) r *= (1 - t);
  for (int k = 0; k < i; ++k) r *= t;
  return r;
}

inline Rational eval_direct(std::span<const Rational> coeffs, const Rational& t) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  Rational s(0);
  for (int i = 0; i <= n; ++i) s += coeffs[i] * bernstein_direct(n, i, t);
  return s;
}

/// Horner evaluation of power-basis coefficients.
inline Rational eval_power(const std::vector<Rational>& a, const Rational& t) {
  Rational s(0);
  for (auto it = a.rbegin(); it != a.rend(); ++it) s = s * t + *it;
  return s;
}

/// Bernstein coefficients in B_d of a power-basis polynomial:
/// b_j = sum_{k<=j} C(j,k)/C(d,k) a_k.
inline std::vector<Rational> power_to_bernstein(const std::vector<Rational>& a, int d) {
  auto binom = [](int n, int k) {
    Rational c(1);
    for (int i = 1; i <= k; ++i) c = c * (n - i + 1) / i;
    return c;
  };
  std::vector<Rational> b(d + 1, Rational(0));
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= j && k < static_cast<int>(a.size()); ++k) b[j] += binom(j, k) / binom(d, k) * a[k];
  return b;
}

/// Exact determinant by Gaussian elimination with rational pivots.
inline Rational determinant(Matrix<Rational> m) {
  const std::size_t n = m.rows();
  Rational det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

/// Classical power-basis Sylvester matrix; its determinant is the resultant.
inline Matrix<Rational> power_sylvester(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  const int m = static_cast<int>(a.size()) - 1;
  const int n = static_cast<int>(b.size()) - 1;
  Matrix<Rational> s(m + n, m + n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s(r, r + k) = a[m - k];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s(n + r, r + k) = b[n - k];
  return s;
}

/// Plain bisection of f on [lo, hi]; f(lo) and f(hi) must differ in sign.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double fm = f(mid);
    if ((fm <= 0.0) == (flo <= 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline BernsteinPoly<Rational> poly_of(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.push_back(Rational(x));
  return BernsteinPoly<Rational>(std::move(v));
}

// Curves from the worked examples, built directly rather than from JSON.

inline RationalBezierCurve example2_curve() {
  const long pts[16][2] = {{14, 14}, {11, 15}, {9, 15}, {7, 15}, {4, 14}, {3, 12}, {3, 10}, {7, 8},
                           {4, 6},   {14, 4},  {12, 2}, {8, 2},  {6, 2},  {4, 3},  {3, 4},  {2, 5}};
  const long w[16] = {2, 2, 2, 1, 2, 5, 5, 1, 3, 3, 3, 3, 2, 1, 1, 1};
  std::vector<Point<Rational>> cps;
  std::vector<Rational> ws;
  for (int i = 0; i < 16; ++i) {
    cps.push_back({Rational(pts[i][0]), Rational(pts[i][1])});
    ws.push_back(Rational(w[i]));
  }
  return {std::move(cps), std::move(ws)};
}

inline GeneralRationalCurve example1_curve() {
  return {poly_of({4, 4, 3, 3, 7}), poly_of({1, 1, 1, 1, 3}), poly_of({2, 3, 3, 3, 4}), poly_of({1, 1, 1, 1, 1})};
}

inline RationalBezierCurve example4_curve() {
  return {{{Q(1), Q(9)}, {Q(2), Q(1)}, {Q(5), Q(1)}, {Q(4), Q(1)}}, {Q(1), Q(2), Q(2), Q(1)}};
}

/// Random rational Bezier curve: integer control points in [-10, 10],
/// weights in [1/4, 4].
inline RationalBezierCurve random_curve(Rng& rng, int degree) {
  std::vector<Point<Rational>> cps;
  std::vector<Rational> ws;
  for (int i = 0; i <= degree; ++i) {
    cps.push_back({Rational(rng.integer(-10, 10)), Rational(rng.integer(-10, 10))});
    ws.push_back(Q(rng.integer(4, 64), 16));
  }
  return {std::move(cps), std::move(ws)};
}

}  // namespace bezinv::testing
