#pragma once

// Resultant matrices for pairs of Bernstein-form polynomials.

#include "bezinv/bernstein.hpp"
#include "bezinv/matrix.hpp"

#include <utility>

namespace bezinv {

enum class ResultantKind { bernstein_bezout, bernstein_sylvester, power_bezout_oracle };

template <Scalar T>
struct ResultantMatrix {
  ResultantKind kind;
  Matrix<T> entries;
  std::pair<int, int> source_degrees;

  int order() const { return static_cast<int>(entries.rows()); }
};

/// Bernstein-Bezout matrix B of p, q in B_n, defined by
///   (p(t)q(s) - p(s)q(t)) / (t - s) = beta(s)^T B beta(t),  beta = B_{n-1} vector.
///
/// Built with the O(n^2) Bini-Gemignani recurrence. The recurrence is written
/// with 1-based matrix indices (B(i, j), i, j = 1..n) and 0-based coefficient
/// indices (p_0..p_n), exactly as it is usually published; `at` maps that onto
/// the 0-based storage.
template <Scalar T>
ResultantMatrix<T> bernstein_bezout(const BernsteinPoly<T>& p, const BernsteinPoly<T>& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatchError("Bezout matrix needs equal nominal degrees (got " + std::to_string(p.degree()) +
                              " and " + std::to_string(q.degree()) + ")");
  }
  const int n = p.degree();
  if (n < 1) throw DegreeMismatchError("Bezout matrix needs degree >= 1");

  Matrix<T> B(n, n);
  auto at = [&B](int i, int j) -> T& { return B(i - 1, j - 1); };
  auto cross = [&](int i, int j) -> T { return p[i] * q[j] - p[j] * q[i]; };
  const T nn(n);

  for (int i = 1; i <= n; ++i) at(i, 1) = nn / T(i) * cross(i, 0);
  for (int j = 1; j <= n - 1; ++j) at(n, j + 1) = nn / T(n - j) * cross(n, j);
  for (int j = 1; j <= n - 1; ++j) {
    for (int i = 1; i <= n - 1; ++i) {
      const T denom(i * (n - j));
      at(i, j + 1) = nn * nn / denom * cross(i, j) + T(j * (n - i)) / denom * at(i + 1, j);
    }
  }
  return {ResultantKind::bernstein_bezout, std::move(B), {n, n}};
}

/// Classical power-basis Bezout matrix of p and q (both converted to the
/// power basis first): (p(t)q(s) - p(s)q(t)) / (t - s) = sum h(i,j) s^i t^j.
/// Intended as a cross-check of bernstein_bezout via hat(B) = N B N^T.
template <Scalar T>
ResultantMatrix<T> bezout_power_oracle(const BernsteinPoly<T>& p, const BernsteinPoly<T>& q) {
  if (p.degree() != q.degree()) throw DegreeMismatchError("Bezout oracle needs equal nominal degrees");
  const int n = p.degree();
  if (n < 1) throw DegreeMismatchError("Bezout oracle needs degree >= 1");
  const auto a = power_coefficients(p);
  const auto b = power_coefficients(q);

  // Numerator coefficient of s^i t^j is a_j b_i - a_i b_j. Dividing by (t - s)
  // gives h(i, j) = sum_{k=0..i} c(i-k, j+1+k).
  auto c = [&](int i, int j) -> T { return a[j] * b[i] - a[i] * b[j]; };
  Matrix<T> H(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      T h(0);
      for (int k = 0; k <= i && j + 1 + k <= n; ++k) h += c(i - k, j + 1 + k);
      H(i, j) = h;
    }
  }
  return {ResultantKind::power_bezout_oracle, std::move(H), {n, n}};
}

/// Bernstein-Sylvester matrix of p in B_m and q in B_n, order m + n.
///
/// Rows 0..n-1 hold beta_k^(n-1) * p in B_{m+n-1}; rows n..n+m-1 hold
/// beta_k^(m-1) * q. For any common root t0 the matrix annihilates
/// bernstein_vector(m + n - 1, t0).
template <Scalar T>
ResultantMatrix<T> bernstein_sylvester(const BernsteinPoly<T>& p, const BernsteinPoly<T>& q) {
  const int m = p.degree();
  const int n = q.degree();
  if (m < 1 || n < 1) throw DegreeMismatchError("Sylvester matrix needs both degrees >= 1");

  Matrix<T> S(m + n, m + n);
  auto fill_rows = [&S](int first_row, int multiplier_degree, const BernsteinPoly<T>& f) {
    for (int k = 0; k <= multiplier_degree; ++k) {
      std::vector<T> unit(static_cast<std::size_t>(multiplier_degree) + 1, T(0));
      unit[k] = T(1);
      const auto prod = multiply(BernsteinPoly<T>(std::move(unit)), f);
      for (int j = 0; j <= prod.degree(); ++j) S(first_row + k, j) = prod[j];
    }
  };
  fill_rows(0, n - 1, p);
  fill_rows(n, m - 1, q);
  return {ResultantKind::bernstein_sylvester, std::move(S), {m, n}};
}

/// Exact singularity test by fraction-free (Bareiss) elimination after
/// clearing row denominators.
bool det_is_zero(const ResultantMatrix<Rational>& M);

/// Always throws NotExactError: a float matrix has no exact determinant.
bool det_is_zero(const ResultantMatrix<double>& M);

}  // namespace bezinv
