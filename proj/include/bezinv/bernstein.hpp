#pragma once

// Polynomials in the Bernstein basis B_n = { C(n,i) (1-t)^(n-i) t^i : i = 0..n }.
//
// Every operation is generic over the scalar kind. Under Rational the
// results are exact; under double they follow ordinary rounding.

#include "bezinv/matrix.hpp"
#include "bezinv/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace bezinv {

/// Row n of Pascal's triangle, exact. Rows are computed once and cached;
/// the returned span stays valid for the life of the process.
std::span<const Integer> binomial_row(int n);

template <Scalar T>
T binomial(int n, int k) {
  if (k < 0 || k > n) return T(0);
  const Integer& c = binomial_row(n)[static_cast<std::size_t>(k)];
  if constexpr (is_exact_v<T>) {
    return Rational(c);
  } else {
    return c.get_d();
  }
}

template <Scalar T>
class BernsteinPoly {
 public:
  /// Coefficients c_0..c_n in B_n; the degree is coeffs.size() - 1.
  explicit BernsteinPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidCurveError("a Bernstein polynomial needs at least one coefficient");
  }

  static BernsteinPoly zero(int degree) { return BernsteinPoly(std::vector<T>(degree + 1, T(0))); }
  static BernsteinPoly constant(int degree, const T& c) { return BernsteinPoly(std::vector<T>(degree + 1, c)); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const T> coeffs() const { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return bezinv::is_zero(c); });
  }

  template <Scalar U>
  BernsteinPoly<U> as() const {
    return BernsteinPoly<U>(convert<U, T>(coeffs_));
  }

  friend BernsteinPoly operator-(const BernsteinPoly& a, const BernsteinPoly& b) {
    if (a.degree() != b.degree()) throw DegreeMismatchError("subtraction of polynomials in different bases");
    std::vector<T> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return BernsteinPoly(std::move(c));
  }

  friend BernsteinPoly operator*(const T& s, const BernsteinPoly& a) {
    std::vector<T> c(a.coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coeffs_[i];
    return BernsteinPoly(std::move(c));
  }

  friend bool operator==(const BernsteinPoly&, const BernsteinPoly&) = default;

 private:
  std::vector<T> coeffs_;
};

/// de Casteljau evaluation.
template <Scalar T>
T eval(const BernsteinPoly<T>& p, const T& t) {
  std::vector<T> work(p.coeffs().begin(), p.coeffs().end());
  const T s = T(1) - t;
  for (std::size_t level = work.size() - 1; level > 0; --level) {
    for (std::size_t i = 0; i < level; ++i) work[i] = s * work[i] + t * work[i + 1];
  }
  return work[0];
}

/// (beta_0^(n)(t), ..., beta_n^(n)(t)), built by the same convex-combination
/// triangle as de Casteljau so the components sum to one.
template <Scalar T>
std::vector<T> bernstein_vector(int n, const T& t) {
  std::vector<T> b(static_cast<std::size_t>(n) + 1, T(0));
  b[0] = T(1);
  const T s = T(1) - t;
  for (int level = 1; level <= n; ++level) {
    for (int i = level; i >= 1; --i) b[i] = s * b[i] + t * b[i - 1];
    b[0] = s * b[0];
  }
  return b;
}

/// Product of p in B_a and q in B_b, expressed in B_{a+b}.
template <Scalar T>
BernsteinPoly<T> multiply(const BernsteinPoly<T>& p, const BernsteinPoly<T>& q) {
  const int a = p.degree();
  const int b = q.degree();
  const auto ca = binomial_row(a);
  const auto cb = binomial_row(b);
  const auto cab = binomial_row(a + b);
  std::vector<T> r(static_cast<std::size_t>(a + b) + 1, T(0));
  for (int i = 0; i <= a; ++i) {
    if (is_zero(p[i])) continue;
    for (int j = 0; j <= b; ++j) {
      T w;
      if constexpr (is_exact_v<T>) {
        w = Rational(ca[i] * cb[j], cab[i + j]);
        w.canonicalize();
      } else {
        w = ca[i].get_d() * cb[j].get_d() / cab[i + j].get_d();
      }
      r[i + j] += w * p[i] * q[j];
    }
  }
  return BernsteinPoly<T>(std::move(r));
}

/// Re-expresses p in B_{n+k} (multiplication by the constant 1 of B_k).
template <Scalar T>
BernsteinPoly<T> elevate(const BernsteinPoly<T>& p, int k) {
  if (k == 0) return p;
  return multiply(p, BernsteinPoly<T>::constant(k, T(1)));
}

/// Power-basis coefficients a_0..a_n of p:
/// a_k = C(n,k) * sum_{i<=k} (-1)^(k-i) C(k,i) c_i.
template <Scalar T>
std::vector<T> power_coefficients(const BernsteinPoly<T>& p) {
  const int n = p.degree();
  const auto cn = binomial_row(n);
  std::vector<T> a(static_cast<std::size_t>(n) + 1, T(0));
  for (int k = 0; k <= n; ++k) {
    const auto ck = binomial_row(k);
    T sum(0);
    for (int i = 0; i <= k; ++i) {
      T term = from_rational<T>(Rational(ck[i])) * p[i];
      if ((k - i) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    a[k] = from_rational<T>(Rational(cn[k])) * sum;
  }
  return a;
}

/// Relative cut-off used by power_degree on double coefficients.
inline constexpr double kFloatDegreeTolerance = 1e-12;

/// Exact degree of p in the power basis. Under doubles a power coefficient
/// counts as zero when |a_k| <= 1e-12 * max_i |c_i|.
template <Scalar T>
int power_degree(const BernsteinPoly<T>& p) {
  if (p.is_zero()) throw ZeroPolynomialError("power_degree of the zero polynomial");
  const auto a = power_coefficients(p);
  double cutoff = 0.0;
  if constexpr (!is_exact_v<T>) {
    double scale = 0.0;
    for (double c : p.coeffs()) scale = std::max(scale, std::fabs(c));
    cutoff = kFloatDegreeTolerance * scale;
  }
  for (int k = p.degree(); k >= 0; --k) {
    if constexpr (is_exact_v<T>) {
      if (!is_zero(a[k])) return k;
    } else {
      if (std::fabs(a[k]) > cutoff) return k;
    }
  }
  // Only reachable under doubles when every coefficient sits below the cut-off.
  return 0;
}

/// Expresses p (in B_n) in B_d, d >= power_degree(p). Stays in Bernstein
/// form: one-step reductions b_i = (n c_i - i b_{i-1}) / (n - i).
template <Scalar T>
BernsteinPoly<T> degree_reduce(const BernsteinPoly<T>& p, int d) {
  if (d < 0) throw NotRepresentableError("negative target degree");
  if (d >= p.degree()) return elevate(p, d - p.degree());
  if (p.is_zero()) return BernsteinPoly<T>::zero(d);
  if (power_degree(p) > d) {
    throw NotRepresentableError("polynomial of power degree " + std::to_string(power_degree(p)) +
                                " does not fit in B_" + std::to_string(d));
  }
  std::vector<T> c(p.coeffs().begin(), p.coeffs().end());
  for (int n = p.degree(); n > d; --n) {
    std::vector<T> b(static_cast<std::size_t>(n));
    b[0] = c[0];
    for (int i = 1; i < n; ++i) b[i] = (T(n) * c[i] - T(i) * b[i - 1]) / T(n - i);
    c = std::move(b);
  }
  return BernsteinPoly<T>(std::move(c));
}

/// Change of basis N of order n from B_{n-1} to {1, t, ..., t^(n-1)}.
///
/// Rows are indexed by monomials and columns by Bernstein functions:
/// N(k, i) is the coefficient of t^k in beta_i^(n-1)(t), so N is lower
/// triangular, N^T (1, t, ..., t^(n-1)) = bernstein_vector(n-1, t), and the
/// power-basis Bezout matrix equals N * B * N^T.
template <Scalar T>
Matrix<T> change_of_basis_matrix(int n) {
  if (n < 1) throw DegreeMismatchError("change of basis needs order >= 1");
  const int m = n - 1;
  Matrix<T> N(n, n);
  const auto cm = binomial_row(m);
  for (int i = 0; i <= m; ++i) {
    const auto ci = binomial_row(m - i);
    for (int k = i; k <= m; ++k) {
      Integer v = cm[i] * ci[k - i];
      if ((k - i) % 2 != 0) v = -v;
      N(k, i) = from_rational<T>(Rational(v));
    }
  }
  return N;
}

}  // namespace bezinv
