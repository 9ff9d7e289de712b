#include "bezinv/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bezinv {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOrthogonalityTol = 1e-15;

double dot_columns(const Matrix<double>& m, std::size_t p, std::size_t q) {
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, p) * m(i, q);
  return s;
}

void rotate_columns(Matrix<double>& m, std::size_t p, std::size_t q, double c, double s) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double mp = m(i, p);
    const double mq = m(i, q);
    m(i, p) = c * mp - s * mq;
    m(i, q) = s * mp + c * mq;
  }
}

// Replaces the columns flagged in `missing` by unit vectors orthogonal to all
// other columns (modified Gram-Schmidt against the standard basis).
void complete_orthonormal(Matrix<double>& u, const std::vector<bool>& missing) {
  const std::size_t m = u.rows();
  std::size_t candidate = 0;
  for (std::size_t j = 0; j < u.cols(); ++j) {
    if (!missing[j]) continue;
    for (; candidate < m; ++candidate) {
      std::vector<double> e(m, 0.0);
      e[candidate] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < u.cols(); ++k) {
          if (k == j || (missing[k] && k > j)) continue;
          double d = 0.0;
          for (std::size_t i = 0; i < m; ++i) d += u(i, k) * e[i];
          for (std::size_t i = 0; i < m; ++i) e[i] -= d * u(i, k);
        }
      }
      const double nrm = norm2(e);
      if (nrm > 1e-8) {
        for (std::size_t i = 0; i < m; ++i) u(i, j) = e[i] / nrm;
        ++candidate;
        break;
      }
    }
  }
}

}  // namespace

SvdResult svd(const Matrix<double>& a, bool keep_left_vectors) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (double v : a.row(i))
      if (!std::isfinite(v)) throw NonFiniteError("svd input contains NaN or infinite entries");

  const std::size_t n = a.cols();
  const std::size_t m = std::max(a.rows(), n);
  Matrix<double> w(m, n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
  Matrix<double> v = Matrix<double>::identity(n);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = dot_columns(w, p, p);
        const double beta = dot_columns(w, q, q);
        const double gamma = dot_columns(w, p, q);
        if (gamma == 0.0 || std::fabs(gamma) <= kOrthogonalityTol * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::fabs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        rotate_columns(w, p, q, c, s);
        rotate_columns(v, p, q, c, s);
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = std::sqrt(dot_columns(w, j, j));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

  SvdResult result;
  result.singular_values.resize(n);
  result.right_vectors = Matrix<double>(n, n);
  Matrix<double> u(m, n);
  std::vector<bool> missing(n, false);

  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    const double s = sigma[src];
    result.singular_values[k] = s;

    std::size_t peak = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::fabs(v(i, src)) > std::fabs(v(peak, src))) peak = i;
    const double sign = v(peak, src) < 0.0 ? -1.0 : 1.0;

    for (std::size_t i = 0; i < n; ++i) result.right_vectors(i, k) = sign * v(i, src);
    if (s > 0.0) {
      for (std::size_t i = 0; i < m; ++i) u(i, k) = sign * w(i, src) / s;
    } else {
      missing[k] = true;
    }
  }

  if (keep_left_vectors) {
    complete_orthonormal(u, missing);
    Matrix<double> left(a.rows(), n);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) left(i, j) = u(i, j);
    result.left_vectors = std::move(left);
  }
  return result;
}

bool RankPolicy::is_zero(double sigma, double sigma_max) const {
  return sigma <= std::max(relative_threshold * sigma_max, absolute_floor);
}

void RankPolicy::validate() const {
  if (!(relative_threshold > 0.0) || !std::isfinite(relative_threshold)) {
    throw Error("rank tolerance must be a positive finite number");
  }
  if (!(absolute_floor >= 0.0) || !std::isfinite(absolute_floor)) {
    throw Error("absolute rank floor must be a nonnegative finite number");
  }
}

Nullspace numerical_nullspace(const SvdResult& s, const RankPolicy& policy) {
  policy.validate();
  const std::size_t n = s.order();
  const double sigma_max = n == 0 ? 0.0 : s.singular_values.front();

  int nullity = 0;
  for (double sigma : s.singular_values)
    if (policy.is_zero(sigma, sigma_max)) ++nullity;

  Nullspace ns;
  ns.nullity = nullity;
  ns.rank = static_cast<int>(n) - nullity;
  ns.basis = Matrix<double>(n, static_cast<std::size_t>(nullity));
  for (int k = 0; k < nullity; ++k) {
    const std::size_t col = n - static_cast<std::size_t>(nullity) + static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < n; ++i) ns.basis(i, k) = s.right_vectors(i, col);
  }
  return ns;
}

}  // namespace bezinv
