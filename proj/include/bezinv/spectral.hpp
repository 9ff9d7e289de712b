#pragma once

// Singular value decomposition and the rank decision built on it.

#include "bezinv/matrix.hpp"

#include <optional>
#include <vector>

namespace bezinv {

struct SvdResult {
  /// Descending, nonnegative. One value per column of the input.
  std::vector<double> singular_values;
  /// Orthonormal right singular vectors, one per column (V, cols x cols).
  Matrix<double> right_vectors;
  /// Left singular vectors (rows x cols), present when requested.
  std::optional<Matrix<double>> left_vectors;

  std::size_t order() const { return singular_values.size(); }
  std::vector<double> right_vector(std::size_t k) const { return right_vectors.column(k); }
};

/// One-sided (Hestenes) Jacobi SVD. A matrix with fewer rows than columns is
/// padded with zero rows, so the result always carries cols() singular values.
///
/// Each right singular vector is signed so that its largest-magnitude
/// component is positive. The result is deterministic for a fixed input.
/// Throws NonFiniteError on NaN or infinite entries.
SvdResult svd(const Matrix<double>& a, bool keep_left_vectors = true);

struct RankPolicy {
  double relative_threshold = 1e-5;
  double absolute_floor = 0.0;

  /// sigma is numerically zero iff sigma <= max(relative_threshold * sigma_max, absolute_floor).
  bool is_zero(double sigma, double sigma_max) const;
  void validate() const;
};

struct Nullspace {
  int nullity = 0;
  int rank = 0;
  /// Trailing columns of V, one per numerically zero singular value
  /// (order x nullity).
  Matrix<double> basis;

  std::vector<double> vector(std::size_t k) const { return basis.column(k); }
};

Nullspace numerical_nullspace(const SvdResult& s, const RankPolicy& policy = {});

}  // namespace bezinv
