#include "bezinv/resultant.hpp"

namespace bezinv {

bool det_is_zero(const ResultantMatrix<Rational>& M) {
  const std::size_t n = M.entries.rows();
  if (n == 0) return false;

  Matrix<Integer> A(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer lcm_den(1);
    for (const auto& v : M.entries.row(i)) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = M.entries(i, j);
      A(i, j) = v.get_num() * (lcm_den / v.get_den());
    }
  }

  Integer prev_pivot(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && A(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return true;
      for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(swap_row, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = A(i, j) * A(k, k) - A(i, k) * A(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
        A(i, j) = v;
      }
      A(i, k) = 0;
    }
    prev_pivot = A(k, k);
  }
  return A(n - 1, n - 1) == 0;
}

bool det_is_zero(const ResultantMatrix<double>&) {
  throw NotExactError("det_is_zero needs exact entries; use the SVD rank for floating-point matrices");
}

}  // namespace bezinv
