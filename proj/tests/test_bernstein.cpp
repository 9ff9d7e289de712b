#include "bezinv/bernstein.hpp"

#include <doctest.h>

#include "support.hpp"

using namespace bezinv;
using namespace bezinv::testing;

TEST_CASE("eval interpolates the endpoints and expands the basis at t = 1/2") {
  const auto p = poly_of({3, 5, 9});
  CHECK(eval(p, Q(0)) == 3);
  CHECK(eval(p, Q(1)) == 9);
  CHECK(eval(p, Q(1, 2)) == Q(11, 2));
  CHECK(eval(p.as<double>(), 0.5) == doctest::Approx(5.5));
}

TEST_CASE("bernstein_vector examples") {
  CHECK(bernstein_vector(3, Q(0)) == std::vector<Rational>{1, 0, 0, 0});
  CHECK(bernstein_vector(2, Q(1, 2)) == std::vector<Rational>{Q(1, 4), Q(1, 2), Q(1, 4)});

  const auto v = bernstein_vector(4, Q(1, 3));
  const std::vector<Rational> frozen{Q(16, 81), Q(32, 81), Q(24, 81), Q(8, 81), Q(1, 81)};
  CHECK(v == frozen);
  for (int i = 0; i <= 4; ++i) CHECK(frozen[i] == bernstein_direct(4, i, Q(1, 3)));
}

TEST_CASE("multiply examples") {
  Rng rng(11);
  const auto one = poly_of({1, 1});
  const auto q = rng.poly(2);
  const auto prod = multiply(one, q);
  CHECK(prod.degree() == 3);
  for (const auto& t : {Q(0), Q(1, 5), Q(1, 2), Q(7, 9), Q(1)}) CHECK(eval(prod, t) == eval(q, t));

  CHECK(multiply(BernsteinPoly<Rational>::zero(3), q) == BernsteinPoly<Rational>::zero(5));

  const auto t_mono = poly_of({0, 1});
  CHECK(multiply(t_mono, t_mono) == poly_of({0, 0, 1}));
}

TEST_CASE("power_degree detects degree drops exactly") {
  // q-bar of the quartic example: (2-y, 3-y, 3-y, 3-y, 4-y) has power degree 3 for every y.
  for (const auto& y : {Q(0), Q(7, 3), Q(-30395517, 10000000)}) {
    const auto qbar = BernsteinPoly<Rational>({2 - y, 3 - y, 3 - y, 3 - y, 4 - y});
    CHECK(power_degree(qbar) == 3);
  }
  CHECK(power_degree(BernsteinPoly<Rational>::constant(5, Q(-2, 3))) == 0);

  auto pbar = [](const Rational& x) {
    return BernsteinPoly<Rational>({4 - x, 4 - x, 3 - x, 3 - x, 7 - 3 * x});
  };
  CHECK(power_degree(pbar(Q(1, 2))) == 3);
  CHECK(power_degree(pbar(Q(1, 3))) == 4);
  // 4 - x - 6t^2 + 8t^3 + (1 - 2x) t^4
  const Rational x = Q(5, 7);
  CHECK(power_coefficients(pbar(x)) == std::vector<Rational>{4 - x, 0, -6, 8, 1 - 2 * x});

  CHECK_THROWS_AS(power_degree(BernsteinPoly<Rational>::zero(3)), ZeroPolynomialError);
}

TEST_CASE("power_degree under doubles uses a relative cut-off") {
  const auto pbar = BernsteinPoly<double>({3.5, 3.5, 2.5, 2.5, 5.5});
  CHECK(power_degree(pbar) == 3);
  const auto nudged = BernsteinPoly<double>({3.5, 3.5, 2.5, 2.5, 5.5 + 1e-6});
  CHECK(power_degree(nudged) == 4);
  CHECK_THROWS_AS(power_degree(BernsteinPoly<double>::zero(2)), ZeroPolynomialError);
}

TEST_CASE("degree_reduce examples") {
  const Rational y = Q(-30395517, 10000000);
  const auto qbar = BernsteinPoly<Rational>({2 - y, 3 - y, 3 - y, 3 - y, 4 - y});
  const auto reduced = degree_reduce(qbar, 3);
  REQUIRE(reduced.degree() == 3);
  // Oracle: power form 2 - y + 4t - 6t^2 + 4t^3 converted to B_3.
  const std::vector<Rational> power{2 - y, 4, -6, 4};
  CHECK(std::vector<Rational>(reduced.coeffs().begin(), reduced.coeffs().end()) == power_to_bernstein(power, 3));
  for (int k = 0; k <= 3; ++k) CHECK(eval(reduced, Q(k, 3)) == eval_power(power, Q(k, 3)));

  CHECK(degree_reduce(BernsteinPoly<Rational>::constant(2, Q(5)), 0) == BernsteinPoly<Rational>::constant(0, Q(5)));

  const auto t_in_b3 = BernsteinPoly<Rational>({Q(0), Q(1, 3), Q(2, 3), Q(1)});
  CHECK(degree_reduce(t_in_b3, 1) == poly_of({0, 1}));

  CHECK_THROWS_AS(degree_reduce(qbar, 2), NotRepresentableError);
}

TEST_CASE("change_of_basis_matrix examples") {
  CHECK(change_of_basis_matrix<Rational>(1) == Matrix<Rational>::identity(1));

  const auto n2 = change_of_basis_matrix<Rational>(2);
  CHECK(n2(0, 0) == 1);
  CHECK(n2(0, 1) == 0);
  CHECK(n2(1, 0) == -1);
  CHECK(n2(1, 1) == 1);

  const auto n3 = change_of_basis_matrix<Rational>(3);
  for (const auto& t : {Q(0), Q(1, 2), Q(1)}) {
    const std::vector<Rational> powers{1, t, t * t};
    CHECK(n3.transpose() * powers == bernstein_vector(2, t));
  }
  for (int n = 1; n <= 8; ++n) {
    const auto N = change_of_basis_matrix<Rational>(n);
    for (int i = 0; i < n; ++i) {
      CHECK(N(i, i) != 0);
      for (int j = i + 1; j < n; ++j) CHECK(N(i, j) == 0);
    }
  }
}

TEST_CASE("property: partition of unity") {
  Rng rng(1);
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k < 50; ++k) {
      const Rational t = Q(rng.integer(0, 1000), 1000);
      const auto v = bernstein_vector(n, t);
      Rational sum(0);
      for (const auto& b : v) sum += b;
      CHECK(sum == 1);

      const auto vd = bernstein_vector(n, rng.real(0.0, 1.0));
      double sd = 0.0;
      for (double b : vd) sd += b;
      CHECK(std::fabs(sd - 1.0) <= 1e-14);
    }
  }
}

TEST_CASE("property: endpoint interpolation and agreement with the direct basis") {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = rng.poly(static_cast<int>(rng.integer(0, 12)));
    CHECK(eval(p, Q(0)) == p[0]);
    CHECK(eval(p, Q(1)) == p[p.degree()]);
    const Rational t = rng.rational();
    CHECK(eval(p, t) == eval_direct(p.coeffs(), t));
  }
}

TEST_CASE("property: product evaluates to the product of evaluations") {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto p = rng.poly(static_cast<int>(rng.integer(0, 6)));
    const auto q = rng.poly(static_cast<int>(rng.integer(0, 6)));
    const auto pq = multiply(p, q);
    CHECK(pq.degree() == p.degree() + q.degree());
    for (int k = 0; k < 3; ++k) {
      const Rational t = rng.rational();
      CHECK(eval(pq, t) == eval(p, t) * eval(q, t));
    }
  }
}

TEST_CASE("property: degree reduction followed by elevation is the identity") {
  Rng rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = static_cast<int>(rng.integer(0, 6));
    const int extra = static_cast<int>(rng.integer(0, 5));
    auto low = rng.poly(d);
    const auto p = elevate(low, extra);
    if (low.is_zero()) continue;
    const int pd = power_degree(p);
    CHECK(pd <= d);
    const auto reduced = degree_reduce(p, pd);
    CHECK(elevate(reduced, p.degree() - pd) == p);
  }
}

TEST_CASE("property: N^T maps monomials to the Bernstein vector") {
  Rng rng(5);
  for (int n = 1; n <= 12; ++n) {
    const auto Nt = change_of_basis_matrix<Rational>(n).transpose();
    for (int k = 0; k < n; ++k) {
      const Rational t = rng.rational();
      std::vector<Rational> powers(n);
      powers[0] = 1;
      for (int i = 1; i < n; ++i) powers[i] = powers[i - 1] * t;
      CHECK(Nt * powers == bernstein_vector(n - 1, t));
    }
  }
}

TEST_CASE("binomial rows are exact beyond double range") {
  const auto row = binomial_row(80);
  CHECK(row[40] == Integer("107507208733336176461620"));
  CHECK(binomial<double>(10, 3) == 120.0);
  CHECK(binomial<Rational>(5, 7) == 0);
}
