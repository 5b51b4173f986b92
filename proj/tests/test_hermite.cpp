#include <doctest.h>

#include <cmath>
#include <random>

#include "hmoment/errors.hpp"
#include "hmoment/hankel.hpp"
#include "hmoment/hermite.hpp"
#include "hmoment/moments.hpp"
#include "oracles.hpp"

using namespace hmoment;

namespace {
using Row = std::vector<Rational>;
}

TEST_SUITE("hermite") {
  TEST_CASE("printed low-order polynomials") {
    CHECK(hermite_dense(0) == Row{1});
    CHECK(hermite_dense(1) == Row{0, 1});
    CHECK(hermite_dense(2) == Row{-1, 0, 1});
    CHECK(hermite_dense(3) == Row{0, -3, 0, 1});
    CHECK(hermite_dense(4) == Row{3, 0, -6, 0, 1});
    CHECK(hermite_dense(5) == Row{0, 15, 0, -10, 0, 1});
  }

  TEST_CASE("packed coefficients") {
    CHECK(hermite_coefficients(2, 4).packed == Row{-1, 1, 0, 0});
    CHECK(hermite_coefficients(0, 3).packed == Row{1, 0, 0});
    CHECK(hermite_coefficients(5, 4).packed == Row{15, -10, 1, 0});
    CHECK(hermite_coefficients(1, 1).packed == Row{1});
    CHECK_THROWS_AS(hermite_coefficients(5, 2), DimensionError);
    CHECK_THROWS_AS(hermite_coefficients(4, 2), DimensionError);
  }

  TEST_CASE("recurrence agrees with the derivative definition") {
    for (unsigned n = 0; n <= 20; ++n) CHECK(hermite_dense(n) == oracle::hermite_by_definition(n));
  }

  TEST_CASE("packed rows end in one and alternate in sign") {
    for (unsigned n = 0; n <= 25; ++n) {
      const auto beta = hermite_coefficients(n, hermite_packed_length(n)).packed;
      CHECK(beta.back() == 1);
      for (std::size_t k = 0; k + 1 < beta.size(); ++k) CHECK(sgn(beta[k]) == -sgn(beta[k + 1]));
    }
  }

  TEST_CASE("triangular Hermite matrices") {
    CHECK(build_L_b(3).rows == RationalMatrix{{1, 0, 0}, {-3, 1, 0}, {15, -10, 1}});
    CHECK(build_L_a(1).rows == RationalMatrix{{1}});
    CHECK(build_L_a(3).rows == RationalMatrix{{1, 0, 0}, {-1, 1, 0}, {3, -6, 1}});
    for (std::size_t m = 1; m <= 12; ++m)
      for (const auto& t : {build_L_a(m), build_L_b(m)})
        for (std::size_t i = 0; i < m; ++i) {
          CHECK(t.rows(i, i) == 1);
          for (std::size_t j = i + 1; j < m; ++j) CHECK(t.rows(i, j) == 0);
        }
  }

  TEST_CASE("commuting property") {
    CHECK(check_commute(1).passed);
    CHECK(check_commute(8).passed);
    const auto d = order_diagonal(3);
    CHECK(build_L_b(3).rows * d == RationalMatrix{{1, 0, 0}, {-3, 3, 0}, {15, -30, 5}});
    CHECK(d * build_L_a(3).rows == RationalMatrix{{1, 0, 0}, {-3, 3, 0}, {15, -30, 5}});
  }

  TEST_CASE("derivative identity H_n' = n H_{n-1}") {
    for (unsigned n = 1; n <= 23; ++n) {
      auto expected = hermite_dense(n - 1);
      for (auto& c : expected) c *= static_cast<long>(n);
      CHECK(derivative(hermite_dense(n)) == expected);
    }
  }

  TEST_CASE("orthogonality integral") {
    CHECK(orthogonality_integral(2, 2) == 2);
    CHECK(orthogonality_integral(2, 4) == 0);
    CHECK(orthogonality_integral(0, 0) == 1);
    CHECK(orthogonality_integral(3, 1) == 0);
    CHECK(check_orthogonality(15).passed);
  }

  TEST_CASE("orthogonality integral agrees with quadrature") {
    for (unsigned n = 0; n <= 8; ++n)
      for (unsigned m = 0; m <= 8; ++m) {
        const auto hn = hermite_dense(n);
        const auto hm = hermite_dense(m);
        auto eval = [](const std::vector<Rational>& c, long double s) {
          long double acc = 0;
          for (std::size_t k = c.size(); k-- > 0;) acc = acc * s + c[k].get_d();
          return acc;
        };
        const long double numeric = oracle::gaussian_quadrature([&](long double s) { return eval(hn, s) * eval(hm, s); });
        CHECK(static_cast<double>(numeric) == doctest::Approx(orthogonality_integral(n, m).get_d()).epsilon(1e-9));
      }
  }

  TEST_CASE("odd polynomial evaluation") {
    const OddPolynomial identity{{1.0}};
    CHECK(eval_odd_poly(identity, 2.0) == 2.0);
    CHECK(eval_odd_poly_derivative(identity, 2.0) == 1.0);
    const OddPolynomial h5{{15.0, -10.0, 1.0}};
    CHECK(eval_odd_poly(h5, 1.0) == 6.0);
    CHECK(eval_odd_poly_derivative(h5, 0.0) == 15.0);
    // f'(2) = 15 - 30 * 4 + 5 * 16 = -25.
    CHECK(eval_odd_poly_derivative(h5, 2.0) == -25.0);
    CHECK(eval_odd_poly(h5, -1.5) == -eval_odd_poly(h5, 1.5));
  }

  TEST_CASE("central differences converge quadratically") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    std::uniform_real_distribution<double> point(-3.0, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
      OddPolynomial f;
      const auto m = static_cast<std::size_t>(oracle::uniform_int(rng, 2, 5));
      for (std::size_t k = 0; k < m; ++k) f.a.push_back(coeff(rng));
      double err_coarse = 0.0;
      double err_fine = 0.0;
      for (int p = 0; p < 5; ++p) {
        const double s = point(rng);
        const double exact = eval_odd_poly_derivative(f, s);
        auto fd = [&](double h) { return (eval_odd_poly(f, s + h) - eval_odd_poly(f, s - h)) / (2 * h); };
        err_coarse = std::max(err_coarse, std::abs(fd(1e-3) - exact));
        err_fine = std::max(err_fine, std::abs(fd(1e-4) - exact));
      }
      const double order = std::log10(err_coarse / err_fine);
      CHECK(order > 1.8);
      CHECK(order < 2.2);
    }
  }
}
