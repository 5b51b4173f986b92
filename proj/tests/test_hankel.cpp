#include <doctest.h>

#include <random>

#include "hmoment/errors.hpp"
#include "hmoment/hankel.hpp"
#include "oracles.hpp"

using namespace hmoment;

namespace {

oracle::QMatrix to_oracle(const RationalMatrix& m) {
  oracle::QMatrix out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i].assign(m.row(i).begin(), m.row(i).end());
  return out;
}

}  // namespace

TEST_SUITE("hankel") {
  TEST_CASE("golden M = 3 moment matrices") {
    const auto mu = gaussian_even_moments(3, 1);
    CHECK(build_A(mu).entries() == RationalMatrix{{1, 1, 3}, {1, 3, 15}, {3, 15, 105}});
    CHECK(build_B(mu).entries() == RationalMatrix{{1, 3, 15}, {3, 15, 105}, {15, 105, 945}});
  }

  TEST_CASE("small and scaled constructions") {
    CHECK(build_A(gaussian_even_moments(1, 5)).entries() == RationalMatrix{{1}});
    CHECK(build_B(gaussian_even_moments(1, 5)).entries() == RationalMatrix{{5}});
    CHECK(build_A(gaussian_even_moments(2, 4)).entries() == RationalMatrix{{1, 4}, {4, 48}});
    CHECK(build_B(uniform_even_moments(2, Rational(1, 3))).entries() ==
          RationalMatrix{{Rational(1, 3), Rational(1, 5)}, {Rational(1, 5), Rational(1, 7)}});
  }

  TEST_CASE("insufficient moments raise a dimension error") {
    const auto mu = gaussian_even_moments(2, 1);
    CHECK_NOTHROW(build_A(mu, 2));
    CHECK_THROWS_AS(build_A(mu, 3), DimensionError);
    CHECK_THROWS_AS(build_B(mu, 3), DimensionError);
  }

  TEST_CASE("Hankel structure, symmetry and shift property") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
      const std::size_t m = static_cast<std::size_t>(oracle::uniform_int(rng, 1, 9));
      const auto mu = trial % 2 ? uniform_even_moments(m, oracle::random_positive_rational(rng, 9))
                                : gaussian_even_moments(m, oracle::random_positive_rational(rng, 9));
      const auto a = build_A(mu);
      const auto b = build_B(mu);
      CHECK(is_symmetric(a.entries()));
      CHECK(is_symmetric(b.entries()));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          if (i + 1 < m && j > 0) {
            CHECK(a(i + 1, j - 1) == a(i, j));
            CHECK(b(i + 1, j - 1) == b(i, j));
          }
          if (j + 1 < m) CHECK(b(i, j) == a(i, j + 1));
        }
    }
  }

  TEST_CASE("diagonals") {
    CHECK(order_diagonal(3).diag == std::vector<Rational>{1, 3, 5});
    CHECK(order_diagonal(1).diag == std::vector<Rational>{1});
    CHECK(order_diagonal(4).diag == std::vector<Rational>{1, 3, 5, 7});
    CHECK(sigma_diagonal(5, 1).dense() == RationalMatrix::identity(5));
    CHECK(sigma_diagonal(3, 4).diag == std::vector<Rational>{1, 4, 16});
    CHECK(sigma_diagonal(2, Rational(1, 4)).diag == std::vector<Rational>{1, Rational(1, 4)});
    CHECK_THROWS_AS(sigma_diagonal(2, 0), InvalidDistribution);
  }

  TEST_CASE("determinant against cofactor expansion") {
    const auto mu = gaussian_even_moments(3, 1);
    CHECK(determinant(build_A(mu)) == 48);
    CHECK(determinant(build_B(mu)) == 720);
    CHECK(oracle::cofactor_determinant(to_oracle(build_A(mu).entries())) == 48);
    CHECK(oracle::cofactor_determinant(to_oracle(build_B(mu).entries())) == 720);
    CHECK(determinant(build_A(gaussian_even_moments(1, 7))) == 1);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = static_cast<std::size_t>(oracle::uniform_int(rng, 1, 6));
      RationalMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          // Sprinkle zeros to exercise the row-swap path.
          m(i, j) = oracle::uniform_int(rng, 0, 3) == 0 ? Rational(0)
                                                        : Rational(oracle::uniform_int(rng, -9, 9),
                                                                   oracle::uniform_int(rng, 1, 7));
          m(i, j).canonicalize();
        }
      CHECK(determinant(m) == oracle::cofactor_determinant(to_oracle(m)));
    }
  }

  TEST_CASE("scaling split") {
    for (const Rational& s2 : {Rational(1), Rational(4), Rational(9, 49)}) {
      for (std::size_t m : {3u, 5u}) {
        const auto mu = gaussian_even_moments(m, s2);
        CHECK(check_scaling_split(build_A(mu), build_B(mu), s2).passed);
      }
    }
    const auto mu = gaussian_even_moments(3, 4);
    const auto report = check_scaling_split(build_A(mu), build_B(mu), 2);
    CHECK_FALSE(report.passed);
    REQUIRE(report.mismatch);
    CHECK(report.mismatch->row.has_value());
  }

  TEST_CASE("recurrence holds for Gaussian moments and fails for uniform") {
    const auto scalar = gaussian_even_moments(1, 3);
    CHECK(check_recurrence(build_A(scalar), build_B(scalar), 3).passed);
    const auto g = gaussian_even_moments(3, 1);
    CHECK(check_recurrence(build_A(g), build_B(g), 1).passed);

    const auto u = uniform_even_moments(2, Rational(1, 3));
    const auto report = check_recurrence(build_A(u), build_B(u), Rational(1, 3));
    CHECK_FALSE(report.passed);
    REQUIRE(report.mismatch);
    // AD + DA at (0, 1) is (1 + 3) / 3 = 4/3; A + 3B gives 1/3 + 3/5 = 14/15.
    CHECK(report.mismatch->row == 0u);
    CHECK(report.mismatch->col == 1u);
    CHECK(report.mismatch->expected == Rational(14, 15));
    CHECK(report.mismatch->actual == Rational(4, 3));
  }

  TEST_CASE("determinant products") {
    CHECK(check_determinant_products(1, Rational(3, 7)).passed);
    CHECK(check_determinant_products(3, 1).passed);
    CHECK(check_determinant_products(6, Rational(9, 49)).passed);
    const auto mu = gaussian_even_moments(3, 1);
    CHECK(determinant(build_B(mu)) / determinant(build_A(mu)) == order_diagonal(3).determinant());
  }
}
