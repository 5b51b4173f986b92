// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hmoment/factorization.hpp"
#include "hmoment/hankel.hpp"
#include "hmoment/hermite.hpp"
#include "hmoment/moments.hpp"
#include "hmoment/optimizer.hpp"
#include "oracles.hpp"

using namespace hmoment;

namespace {

const std::vector<Rational> kGridSigma2{Rational(1), Rational(4), Rational(1, 4), Rational(9, 49)};
constexpr std::size_t kGridMaxM = 12;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
  void require(bool condition, const std::string& why) {
    if (!condition) fail(why);
  }
};

std::string describe(const CheckReport& r, std::size_t m, const Rational& s2) {
  std::ostringstream os;
  os << r.name << " failed at M=" << m << " sigma2=" << to_string(s2);
  if (r.mismatch) {
    os << " (" << r.mismatch->quantity;
    if (r.mismatch->row) os << " at " << *r.mismatch->row << "," << *r.mismatch->col;
    os << ": expected " << to_string(r.mismatch->expected) << ", got " << to_string(r.mismatch->actual) << ")";
  }
  return os.str();
}

void grid_check(Outcome& out, const std::function<CheckReport(std::size_t, const Rational&)>& check) {
  for (std::size_t m = 1; m <= kGridMaxM; ++m)
    for (const auto& s2 : kGridSigma2) {
      const CheckReport r = check(m, s2);
      if (!r.passed) out.fail(describe(r, m, s2));
    }
}

double rel_err(double actual, double expected) {
  return std::abs(actual - expected) / std::max(std::abs(expected), 1e-300);
}

Outcome example1() {
  Outcome out;
  const auto mu = gaussian_even_moments(3, 1);
  const auto a = build_A(mu);
  const auto b = build_B(mu);
  out.require(a.entries() == RationalMatrix{{1, 1, 3}, {1, 3, 15}, {3, 15, 105}}, "A differs from golden value");
  out.require(b.entries() == RationalMatrix{{1, 3, 15}, {3, 15, 105}, {15, 105, 945}}, "B differs from golden value");

  const auto c = whitened_form(a, b, order_diagonal(3));
  double c_err = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c_err = std::max(c_err, std::abs(c(i, j) - (i == j ? 2.0 * i + 1 : 0.0)));
  out.require(c_err <= 1e-9, "C deviates from diag(1,3,5) by " + std::to_string(c_err));

  const auto result = max_gain(DistributionSpec::gaussian(1), 5);
  out.require(std::abs(result.gain - 5.0) <= 1e-9, "gain " + std::to_string(result.gain));
  const double expected_a[] = {15, -10, 1};
  for (std::size_t k = 0; k < 3; ++k)
    out.require(std::abs(result.a.a[k] - expected_a[k]) <= 1e-8, "a[" + std::to_string(k) + "] off");
  std::ostringstream os;
  os << "max|C - D| = " << c_err << ", |G - 5| = " << std::abs(result.gain - 5.0);
  if (out.passed) out.detail = os.str();
  return out;
}

Outcome optimizer_spectrum_law() {
  Outcome out;
  double worst_eig = 0, worst_a = 0;
  for (const Rational& s2 : {Rational(1), Rational(1, 4)})
    for (std::size_t n : {5u, 7u, 9u, 11u}) {
      const std::size_t m = (n + 1) / 2;
      const auto r = max_gain(DistributionSpec::gaussian(s2), n);
      const double inv = 1.0 / s2.get_d();
      for (std::size_t k = 0; k < m; ++k) worst_eig = std::max(worst_eig, rel_err(r.eigenvalues[k], inv * (2.0 * k + 1)));
      const auto beta = hermite_coefficients(static_cast<unsigned>(n), m).packed;
      for (std::size_t k = 0; k < m; ++k)
        worst_a = std::max(worst_a, rel_err(r.a.a[k], Rational(beta[k] * pow(s2, m - 1 - k)).get_d()));
    }
  out.require(worst_eig <= 1e-9, "eigenvalue relative error " + std::to_string(worst_eig));
  out.require(worst_a <= 1e-8, "coefficient relative error " + std::to_string(worst_a));
  if (out.passed) {
    std::ostringstream os;
    os << "worst eigenvalue rel err " << worst_eig << ", worst coefficient rel err " << worst_a;
    out.detail = os.str();
  }
  return out;
}

Outcome small_instance_oracle() {
  Outcome out;
  double worst = 0;
  for (const Rational& s2 : {Rational(1, 3), Rational(1), Rational(4), Rational(2, 7)}) {
    const auto mu = uniform_even_moments(2, s2);
    const auto d = order_diagonal(2);
    const RationalMatrix p = d * (build_A(mu).entries() * d);
    const RationalMatrix q = build_B(mu).entries();
    const oracle::QMatrix po{{p(0, 0), p(0, 1)}, {p(1, 0), p(1, 1)}};
    const oracle::QMatrix qo{{q(0, 0), q(0, 1)}, {q(1, 0), q(1, 1)}};
    const long double root = oracle::generalized_top_eigenvalue_2x2(po, qo);
    const auto r = max_gain(DistributionSpec::uniform(s2), 3);
    worst = std::max(worst, static_cast<double>(std::abs(static_cast<long double>(r.gain) - root)));
  }
  out.require(worst <= 1e-10, "max |gain - root| = " + std::to_string(worst));
  if (out.passed) {
    std::ostringstream os;
    os << "max |gain - quadratic root| = " << worst;
    out.detail = os.str();
  }
  return out;
}

Outcome monte_carlo() {
  Outcome out;
  const OddPolynomial h5{{15.0, -10.0, 1.0}};
  constexpr std::uint64_t seed = 20240601;
  const auto mc = monte_carlo_gain(h5, 1.0, 1'000'000, seed);
  out.require(std::abs(mc.estimate - 5.0) <= 3 * mc.standard_error, "estimate outside 3 standard errors");
  out.require(mc.standard_error < 0.05, "standard error " + std::to_string(mc.standard_error));
  std::ostringstream os;
  os << "estimate " << mc.estimate << " +- " << mc.standard_error;
  if (out.passed) out.detail = os.str(); else out.detail += " (" + os.str() + ")";
  return out;
}

Outcome derivative_gradient_check() {
  Outcome out;
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coeff(-2.0, 2.0);
  std::uniform_real_distribution<double> point(-3.0, 3.0);
  double min_order = 1e9, max_order = 0;
  for (int trial = 0; trial < 20; ++trial) {
    OddPolynomial f;
    // M = 1 is linear: central differences are exact and show no decay to measure.
    const auto m = static_cast<std::size_t>(oracle::uniform_int(rng, 2, 5));
    for (std::size_t k = 0; k < m; ++k) f.a.push_back(coeff(rng));
    double coarse = 0, fine = 0;
    for (int p = 0; p < 5; ++p) {
      const double s = point(rng);
      const double exact = eval_odd_poly_derivative(f, s);
      auto fd = [&](double h) { return (eval_odd_poly(f, s + h) - eval_odd_poly(f, s - h)) / (2 * h); };
      coarse = std::max(coarse, std::abs(fd(1e-3) - exact));
      fine = std::max(fine, std::abs(fd(1e-4) - exact));
    }
    const double order = std::log10(coarse / fine);
    min_order = std::min(min_order, order);
    max_order = std::max(max_order, order);
  }
  // Quadratic decay over one decade of h is a factor of 100, i.e. order 2.
  out.require(min_order >= 1.8 && max_order <= 2.2,
              "observed orders in [" + std::to_string(min_order) + ", " + std::to_string(max_order) + "]");
  if (out.passed) out.detail = "observed orders in [" + std::to_string(min_order) + ", " + std::to_string(max_order) + "]";
  return out;
}

struct Criterion {
  int id;
  std::string title;
  double time_limit_s;  // 0 = none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Golden M = 3 Gaussian instance", 1.0, example1},
      {2, "Square-root-free congruence, exact", 10.0,
       [] {
         Outcome o;
         grid_check(o, [](std::size_t m, const Rational& s2) { return verify_theorem1(m, s2); });
         return o;
       }},
      {3, "Hermite congruence diagonalizes A and B, exact", 0.0,
       [] {
         Outcome o;
         grid_check(o, [](std::size_t m, const Rational& s2) { return check_lemma1(m, s2); });
         return o;
       }},
      {4, "Triangle commuting relation, M = 1..32", 0.0,
       [] {
         Outcome o;
         for (std::size_t m = 1; m <= 32; ++m) {
           const auto r = check_commute(m);
           if (!r.passed) o.fail(describe(r, m, 1));
         }
         return o;
       }},
      {5, "Closed-form determinant products", 0.0,
       [] {
         Outcome o;
         grid_check(o, [](std::size_t m, const Rational& s2) { return check_determinant_products(m, s2); });
         const auto mu = gaussian_even_moments(3, 1);
         const Rational det_a = determinant(build_A(mu));
         const Rational det_b = determinant(build_B(mu));
         o.require(det_a == 48, "det A0 = " + to_string(det_a));
         o.require(det_b == 720, "det B0 = " + to_string(det_b));
         o.require(det_b / det_a == 15 && order_diagonal(3).determinant() == 15, "det B0 / det A0 != det D = 15");
         return o;
       }},
      {6, "Moment recurrence (Gaussian holds, uniform fails)", 0.0,
       [] {
         Outcome o;
         grid_check(o, [](std::size_t m, const Rational& s2) {
           const auto mu = gaussian_even_moments(m, s2);
           return check_recurrence(build_A(mu), build_B(mu), s2);
         });
         for (std::size_t m = 2; m <= kGridMaxM; ++m)
           for (const auto& s2 : kGridSigma2) {
             const auto mu = uniform_even_moments(m, s2);
             if (check_recurrence(build_A(mu), build_B(mu), s2).passed)
               o.fail("uniform recurrence unexpectedly held at M=" + std::to_string(m));
           }
         return o;
       }},
      {7, "Hermite orthogonality, 0 <= n, m <= 15", 0.0,
       [] {
         Outcome o;
         const auto r = check_orthogonality(15);
         if (!r.passed) o.fail(describe(r, 0, 1));
         return o;
       }},
      {8, "Optimizer spectrum and Hermite laws", 0.0, optimizer_spectrum_law},
      {9, "Small-instance generalized-eigen oracle", 0.0, small_instance_oracle},
      {10, "Monte Carlo consistency", 5.0, monte_carlo},
      {11, "Derivative gradient check", 0.0, derivative_gradient_check},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_s > 0 && seconds >= c.time_limit_s)
      o.fail("runtime " + std::to_string(seconds) + " s exceeds " + std::to_string(c.time_limit_s) + " s");
    if (!o.passed) ++failures;
    std::printf("[%s] %2d. %s (%.3f s)%s%s\n", o.passed ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
