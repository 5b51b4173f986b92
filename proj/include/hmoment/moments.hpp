#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "hmoment/rational.hpp"

namespace hmoment {

enum class DistributionKind { gaussian, uniform, explicit_moments, empirical_samples };

const char* to_string(DistributionKind kind) noexcept;

/// A zero-mean symmetric distribution, parameterized by its variance.
/// Only the fields relevant to `kind` are meaningful: `sigma2` for the
/// parametric families, `moments` (mu_0, mu_2, mu_4, ...) for explicit lists
/// and `samples` (exact decimals) for empirical data.
struct DistributionSpec {
  DistributionKind kind = DistributionKind::gaussian;
  Rational sigma2 = 1;
  std::vector<Rational> moments;
  std::vector<Rational> samples;

  static DistributionSpec gaussian(Rational sigma2);
  static DistributionSpec uniform(Rational sigma2);
  static DistributionSpec explicit_moments(std::vector<Rational> moments);
  static DistributionSpec empirical(std::vector<Rational> samples);
};

/// Even moments mu[k] = E(s^{2k}), k = 0..2M-1. Odd moments vanish by symmetry
/// and are never stored.
class MomentSequence {
 public:
  MomentSequence(std::vector<Rational> mu, DistributionSpec source);

  /// Order M such that the sequence fills both M x M moment matrices.
  [[nodiscard]] std::size_t order() const noexcept { return mu_.size() / 2; }
  [[nodiscard]] std::size_t size() const noexcept { return mu_.size(); }
  [[nodiscard]] const std::vector<Rational>& values() const noexcept { return mu_; }
  [[nodiscard]] const DistributionSpec& source() const noexcept { return source_; }
  const Rational& operator[](std::size_t k) const { return mu_[k]; }

  /// E(s^n) for any n: zero when n is odd.
  [[nodiscard]] Rational raw_moment(std::size_t n) const;

 private:
  std::vector<Rational> mu_;
  DistributionSpec source_;
};

/// n!! with (-1)!! = 0!! = 1.
Integer double_factorial(long n);
Integer factorial(unsigned long n);

MomentSequence gaussian_even_moments(std::size_t m, const Rational& sigma2);
MomentSequence uniform_even_moments(std::size_t m, const Rational& sigma2);
MomentSequence empirical_even_moments(const std::vector<Rational>& samples, std::size_t m);

/// Validates an explicit list and returns its first 2M entries.
MomentSequence explicit_even_moments(const std::vector<Rational>& moments, std::size_t m);

/// Dispatches on the distribution kind.
MomentSequence even_moments(const DistributionSpec& dist, std::size_t m);

/// Moment file: {"m": M, "even_moments": ["1", "1/4", ...]}.
MomentSequence load_moment_file(const std::filesystem::path& path);
std::vector<Rational> parse_moment_json(const std::string& text, std::size_t* m_out = nullptr);

/// Sample file: one decimal per line.
std::vector<Rational> load_sample_file(const std::filesystem::path& path);
std::vector<Rational> parse_samples(const std::string& text);

}  // namespace hmoment
