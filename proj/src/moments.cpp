#include "hmoment/moments.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hmoment/errors.hpp"

namespace hmoment {
namespace {

void require_positive_variance(const Rational& sigma2) {
  if (sgn(sigma2) <= 0)
    throw InvalidDistribution("variance must be positive, got " + to_string(sigma2));
}

void require_order(std::size_t m) {
  if (m == 0) throw DimensionError("order M must be at least 1");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

const char* to_string(DistributionKind kind) noexcept {
  switch (kind) {
    case DistributionKind::gaussian: return "gaussian";
    case DistributionKind::uniform: return "uniform";
    case DistributionKind::explicit_moments: return "explicit-moments";
    case DistributionKind::empirical_samples: return "empirical-samples";
  }
  return "unknown";
}

DistributionSpec DistributionSpec::gaussian(Rational sigma2) {
  require_positive_variance(sigma2);
  return {DistributionKind::gaussian, std::move(sigma2), {}, {}};
}

DistributionSpec DistributionSpec::uniform(Rational sigma2) {
  require_positive_variance(sigma2);
  return {DistributionKind::uniform, std::move(sigma2), {}, {}};
}

DistributionSpec DistributionSpec::explicit_moments(std::vector<Rational> moments) {
  DistributionSpec spec{DistributionKind::explicit_moments, 1, std::move(moments), {}};
  if (spec.moments.size() >= 2) spec.sigma2 = spec.moments[1];
  return spec;
}

DistributionSpec DistributionSpec::empirical(std::vector<Rational> samples) {
  return {DistributionKind::empirical_samples, 1, {}, std::move(samples)};
}

MomentSequence::MomentSequence(std::vector<Rational> mu, DistributionSpec source)
    : mu_(std::move(mu)), source_(std::move(source)) {
  if (mu_.empty() || mu_.size() % 2 != 0)
    throw DimensionError("moment sequence length must be a positive even number, got " +
                         std::to_string(mu_.size()));
  if (mu_[0] != 1) throw InvalidDistribution("mu_0 must equal 1, got " + hmoment::to_string(mu_[0]));
  for (std::size_t k = 0; k < mu_.size(); ++k)
    if (sgn(mu_[k]) < 0)
      throw InvalidDistribution("even moment mu_" + std::to_string(2 * k) + " is negative");
}

Rational MomentSequence::raw_moment(std::size_t n) const {
  if (n % 2 != 0) return 0;
  if (n / 2 >= mu_.size())
    throw DimensionError("moment E(s^" + std::to_string(n) + ") is beyond the stored sequence");
  return mu_[n / 2];
}

Integer double_factorial(long n) {
  Integer out = 1;
  for (long k = n; k > 1; k -= 2) out *= k;
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

MomentSequence gaussian_even_moments(std::size_t m, const Rational& sigma2) {
  require_order(m);
  auto spec = DistributionSpec::gaussian(sigma2);
  std::vector<Rational> mu;
  mu.reserve(2 * m);
  Rational power = 1;
  for (std::size_t k = 0; k < 2 * m; ++k) {
    mu.emplace_back(Rational(double_factorial(2 * static_cast<long>(k) - 1)) * power);
    power *= sigma2;
  }
  return {std::move(mu), std::move(spec)};
}

// Uniform on [-sqrt(3 sigma2), sqrt(3 sigma2)].
MomentSequence uniform_even_moments(std::size_t m, const Rational& sigma2) {
  require_order(m);
  auto spec = DistributionSpec::uniform(sigma2);
  std::vector<Rational> mu;
  mu.reserve(2 * m);
  const Rational half_width_sq = 3 * sigma2;
  Rational power = 1;
  for (std::size_t k = 0; k < 2 * m; ++k) {
    mu.emplace_back(power / static_cast<long>(2 * k + 1));
    power *= half_width_sq;
  }
  return {std::move(mu), std::move(spec)};
}

MomentSequence empirical_even_moments(const std::vector<Rational>& samples, std::size_t m) {
  require_order(m);
  if (samples.empty()) throw EmptyInput("empirical moments need at least one sample");
  std::vector<Rational> mu(2 * m, Rational(0));
  for (const auto& s : samples) {
    const Rational sq = s * s;
    Rational power = 1;
    for (auto& acc : mu) {
      acc += power;
      power *= sq;
    }
  }
  const Rational count(static_cast<long>(samples.size()));
  for (auto& acc : mu) acc /= count;
  return {std::move(mu), DistributionSpec::empirical(samples)};
}

MomentSequence explicit_even_moments(const std::vector<Rational>& moments, std::size_t m) {
  require_order(m);
  if (moments.size() < 2 * m)
    throw DimensionError("order " + std::to_string(m) + " needs " + std::to_string(2 * m) +
                         " even moments, got " + std::to_string(moments.size()));
  std::vector<Rational> mu(moments.begin(), moments.begin() + static_cast<std::ptrdiff_t>(2 * m));
  return {std::move(mu), DistributionSpec::explicit_moments(moments)};
}

MomentSequence even_moments(const DistributionSpec& dist, std::size_t m) {
  switch (dist.kind) {
    case DistributionKind::gaussian: return gaussian_even_moments(m, dist.sigma2);
    case DistributionKind::uniform: return uniform_even_moments(m, dist.sigma2);
    case DistributionKind::explicit_moments: return explicit_even_moments(dist.moments, m);
    case DistributionKind::empirical_samples: return empirical_even_moments(dist.samples, m);
  }
  throw InvalidDistribution("unknown distribution kind");
}

std::vector<Rational> parse_moment_json(const std::string& text, std::size_t* m_out) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("moment file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("even_moments") || !doc["even_moments"].is_array())
    throw ParseError("moment file needs an \"even_moments\" array");

  std::vector<Rational> moments;
  for (const auto& entry : doc["even_moments"]) {
    if (entry.is_string())
      moments.push_back(parse_rational(entry.get<std::string>()));
    else if (entry.is_number_integer())
      moments.emplace_back(static_cast<long>(entry.get<long long>()));
    else
      throw ParseError("even_moments entries must be rational strings or integers");
  }
  if (moments.empty() || moments.size() % 2 != 0)
    throw ParseError("even_moments must have a positive even length");

  std::size_t m = moments.size() / 2;
  if (doc.contains("m")) {
    if (!doc["m"].is_number_unsigned()) throw ParseError("\"m\" must be a positive integer");
    m = doc["m"].get<std::size_t>();
    if (m == 0 || 2 * m > moments.size())
      throw ParseError("\"m\" = " + std::to_string(m) + " needs " + std::to_string(2 * m) +
                       " even moments, file has " + std::to_string(moments.size()));
  }
  if (m_out) *m_out = m;
  return moments;
}

MomentSequence load_moment_file(const std::filesystem::path& path) {
  std::size_t m = 0;
  auto moments = parse_moment_json(read_file(path), &m);
  return explicit_even_moments(moments, m);
}

std::vector<Rational> parse_samples(const std::string& text) {
  std::vector<Rational> samples;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      samples.push_back(parse_decimal(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return samples;
}

std::vector<Rational> load_sample_file(const std::filesystem::path& path) {
  return parse_samples(read_file(path));
}

}  // namespace hmoment
