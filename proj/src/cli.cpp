#include "hmoment/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hmoment/errors.hpp"
#include "hmoment/factorization.hpp"
#include "hmoment/hermite.hpp"
#include "hmoment/json_io.hpp"
#include "hmoment/moments.hpp"
#include "hmoment/optimizer.hpp"
#include "hmoment/verify.hpp"

namespace hmoment::cli {
namespace {

/// Bad flag values; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  std::string format = "json";
  std::uint64_t seed = 0;
  bool strict_psd = false;
  std::string config;
};

/// Distribution selection shared by optimize, factor, gain and moments.
struct DistFlags {
  std::string dist = "gaussian";
  std::string sigma2 = "1";
  std::string moments_file;
  std::string samples_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--dist", dist, "Parametric distribution")
        ->check(CLI::IsMember({"gaussian", "uniform"}))
        ->capture_default_str();
    cmd->add_option("--sigma2", sigma2, "Variance as p/q")->capture_default_str();
    cmd->add_option("--moments", moments_file, "Moment file {\"m\", \"even_moments\"}");
    cmd->add_option("--samples", samples_file, "Sample file, one decimal per line");
  }

  [[nodiscard]] bool parametric() const { return moments_file.empty() && samples_file.empty(); }

  [[nodiscard]] Rational variance() const {
    Rational value;
    try {
      value = parse_rational(sigma2);
    } catch (const ParseError& e) {
      throw UsageError(std::string("--sigma2: ") + e.what());
    }
    if (sgn(value) <= 0) throw UsageError("--sigma2 must be positive, got " + sigma2);
    return value;
  }

  /// Moments of order m, or of the file's own order when m is empty.
  [[nodiscard]] MomentSequence resolve(std::optional<std::size_t> m) const {
    if (!moments_file.empty() && !samples_file.empty())
      throw UsageError("--moments and --samples are mutually exclusive");
    if (!moments_file.empty()) {
      auto file = load_moment_file(moments_file);
      return m ? explicit_even_moments(file.values(), *m) : file;
    }
    if (!m) throw UsageError("an order is required for this distribution");
    if (!samples_file.empty()) return empirical_even_moments(load_sample_file(samples_file), *m);
    const Rational s2 = variance();
    return dist == "gaussian" ? gaussian_even_moments(*m, s2) : uniform_even_moments(*m, s2);
  }
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(std::ostream& out, const GlobalFlags& flags, const Json& doc) {
  if (flags.format == "json") {
    out << doc.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

void emit_verify_table(std::ostream& out, const VerifyReport& report) {
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " M=" << c.m << " sigma2=" << to_string(c.sigma2);
    if (c.first_mismatch) {
      const auto& mm = *c.first_mismatch;
      out << "  [" << mm.quantity;
      if (mm.row) out << " at (" << *mm.row << "," << *mm.col << ")";
      out << ": expected " << to_string(mm.expected) << ", got " << to_string(mm.actual) << "]";
    }
    out << '\n';
  }
  out << (report.passed() ? "overall: pass" : "overall: fail") << " (" << report.checks.size() - report.failures()
      << "/" << report.checks.size() << ")\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hankel moment identities and optimal odd distortion polynomials", "hmoment"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--seed", global.seed, "Seed for Monte Carlo runs")->capture_default_str();
  app.add_flag("--strict-psd", global.strict_psd, "Reject zero LDL pivots (strict positive definiteness)");
  app.add_option("--config", global.config, "Key/value file presetting the verify grid");

  // verify
  auto* verify = app.add_subcommand("verify", "Run the exact identity suite over an (M, sigma^2) grid");
  std::optional<std::size_t> m_max;
  std::vector<std::string> sigma2_list;
  std::optional<unsigned> threads;
  verify->add_option("--m-max", m_max, "Largest order M (default 12)");
  verify->add_option("--sigma2", sigma2_list, "Variances, comma separated (default 1,4,1/4,9/49)")->delimiter(',');
  verify->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Maximize the receiving gain over odd polynomials of order N");
  DistFlags opt_dist;
  opt_dist.attach(optimize);
  std::size_t order = 0;
  bool exact_whitening = false;
  optimize->add_option("--order", order, "Odd polynomial order N")->required();
  optimize->add_flag("--exact-whitening", exact_whitening, "Whiten with the exact LDL factor of B");

  // factor
  auto* factor = app.add_subcommand("factor", "LDL factorization of A or B");
  DistFlags fac_dist;
  fac_dist.attach(factor);
  std::string which;
  std::optional<std::size_t> fac_m;
  bool closed_form = false;
  factor->add_option("--matrix", which, "A or B")->required()->check(CLI::IsMember({"A", "B"}));
  factor->add_option("--m", fac_m, "Order M");
  factor->add_flag("--closed-form", closed_form, "Use the Hermite closed form (Gaussian only)");

  // hermite
  auto* hermite = app.add_subcommand("hermite", "Probabilists' Hermite coefficients");
  unsigned hermite_n = 0;
  std::optional<std::size_t> hermite_m;
  hermite->add_option("--n", hermite_n, "Degree")->required();
  hermite->add_option("--m", hermite_m, "Packed length (default: minimal)");

  // gain
  auto* gain = app.add_subcommand("gain", "Gain of a given odd polynomial");
  DistFlags gain_dist;
  gain_dist.attach(gain);
  std::string coeffs_file;
  std::optional<std::size_t> mc_samples;
  double proposal_scale = MonteCarloOptions{}.proposal_scale;
  gain->add_option("--coeffs", coeffs_file, "Coefficient file {\"a\": [...]}")->required();
  gain->add_option("--monte-carlo", mc_samples, "Also estimate the gain from this many Gaussian draws");
  gain->add_option("--proposal-scale", proposal_scale, "Monte Carlo proposal widening (1 = plain sampling)")
      ->capture_default_str();

  // moments
  auto* moments = app.add_subcommand("moments", "Dump an even-moment sequence");
  DistFlags mom_dist;
  mom_dist.attach(moments);
  std::optional<std::size_t> mom_m;
  moments->add_option("--m", mom_m, "Order M (2M moments)");

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("hmoment");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      VerifyGrid grid;
      if (!global.config.empty()) grid = parse_verify_config(read_text(global.config), grid);
      if (m_max) grid.m_max = *m_max;
      if (threads) grid.threads = *threads;
      if (!sigma2_list.empty()) {
        grid.sigma2.clear();
        for (const auto& s : sigma2_list) {
          try {
            grid.sigma2.push_back(parse_rational(s));
          } catch (const ParseError& e) {
            throw UsageError(std::string("--sigma2: ") + e.what());
          }
        }
      }
      if (grid.m_max == 0) throw UsageError("--m-max must be at least 1");
      for (const auto& s2 : grid.sigma2)
        if (sgn(s2) <= 0) throw UsageError("sigma2 must be positive, got " + to_string(s2));

      const VerifyReport report = run_verify(grid);
      if (global.format == "table")
        emit_verify_table(out, report);
      else
        out << to_json(report).dump(2) << '\n';
      if (!report.passed()) err << report.failures() << " check(s) failed\n";
      return report.passed() ? kExitOk : kExitDomain;
    }

    if (optimize->parsed()) {
      if (order % 2 == 0) throw UsageError("--order must be odd, got " + std::to_string(order));
      const std::size_t m = (order + 1) / 2;
      const MomentSequence mu = opt_dist.resolve(m);
      MaxGainOptions options;
      options.whitening = exact_whitening ? Whitening::exact : Whitening::floating;
      const GainResult result = max_gain(mu, order, options);
      Json doc = to_json(result);
      doc["order"] = order;
      doc["whitening"] = exact_whitening ? "exact" : "floating";
      doc["distribution"] = to_string(mu.source().kind);
      if (result.ill_conditioned) err << "warning: B is ill-conditioned; consider --exact-whitening\n";
      if (!result.normalized_by_last) err << "warning: a[M-1] is negligible; normalized by the largest entry\n";
      emit(out, global, doc);
      return kExitOk;
    }

    if (factor->parsed()) {
      LdlFactorization result;
      std::string source;
      if (closed_form) {
        if (!fac_dist.parametric() || fac_dist.dist != "gaussian")
          throw UsageError("--closed-form needs the Gaussian distribution");
        if (!fac_m) throw UsageError("--closed-form needs --m");
        const auto factors = closed_form_factors(*fac_m, fac_dist.variance());
        result = which == "A" ? factors.a : factors.b;
        source = "closed-form";
      } else {
        const MomentSequence mu = fac_dist.resolve(fac_m);
        const std::size_t m = fac_m.value_or(mu.order());
        const HankelMatrix h = which == "A" ? build_A(mu, m) : build_B(mu, m);
        result = ldl_decompose(h.entries(), global.strict_psd ? PivotPolicy::strict : PivotPolicy::lenient);
        source = "elimination";
      }
      Json doc = to_json(result);
      doc["source"] = source;
      emit(out, global, doc);
      return kExitOk;
    }

    if (hermite->parsed()) {
      const auto coeffs = hermite_coefficients(hermite_n, hermite_m.value_or(hermite_packed_length(hermite_n)));
      emit(out, global, to_json(coeffs));
      return kExitOk;
    }

    if (gain->parsed()) {
      const ExactOddPolynomial a = parse_coefficients_json(read_text(coeffs_file));
      const MomentSequence mu = gain_dist.resolve(a.size());
      const Rational exact = gain_of(std::span<const Rational>(a), mu);
      Json doc{{"gain", exact.get_d()}, {"gain_exact", to_string(exact)}, {"a", rational_array(a)}};
      if (mc_samples) {
        if (!gain_dist.parametric() || gain_dist.dist != "gaussian")
          throw UsageError("--monte-carlo needs the Gaussian distribution");
        OddPolynomial poly;
        for (const auto& c : a) poly.a.push_back(c.get_d());
        const auto mc = monte_carlo_gain(poly, gain_dist.variance().get_d(), *mc_samples, global.seed,
                                         MonteCarloOptions{proposal_scale});
        doc["monte_carlo"] = Json{{"estimate", mc.estimate},
                                  {"standard_error", mc.standard_error},
                                  {"samples", mc.samples},
                                  {"seed", global.seed},
                                  {"proposal_scale", proposal_scale}};
      }
      emit(out, global, doc);
      return kExitOk;
    }

    if (moments->parsed()) {
      const MomentSequence mu = mom_dist.resolve(mom_m);
      Json doc = to_json(mu);
      const PivotPolicy policy = global.strict_psd ? PivotPolicy::strict : PivotPolicy::lenient;
      bool psd = true;
      try {
        ldl_decompose(build_A(mu).entries(), policy);
        ldl_decompose(build_B(mu).entries(), policy);
      } catch (const NotPositiveDefinite&) {
        psd = false;
      }
      doc[global.strict_psd ? "positive_definite" : "positive_semidefinite"] = psd;
      emit(out, global, doc);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    Json doc{{"error", Json{{"kind", e.kind()}, {"message", e.what()}}}};
    if (const auto* npd = dynamic_cast<const NotPositiveDefinite*>(&e)) doc["error"]["pivot_index"] = npd->pivot_index();
    if (const auto* ce = dynamic_cast<const ConditioningError*>(&e)) doc["error"]["pivot_ratio"] = ce->pivot_ratio();
    if (const auto* il = dynamic_cast<const IterationLimit*>(&e)) doc["error"]["residual"] = il->residual();
    out << doc.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace hmoment::cli
