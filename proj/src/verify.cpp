#include "hmoment/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "hmoment/errors.hpp"
#include "hmoment/factorization.hpp"
#include "hmoment/hankel.hpp"
#include "hmoment/hermite.hpp"
#include "hmoment/moments.hpp"

namespace hmoment {

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) { return !c.passed; }));
}

namespace {

struct Task {
  std::string name;
  std::size_t m;
  Rational sigma2;
  std::function<CheckReport()> run;
};

std::vector<Task> plan(const VerifyGrid& grid) {
  std::vector<Task> tasks;
  for (std::size_t m = 1; m <= grid.m_max; ++m) {
    tasks.push_back({"commute", m, 1, [m] { return check_commute(m); }});
    tasks.push_back({"orthogonality", m, 1, [m] { return check_orthogonality(static_cast<unsigned>(2 * m - 1)); }});
    for (const auto& s2 : grid.sigma2) {
      tasks.push_back({"theorem1", m, s2, [m, s2] { return verify_theorem1(m, s2); }});
      tasks.push_back({"lemma1", m, s2, [m, s2] { return check_lemma1(m, s2); }});
      tasks.push_back({"determinant_products", m, s2, [m, s2] { return check_determinant_products(m, s2); }});
      tasks.push_back({"recurrence", m, s2, [m, s2] {
                         const auto mu = gaussian_even_moments(m, s2);
                         return check_recurrence(build_A(mu), build_B(mu), s2);
                       }});
      tasks.push_back({"scaling_split", m, s2, [m, s2] {
                         const auto mu = gaussian_even_moments(m, s2);
                         return check_scaling_split(build_A(mu), build_B(mu), s2);
                       }});
      if (m >= 2)
        tasks.push_back({"recurrence_uniform_fails", m, s2, [m, s2] {
                           const auto mu = uniform_even_moments(m, s2);
                           CheckReport inner = check_recurrence(build_A(mu), build_B(mu), s2);
                           // Passing means the Gaussian-only identity was rejected.
                           CheckReport out{"recurrence_uniform_fails", !inner.passed, std::nullopt};
                           return out;
                         }});
    }
  }
  return tasks;
}

}  // namespace

VerifyReport run_verify(const VerifyGrid& grid) {
  if (grid.m_max == 0) throw DimensionError("m_max must be at least 1");
  for (const auto& s2 : grid.sigma2)
    if (sgn(s2) <= 0) throw InvalidDistribution("variance must be positive, got " + to_string(s2));

  const std::vector<Task> tasks = plan(grid);
  VerifyReport report;
  report.checks.resize(tasks.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      const CheckReport result = tasks[i].run();
      const auto stop = std::chrono::steady_clock::now();
      report.checks[i] = VerifyCheck{tasks[i].name, tasks[i].m, tasks[i].sigma2, result.passed, result.mismatch,
                                     std::chrono::duration<double, std::milli>(stop - start).count()};
    }
  };

  unsigned threads = grid.threads ? grid.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::stable_sort(report.checks.begin(), report.checks.end(), [](const VerifyCheck& x, const VerifyCheck& y) {
    if (x.name != y.name) return x.name < y.name;
    if (x.m != y.m) return x.m < y.m;
    return x.sigma2 < y.sigma2;
  });
  return report;
}

VerifyGrid parse_verify_config(const std::string& text, VerifyGrid base) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto strip = [](std::string s) {
    const auto first = s.find_first_not_of(" \t\r\"'");
    const auto last = s.find_last_not_of(" \t\r\"'");
    return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (strip(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = strip(line.substr(0, eq));
    std::string value = line.substr(eq + 1);
    std::replace(value.begin(), value.end(), '[', ' ');
    std::replace(value.begin(), value.end(), ']', ' ');

    try {
      if (key == "m_max") {
        base.m_max = std::stoul(strip(value));
      } else if (key == "threads") {
        base.threads = static_cast<unsigned>(std::stoul(strip(value)));
      } else if (key == "sigma2") {
        base.sigma2.clear();
        std::istringstream items(value);
        std::string item;
        while (std::getline(items, item, ','))
          if (!strip(item).empty()) base.sigma2.push_back(parse_rational(strip(item)));
      } else {
        throw ParseError("unknown key '" + key + "'");
      }
    } catch (const ParseError& e) {
      throw ParseError("config line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::exception&) {
      throw ParseError("config line " + std::to_string(line_no) + ": bad value for '" + key + "'");
    }
  }
  return base;
}

}  // namespace hmoment
