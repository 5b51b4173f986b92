#include "hmoment/json_io.hpp"

#include "hmoment/errors.hpp"

namespace hmoment {

Json rational_json(const Rational& value) { return to_string(value); }

Json rational_array(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(rational_array(m.row(i)));
  return rows;
}

Json to_json(const HankelMatrix& h) {
  return Json{{"m", h.order()}, {"shift", h.shift()}, {"rows", matrix_json(h.entries())}};
}

Json to_json(const MomentSequence& moments) {
  return Json{{"m", moments.order()},
              {"even_moments", rational_array(moments.values())},
              {"source", to_string(moments.source().kind)}};
}

Json to_json(const HermiteCoefficients& h) {
  return Json{{"n", h.n}, {"packed", rational_array(h.packed)}, {"dense", rational_array(hermite_dense(h.n))}};
}

Json to_json(const LdlFactorization& f) {
  return Json{{"lower", matrix_json(f.lower)}, {"pivots", rational_array(f.pivots)}, {"rank", f.rank}};
}

Json to_json(const GainResult& g) {
  return Json{{"gain", g.gain},
              {"gain_exact", to_string(g.gain_exact)},
              {"a", g.a.a},
              {"eigenvalues", g.eigenvalues},
              {"normalized_by_last", g.normalized_by_last},
              {"multiplicity", g.multiplicity},
              {"whitened_vector", g.whitened_vector},
              {"residual", g.residual},
              {"ill_conditioned", g.ill_conditioned}};
}

Json to_json(const Mismatch& m) {
  Json out{{"quantity", m.quantity}};
  out["row"] = m.row ? Json(*m.row) : Json(nullptr);
  out["col"] = m.col ? Json(*m.col) : Json(nullptr);
  out["expected"] = to_string(m.expected);
  out["actual"] = to_string(m.actual);
  return out;
}

Json to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json entry{{"name", c.name}, {"m", c.m}, {"sigma2", to_string(c.sigma2)},
               {"status", c.passed ? "pass" : "fail"}};
    entry["first_mismatch"] = c.first_mismatch ? to_json(*c.first_mismatch) : Json(nullptr);
    entry["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(entry));
  }
  return Json{{"overall", report.passed() ? "pass" : "fail"},
              {"total", report.checks.size()},
              {"failures", report.failures()},
              {"checks", std::move(checks)}};
}

ExactOddPolynomial parse_coefficients_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("coefficient file is not valid JSON: ") + e.what());
  }
  const Json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("a")) throw ParseError("coefficient file needs an \"a\" array");
    list = &doc["a"];
  }
  if (!list->is_array() || list->empty()) throw ParseError("coefficients must be a non-empty array");

  ExactOddPolynomial out;
  for (const auto& entry : *list) {
    if (entry.is_string())
      out.push_back(parse_rational(entry.get<std::string>()));
    else if (entry.is_number_integer())
      out.emplace_back(static_cast<long>(entry.get<long long>()));
    else if (entry.is_number_float())
      out.push_back(from_double(entry.get<double>()));
    else
      throw ParseError("coefficients must be numbers or rational strings");
  }
  return out;
}

}  // namespace hmoment
