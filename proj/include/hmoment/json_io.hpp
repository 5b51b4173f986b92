#pragma once

#include <json.hpp>

#include "hmoment/check.hpp"
#include "hmoment/factorization.hpp"
#include "hmoment/hankel.hpp"
#include "hmoment/hermite.hpp"
#include "hmoment/moments.hpp"
#include "hmoment/optimizer.hpp"
#include "hmoment/verify.hpp"

// Rationals cross every JSON boundary as "p/q" strings.
namespace hmoment {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& value);
Json rational_array(std::span<const Rational> values);
Json matrix_json(const RationalMatrix& m);

/// {"m": M, "shift": 0|1, "rows": [[...], ...]}
Json to_json(const HankelMatrix& h);
/// {"m": M, "even_moments": [...], "source": kind}
Json to_json(const MomentSequence& moments);
/// {"n": K, "packed": [...], "dense": [...]}
Json to_json(const HermiteCoefficients& h);
/// {"lower": [[...]], "pivots": [...], "rank": r}; the CLI adds "source".
Json to_json(const LdlFactorization& f);
Json to_json(const GainResult& g);
Json to_json(const Mismatch& m);
/// {"overall": "pass"|"fail", "checks": [...]}
Json to_json(const VerifyReport& report);

/// Coefficients file: {"a": ["15", "-10", 1]} or a bare array.
ExactOddPolynomial parse_coefficients_json(const std::string& text);

}  // namespace hmoment
