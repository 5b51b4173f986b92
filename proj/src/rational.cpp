#include "hmoment/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "hmoment/check.hpp"
#include "hmoment/errors.hpp"

namespace hmoment {
namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) throw ParseError("malformed number '" + std::string(whole) + "'");
  Integer value(std::string(digits), 10);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty number");

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const std::string_view exp_text = text.substr(e + 1);
    const Integer exp_value = parse_integer(exp_text, whole);
    if (!exp_value.fits_slong_p() || std::abs(exp_value.get_si()) > 100000)
      throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    exponent = exp_value.get_si();
    text = text.substr(0, e);
  }

  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw ParseError("malformed decimal '" + std::string(whole) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(text)) throw ParseError("malformed decimal '" + std::string(whole) + "'");
    digits = std::string(text);
  }

  Rational value{Integer(digits, 10)};
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::abs(exponent)));
  if (exponent >= 0)
    value *= scale;
  else
    value /= scale;
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const Integer num = parse_integer(trim(text.substr(0, slash)), whole);
    const Integer den = parse_integer(trim(text.substr(slash + 1)), whole);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(whole) + "'");
    Rational value(num, den);
    value.canonicalize();
    return value;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_str(10);
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw ParseError("non-finite value has no rational form");
  return Rational(value);
}

CheckReport compare_exact(std::string name, std::string quantity, const Matrix<Rational>& expected,
                          const Matrix<Rational>& actual) {
  CheckReport report{std::move(name), true, std::nullopt};
  if (expected.rows() != actual.rows() || expected.cols() != actual.cols()) {
    report.passed = false;
    report.mismatch = Mismatch{std::move(quantity) + " (shape)", std::nullopt, std::nullopt,
                               Rational(static_cast<long>(expected.rows())),
                               Rational(static_cast<long>(actual.rows()))};
    return report;
  }
  for (std::size_t i = 0; i < expected.rows(); ++i)
    for (std::size_t j = 0; j < expected.cols(); ++j)
      if (expected(i, j) != actual(i, j)) {
        report.passed = false;
        report.mismatch = Mismatch{std::move(quantity), i, j, expected(i, j), actual(i, j)};
        return report;
      }
  return report;
}

CheckReport compare_exact(std::string name, std::string quantity, const Rational& expected,
                          const Rational& actual) {
  CheckReport report{std::move(name), true, std::nullopt};
  if (expected != actual) {
    report.passed = false;
    report.mismatch = Mismatch{std::move(quantity), std::nullopt, std::nullopt, expected, actual};
  }
  return report;
}

CheckReport& merge_into(CheckReport& into, const CheckReport& other) {
  if (into.passed && !other.passed) {
    into.passed = false;
    into.mismatch = other.mismatch;
  }
  return into;
}

}  // namespace hmoment
