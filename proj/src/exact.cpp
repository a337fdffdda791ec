// Copyright 2026 The entdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entdesign/exact.hpp"

#include <mpfr.h>

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace entdesign {

std::string to_fraction_string(const Rational& value) {
  Rational canonical(value);
  canonical.canonicalize();
  return canonical.get_num().get_str() + "/" + canonical.get_den().get_str();
}

namespace {

Rational parse_decimal(std::string_view text) {
  std::string digits;
  long exponent = 0;
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == 'e' || c == 'E') {
      break;
    } else {
      throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  if (i < text.size()) {
    const std::string tail(text.substr(i + 1));
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(tail, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed exponent: '" + std::string(text) + "'");
    }
    if (used != tail.size()) throw std::invalid_argument("malformed exponent: '" + std::string(text) + "'");
    exponent += e;
  }
  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  Rational result(mantissa);
  if (exponent > 0) {
    result *= Rational(power(Integer(10), static_cast<unsigned long>(exponent)));
  } else if (exponent < 0) {
    result /= Rational(power(Integer(10), static_cast<unsigned long>(-exponent)));
  }
  result.canonicalize();
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const Rational num = parse_decimal(text.substr(0, slash));
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational result = num / den;
  result.canonicalize();
  return result;
}

double to_double(const Rational& value) {
  mpfr_t x;
  mpfr_init2(x, 128);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  const double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return out;
}

double log2_exact(const Rational& value) {
  if (value <= 0) throw std::domain_error("log2 of a non-positive rational");
  mpfr_t x;
  mpfr_init2(x, 128);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  mpfr_log2(x, x, MPFR_RNDN);
  const double out = mpfr_get_d(x, MPFR_RNDN);
  mpfr_clear(x);
  return out;
}

std::string format_shortest(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buffer{};
  const auto [end, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) throw std::runtime_error("double formatting failed");
  return std::string(buffer.data(), end);
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

Integer power(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

}  // namespace entdesign
