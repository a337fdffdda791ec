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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace entdesign {

/// Arbitrary-precision integer and rational scalars. All moment, character
/// and Weingarten arithmetic goes through these; nothing in the exact path
/// touches floating point.
using Integer = mpz_class;
using Rational = mpq_class;

/// Serializes as "p/q" in lowest terms, always with a denominator ("1/1").
std::string to_fraction_string(const Rational& value);

/// Accepts "p/q", "p", or a plain decimal literal such as "-0.125" or "3e-2".
Rational parse_rational(std::string_view text);

/// Nearest double to an exact rational.
double to_double(const Rational& value);

/// log2 of a positive rational, evaluated with 128-bit MPFR precision and
/// rounded once to double.
double log2_exact(const Rational& value);

/// Shortest decimal that round-trips to the same double ("nan", "inf" and
/// "-inf" for non-finite values).
std::string format_shortest(double value);

Integer factorial(int n);
Integer binomial(const Integer& n, unsigned long k);
Integer power(const Integer& base, unsigned long exponent);

}  // namespace entdesign
