//  Copyright 2026 The neutro Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef NEUTRO_REAL_HPP
#define NEUTRO_REAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "neutro/errors.hpp"

namespace neutro {

/// Exact rational magnitude. Every value reachable from decimal input through
/// the operations of this library (+, -, *, min, max, halving) keeps a
/// denominator of the form 2^a 5^b, so it always prints as a finite decimal.
using Real = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

/// Arbitrary-precision integer matching Real's numerator and denominator.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

/// Parses a decimal literal such as "0.25", "-3", "1.5e-2" exactly.
/// Throws InvalidArgument on anything else.
Real parse_decimal(std::string_view text);

/// Shortest exact decimal rendering ("0.6", "-1", "1.3"). Falls back to
/// "p/q" when the denominator has prime factors other than 2 and 5.
std::string to_decimal_string(const Real& value);

double to_double(const Real& value);

/// Rational with the same value as the double (doubles are dyadic).
Real from_double(double value);

inline Real real(long long numerator, long long denominator = 1) {
  return Real(numerator) / Real(denominator);
}

}  // namespace neutro

#endif  // NEUTRO_REAL_HPP
