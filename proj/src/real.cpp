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

#include "neutro/real.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace neutro {

namespace {

Integer pow10(unsigned exponent) {
  return boost::multiprecision::pow(Integer(10), exponent);
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Real parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }

  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_digit = false;
  while (pos < text.size() && is_digit(text[pos])) {
    digits += text[pos++];
    seen_digit = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) {
      digits += text[pos++];
      ++fraction_digits;
      seen_digit = true;
    }
  }
  if (!seen_digit) {
    throw InvalidArgument("not a decimal number: '" + std::string(text) + "'");
  }

  long exponent = 0;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      exp_negative = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !is_digit(text[pos])) {
      throw InvalidArgument("malformed exponent in '" + std::string(text) + "'");
    }
    while (pos < text.size() && is_digit(text[pos])) {
      exponent = exponent * 10 + (text[pos++] - '0');
      if (exponent > 4096) {
        throw InvalidArgument("exponent out of range in '" + std::string(text) + "'");
      }
    }
    if (exp_negative) exponent = -exponent;
  }
  if (pos != text.size()) {
    throw InvalidArgument("not a decimal number: '" + std::string(text) + "'");
  }

  // A leading zero would be read as an octal prefix.
  const std::size_t first = std::min(digits.find_first_not_of('0'), digits.size() - 1);
  Integer mantissa(digits.substr(first));
  exponent -= static_cast<long>(fraction_digits);
  Real result = exponent >= 0
                    ? Real(mantissa * pow10(static_cast<unsigned>(exponent)))
                    : Real(mantissa) / Real(pow10(static_cast<unsigned>(-exponent)));
  return negative ? Real(-result) : result;
}

std::string to_decimal_string(const Real& value) {
  Integer num = boost::multiprecision::numerator(value);
  Integer den = boost::multiprecision::denominator(value);

  Integer rest = den;
  unsigned twos = 0;
  unsigned fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1) {
    return num.str() + "/" + den.str();
  }

  const unsigned places = std::max(twos, fives);
  const bool negative = num < 0;
  Integer scaled = (negative ? Integer(-num) : num) * (pow10(places) / den);
  std::string digits = scaled.str();
  if (places > 0) {
    if (digits.size() <= places) {
      digits.insert(0, places - digits.size() + 1, '0');
    }
    digits.insert(digits.size() - places, ".");
  }
  return negative ? "-" + digits : digits;
}

double to_double(const Real& value) {
  // Both parts exact as doubles: IEEE division is then correctly rounded.
  static const Integer kExactLimit = Integer(1) << 53;
  const auto& num = boost::multiprecision::numerator(value);
  const auto& den = boost::multiprecision::denominator(value);
  if (boost::multiprecision::abs(num) < kExactLimit && den < kExactLimit) {
    return num.convert_to<double>() / den.convert_to<double>();
  }
  // Round-trip through the shortest exact decimal so 0.1 maps to the nearest double.
  const std::string text = to_decimal_string(value);
  if (text.find('/') == std::string::npos) {
    return std::stod(text);
  }
  return value.convert_to<double>();
}

Real from_double(double value) {
  if (!std::isfinite(value)) {
    throw InvalidArgument("non-finite value");
  }
  return Real(value);
}

}  // namespace neutro
