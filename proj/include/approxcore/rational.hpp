// Copyright 2026 The approxcore Authors.
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

// Exact monetary values. Every profit, cover value and share in the library
// is a Money; there is no floating point anywhere.

#ifndef APPROXCORE_RATIONAL_HPP
#define APPROXCORE_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace approxcore {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Money = boost::multiprecision::cpp_rational;

inline Money make_money(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  return Money(numerator, denominator);
}

inline BigInt numerator_of(const Money& m) {
  return boost::multiprecision::numerator(m);
}

inline BigInt denominator_of(const Money& m) {
  return boost::multiprecision::denominator(m);
}

/// "a" for integers, "a/b" otherwise. Never a decimal.
inline std::string to_string(const Money& m) {
  const BigInt den = denominator_of(m);
  if (den == 1) return numerator_of(m).str();
  return numerator_of(m).str() + "/" + den.str();
}

namespace detail {

inline std::optional<BigInt> parse_integer(std::string_view text,
                                           bool allow_sign) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (allow_sign && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) return std::nullopt;
  BigInt value = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace detail

/// Parses "a" or "a/b" (optional leading sign on a). Non-reduced input is
/// accepted and reduced.
inline std::optional<Money> parse_money(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = detail::parse_integer(text, true);
    if (!n) return std::nullopt;
    return Money(*n);
  }
  auto n = detail::parse_integer(text.substr(0, slash), true);
  auto d = detail::parse_integer(text.substr(slash + 1), false);
  if (!n || !d || *d == 0) return std::nullopt;
  return Money(*n, *d);
}

}  // namespace approxcore

#endif  // APPROXCORE_RATIONAL_HPP
