// Copyright 2026 The hnp-kit Authors
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

#ifndef HNP_RATIONAL_HPP
#define HNP_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hnp {

/// Exact scalar of the ground field. GMP keeps every result in lowest terms
/// with a positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `[+-]digits[/digits]`. Throws ParseError on anything else,
/// including a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise; always canonical.
std::string to_string(const Rational& q);

/// True iff gcd(|num|, den) = 1 and den > 0.
bool is_canonical(const Rational& q);

}  // namespace hnp

#endif  // HNP_RATIONAL_HPP
