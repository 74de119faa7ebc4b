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

// Dense polynomial arithmetic on coefficient lists, written without any of
// the library's operators so tests can compare against it.

#ifndef HNP_TESTS_POLY_ORACLE_HPP
#define HNP_TESTS_POLY_ORACLE_HPP

#include "hnp/fixtures.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using hnp::Rational;
using Poly = std::vector<Rational>;  // coefficient of x^m at index m

inline Poly mul(const Poly& p, const Poly& q) {
  if (p.empty() || q.empty()) return {};
  Poly r(p.size() + q.size() - 1, Rational(0));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return r;
}

inline Poly derivative(const Poly& p) {
  Poly r;
  for (std::size_t m = 1; m < p.size(); ++m) r.push_back(p[m] * Rational(static_cast<long>(m)));
  return r;
}

// p(x + 1), by Horner.
inline Poly shift(const Poly& p) {
  Poly r;
  for (std::size_t m = p.size(); m-- > 0;) {
    r = mul(r, Poly{Rational(1), Rational(1)});
    if (r.empty()) r.push_back(Rational(0));
    r[0] += p[m];
  }
  return r;
}

inline Poly truncate(Poly p, std::size_t n) {
  p.resize(n, Rational(0));
  return p;
}

inline hnp::QVector to_vector(const Poly& p, std::size_t n) {
  const Poly t = truncate(p, n);
  hnp::QVector v(static_cast<hnp::Index>(n));
  for (std::size_t i = 0; i < n; ++i) v(static_cast<hnp::Index>(i)) = t[i];
  return v;
}

inline Poly monomial(std::size_t m, const Rational& c = Rational(1)) {
  Poly p(m + 1, Rational(0));
  p[m] = c;
  return p;
}

}  // namespace oracle

#endif  // HNP_TESTS_POLY_ORACLE_HPP
