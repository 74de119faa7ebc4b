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

#ifndef HNP_FIXTURES_HPP
#define HNP_FIXTURES_HPP

#include "hnp/algebra.hpp"
#include "hnp/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hnp {

using QVector = Vector<Rational>;
using QMatrix = Matrix<Rational>;
using QLinearMap = LinearMap<Rational>;
using QBilinearOp = BilinearOp<Rational>;
using QAlgebra = DoubleHomAlgebra<Rational>;

/// Families of generated algebras. Every family is built through a
/// constructor whose hypotheses are checked, never by sampling raw
/// structure constants.
enum class Family {
  kTruncatedPoly,        // [N, k, c]: k[x]/(x^N), d x = c x^k, alpha = Id
  kDerivationTwist,      // [N, k, c]: same data twisted by alpha = exp(d), k >= 2
  kScalingTwist,         // [N, c, lambda]: d x = c x, alpha(x) = lambda x
  kThreeDimAdmissible,   // []: span{1, u, v}, alpha kills u, v
  kNilpotentAdmissible,  // [s, t]: span{u, v, w}, uv = w, alpha = diag(s, t, st)
  kUnitLine,             // []: the ground field with star = 0
  kZeroStar,             // [N, k, c, twisted]: (alpha mu, 0, alpha)
  kDoubled,              // [N, k, c, twisted]: (alpha mu, alpha mu, alpha)
  kRandomFromFamily,     // [steps]: seeded chain of twists and perturbations
};

std::string_view to_string(Family family);
std::optional<Family> family_from_string(std::string_view name);

struct FixtureDescriptor {
  Family family;
  std::vector<Rational> params;
  std::uint64_t seed = 0;

  friend bool operator==(const FixtureDescriptor&, const FixtureDescriptor&) = default;
};

struct Fixture {
  std::string name;
  FixtureDescriptor descriptor;
  QAlgebra algebra;
  std::vector<std::string> basis_names;
};

/// Product of k[x]/(x^N) on {1, x, ..., x^(N-1)} together with d/dx.
/// Note that d/dx is a linear map here, not a derivation of the truncation.
std::pair<QBilinearOp, QLinearMap> truncated_poly(int n);

/// The derivation of k[x]/(x^N) with d(x) = c x^k, extended by the Leibniz
/// rule: d(x^m) = m c x^(m-1+k). Well defined for k >= 1.
QLinearMap monomial_derivation(int n, int k, const Rational& c);

/// All monomial derivations with 1 <= k < N and c in {1, -1, 2}.
std::vector<QLinearMap> monomial_derivations(int n);

QAlgebra three_dim_admissible();
QAlgebra nilpotent_admissible(const Rational& s, const Rational& t);
QAlgebra unit_line();

/// The derivation a polynomial-family fixture was built from, if any.
std::optional<QLinearMap> fixture_derivation(const FixtureDescriptor& descriptor);

/// Deterministic: equal descriptors give identical algebras.
Fixture make_fixture(const FixtureDescriptor& descriptor);

/// Every deterministic family member plus a few seeded random ones. Each
/// member is checked to be Hom-Novikov-Poisson before it is returned.
std::vector<Fixture> fixture_catalog(std::uint64_t seed);

/// Four small multiplicative members used for pairwise tensor products.
std::vector<Fixture> tensor_subcatalog();

std::vector<std::string> poly_basis_names(int n);

}  // namespace hnp

#endif  // HNP_FIXTURES_HPP
