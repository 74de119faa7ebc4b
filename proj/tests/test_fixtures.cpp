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

#include "hnp/constructions.hpp"
#include "hnp/fixtures.hpp"
#include "poly_oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hnp;

TEST(Fixtures, TruncatedPolyProductMatchesOracle) {
  for (int n : {2, 3, 4, 5}) {
    const auto [mu, ddx] = truncated_poly(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto expected = oracle::to_vector(
            oracle::mul(oracle::monomial(static_cast<std::size_t>(i)), oracle::monomial(static_cast<std::size_t>(j))),
            static_cast<std::size_t>(n));
        ASSERT_EQ(QVector(mu.product(i, j)), expected);
      }
    for (int m = 0; m < n; ++m) {
      const auto expected =
          oracle::to_vector(oracle::derivative(oracle::monomial(static_cast<std::size_t>(m))), static_cast<std::size_t>(n));
      ASSERT_EQ(QVector(ddx.col(m)), expected);
    }
  }
}

TEST(Fixtures, MonomialDerivationsAreDerivations) {
  for (int n : {2, 3, 4, 5}) {
    const auto [mu, ddx] = truncated_poly(n);
    const auto ds = monomial_derivations(n);
    EXPECT_EQ(ds.size(), static_cast<std::size_t>(3 * (n - 1)));
    for (const auto& d : ds) EXPECT_TRUE(check_derivation(d, mu).passed);
  }
  // d(x^3) = 3 c x^(2 + k)
  const QLinearMap d = monomial_derivation(6, 2, Rational(-1));
  EXPECT_EQ(d(4, 3), Rational(-3));
}

TEST(Fixtures, CatalogIsHnpAndDeterministic) {
  const auto a = fixture_catalog(0);
  const auto b = fixture_catalog(0);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_GE(a.size(), 40U);
  std::set<std::string> names;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].algebra, b[i].algebra);
    EXPECT_TRUE(check_hnp(a[i].algebra).passed) << a[i].name;
    EXPECT_EQ(make_fixture(a[i].descriptor).algebra, a[i].algebra) << a[i].name;
    EXPECT_EQ(a[i].basis_names.size(), static_cast<std::size_t>(a[i].algebra.dim()));
    names.insert(a[i].name);
  }
  EXPECT_EQ(names.size(), a.size());
}

TEST(Fixtures, SeedsChangeRandomMembersOnly) {
  const auto a = fixture_catalog(0);
  const auto b = fixture_catalog(1);
  ASSERT_EQ(a.size(), b.size());
  bool differ = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].descriptor.family != Family::kRandomFromFamily) {
      EXPECT_EQ(a[i].algebra, b[i].algebra);
    } else {
      differ = differ || !(a[i].algebra == b[i].algebra);
    }
  }
  EXPECT_TRUE(differ);
}

TEST(Fixtures, FamilyNamesRoundTrip) {
  for (auto f : {Family::kTruncatedPoly, Family::kDerivationTwist, Family::kScalingTwist,
                 Family::kThreeDimAdmissible, Family::kNilpotentAdmissible, Family::kUnitLine, Family::kZeroStar,
                 Family::kDoubled, Family::kRandomFromFamily}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_FALSE(family_from_string("no_such_family"));
}

TEST(Fixtures, ThreeDimAdmissible) {
  const QAlgebra a = three_dim_admissible();
  EXPECT_EQ(a.dim(), 3);
  EXPECT_TRUE(check_multiplicative(a).passed);
  EXPECT_TRUE(is_admissible(a).passed);
  // d lands in span{u}, which alpha kills, so the Novikov product vanishes.
  EXPECT_TRUE(a.star().is_zero());
}

TEST(Fixtures, NilpotentAdmissibleHasNonzeroBracket) {
  const QAlgebra a = nilpotent_admissible(2, 3);
  EXPECT_TRUE(check_multiplicative(a).passed);
  EXPECT_TRUE(is_admissible(a).passed);
  const QBilinearOp br = commutator(a.star());
  EXPECT_FALSE(br.is_zero());
  EXPECT_EQ(QVector(br.product(1, 0)), QVector(Rational(6) * basis_vector<Rational>(3, 2)));
  EXPECT_EQ(fixed_subspace<Rational>(a.alpha()).cols(), 0);
}

TEST(Fixtures, TensorSubcatalogIsMultiplicative) {
  const auto sub = tensor_subcatalog();
  ASSERT_EQ(sub.size(), 4U);
  for (const auto& f : sub) {
    EXPECT_TRUE(check_multiplicative(f.algebra).passed) << f.name;
    EXPECT_TRUE(check_hnp(f.algebra).passed) << f.name;
  }
}

TEST(Fixtures, FixtureDerivation) {
  const auto d = fixture_derivation({Family::kTruncatedPoly, {Rational(3), Rational(1), Rational(2)}, 0});
  ASSERT_TRUE(d);
  EXPECT_EQ(*d, monomial_derivation(3, 1, Rational(2)));
  EXPECT_FALSE(fixture_derivation({Family::kUnitLine, {}, 0}));
}
