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

#include <gtest/gtest.h>

#include <random>

using namespace hnp;

namespace {

QVector vec(std::initializer_list<int> coeffs, Index n) {
  QVector v = QVector::Zero(n);
  Index i = 0;
  for (int c : coeffs) v(i++) = c;
  return v;
}

QLinearMap id(Index n) { return identity_map<Rational>(n); }

// (k[x]/(x^N), mu, x d(y), Id) with d the literal d/dx, built without the
// hypothesis checks of from_derivation.
QAlgebra literal_ddx_algebra(int n) {
  const auto [mu, ddx] = truncated_poly(n);
  return {mu, precompose<Rational>(mu, id(n), ddx), id(n)};
}

QAlgebra fixture(Family f, std::initializer_list<int> params) {
  std::vector<Rational> p;
  for (int v : params) p.emplace_back(v);
  return make_fixture({f, p, 0}).algebra;
}

// Non-admissible analog with a genuine derivation: d(x) = x^2 on k[x]/(x^4).
QAlgebra novikov_poisson_x2() { return fixture(Family::kTruncatedPoly, {4, 2, 1}); }

}  // namespace

TEST(CheckCommutative, Examples) {
  const auto [mu, ddx] = truncated_poly(4);
  EXPECT_TRUE(check_commutative(mu).passed);
  EXPECT_TRUE(check_commutative(QBilinearOp(3)).passed);
  EXPECT_EQ(check_commutative(mu).triples_checked, 16U);

  const auto report = check_commutative(literal_ddx_algebra(3).star());
  ASSERT_FALSE(report.passed);
  ASSERT_TRUE(report.witness);
  EXPECT_EQ(report.witness->arity, 2);
  EXPECT_EQ(report.witness->indices[0], 0);
  EXPECT_EQ(report.witness->indices[1], 1);
  // 1 * x = 1 . d(x) = 1, while x * 1 = x . d(1) = 0.
  EXPECT_EQ(report.witness->lhs, vec({1}, 3));
  EXPECT_EQ(report.witness->rhs, vec({}, 3));
}

TEST(CheckMultiplicative, Examples) {
  const auto [mu, ddx] = truncated_poly(4);
  EXPECT_TRUE(check_multiplicative(QAlgebra(mu, mu, id(4))).passed);
  EXPECT_TRUE(check_multiplicative(fixture(Family::kDerivationTwist, {4, 2, 1})).passed);
  const auto report = check_multiplicative(HomAlgebra<Rational>(mu, ddx));
  ASSERT_FALSE(report.passed);
  // First failing pair is (1, x): d(1.x) = 1 but d(1).d(x) = 0.
  EXPECT_EQ(report.witness->indices[0], 0);
  EXPECT_EQ(report.witness->indices[1], 1);
  EXPECT_EQ(report.witness->lhs, vec({1}, 4));
  EXPECT_EQ(report.witness->rhs, vec({}, 4));
  // d(x.x) = 2x but d(x).d(x) = 1.
  const QVector x = vec({0, 1}, 4);
  EXPECT_EQ(QVector(ddx * evaluate(mu, x, x)), vec({0, 2}, 4));
  EXPECT_EQ(evaluate(mu, QVector(ddx * x), QVector(ddx * x)), vec({1}, 4));
}

TEST(CheckMultiplicative, LiteralExponentialTwistIsNotMultiplicative) {
  // exp(d/dx) is not an algebra map of a truncation, since d/dx is not a
  // derivation there.
  const auto [mu, ddx] = truncated_poly(4);
  const QLinearMap phi = exp_nilpotent(ddx);
  EXPECT_FALSE(check_multiplicative(HomAlgebra<Rational>(mu, phi)).passed);
}

TEST(CheckHomAssociative, Examples) {
  const auto [mu, ddx] = truncated_poly(4);
  EXPECT_TRUE(check_hom_associative(HomAlgebra<Rational>(mu, id(4))).passed);
  EXPECT_TRUE(check_hom_associative(fixture(Family::kDerivationTwist, {4, 2, 1}).dot_part()).passed);
  EXPECT_TRUE(check_hom_associative(HomAlgebra<Rational>(QBilinearOp(3), id(3))).passed);
  EXPECT_EQ(check_hom_associative(HomAlgebra<Rational>(mu, id(4))).triples_checked, 64U);
}

TEST(CheckHomAssociative, AssociatorVanishesExactlyWhenCheckPasses) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix c = QMatrix::Zero(2, 4);
    for (Index r = 0; r < 2; ++r)
      for (Index k = 0; k < 4; ++k) c(r, k) = Rational(static_cast<long>(rng() % 3) - 1);
    QLinearMap al = id(2);
    if (trial % 2) al(0, 1) = 1;
    const HomAlgebra<Rational> a(QBilinearOp(c), al);
    bool all_zero = true;
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 2; ++j)
        for (Index k = 0; k < 2; ++k)
          all_zero = all_zero && hom_associator(a, basis_vector<Rational>(2, i), basis_vector<Rational>(2, j),
                                                basis_vector<Rational>(2, k))
                                     .isZero();
    EXPECT_EQ(all_zero, check_hom_associative(a).passed);
  }
}

TEST(CheckHomNovikov, Examples) {
  EXPECT_TRUE(check_hom_novikov(novikov_poisson_x2().star_part()).passed);
  EXPECT_TRUE(check_hom_novikov(HomAlgebra<Rational>(QBilinearOp(3), id(3))).passed);
  const auto [mu, ddx] = truncated_poly(4);
  EXPECT_TRUE(check_hom_novikov(HomAlgebra<Rational>(mu, id(4))).passed);
}

TEST(CheckHomNovikov, LiteralDerivativeProductIsNotNovikovOnTruncation) {
  const auto report = check_hom_novikov(literal_ddx_algebra(4).star_part());
  EXPECT_FALSE(report.passed);
  ASSERT_EQ(report.parts.size(), 2U);
  EXPECT_FALSE(report.find(IdentityId::kLeftSymmetric)->passed);
}

TEST(CheckHnp, Examples) {
  const auto [mu, ddx] = truncated_poly(3);
  EXPECT_TRUE(check_hnp(QAlgebra(mu, mu, id(3))).passed);
  EXPECT_TRUE(check_hnp(fixture(Family::kDerivationTwist, {4, 2, 1})).passed);
  const QBilinearOp noncomm = precompose<Rational>(mu, id(3), ddx);
  const auto report = check_hnp(QAlgebra(noncomm, noncomm, id(3)));
  ASSERT_FALSE(report.passed);
  EXPECT_EQ(report.witness->identity, IdentityId::kCommutative);
  EXPECT_EQ(report.parts.size(), 4U);
}

TEST(CheckHnp, ReportsEveryPart) {
  const auto report = check_hnp(literal_ddx_algebra(2));
  ASSERT_EQ(report.parts.size(), 4U);
  EXPECT_TRUE(report.parts[0].passed);
  EXPECT_TRUE(report.parts[1].passed);
  EXPECT_FALSE(report.parts[2].passed);
  EXPECT_TRUE(report.parts[3].passed);
}

TEST(CheckRightmultEquivalence, Examples) {
  for (const auto& f : fixture_catalog(0)) {
    const auto report = check_rightmult_equivalence(f.algebra);
    EXPECT_TRUE(report.passed) << f.name;
    EXPECT_TRUE(report.parts[0].passed && report.parts[1].passed) << f.name;
  }
  const auto [mu, ddx] = truncated_poly(3);
  const auto zero = check_rightmult_equivalence(QAlgebra(mu, QBilinearOp(3), id(3)));
  EXPECT_TRUE(zero.passed && zero.parts[0].passed && zero.parts[1].passed);
  EXPECT_THROW(check_rightmult_equivalence(QAlgebra(precompose<Rational>(mu, id(3), ddx), mu, id(3))),
               HypothesisError);
}

TEST(CheckRightmultEquivalence, RandomStarVerdictsAgree) {
  const auto [mu, ddx] = truncated_poly(3);
  std::mt19937_64 rng(12);
  int failing = 0;
  for (int trial = 0; trial < 40; ++trial) {
    QMatrix c(3, 9);
    for (Index r = 0; r < 3; ++r)
      for (Index k = 0; k < 9; ++k) c(r, k) = Rational(static_cast<long>(rng() % 3) - 1);
    const auto report = check_rightmult_equivalence(QAlgebra(mu, QBilinearOp(c), id(3)));
    EXPECT_TRUE(report.passed);
    if (!report.parts[0].passed) ++failing;
  }
  EXPECT_GT(failing, 0);
}

TEST(CheckHomLie, Examples) {
  EXPECT_TRUE(check_hom_lie(HomAlgebra<Rational>(QBilinearOp(3), id(3))).passed);
  const auto [mu, ddx] = truncated_poly(3);
  const auto report = check_hom_lie(HomAlgebra<Rational>(mu, id(3)));
  ASSERT_FALSE(report.passed);
  EXPECT_EQ(report.witness->identity, IdentityId::kAntiSymmetric);
}

TEST(CheckHomLie, CommutatorOfHomNovikovFixtures) {
  for (const auto& f : fixture_catalog(0)) {
    EXPECT_TRUE(check_hom_lie(HomAlgebra<Rational>(commutator(f.algebra.star()), f.algebra.alpha())).passed)
        << f.name;
  }
}

TEST(CheckHomPoisson, Examples) {
  const auto [mu, ddx] = truncated_poly(3);
  EXPECT_TRUE(check_hom_poisson(QAlgebra(mu, QBilinearOp(3), id(3))).passed);
  EXPECT_TRUE(check_hom_poisson(commutator_minus(nilpotent_admissible(2, 3))).passed);
  const auto report = check_hom_poisson(commutator_minus(novikov_poisson_x2()));
  ASSERT_FALSE(report.passed);
  EXPECT_EQ(report.witness->identity, IdentityId::kHomLeibniz);
}

TEST(CheckWeakMorphism, Examples) {
  const QAlgebra a = novikov_poisson_x2();
  EXPECT_TRUE(check_weak_morphism<Rational>(id(4), a, a).passed);
  const QLinearMap d = monomial_derivation(4, 2, 1);
  EXPECT_TRUE(check_weak_morphism<Rational>(exp_nilpotent(d), a, a).passed);
  EXPECT_FALSE(check_weak_morphism<Rational>(d, a, a).passed);
  EXPECT_THROW(check_weak_morphism<Rational>(id(3), a, a), DimensionError);
}

TEST(CheckMorphism, Examples) {
  const QAlgebra a = fixture(Family::kDerivationTwist, {4, 2, 1});
  for (unsigned n = 0; n < 4; ++n) EXPECT_TRUE(check_morphism<Rational>(power(a.alpha(), n), a, a).passed);
  const QAlgebra b = nth_twist(a, 1);
  const auto report = check_morphism<Rational>(id(4), a, QAlgebra(a.dot(), a.star(), b.alpha()));
  ASSERT_FALSE(report.passed);
  EXPECT_EQ(report.witness->identity, IdentityId::kTwistIntertwining);
  const QAlgebra zero_alg(QBilinearOp(1), QBilinearOp(1), zero_map<Rational>(1));
  EXPECT_TRUE(check_morphism<Rational>(QMatrix::Zero(1, 4), a, zero_alg).passed);
}

TEST(CheckDerivation, Examples) {
  const auto [mu, ddx] = truncated_poly(4);
  for (const auto& d : monomial_derivations(4)) EXPECT_TRUE(check_derivation(d, mu).passed);
  EXPECT_TRUE(check_derivation<Rational>(zero_map<Rational>(4), mu).passed);
  const auto unit = check_derivation<Rational>(id(4), mu);
  ASSERT_FALSE(unit.passed);
  EXPECT_EQ(unit.witness->indices[0], 0);
  EXPECT_EQ(unit.witness->indices[1], 0);
}

TEST(CheckDerivation, LiteralDerivativeFailsOnTruncation) {
  // x . x^3 = 0, yet d(x).x^3 + x.d(x^3) = 4x^3.
  const auto [mu, ddx] = truncated_poly(4);
  const auto report = check_derivation(ddx, mu);
  ASSERT_FALSE(report.passed);
  EXPECT_EQ(report.witness->indices[0], 1);
  EXPECT_EQ(report.witness->indices[1], 3);
  EXPECT_EQ(report.witness->lhs, vec({}, 4));
  EXPECT_EQ(report.witness->rhs, vec({0, 0, 0, 4}, 4));
}

TEST(LeftHomAssociator, Examples) {
  const auto [mu, ddx] = truncated_poly(4);
  const QAlgebra doubled(mu, mu, id(4));
  EXPECT_TRUE(check_left_hom_associative(doubled).passed);
  EXPECT_TRUE(check_left_hom_associative(QAlgebra(mu, QBilinearOp(4), id(4))).passed);
  const QVector one = vec({1}, 4);
  const QVector x = vec({0, 1}, 4);
  // (1.x)*1 - 1*(x.1) = x d(1) - 1 d(x) = -1.
  EXPECT_EQ(left_hom_associator(literal_ddx_algebra(4), one, x, one), vec({-1}, 4));
  EXPECT_EQ(left_hom_associator(novikov_poisson_x2(), one, x, one), vec({0, 0, -1}, 4));
}

TEST(Lemmas, CommutativeHomAssociativeProductIsPermutationInvariant) {
  for (const auto& f : fixture_catalog(0)) {
    const auto t = left_nested(f.algebra.dot(), f.algebra.dot(), f.algebra.alpha());
    for (auto order : {std::array{0, 2, 1}, std::array{1, 0, 2}, std::array{1, 2, 0}, std::array{2, 0, 1},
                       std::array{2, 1, 0}}) {
      EXPECT_EQ(t.permuted(order), t) << f.name;
    }
  }
}

TEST(Soundness, RandomVectorsAgreeWithBasisSweep) {
  std::mt19937_64 rng(13);
  auto draw = [&](Index n) {
    QVector v(n);
    for (Index i = 0; i < n; ++i) v(i) = Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    return v;
  };
  for (const QAlgebra& a : {literal_ddx_algebra(3), novikov_poisson_x2()}) {
    const bool sweep = check_left_hom_associative(a).passed;
    bool random_ok = true;
    for (int t = 0; t < 50; ++t) {
      random_ok = random_ok && left_hom_associator(a, draw(a.dim()), draw(a.dim()), draw(a.dim())).isZero();
    }
    EXPECT_EQ(sweep, random_ok);
  }
}
