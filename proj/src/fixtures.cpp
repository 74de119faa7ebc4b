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

#include "hnp/fixtures.hpp"

#include "hnp/constructions.hpp"

#include <array>
#include <random>
#include <stdexcept>

namespace hnp {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::kTruncatedPoly, "truncated_poly"},
    {Family::kDerivationTwist, "derivation_twist"},
    {Family::kScalingTwist, "scaling_twist"},
    {Family::kThreeDimAdmissible, "three_dim_admissible"},
    {Family::kNilpotentAdmissible, "nilpotent_admissible"},
    {Family::kUnitLine, "unit_line"},
    {Family::kZeroStar, "zero_star"},
    {Family::kDoubled, "doubled"},
    {Family::kRandomFromFamily, "random_from_family"},
}};

int as_int(const Rational& q) {
  if (denominator(q) != 1) throw std::invalid_argument("fixture parameter must be an integer");
  return numerator(q).convert_to<int>();
}

const Rational& param(const FixtureDescriptor& d, std::size_t i) {
  if (i >= d.params.size()) {
    throw std::invalid_argument("fixture '" + std::string(to_string(d.family)) + "' is missing parameter " +
                                std::to_string(i));
  }
  return d.params[i];
}

std::string monomial_label(int k, const Rational& c) {
  std::string coeff = c == 1 ? "" : (c == -1 ? "-" : to_string(c));
  return "d(x)=" + coeff + (k == 1 ? "x" : "x^" + std::to_string(k));
}

// (alpha mu, alpha mu(Id (x) d), alpha) on k[x]/(x^N) with alpha = Id or exp(d).
QAlgebra poly_with_derivation(int n, int k, const Rational& c, bool twisted) {
  const auto [mu, ddx] = truncated_poly(n);
  const QLinearMap d = monomial_derivation(n, k, c);
  const QLinearMap alpha = twisted ? exp_nilpotent(d) : identity_map<Rational>(n);
  return from_derivation(mu, d, alpha);
}

QLinearMap poly_scaling(int n, const Rational& lambda) {
  QLinearMap alpha = zero_map<Rational>(n);
  Rational p = 1;
  for (int m = 0; m < n; ++m) {
    alpha(m, m) = p;
    p *= lambda;
  }
  return alpha;
}

QVector random_combination(const QMatrix& basis, std::mt19937_64& rng) {
  QVector v = QVector::Zero(basis.rows());
  for (Index c = 0; c < basis.cols(); ++c) {
    const int coeff = static_cast<int>(rng() % 5) - 2;
    if (coeff != 0) v += basis.col(c) * Rational(coeff);
  }
  return v;
}

std::vector<FixtureDescriptor> deterministic_descriptors() {
  auto q = [](int v) { return Rational(v); };
  std::vector<FixtureDescriptor> out;
  out.push_back({Family::kUnitLine, {}});
  out.push_back({Family::kThreeDimAdmissible, {}});
  out.push_back({Family::kNilpotentAdmissible, {q(1), q(1)}});
  out.push_back({Family::kNilpotentAdmissible, {q(2), q(3)}});
  for (int n : {2, 3, 4}) {
    for (int k = 1; k < n; ++k) {
      for (int c : {1, -1, 2}) {
        out.push_back({Family::kTruncatedPoly, {q(n), q(k), q(c)}});
        if (k >= 2) out.push_back({Family::kDerivationTwist, {q(n), q(k), q(c)}});
      }
    }
  }
  for (int n : {2, 3, 4}) {
    for (int lambda : {-1, 2}) out.push_back({Family::kScalingTwist, {q(n), q(1), q(lambda)}});
  }
  for (int n : {2, 3, 4}) {
    out.push_back({Family::kZeroStar, {q(n), q(1), q(1), q(0)}});
    out.push_back({Family::kDoubled, {q(n), q(1), q(1), q(0)}});
  }
  for (int n : {3, 4}) {
    out.push_back({Family::kZeroStar, {q(n), q(2), q(1), q(1)}});
    out.push_back({Family::kDoubled, {q(n), q(2), q(1), q(1)}});
  }
  return out;
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<Family> family_from_string(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

std::pair<QBilinearOp, QLinearMap> truncated_poly(int n) {
  if (n < 2) throw std::invalid_argument("truncated_poly: N must be at least 2");
  QBilinearOp mu = QBilinearOp::from_products(n, [n](Index i, Index j) {
    QVector v = QVector::Zero(n);
    if (i + j < n) v(i + j) = 1;
    return v;
  });
  QLinearMap d = zero_map<Rational>(n);
  for (int m = 1; m < n; ++m) d(m - 1, m) = m;
  return {std::move(mu), std::move(d)};
}

QLinearMap monomial_derivation(int n, int k, const Rational& c) {
  if (n < 2) throw std::invalid_argument("monomial_derivation: N must be at least 2");
  if (k < 1) throw std::invalid_argument("monomial_derivation: d(x) = c x^k needs k >= 1 to descend to k[x]/(x^N)");
  QLinearMap d = zero_map<Rational>(n);
  for (int m = 1; m < n; ++m) {
    const int target = m - 1 + k;
    if (target < n) d(target, m) = c * m;
  }
  return d;
}

std::vector<QLinearMap> monomial_derivations(int n) {
  std::vector<QLinearMap> out;
  for (int k = 1; k < n; ++k) {
    for (int c : {1, -1, 2}) out.push_back(monomial_derivation(n, k, Rational(c)));
  }
  return out;
}

QAlgebra three_dim_admissible() {
  // Basis {1, u, v}: 1 is the unit, u^2 = uv = v^2 = 0.
  QBilinearOp mu = QBilinearOp::from_products(3, [](Index i, Index j) {
    QVector v = QVector::Zero(3);
    if (i == 0) v(j) = 1;
    else if (j == 0) v(i) = 1;
    return v;
  });
  QLinearMap d = zero_map<Rational>(3);
  d(1, 2) = 1;  // d(v) = u
  QLinearMap alpha = zero_map<Rational>(3);
  alpha(0, 0) = 1;
  return from_derivation(mu, d, alpha);
}

QAlgebra nilpotent_admissible(const Rational& s, const Rational& t) {
  // Basis {u, v, w}: uv = vu = w, all other products zero, so every triple
  // product vanishes. d = diag(1, 0, 1) is a derivation.
  QBilinearOp mu = QBilinearOp::from_products(3, [](Index i, Index j) {
    QVector v = QVector::Zero(3);
    if ((i == 0 && j == 1) || (i == 1 && j == 0)) v(2) = 1;
    return v;
  });
  QLinearMap d = zero_map<Rational>(3);
  d(0, 0) = 1;
  d(2, 2) = 1;
  QLinearMap alpha = zero_map<Rational>(3);
  alpha(0, 0) = s;
  alpha(1, 1) = t;
  alpha(2, 2) = s * t;
  return from_derivation(mu, d, alpha);
}

QAlgebra unit_line() {
  QBilinearOp dot(QMatrix::Constant(1, 1, Rational(1)));
  return {dot, QBilinearOp(1), identity_map<Rational>(1)};
}

std::vector<std::string> poly_basis_names(int n) {
  std::vector<std::string> names;
  for (int m = 0; m < n; ++m) names.push_back(m == 0 ? "1" : (m == 1 ? "x" : "x^" + std::to_string(m)));
  return names;
}

Fixture make_fixture(const FixtureDescriptor& desc) {
  switch (desc.family) {
    case Family::kTruncatedPoly:
    case Family::kDerivationTwist: {
      const int n = as_int(param(desc, 0));
      const int k = as_int(param(desc, 1));
      const Rational& c = param(desc, 2);
      const bool twisted = desc.family == Family::kDerivationTwist;
      std::string name = std::string(twisted ? "exp-twist" : "novikov-poisson") + " k[x]/(x^" + std::to_string(n) +
                         ") " + monomial_label(k, c);
      return {std::move(name), desc, poly_with_derivation(n, k, c, twisted), poly_basis_names(n)};
    }
    case Family::kScalingTwist: {
      const int n = as_int(param(desc, 0));
      const Rational& c = param(desc, 1);
      const Rational& lambda = param(desc, 2);
      const auto [mu, ddx] = truncated_poly(n);
      QAlgebra a = from_derivation(mu, monomial_derivation(n, 1, c), poly_scaling(n, lambda));
      std::string name = "scaling-twist k[x]/(x^" + std::to_string(n) + ") " + monomial_label(1, c) +
                         " alpha(x)=" + to_string(lambda) + "x";
      return {std::move(name), desc, std::move(a), poly_basis_names(n)};
    }
    case Family::kThreeDimAdmissible:
      return {"three-dim-admissible", desc, three_dim_admissible(), {"1", "u", "v"}};
    case Family::kNilpotentAdmissible: {
      const Rational& s = param(desc, 0);
      const Rational& t = param(desc, 1);
      return {"nilpotent-admissible s=" + to_string(s) + " t=" + to_string(t), desc, nilpotent_admissible(s, t),
              {"u", "v", "w"}};
    }
    case Family::kUnitLine:
      return {"unit-line", desc, unit_line(), {"1"}};
    case Family::kZeroStar:
    case Family::kDoubled: {
      const int n = as_int(param(desc, 0));
      const int k = as_int(param(desc, 1));
      const Rational& c = param(desc, 2);
      const bool twisted = as_int(param(desc, 3)) != 0;
      const auto [mu, ddx] = truncated_poly(n);
      const QLinearMap alpha = twisted ? exp_nilpotent(monomial_derivation(n, k, c)) : identity_map<Rational>(n);
      if (!check_multiplicative(HomAlgebra<Rational>(mu, alpha)).passed) {
        throw HypothesisError(hypothesis::kAlgebraMorphism, "twisting map is not an algebra morphism");
      }
      const QBilinearOp dot = postcompose(alpha, mu);
      const bool doubled = desc.family == Family::kDoubled;
      std::string name = std::string(doubled ? "doubled" : "zero-star") + " k[x]/(x^" + std::to_string(n) + ")" +
                         (twisted ? " alpha=exp(" + monomial_label(k, c) + ")" : "");
      QAlgebra a(dot, doubled ? dot : QBilinearOp(n), alpha);
      return {std::move(name), desc, std::move(a), poly_basis_names(n)};
    }
    case Family::kRandomFromFamily: {
      const int steps = desc.params.empty() ? 2 : as_int(desc.params[0]);
      std::mt19937_64 rng(desc.seed);
      std::vector<Fixture> bases;
      for (const auto& d : deterministic_descriptors()) {
        Fixture f = make_fixture(d);
        if (check_multiplicative(f.algebra).passed) bases.push_back(std::move(f));
      }
      Fixture base = bases[rng() % bases.size()];
      QAlgebra a = base.algebra;
      std::string name = "random(seed=" + std::to_string(desc.seed) + ") from " + base.name;
      for (int s = 0; s < steps; ++s) {
        switch (rng() % 4) {
          case 0:
            a = nth_twist(a, 1);
            name += " | twist^1";
            break;
          case 1:
            a = nth_twist(a, 2);
            name += " | twist^2";
            break;
          case 2:
            a = perturb_diamond(a, random_combination(perturbation_fixed_points(a), rng));
            name += " | diamond";
            break;
          default:
            a = perturb_times(a, random_combination(perturbation_fixed_points(a), rng));
            name += " | times";
            break;
        }
      }
      return {std::move(name), desc, std::move(a), base.basis_names};
    }
  }
  throw std::invalid_argument("unknown fixture family");
}

std::optional<QLinearMap> fixture_derivation(const FixtureDescriptor& desc) {
  switch (desc.family) {
    case Family::kTruncatedPoly:
    case Family::kDerivationTwist:
      return monomial_derivation(as_int(param(desc, 0)), as_int(param(desc, 1)), param(desc, 2));
    case Family::kScalingTwist:
      return monomial_derivation(as_int(param(desc, 0)), 1, param(desc, 1));
    default:
      return std::nullopt;
  }
}

std::vector<Fixture> fixture_catalog(std::uint64_t seed) {
  std::vector<Fixture> out;
  for (const auto& d : deterministic_descriptors()) out.push_back(make_fixture(d));
  std::mt19937_64 seeder(seed);
  for (int r = 0; r < 3; ++r) out.push_back(make_fixture({Family::kRandomFromFamily, {Rational(2)}, seeder()}));
  for (const auto& f : out) {
    const auto report = check_hnp(f.algebra);
    if (!report.passed) {
      throw std::logic_error("catalog member '" + f.name + "' fails " +
                             std::string(to_string(report.witness->identity)));
    }
  }
  return out;
}

std::vector<Fixture> tensor_subcatalog() {
  auto q = [](int v) { return Rational(v); };
  return {
      make_fixture({Family::kUnitLine, {}}),
      make_fixture({Family::kScalingTwist, {q(2), q(1), q(-1)}}),
      make_fixture({Family::kDerivationTwist, {q(3), q(2), q(1)}}),
      make_fixture({Family::kNilpotentAdmissible, {q(2), q(3)}}),
  };
}

}  // namespace hnp
