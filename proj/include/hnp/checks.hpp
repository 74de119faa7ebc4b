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

#ifndef HNP_CHECKS_HPP
#define HNP_CHECKS_HPP

#include "hnp/algebra.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hnp {

/// A theorem or decision procedure was applied outside its hypotheses.
/// `hypothesis()` names the violated one.
class HypothesisError : public std::domain_error {
 public:
  HypothesisError(std::string hypothesis, const std::string& message)
      : std::domain_error(message), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Verdict of one identity. Composite identities (hnp, hom-novikov, ...)
/// list their parts; the witness of a composite is that of its first failing
/// part. `triples_checked` counts basis tuples evaluated, summed over parts.
template <typename Scalar>
struct CheckReport {
  IdentityId identity;
  bool passed = true;
  std::optional<Witness<Scalar>> witness;
  std::size_t triples_checked = 0;
  std::vector<CheckReport> parts;

  explicit operator bool() const { return passed; }

  /// Report of the named part, searched depth-first.
  const CheckReport* find(IdentityId id) const {
    if (identity == id) return this;
    for (const auto& p : parts) {
      if (const auto* hit = p.find(id)) return hit;
    }
    return nullptr;
  }
};

namespace detail {

inline std::size_t count(Index dim, int arity) {
  std::size_t n = 1;
  for (int a = 0; a < arity; ++a) n *= static_cast<std::size_t>(dim);
  return n;
}

// Column-by-column comparison of two value matrices whose columns enumerate
// basis tuples of the given arity in lexicographic order. The first
// mismatching column becomes the witness.
template <typename Scalar>
CheckReport<Scalar> compare_columns(IdentityId id, int arity, Index dim, const Matrix<Scalar>& lhs,
                                    const Matrix<Scalar>& rhs) {
  CheckReport<Scalar> report{id, true, std::nullopt, 0, {}};
  report.triples_checked = count(dim, arity);
  for (Index c = 0; c < lhs.cols(); ++c) {
    if (lhs.col(c) == rhs.col(c)) continue;
    Witness<Scalar> w{id, arity, {}, {}, {}};
    Index rest = c;
    for (int a = arity - 1; a >= 0; --a) {
      w.indices[static_cast<std::size_t>(a)] = rest % dim;
      rest /= dim;
    }
    w.lhs = lhs.col(c);
    w.rhs = rhs.col(c);
    report.passed = false;
    report.witness = std::move(w);
    break;
  }
  return report;
}

template <typename Scalar>
CheckReport<Scalar> compare(IdentityId id, const TernaryTable<Scalar>& lhs, const TernaryTable<Scalar>& rhs) {
  return compare_columns(id, 3, lhs.dim(), lhs.values(), rhs.values());
}

template <typename Scalar>
CheckReport<Scalar> combine(IdentityId id, std::vector<CheckReport<Scalar>> parts) {
  CheckReport<Scalar> report{id, true, std::nullopt, 0, {}};
  for (const auto& p : parts) {
    report.triples_checked += p.triples_checked;
    if (!p.passed && report.passed) {
      report.passed = false;
      report.witness = p.witness;
    }
  }
  report.parts = std::move(parts);
  return report;
}

}  // namespace detail

/// mu = mu^op, on basis pairs.
template <typename Scalar>
CheckReport<Scalar> check_commutative(const BilinearOp<Scalar>& op) {
  return detail::compare_columns(IdentityId::kCommutative, 2, op.dim(), op.constants(), opposite(op).constants());
}

/// alpha(mu(x, y)) = mu(alpha(x), alpha(y)) on basis pairs.
template <typename Scalar>
CheckReport<Scalar> check_multiplicative(const HomAlgebra<Scalar>& a) {
  return detail::compare_columns(IdentityId::kMultiplicative, 2, a.dim(), postcompose(a.alpha(), a.mu()).constants(),
                                 precompose(a.mu(), a.alpha(), a.alpha()).constants());
}

/// alpha is multiplicative for both products.
template <typename Scalar>
CheckReport<Scalar> check_multiplicative(const DoubleHomAlgebra<Scalar>& a) {
  return detail::combine<Scalar>(IdentityId::kMultiplicative,
                                 {check_multiplicative(a.dot_part()), check_multiplicative(a.star_part())});
}

/// (xy)alpha(z) = alpha(x)(yz).
template <typename Scalar>
CheckReport<Scalar> check_hom_associative(const HomAlgebra<Scalar>& a) {
  return detail::compare(IdentityId::kHomAssociative, left_nested(a.mu(), a.mu(), a.alpha()),
                         right_nested(a.mu(), a.mu(), a.alpha()));
}

template <typename Scalar>
CheckReport<Scalar> check_commutative_hom_associative(const HomAlgebra<Scalar>& a) {
  return detail::combine<Scalar>(IdentityId::kCommutativeHomAssociative,
                                 {check_commutative(a.mu()), check_hom_associative(a)});
}

/// Left-symmetric Hom-associator and (xy)alpha(z) = (xz)alpha(y).
template <typename Scalar>
CheckReport<Scalar> check_hom_novikov(const HomAlgebra<Scalar>& a) {
  const auto outer = left_nested(a.mu(), a.mu(), a.alpha());
  const auto as = outer - right_nested(a.mu(), a.mu(), a.alpha());
  return detail::combine<Scalar>(IdentityId::kHomNovikov,
                                 {detail::compare(IdentityId::kLeftSymmetric, as, as.permuted({1, 0, 2})),
                                  detail::compare(IdentityId::kRightMultiplication, outer, outer.permuted({0, 2, 1}))});
}

/// All four Hom-Novikov-Poisson axioms; every part is always evaluated.
template <typename Scalar>
CheckReport<Scalar> check_hnp(const DoubleHomAlgebra<Scalar>& a) {
  const auto mixed = mixed_hom_associator_table(a);
  const auto dot_star = left_nested(a.star(), a.dot(), a.alpha());
  const auto star_dot = left_nested(a.dot(), a.star(), a.alpha());
  return detail::combine<Scalar>(
      IdentityId::kHomNovikovPoisson,
      {check_commutative_hom_associative(a.dot_part()), check_hom_novikov(a.star_part()),
       detail::compare(IdentityId::kMixedLeftSymmetric, mixed, mixed.permuted({1, 0, 2})),
       detail::compare(IdentityId::kMixedRightMultiplication, dot_star, star_dot.permuted({0, 2, 1}))});
}

/// For commutative `dot`, decides whether
///   (x.y)*alpha(z) = (x*z).alpha(y)   for all x, y, z       (swapped form)
/// holds exactly when
///   (x.y)*alpha(z) = alpha(x).(y*z)   for all x, y, z       (shifted form).
/// The report passes iff the two verdicts agree; its two parts carry the
/// individual verdicts, so both parts passing is the three-way equality.
/// Throws HypothesisError if `dot` is not commutative.
template <typename Scalar>
CheckReport<Scalar> check_rightmult_equivalence(const DoubleHomAlgebra<Scalar>& a) {
  if (!check_commutative(a.dot()).passed) {
    throw HypothesisError("commutative", "right-multiplication equivalence requires a commutative dot product");
  }
  const auto lhs = left_nested(a.star(), a.dot(), a.alpha());
  auto swapped = detail::compare(IdentityId::kRightMultSwapped, lhs,
                                 left_nested(a.dot(), a.star(), a.alpha()).permuted({0, 2, 1}));
  auto shifted = detail::compare(IdentityId::kRightMultShifted, lhs, right_nested(a.dot(), a.star(), a.alpha()));
  CheckReport<Scalar> report{IdentityId::kRightMultEquivalence, true, std::nullopt, 0, {}};
  report.passed = swapped.passed == shifted.passed;
  report.triples_checked = swapped.triples_checked + shifted.triples_checked;
  if (!report.passed) report.witness = swapped.passed ? shifted.witness : swapped.witness;
  report.parts = {std::move(swapped), std::move(shifted)};
  return report;
}

/// Anti-symmetry on basis pairs and the Hom-Jacobi identity
/// [[x,y],alpha(z)] + [[z,x],alpha(y)] + [[y,z],alpha(x)] = 0.
template <typename Scalar>
CheckReport<Scalar> check_hom_lie(const HomAlgebra<Scalar>& a) {
  const auto& br = a.mu();
  auto anti = detail::compare_columns(IdentityId::kAntiSymmetric, 2, br.dim(), br.constants(),
                                      Matrix<Scalar>(-opposite(br).constants()));
  const auto nested = left_nested(br, br, a.alpha());
  const auto jacobi = nested + nested.permuted({2, 0, 1}) + nested.permuted({1, 2, 0});
  auto jac = detail::compare(IdentityId::kHomJacobi, jacobi, TernaryTable<Scalar>(br.dim()));
  return detail::combine<Scalar>(IdentityId::kHomLie, {std::move(anti), std::move(jac)});
}

/// (A, dot, bracket, alpha) with the bracket stored in `star`: commutative
/// Hom-associative dot, Hom-Lie bracket, and the Hom-Leibniz identity
/// [alpha(x), y.z] = [x,y].alpha(z) + alpha(y).[x,z].
template <typename Scalar>
CheckReport<Scalar> check_hom_poisson(const DoubleHomAlgebra<Scalar>& a) {
  const auto& br = a.star();
  const auto lhs = right_nested(br, a.dot(), a.alpha());
  const auto rhs = left_nested(a.dot(), br, a.alpha()) + right_nested(a.dot(), br, a.alpha()).permuted({1, 0, 2});
  return detail::combine<Scalar>(IdentityId::kHomPoisson,
                                 {check_commutative_hom_associative(a.dot_part()), check_hom_lie(a.star_part()),
                                  detail::compare(IdentityId::kHomLeibniz, lhs, rhs)});
}

/// f(x mu_A y) = f(x) mu_B f(y) for both products; f maps A into B.
template <typename Scalar>
CheckReport<Scalar> check_weak_morphism(const Matrix<Scalar>& f, const DoubleHomAlgebra<Scalar>& a,
                                        const DoubleHomAlgebra<Scalar>& b) {
  detail::require(f.rows() == b.dim() && f.cols() == a.dim(), "check_weak_morphism: dimension mismatch");
  const Matrix<Scalar> ff = kronecker(f, f);
  auto leg = [&](const BilinearOp<Scalar>& mu_a, const BilinearOp<Scalar>& mu_b) {
    return detail::compare_columns(IdentityId::kWeakMorphism, 2, a.dim(), Matrix<Scalar>(f * mu_a.constants()),
                                   Matrix<Scalar>(mu_b.constants() * ff));
  };
  return detail::combine<Scalar>(IdentityId::kWeakMorphism, {leg(a.dot(), b.dot()), leg(a.star(), b.star())});
}

/// Weak morphism with f alpha_A = alpha_B f.
template <typename Scalar>
CheckReport<Scalar> check_morphism(const Matrix<Scalar>& f, const DoubleHomAlgebra<Scalar>& a,
                                   const DoubleHomAlgebra<Scalar>& b) {
  auto weak = check_weak_morphism(f, a, b);
  auto twist = detail::compare_columns(IdentityId::kTwistIntertwining, 1, a.dim(), Matrix<Scalar>(f * a.alpha()),
                                       Matrix<Scalar>(b.alpha() * f));
  return detail::combine<Scalar>(IdentityId::kMorphism, {std::move(weak), std::move(twist)});
}

/// d(xy) = d(x)y + x d(y) on basis pairs.
template <typename Scalar>
CheckReport<Scalar> check_derivation(const LinearMap<Scalar>& d, const BilinearOp<Scalar>& mu) {
  const Index n = mu.dim();
  detail::require(d.rows() == n && d.cols() == n, "check_derivation: dimension mismatch");
  const LinearMap<Scalar> id = identity_map<Scalar>(n);
  return detail::compare_columns(IdentityId::kDerivation, 2, n, Matrix<Scalar>(d * mu.constants()),
                                 Matrix<Scalar>(precompose(mu, d, id).constants() + precompose(mu, id, d).constants()));
}

/// (x.y)*alpha(z) = alpha(x)*(y.z) on basis triples.
template <typename Scalar>
CheckReport<Scalar> check_left_hom_associative(const DoubleHomAlgebra<Scalar>& a) {
  return detail::compare(IdentityId::kLeftHomAssociative, left_nested(a.star(), a.dot(), a.alpha()),
                         right_nested(a.star(), a.dot(), a.alpha()));
}

}  // namespace hnp

#endif  // HNP_CHECKS_HPP
