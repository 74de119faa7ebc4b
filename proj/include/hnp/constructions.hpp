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

#ifndef HNP_CONSTRUCTIONS_HPP
#define HNP_CONSTRUCTIONS_HPP

#include "hnp/checks.hpp"

#include <string>

// Constructions verify the hypotheses of the result they realize and throw
// HypothesisError naming the first violated one instead of building an
// algebra the theory says nothing about.

namespace hnp {

namespace hypothesis {
inline constexpr const char* kWeakMorphism = "weak-morphism";
inline constexpr const char* kMultiplicative = "multiplicative";
inline constexpr const char* kHnp = "hnp";
inline constexpr const char* kFixedPointA = "fixed-point-a";
inline constexpr const char* kFixedPointB = "fixed-point-b";
inline constexpr const char* kCommutative = "commutative";
inline constexpr const char* kAssociative = "associative";
inline constexpr const char* kDerivation = "derivation";
inline constexpr const char* kAlgebraMorphism = "algebra-morphism";
inline constexpr const char* kCommutesWithDerivation = "commutes-with-derivation";
inline constexpr const char* kNilpotent = "nilpotent";
}  // namespace hypothesis

namespace detail {

template <typename Scalar>
void require_multiplicative_hnp(const DoubleHomAlgebra<Scalar>& a) {
  if (!check_multiplicative(a).passed) {
    throw HypothesisError(hypothesis::kMultiplicative, "multiplicativity hypothesis violated");
  }
  if (!check_hnp(a).passed) {
    throw HypothesisError(hypothesis::kHnp, "Hom-Novikov-Poisson hypothesis violated");
  }
}

template <typename Scalar>
void require_fixed_a(const LinearMap<Scalar>& alpha, const Vector<Scalar>& a) {
  detail::require(a.size() == alpha.rows(), "perturbation element has wrong dimension");
  if (power(alpha, 2) * a != a) {
    throw HypothesisError(hypothesis::kFixedPointA, "fixed-point hypothesis α²(a)=a violated");
  }
}

template <typename Scalar>
void require_fixed_b(const LinearMap<Scalar>& alpha, const Vector<Scalar>& b) {
  detail::require(b.size() == alpha.rows(), "perturbation element has wrong dimension");
  if (power(alpha, 4) * b != b) {
    throw HypothesisError(hypothesis::kFixedPointB, "fixed-point hypothesis α⁴(b)=b violated");
  }
}

template <typename Scalar>
void require_derivation_data(const BilinearOp<Scalar>& mu, const LinearMap<Scalar>& d, const LinearMap<Scalar>& alpha) {
  const Index n = mu.dim();
  detail::require(d.rows() == n && d.cols() == n && alpha.rows() == n && alpha.cols() == n,
                  "derivation data: dimension mismatch");
  if (!check_commutative(mu).passed) {
    throw HypothesisError(hypothesis::kCommutative, "underlying product is not commutative");
  }
  if (!check_hom_associative(HomAlgebra<Scalar>(mu, identity_map<Scalar>(n))).passed) {
    throw HypothesisError(hypothesis::kAssociative, "underlying product is not associative");
  }
  if (!check_derivation(d, mu).passed) {
    throw HypothesisError(hypothesis::kDerivation, "map is not a derivation of the product");
  }
  if (!check_multiplicative(HomAlgebra<Scalar>(mu, alpha)).passed) {
    throw HypothesisError(hypothesis::kAlgebraMorphism, "twisting map is not an algebra morphism");
  }
  if (alpha * d != d * alpha) {
    throw HypothesisError(hypothesis::kCommutesWithDerivation, "twisting map does not commute with the derivation");
  }
}

}  // namespace detail

/// A_beta = (A, beta o dot, beta o star, beta o alpha) for a weak morphism beta.
template <typename Scalar>
DoubleHomAlgebra<Scalar> yau_twist(const DoubleHomAlgebra<Scalar>& a, const LinearMap<Scalar>& beta) {
  detail::require(beta.rows() == a.dim() && beta.cols() == a.dim(), "yau_twist: dimension mismatch");
  if (!check_weak_morphism(beta, a, a).passed) {
    throw HypothesisError(hypothesis::kWeakMorphism, "twisting map is not a weak morphism");
  }
  return {postcompose(beta, a.dot()), postcompose(beta, a.star()), LinearMap<Scalar>(beta * a.alpha())};
}

/// A^n = (A, alpha^n o dot, alpha^n o star, alpha^(n+1)) for multiplicative A.
template <typename Scalar>
DoubleHomAlgebra<Scalar> nth_twist(const DoubleHomAlgebra<Scalar>& a, unsigned n) {
  if (!check_multiplicative(a).passed) {
    throw HypothesisError(hypothesis::kMultiplicative, "nth twist requires a multiplicative algebra");
  }
  const LinearMap<Scalar> an = power(a.alpha(), n);
  return {postcompose(an, a.dot()), postcompose(an, a.star()), LinearMap<Scalar>(an * a.alpha())};
}

/// A1 (x) A2 on the lexicographic basis: dot = dot1 (x) dot2,
/// star = star1 (x) dot2 + dot1 (x) star2, alpha = alpha1 (x) alpha2.
template <typename Scalar>
DoubleHomAlgebra<Scalar> tensor_product(const DoubleHomAlgebra<Scalar>& a1, const DoubleHomAlgebra<Scalar>& a2) {
  return {tensor(a1.dot(), a2.dot()), tensor(a1.star(), a2.dot()) + tensor(a1.dot(), a2.star()),
          kronecker(a1.alpha(), a2.alpha())};
}

/// A' = (A, x <> y = a.(x.y), x *_alpha y = alpha(x*y), alpha^2).
template <typename Scalar>
DoubleHomAlgebra<Scalar> perturb_diamond(const DoubleHomAlgebra<Scalar>& a, const Vector<Scalar>& elem) {
  detail::require_fixed_a(a.alpha(), elem);
  detail::require_multiplicative_hnp(a);
  const LinearMap<Scalar> mult_a = left_multiplication(a.dot(), elem);
  return {postcompose(mult_a, a.dot()), postcompose(a.alpha(), a.star()), power(a.alpha(), 2)};
}

/// A-bar = (A, x ._alpha y = alpha(x.y), x x y = alpha(x)*alpha(y) + a.(x.y), alpha^2).
template <typename Scalar>
DoubleHomAlgebra<Scalar> perturb_times(const DoubleHomAlgebra<Scalar>& a, const Vector<Scalar>& elem) {
  detail::require_fixed_a(a.alpha(), elem);
  detail::require_multiplicative_hnp(a);
  const LinearMap<Scalar> mult_a = left_multiplication(a.dot(), elem);
  return {postcompose(a.alpha(), a.dot()),
          precompose(a.star(), a.alpha(), a.alpha()) + postcompose(mult_a, a.dot()), power(a.alpha(), 2)};
}

/// A-tilde = (A, alpha(b).alpha^2(x.y), alpha^3(x*y) + a.alpha^2(x.y), alpha^4),
/// i.e. perturb_diamond(perturb_times(A, a), b) written out directly.
template <typename Scalar>
DoubleHomAlgebra<Scalar> perturb_combined(const DoubleHomAlgebra<Scalar>& a, const Vector<Scalar>& elem_a,
                                          const Vector<Scalar>& elem_b) {
  detail::require_fixed_a(a.alpha(), elem_a);
  detail::require_fixed_b(a.alpha(), elem_b);
  detail::require_multiplicative_hnp(a);
  const LinearMap<Scalar> a2 = power(a.alpha(), 2);
  const LinearMap<Scalar> mult_b = left_multiplication(a.dot(), Vector<Scalar>(a.alpha() * elem_b));
  const LinearMap<Scalar> mult_a = left_multiplication(a.dot(), elem_a);
  return {postcompose(LinearMap<Scalar>(mult_b * a2), a.dot()),
          postcompose(power(a.alpha(), 3), a.star()) + postcompose(LinearMap<Scalar>(mult_a * a2), a.dot()),
          power(a.alpha(), 4)};
}

/// A_alpha = (A, alpha o mu, (x, y) -> alpha(mu(x, d y)), alpha) from a
/// commutative associative mu, a derivation d, and an algebra morphism alpha
/// commuting with d.
template <typename Scalar>
DoubleHomAlgebra<Scalar> from_derivation(const BilinearOp<Scalar>& mu, const LinearMap<Scalar>& d,
                                         const LinearMap<Scalar>& alpha) {
  detail::require_derivation_data(mu, d, alpha);
  const LinearMap<Scalar> id = identity_map<Scalar>(mu.dim());
  return {postcompose(alpha, mu), postcompose(alpha, precompose(mu, id, d)), alpha};
}

/// sum_{k < n} d^k / k! where d^n = 0, n <= dim.
template <typename Scalar>
LinearMap<Scalar> exp_nilpotent(const LinearMap<Scalar>& d) {
  detail::require(d.rows() == d.cols(), "exp_nilpotent: map must be square");
  const Index n = d.rows();
  LinearMap<Scalar> result = identity_map<Scalar>(n);
  LinearMap<Scalar> term = identity_map<Scalar>(n);
  for (Index k = 1; k <= n; ++k) {
    term = LinearMap<Scalar>(term * d) / Scalar(k);
    if (term == zero_map<Scalar>(n)) return result;
    result += term;
  }
  throw HypothesisError(hypothesis::kNilpotent, "map is not nilpotent");
}

/// A^- = (A, dot, [x, y] = x*y - y*x, alpha).
template <typename Scalar>
DoubleHomAlgebra<Scalar> commutator_minus(const DoubleHomAlgebra<Scalar>& a) {
  return {a.dot(), commutator(a.star()), a.alpha()};
}

/// Admissibility of a Hom-Novikov-Poisson algebra, decided as vanishing of
/// the left Hom-associator (x.y)*alpha(z) - alpha(x)*(y.z).
template <typename Scalar>
CheckReport<Scalar> is_admissible(const DoubleHomAlgebra<Scalar>& a) {
  if (!check_hnp(a).passed) {
    throw HypothesisError(hypothesis::kHnp, "admissibility is only defined for Hom-Novikov-Poisson algebras");
  }
  return check_left_hom_associative(a);
}

/// (A, alpha^2(b) alpha^4(xy), alpha^4(x d(y)) + alpha(a) alpha^4(xy), alpha^4).
template <typename Scalar>
DoubleHomAlgebra<Scalar> derivation_perturbation(const BilinearOp<Scalar>& mu, const LinearMap<Scalar>& d,
                                                 const LinearMap<Scalar>& alpha, const Vector<Scalar>& elem_a,
                                                 const Vector<Scalar>& elem_b) {
  detail::require_derivation_data(mu, d, alpha);
  detail::require_fixed_a(alpha, elem_a);
  detail::require_fixed_b(alpha, elem_b);
  const LinearMap<Scalar> id = identity_map<Scalar>(mu.dim());
  const LinearMap<Scalar> a4 = power(alpha, 4);
  const LinearMap<Scalar> mult_b = left_multiplication(mu, Vector<Scalar>(power(alpha, 2) * elem_b));
  const LinearMap<Scalar> mult_a = left_multiplication(mu, Vector<Scalar>(alpha * elem_a));
  return {postcompose(LinearMap<Scalar>(mult_b * a4), mu),
          postcompose(a4, precompose(mu, id, d)) + postcompose(LinearMap<Scalar>(mult_a * a4), mu), a4};
}

/// Basis (as columns) of ker(alpha^2 - Id), the admissible perturbation elements a.
template <typename Scalar>
Matrix<Scalar> perturbation_fixed_points(const DoubleHomAlgebra<Scalar>& a, unsigned power_of_alpha = 2) {
  return fixed_subspace<Scalar>(power(a.alpha(), power_of_alpha));
}

}  // namespace hnp

#endif  // HNP_CONSTRUCTIONS_HPP
