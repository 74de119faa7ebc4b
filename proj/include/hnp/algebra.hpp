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

#ifndef HNP_ALGEBRA_HPP
#define HNP_ALGEBRA_HPP

#include "hnp/linalg.hpp"

#include <array>
#include <string_view>
#include <utility>

namespace hnp {

/// A Hom-algebra (A, mu, alpha).
template <typename Scalar>
class HomAlgebra {
 public:
  HomAlgebra(BilinearOp<Scalar> mu, LinearMap<Scalar> alpha) : mu_(std::move(mu)), alpha_(std::move(alpha)) {
    detail::require(alpha_.rows() == mu_.dim() && alpha_.cols() == mu_.dim(), "hom-algebra: dimension mismatch");
  }

  Index dim() const { return mu_.dim(); }
  const BilinearOp<Scalar>& mu() const { return mu_; }
  const LinearMap<Scalar>& alpha() const { return alpha_; }

  friend bool operator==(const HomAlgebra& a, const HomAlgebra& b) { return a.mu_ == b.mu_ && a.alpha_ == b.alpha_; }

 private:
  BilinearOp<Scalar> mu_;
  LinearMap<Scalar> alpha_;
};

/// A double Hom-algebra (A, dot, star, alpha). In a Hom-Novikov-Poisson
/// algebra `dot` is the commutative Hom-associative product and `star` the
/// Hom-Novikov one.
template <typename Scalar>
class DoubleHomAlgebra {
 public:
  DoubleHomAlgebra(BilinearOp<Scalar> dot, BilinearOp<Scalar> star, LinearMap<Scalar> alpha)
      : dot_(std::move(dot)), star_(std::move(star)), alpha_(std::move(alpha)) {
    detail::require(dot_.dim() == star_.dim() && alpha_.rows() == dot_.dim() && alpha_.cols() == dot_.dim(),
                    "double hom-algebra: dimension mismatch");
  }

  Index dim() const { return dot_.dim(); }
  const BilinearOp<Scalar>& dot() const { return dot_; }
  const BilinearOp<Scalar>& star() const { return star_; }
  const LinearMap<Scalar>& alpha() const { return alpha_; }

  HomAlgebra<Scalar> dot_part() const { return {dot_, alpha_}; }
  HomAlgebra<Scalar> star_part() const { return {star_, alpha_}; }

  friend bool operator==(const DoubleHomAlgebra& a, const DoubleHomAlgebra& b) {
    return a.dot_ == b.dot_ && a.star_ == b.star_ && a.alpha_ == b.alpha_;
  }

 private:
  BilinearOp<Scalar> dot_;
  BilinearOp<Scalar> star_;
  LinearMap<Scalar> alpha_;
};

/// Every identity the checkers decide. Composite identities carry the
/// verdicts of their parts as sub-reports.
enum class IdentityId {
  kCommutative,
  kMultiplicative,
  kHomAssociative,
  kCommutativeHomAssociative,
  kLeftSymmetric,
  kRightMultiplication,
  kHomNovikov,
  kMixedLeftSymmetric,
  kMixedRightMultiplication,
  kHomNovikovPoisson,
  kRightMultSwapped,
  kRightMultShifted,
  kRightMultEquivalence,
  kAntiSymmetric,
  kHomJacobi,
  kHomLie,
  kHomLeibniz,
  kHomPoisson,
  kWeakMorphism,
  kTwistIntertwining,
  kMorphism,
  kDerivation,
  kLeftHomAssociative,
};

constexpr std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::kCommutative: return "commutative";
    case IdentityId::kMultiplicative: return "multiplicative";
    case IdentityId::kHomAssociative: return "hom-associative";
    case IdentityId::kCommutativeHomAssociative: return "commutative-hom-associative";
    case IdentityId::kLeftSymmetric: return "left-symmetric";
    case IdentityId::kRightMultiplication: return "right-multiplication";
    case IdentityId::kHomNovikov: return "hom-novikov";
    case IdentityId::kMixedLeftSymmetric: return "mixed-left-symmetric";
    case IdentityId::kMixedRightMultiplication: return "mixed-right-multiplication";
    case IdentityId::kHomNovikovPoisson: return "hnp";
    case IdentityId::kRightMultSwapped: return "right-mult-swapped";
    case IdentityId::kRightMultShifted: return "right-mult-shifted";
    case IdentityId::kRightMultEquivalence: return "right-mult-equivalence";
    case IdentityId::kAntiSymmetric: return "anti-symmetric";
    case IdentityId::kHomJacobi: return "hom-jacobi";
    case IdentityId::kHomLie: return "hom-lie";
    case IdentityId::kHomLeibniz: return "hom-leibniz";
    case IdentityId::kHomPoisson: return "hom-poisson";
    case IdentityId::kWeakMorphism: return "weak-morphism";
    case IdentityId::kTwistIntertwining: return "twist-intertwining";
    case IdentityId::kMorphism: return "morphism";
    case IdentityId::kDerivation: return "derivation";
    case IdentityId::kLeftHomAssociative: return "left-hom-associative";
  }
  return "unknown";
}

/// Evidence on basis elements: lhs and rhs of an identity evaluated at
/// (e_i), (e_i, e_j) or (e_i, e_j, e_k) depending on `arity`.
template <typename Scalar>
struct Witness {
  IdentityId identity;
  int arity = 3;
  std::array<Index, 3> indices{0, 0, 0};
  Vector<Scalar> lhs;
  Vector<Scalar> rhs;

  bool is_failure() const { return lhs != rhs; }
};

// Associators on arbitrary elements.

/// (xy)alpha(z) - alpha(x)(yz).
template <typename Scalar>
Vector<Scalar> hom_associator(const HomAlgebra<Scalar>& a, const Vector<Scalar>& x, const Vector<Scalar>& y,
                              const Vector<Scalar>& z) {
  const auto& mu = a.mu();
  const auto& al = a.alpha();
  return evaluate(mu, evaluate(mu, x, y), Vector<Scalar>(al * z)) - evaluate(mu, Vector<Scalar>(al * x), evaluate(mu, y, z));
}

/// (x*y).alpha(z) - alpha(x)*(y.z).
template <typename Scalar>
Vector<Scalar> mixed_hom_associator(const DoubleHomAlgebra<Scalar>& a, const Vector<Scalar>& x,
                                    const Vector<Scalar>& y, const Vector<Scalar>& z) {
  const auto& al = a.alpha();
  return evaluate(a.dot(), evaluate(a.star(), x, y), Vector<Scalar>(al * z)) -
         evaluate(a.star(), Vector<Scalar>(al * x), evaluate(a.dot(), y, z));
}

/// (x.y)*alpha(z) - alpha(x)*(y.z).
template <typename Scalar>
Vector<Scalar> left_hom_associator(const DoubleHomAlgebra<Scalar>& a, const Vector<Scalar>& x,
                                   const Vector<Scalar>& y, const Vector<Scalar>& z) {
  const auto& al = a.alpha();
  return evaluate(a.star(), evaluate(a.dot(), x, y), Vector<Scalar>(al * z)) -
         evaluate(a.star(), Vector<Scalar>(al * x), evaluate(a.dot(), y, z));
}

/// Values of a trilinear map on all basis triples, as a dim x dim^3 matrix
/// whose column (i*dim + j)*dim + k is the value at (e_i, e_j, e_k). Columns
/// are therefore in lexicographic triple order.
template <typename Scalar>
class TernaryTable {
 public:
  explicit TernaryTable(Index dim) : dim_(dim), v_(Matrix<Scalar>::Zero(dim, dim * dim * dim)) {}

  Index dim() const { return dim_; }
  const Matrix<Scalar>& values() const { return v_; }

  static Index column(Index dim, Index i, Index j, Index k) { return (i * dim + j) * dim + k; }

  auto at(Index i, Index j, Index k) const { return v_.col(column(dim_, i, j, k)); }
  auto at(Index i, Index j, Index k) { return v_.col(column(dim_, i, j, k)); }

  /// result(t0, t1, t2) = this(t[order[0]], t[order[1]], t[order[2]]).
  TernaryTable permuted(std::array<int, 3> order) const {
    TernaryTable out(dim_);
    std::array<Index, 3> t{};
    for (t[0] = 0; t[0] < dim_; ++t[0]) {
      for (t[1] = 0; t[1] < dim_; ++t[1]) {
        for (t[2] = 0; t[2] < dim_; ++t[2]) {
          out.at(t[0], t[1], t[2]) = at(t[order[0]], t[order[1]], t[order[2]]);
        }
      }
    }
    return out;
  }

  /// f applied to every value.
  TernaryTable mapped(const LinearMap<Scalar>& f) const {
    detail::require(f.cols() == dim_ && f.rows() == dim_, "ternary table: dimension mismatch");
    TernaryTable out(dim_);
    out.v_ = f * v_;
    return out;
  }

  friend TernaryTable operator+(TernaryTable a, const TernaryTable& b) {
    detail::require(a.dim_ == b.dim_, "ternary table: dimension mismatch");
    a.v_ += b.v_;
    return a;
  }
  friend TernaryTable operator-(TernaryTable a, const TernaryTable& b) {
    detail::require(a.dim_ == b.dim_, "ternary table: dimension mismatch");
    a.v_ -= b.v_;
    return a;
  }
  friend bool operator==(const TernaryTable& a, const TernaryTable& b) { return a.dim_ == b.dim_ && a.v_ == b.v_; }

 private:
  Index dim_;
  Matrix<Scalar> v_;
};

namespace detail {

// out += m * v, skipping zero coordinates of v.
template <typename Scalar, typename Out, typename M, typename V>
void accumulate(Out&& out, const M& m, const V& v) {
  for (Index b = 0; b < v.size(); ++b) {
    if (!is_zero(v(b))) out += m.col(b) * v(b);
  }
}

}  // namespace detail

/// (x, y, z) -> outer(inner(x, y), gamma(z)) on all basis triples.
template <typename Scalar>
TernaryTable<Scalar> left_nested(const BilinearOp<Scalar>& outer, const BilinearOp<Scalar>& inner,
                                 const LinearMap<Scalar>& gamma) {
  const Index n = outer.dim();
  detail::require(inner.dim() == n && gamma.rows() == n && gamma.cols() == n, "left_nested: dimension mismatch");
  // blocks[a] has column k = outer(e_a, gamma(e_k)).
  std::vector<Matrix<Scalar>> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (Index a = 0; a < n; ++a) {
    Matrix<Scalar> block = Matrix<Scalar>::Zero(n, n);
    for (Index k = 0; k < n; ++k) detail::accumulate<Scalar>(block.col(k), outer.left_block(a), gamma.col(k));
    blocks.push_back(std::move(block));
  }
  TernaryTable<Scalar> out(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      const auto u = inner.product(i, j);
      for (Index a = 0; a < n; ++a) {
        if (detail::is_zero(u(a))) continue;
        for (Index k = 0; k < n; ++k) out.at(i, j, k) += blocks[static_cast<std::size_t>(a)].col(k) * u(a);
      }
    }
  }
  return out;
}

/// (x, y, z) -> outer(gamma(x), inner(y, z)) on all basis triples.
template <typename Scalar>
TernaryTable<Scalar> right_nested(const BilinearOp<Scalar>& outer, const BilinearOp<Scalar>& inner,
                                  const LinearMap<Scalar>& gamma) {
  const Index n = outer.dim();
  detail::require(inner.dim() == n && gamma.rows() == n && gamma.cols() == n, "right_nested: dimension mismatch");
  TernaryTable<Scalar> out(n);
  for (Index i = 0; i < n; ++i) {
    const Matrix<Scalar> left = left_multiplication(outer, Vector<Scalar>(gamma.col(i)));
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) detail::accumulate<Scalar>(out.at(i, j, k), left, inner.product(j, k));
    }
  }
  return out;
}

/// Hom-associator of (A, mu, alpha) on basis triples.
template <typename Scalar>
TernaryTable<Scalar> hom_associator_table(const BilinearOp<Scalar>& mu, const LinearMap<Scalar>& alpha) {
  return left_nested(mu, mu, alpha) - right_nested(mu, mu, alpha);
}

/// Mixed Hom-associator (x*y).alpha(z) - alpha(x)*(y.z) on basis triples.
template <typename Scalar>
TernaryTable<Scalar> mixed_hom_associator_table(const DoubleHomAlgebra<Scalar>& a) {
  return left_nested(a.dot(), a.star(), a.alpha()) - right_nested(a.star(), a.dot(), a.alpha());
}

/// Left Hom-associator (x.y)*alpha(z) - alpha(x)*(y.z) on basis triples.
template <typename Scalar>
TernaryTable<Scalar> left_hom_associator_table(const DoubleHomAlgebra<Scalar>& a) {
  return left_nested(a.star(), a.dot(), a.alpha()) - right_nested(a.star(), a.dot(), a.alpha());
}

}  // namespace hnp

#endif  // HNP_ALGEBRA_HPP
