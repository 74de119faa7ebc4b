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

#ifndef HNP_LINALG_HPP
#define HNP_LINALG_HPP

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hnp {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Square matrix acting on coordinate columns; column j is the image of e_j.
template <typename Scalar>
using LinearMap = Matrix<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool ok, const char* what) {
  if (!ok) throw DimensionError(what);
}

template <typename Scalar>
bool is_zero(const Scalar& s) {
  return s == Scalar(0);
}

}  // namespace detail

/// Structure constants of a bilinear map mu: A x A -> A in a fixed basis.
///
/// Stored as a dim x dim^2 matrix whose column i*dim + j holds the
/// coordinates of mu(e_i, e_j). With this layout mu(u, v) = C (u (x) v), so
/// pre- and post-composition with linear maps are ordinary matrix products.
template <typename Scalar>
class BilinearOp {
 public:
  BilinearOp() = default;

  /// The zero product on a dim-dimensional space.
  explicit BilinearOp(Index dim) : dim_(dim), c_(Matrix<Scalar>::Zero(dim, dim * dim)) {
    detail::require(dim > 0, "bilinear op: dimension must be positive");
  }

  explicit BilinearOp(Matrix<Scalar> constants) : dim_(constants.rows()), c_(std::move(constants)) {
    detail::require(dim_ > 0 && c_.cols() == dim_ * dim_, "bilinear op: expected a dim x dim^2 matrix");
  }

  /// Builds from a callback returning mu(e_i, e_j) as a coordinate vector.
  template <typename Fn>
  static BilinearOp from_products(Index dim, Fn&& product) {
    Matrix<Scalar> c(dim, dim * dim);
    for (Index i = 0; i < dim; ++i) {
      for (Index j = 0; j < dim; ++j) {
        Vector<Scalar> v = product(i, j);
        detail::require(v.size() == dim, "bilinear op: product vector has wrong length");
        c.col(i * dim + j) = v;
      }
    }
    return BilinearOp(std::move(c));
  }

  Index dim() const { return dim_; }
  const Matrix<Scalar>& constants() const { return c_; }

  /// mu(e_i, e_j).
  auto product(Index i, Index j) const { return c_.col(i * dim_ + j); }

  /// Coefficient of e_k in mu(e_i, e_j).
  const Scalar& coeff(Index i, Index j, Index k) const { return c_(k, i * dim_ + j); }

  /// Left multiplication by e_a as a dim x dim matrix (column b = mu(e_a, e_b)).
  auto left_block(Index a) const { return c_.middleCols(a * dim_, dim_); }

  /// Copy with one coefficient replaced.
  BilinearOp with_coeff(Index i, Index j, Index k, Scalar value) const {
    BilinearOp out = *this;
    out.c_(k, i * dim_ + j) = std::move(value);
    return out;
  }

  bool is_zero() const {
    for (Index n = 0; n < c_.size(); ++n) {
      if (!detail::is_zero(c_.data()[n])) return false;
    }
    return true;
  }

  friend bool operator==(const BilinearOp& a, const BilinearOp& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

  friend BilinearOp operator+(const BilinearOp& a, const BilinearOp& b) {
    detail::require(a.dim_ == b.dim_, "bilinear op: dimension mismatch in sum");
    return BilinearOp(Matrix<Scalar>(a.c_ + b.c_));
  }

  friend BilinearOp operator-(const BilinearOp& a, const BilinearOp& b) {
    detail::require(a.dim_ == b.dim_, "bilinear op: dimension mismatch in difference");
    return BilinearOp(Matrix<Scalar>(a.c_ - b.c_));
  }

  friend BilinearOp operator*(const Scalar& s, const BilinearOp& a) {
    return BilinearOp(Matrix<Scalar>(a.c_ * s));
  }

 private:
  Index dim_ = 0;
  Matrix<Scalar> c_;
};

template <typename Scalar>
LinearMap<Scalar> identity_map(Index dim) {
  return LinearMap<Scalar>::Identity(dim, dim);
}

template <typename Scalar>
LinearMap<Scalar> zero_map(Index dim) {
  return LinearMap<Scalar>::Zero(dim, dim);
}

template <typename Scalar>
Vector<Scalar> basis_vector(Index dim, Index i) {
  return Vector<Scalar>::Unit(dim, i);
}

/// f o g.
template <typename Scalar>
LinearMap<Scalar> compose(const LinearMap<Scalar>& f, const LinearMap<Scalar>& g) {
  detail::require(f.cols() == g.rows(), "compose: dimension mismatch");
  return f * g;
}

/// n-fold composite of f with itself; f^0 is the identity.
template <typename Scalar>
LinearMap<Scalar> power(const LinearMap<Scalar>& f, unsigned n) {
  detail::require(f.rows() == f.cols(), "power: map must be square");
  LinearMap<Scalar> result = identity_map<Scalar>(f.rows());
  LinearMap<Scalar> base = f;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

/// f (x) g on the lexicographic tensor basis e_i (x) e_j -> index i*dim(g) + j.
template <typename Scalar>
Matrix<Scalar> kronecker(const Matrix<Scalar>& f, const Matrix<Scalar>& g) {
  Matrix<Scalar> out(f.rows() * g.rows(), f.cols() * g.cols());
  for (Index r = 0; r < f.rows(); ++r) {
    for (Index c = 0; c < f.cols(); ++c) {
      if (detail::is_zero(f(r, c))) {
        out.block(r * g.rows(), c * g.cols(), g.rows(), g.cols()).setZero();
      } else {
        out.block(r * g.rows(), c * g.cols(), g.rows(), g.cols()) = g * f(r, c);
      }
    }
  }
  return out;
}

/// Kronecker product of two coordinate vectors.
template <typename Scalar>
Vector<Scalar> kronecker(const Vector<Scalar>& u, const Vector<Scalar>& v) {
  Vector<Scalar> out(u.size() * v.size());
  for (Index i = 0; i < u.size(); ++i) {
    out.segment(i * v.size(), v.size()) = v * u(i);
  }
  return out;
}

/// mu(u, v) = sum_{i,j} u_i v_j mu(e_i, e_j).
template <typename Scalar>
Vector<Scalar> evaluate(const BilinearOp<Scalar>& op, const Vector<Scalar>& u, const Vector<Scalar>& v) {
  detail::require(u.size() == op.dim() && v.size() == op.dim(), "evaluate: dimension mismatch");
  Vector<Scalar> out = Vector<Scalar>::Zero(op.dim());
  for (Index i = 0; i < op.dim(); ++i) {
    if (detail::is_zero(u(i))) continue;
    for (Index j = 0; j < op.dim(); ++j) {
      if (detail::is_zero(v(j))) continue;
      out += op.product(i, j) * Scalar(u(i) * v(j));
    }
  }
  return out;
}

/// f o mu.
template <typename Scalar>
BilinearOp<Scalar> postcompose(const LinearMap<Scalar>& f, const BilinearOp<Scalar>& op) {
  detail::require(f.rows() == f.cols() && f.cols() == op.dim(), "postcompose: dimension mismatch");
  return BilinearOp<Scalar>(Matrix<Scalar>(f * op.constants()));
}

/// (u, v) -> mu(f(u), g(v)).
template <typename Scalar>
BilinearOp<Scalar> precompose(const BilinearOp<Scalar>& op, const LinearMap<Scalar>& f, const LinearMap<Scalar>& g) {
  const Index n = op.dim();
  detail::require(f.rows() == n && f.cols() == n && g.rows() == n && g.cols() == n,
                  "precompose: dimension mismatch");
  return BilinearOp<Scalar>::from_products(n, [&](Index i, Index j) {
    return evaluate(op, Vector<Scalar>(f.col(i)), Vector<Scalar>(g.col(j)));
  });
}

/// mu^op = mu o tau.
template <typename Scalar>
BilinearOp<Scalar> opposite(const BilinearOp<Scalar>& op) {
  return BilinearOp<Scalar>::from_products(op.dim(), [&](Index i, Index j) { return Vector<Scalar>(op.product(j, i)); });
}

/// [x, y] = x*y - y*x.
template <typename Scalar>
BilinearOp<Scalar> commutator(const BilinearOp<Scalar>& op) {
  return op - opposite(op);
}

/// Left multiplication by a general element: L_u(v) = mu(u, v).
template <typename Scalar>
Matrix<Scalar> left_multiplication(const BilinearOp<Scalar>& op, const Vector<Scalar>& u) {
  detail::require(u.size() == op.dim(), "left_multiplication: dimension mismatch");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(op.dim(), op.dim());
  for (Index a = 0; a < op.dim(); ++a) {
    if (!detail::is_zero(u(a))) out += op.left_block(a) * u(a);
  }
  return out;
}

/// Bilinear tensor product on the lexicographic basis:
/// (x1 (x) x2, y1 (x) y2) -> mu1(x1, y1) (x) mu2(x2, y2).
template <typename Scalar>
BilinearOp<Scalar> tensor(const BilinearOp<Scalar>& mu1, const BilinearOp<Scalar>& mu2) {
  const Index d1 = mu1.dim();
  const Index d2 = mu2.dim();
  return BilinearOp<Scalar>::from_products(d1 * d2, [&](Index x, Index y) {
    return kronecker(Vector<Scalar>(mu1.product(x / d2, y / d2)), Vector<Scalar>(mu2.product(x % d2, y % d2)));
  });
}

/// Basis of the null space of m as the columns of the result (possibly zero
/// columns wide). Exact Gauss-Jordan elimination; requires a field.
template <typename Scalar>
Matrix<Scalar> kernel_basis(Matrix<Scalar> m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivot_cols;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && detail::is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    m.row(p).swap(m.row(r));
    const Scalar inv = Scalar(1) / m(r, c);
    m.row(r) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i != r && !detail::is_zero(m(i, c))) {
        const Scalar factor = m(i, c);
        m.row(i) -= m.row(r) * factor;
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

  Matrix<Scalar> basis(cols, cols - static_cast<Index>(pivot_cols.size()));
  Index out = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(cols);
    v(free) = Scalar(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) {
      v(pivot_cols[k]) = -m(static_cast<Index>(k), free);
    }
    basis.col(out++) = v;
  }
  return basis;
}

/// Basis of {v : f(v) = v}.
template <typename Scalar>
Matrix<Scalar> fixed_subspace(const LinearMap<Scalar>& f) {
  detail::require(f.rows() == f.cols(), "fixed_subspace: map must be square");
  return kernel_basis<Scalar>(f - identity_map<Scalar>(f.rows()));
}

}  // namespace hnp

#endif  // HNP_LINALG_HPP
