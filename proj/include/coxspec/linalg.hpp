#pragma once

// Dense linear algebra helpers on top of Eigen: sorted symmetric
// eigendecompositions with a deterministic sign convention, Perron-Frobenius
// power iteration, the (k-1)-ary cross product and LU determinants.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "coxspec/errors.hpp"

namespace coxspec {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

template <typename Scalar>
struct EigenDecomposition {
  /// Sorted descending.
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvalues;
  /// Column i is the unit eigenvector for eigenvalues(i); its
  /// largest-magnitude entry is positive.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> eigenvectors;
};

template <typename Scalar>
struct PerronFrobenius {
  Scalar eigenvalue;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> eigenvector;  // positive, unit norm
  int iterations;
};

namespace detail {

template <typename Derived>
typename Derived::Scalar inf_norm(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return a.cwiseAbs().rowwise().sum().maxCoeff();
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream os;
    os << who << ": expected a non-empty square matrix, got " << a.rows() << "x" << a.cols();
    throw DimensionError(os.str());
  }
}

template <typename Derived>
void require_symmetric(const Eigen::MatrixBase<Derived>& a, const char* who) {
  require_square(a, who);
  if (!a.allFinite()) throw DomainError(std::string(who) + ": non-finite entry");
  using Scalar = typename Derived::Scalar;
  const Scalar tol = Scalar(1e-12) * std::max(Scalar(1), inf_norm(a));
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > tol)
    throw DimensionError(std::string(who) + ": matrix is not symmetric");
}

/// Flip `v` so that its largest-magnitude entry is positive. Entries within a
/// relative 1e-9 of the maximum count as ties and the first one wins.
template <typename Derived>
void fix_sign(Eigen::MatrixBase<Derived>&& v) {
  using Scalar = typename Derived::Scalar;
  const Scalar top = v.cwiseAbs().maxCoeff();
  if (top == Scalar(0)) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= top * (1 - Scalar(1e-9))) {
      if (v(i) < 0) v = -v;
      return;
    }
  }
}

}  // namespace detail

/// Full eigendecomposition of a symmetric matrix, eigenvalues descending.
template <typename Derived>
EigenDecomposition<typename Derived::Scalar> eigh_symmetric(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  detail::require_symmetric(a, "eigh_symmetric");

  Eigen::SelfAdjointEigenSolver<Dense> solver(a.eval());
  if (solver.info() != Eigen::Success) throw ConvergenceError("eigh_symmetric: solver failed");

  const Eigen::Index n = a.rows();
  EigenDecomposition<Scalar> out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index c = 0; c < n; ++c) detail::fix_sign(out.eigenvectors.col(c));
  return out;
}

/// Eigenvalues only, descending. Several times cheaper than eigh_symmetric.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> eigvalsh(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  detail::require_symmetric(a, "eigvalsh");
  Eigen::SelfAdjointEigenSolver<Dense> solver(a.eval(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("eigvalsh: solver failed");
  return solver.eigenvalues().reverse();
}

/// Power iteration for an entrywise positive matrix. Stops once
/// ||A v - L v|| <= tol * max(1, ||A||_inf).
template <typename Derived>
PerronFrobenius<typename Derived::Scalar> perron_frobenius(const Eigen::MatrixBase<Derived>& a,
                                                           typename Derived::Scalar tol = 1e-13,
                                                           int max_iterations = 100000) {
  using Scalar = typename Derived::Scalar;
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  detail::require_square(a, "perron_frobenius");
  if (!a.allFinite() || (a.array() <= Scalar(0)).any())
    throw DomainError("perron_frobenius: all entries must be finite and strictly positive");

  const Scalar scale = std::max(Scalar(1), detail::inf_norm(a));
  Vec v = Vec::Constant(a.rows(), Scalar(1) / std::sqrt(Scalar(a.rows())));
  Scalar value = 0;
  for (int it = 1; it <= max_iterations; ++it) {
    Vec w = a * v;
    value = v.dot(w);
    if ((w - value * v).norm() <= tol * scale) return {value, v, it};
    v = w / w.norm();
  }
  throw ConvergenceError("perron_frobenius: no convergence after " + std::to_string(max_iterations) +
                         " iterations");
}

/// Generalised cross product of the k-1 columns of `vectors` (a k x (k-1)
/// matrix): the unique w with <w, u> = det(v_1, ..., v_{k-1}, u) for all u.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> cross_product(
    const Eigen::MatrixBase<Derived>& vectors) {
  using Scalar = typename Derived::Scalar;
  using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index k = vectors.rows();
  if (k < 2 || vectors.cols() != k - 1) {
    std::ostringstream os;
    os << "cross_product: need k-1 vectors of dimension k >= 2, got " << vectors.cols()
       << " of dimension " << k;
    throw DimensionError(os.str());
  }
  // Laplace expansion along the last column u = e_i.
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w(k);
  Dense minor(k - 1, k - 1);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index r = 0, mr = 0; r < k; ++r) {
      if (r == i) continue;
      minor.row(mr++) = vectors.row(r);
    }
    const Scalar sign = ((i + 1 + k) % 2 == 0) ? Scalar(1) : Scalar(-1);
    w(i) = sign * (k == 2 ? minor(0, 0) : minor.partialPivLu().determinant());
  }
  return w;
}

/// Determinant by LU with partial pivoting; singular input gives 0.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& a) {
  detail::require_square(a, "det");
  using Dense = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return Dense(a).partialPivLu().determinant();
}

template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> solve(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  detail::require_square(a, "solve");
  if (b.rows() != a.rows()) throw DimensionError("solve: right-hand side has wrong row count");
  using Dense = Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  return Dense(a).partialPivLu().solve(Dense(b));
}

}  // namespace coxspec
