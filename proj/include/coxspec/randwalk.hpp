#pragma once

// Invariant transition probabilities on a Cayley graph and the operator P_X.

#include <vector>

#include "coxspec/coxeter.hpp"
#include "coxspec/linalg.hpp"

namespace coxspec {

/// One weight per edge class with sum_j m_j x_j = 1 and x_j in [0, 1].
class SimplexPoint {
public:
  static constexpr double kTolerance = 1e-12;

  /// Throws SimplexError if the weights violate the simplex constraints.
  SimplexPoint(Vector weights, std::vector<int> multiplicities);
  /// All multiplicities equal to one.
  explicit SimplexPoint(Vector weights);

  /// x_j = 1 / (N m_j).
  static SimplexPoint barycenter(const std::vector<int>& multiplicities);

  const Vector& weights() const { return weights_; }
  const std::vector<int>& multiplicities() const { return multiplicities_; }
  double operator[](int j) const { return weights_(j); }
  int size() const { return static_cast<int>(weights_.size()); }
  bool interior() const { return (weights_.array() > 0.0).all(); }

private:
  Vector weights_;
  std::vector<int> multiplicities_;
};

/// Symmetric stochastic matrix with zero diagonal, P(v, w) = x_label(v,w).
struct TransitionOperator {
  SimplexPoint point;
  Matrix matrix;
};

TransitionOperator build_operator(const CayleyGraph& graph, const SimplexPoint& x);

/// Euclidean projection of `raw` onto {x >= 0, sum_j m_j x_j = 1}.
SimplexPoint project_to_simplex(const Vector& raw, const std::vector<int>& multiplicities);

/// Second highest eigenvalue of P_X counted with multiplicity (eigenvalues only).
double lambda1(const CayleyGraph& graph, const SimplexPoint& x);

}  // namespace coxspec
