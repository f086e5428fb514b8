#pragma once

// Fundamental-domain vectors p_j of a reflection group and the maps between
// the spherical fundamental domain and the simplex of transition weights.
//
// For p = sum_j alpha_j p_j with all alpha_j > 0 there is a unique simplex
// point X and eigenvalue lambda with  lambda p = sum_j x_j sigma_j(p);  the
// orbit functions g -> (g p)_r are then lambda-eigenfunctions of P_X. The
// forward map is explicit, the inverse is a Perron-Frobenius problem.

#include <vector>

#include "coxspec/coxeter.hpp"
#include "coxspec/randwalk.hpp"

namespace coxspec {

struct FundamentalDomain {
  Matrix roots;                     // columns n_j
  std::vector<Matrix> reflections;  // sigma_j
  Matrix vectors;                   // columns p_j, <n_i, p_j> = V delta_ij
  double volume = 0;                // V = det(n_1, ..., n_k) > 0
  Matrix gram;                      // M
  Matrix gram_inverse;              // M^{-1}, entrywise positive

  int rank() const { return static_cast<int>(roots.cols()); }
};

/// p_j = (-1)^(k-j) x (n_1, ..., n_{j-1}, n_{j+1}, ..., n_k) (1-based j),
/// which is the usual alternating sign (-1)^(j-1) for odd k.
/// Throws DomainError if V <= 0.
FundamentalDomain fundamental_vectors(const ReflectionGroup& group);

/// Closed form of M^{-1} for the rank-3 Gram matrix
/// [[1, 0, -1/2], [0, 1, -eta/2], [-1/2, -eta/2, 1]], rho = 3 - eta^2.
Matrix rank3_gram_inverse(double eta);

struct FundamentalPoint {
  Vector alpha;  // all > 0
  Vector point;  // sum_j alpha_j p_j, unit length
};

/// Point with coefficients proportional to `alpha`, rescaled onto the unit
/// sphere. Throws DomainError unless every alpha_j > 0.
FundamentalPoint fundamental_point(const FundamentalDomain& domain, const Vector& alpha);

struct PsiValues {
  SimplexPoint weights;
  double lambda;
  /// || lambda p - sum_j x_j sigma_j(p) ||
  double relation_residual;
};

/// Forward maps: x' = V diag(alpha)^{-1} M^{-1} alpha, lambda' = sum x' - 2V,
/// then X = x' / sum x', lambda = lambda' / sum x'. Throws InvarianceError if
/// the eigen-relation residual exceeds 1e-10.
PsiValues psi_maps(const FundamentalDomain& domain, const FundamentalPoint& point);

/// Unique preimage of an interior X: alpha is the Perron-Frobenius vector of
/// V diag(1/x) M^{-1}. Throws DomainError for boundary points.
FundamentalPoint psi_delta_inverse(const FundamentalDomain& domain, const SimplexPoint& x);

/// Psi_lambda o Psi_Delta^{-1}(X) = 1 - 2V / Lambda, with Lambda the
/// Perron-Frobenius eigenvalue of V diag(1/x) M^{-1}.
double psi_lambda(const FundamentalDomain& domain, const SimplexPoint& x);

/// ||p - sigma_j(p)|| = 2 alpha_j V for each j.
Vector edge_lengths_closed_form(const FundamentalDomain& domain, const FundamentalPoint& point);

/// Rows are g p for every group element g, in group order.
Matrix orbit(const ReflectionGroup& group, const Vector& point);

}  // namespace coxspec
