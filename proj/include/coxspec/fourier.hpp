#pragma once

// Spectrum of P_X through the Fourier transform at the geometric
// representation: p_hat = sum_j x_j sigma_j. Every eigenvalue of p_hat is an
// eigenvalue of P_X with multiplicity at least the rank.

#include "coxspec/coxeter.hpp"
#include "coxspec/randwalk.hpp"

namespace coxspec {

struct RepSpectrum {
  Matrix transform;  // p_hat, symmetric k x k
  Vector roots;      // eigenvalues of p_hat, descending
  /// Monic characteristic polynomial det(t I - p_hat), lowest degree first:
  /// coefficients(0) + coefficients(1) t + ... + t^k.
  Vector coefficients;
};

RepSpectrum rep_fourier(const SimplexPoint& x, const ReflectionGroup& group);

/// Characteristic polynomial coefficients (lowest degree first, monic) by the
/// Faddeev-LeVerrier recursion.
Vector characteristic_polynomial(const Matrix& a);

/// t^3 - t^2 - q t + q + 2 (2 - phi) x y z with
/// q = 1 - 4xy - 3xz - (3 - phi) yz, the closed form for H3.
Vector h3_characteristic_polynomial(double x, double y, double z);

/// |mu_1(X) - lambda_1(P_X)|, lambda_1 from the full n x n eigensolver.
double crosscheck_mu1(const SimplexPoint& x, const ReflectionGroup& group, const CayleyGraph& graph);

}  // namespace coxspec
