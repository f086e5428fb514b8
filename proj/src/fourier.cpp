#include "coxspec/fourier.hpp"

#include <cmath>
#include <numbers>

namespace coxspec {

RepSpectrum rep_fourier(const SimplexPoint& x, const ReflectionGroup& group) {
  if (x.size() != group.rank()) throw DimensionError("rep_fourier: simplex point does not match rank");
  const int k = group.rank();
  Matrix p_hat = Matrix::Zero(k, k);
  for (int j = 0; j < k; ++j) p_hat += x[j] * group.generator(j);
  // Sum of symmetric reflections; symmetrise away rounding.
  p_hat = 0.5 * (p_hat + p_hat.transpose()).eval();
  return {p_hat, eigvalsh(p_hat), characteristic_polynomial(p_hat)};
}

Vector characteristic_polynomial(const Matrix& a) {
  detail::require_square(a, "characteristic_polynomial");
  const auto n = a.rows();
  Vector c(n + 1);
  c(n) = 1.0;
  Matrix m = Matrix::Zero(n, n);
  const Matrix id = Matrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    m = a * m + c(n - k + 1) * id;
    c(n - k) = -(a * m).trace() / static_cast<double>(k);
  }
  return c;
}

Vector h3_characteristic_polynomial(double x, double y, double z) {
  const double phi = std::numbers::phi;
  const double q = 1.0 - 4.0 * x * y - 3.0 * x * z - (3.0 - phi) * y * z;
  Vector c(4);
  c << q + 2.0 * (2.0 - phi) * x * y * z, -q, -1.0, 1.0;
  return c;
}

double crosscheck_mu1(const SimplexPoint& x, const ReflectionGroup& group, const CayleyGraph& graph) {
  const RepSpectrum rep = rep_fourier(x, group);
  return std::abs(rep.roots(0) - lambda1(graph, x));
}

}  // namespace coxspec
