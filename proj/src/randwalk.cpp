#include "coxspec/randwalk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace coxspec {

SimplexPoint::SimplexPoint(Vector weights, std::vector<int> multiplicities)
    : weights_(std::move(weights)), multiplicities_(std::move(multiplicities)) {
  if (weights_.size() == 0 || static_cast<std::size_t>(weights_.size()) != multiplicities_.size())
    throw SimplexError("SimplexPoint: weights and multiplicities must be non-empty and of equal length");
  double total = 0;
  for (int j = 0; j < size(); ++j) {
    if (multiplicities_[j] <= 0) throw SimplexError("SimplexPoint: multiplicities must be positive");
    const double x = weights_(j);
    if (!std::isfinite(x) || x < -kTolerance || x > 1.0 + kTolerance) {
      std::ostringstream os;
      os << "SimplexPoint: weight " << j << " = " << x << " outside [0, 1]";
      throw SimplexError(os.str());
    }
    total += multiplicities_[j] * x;
  }
  if (std::abs(total - 1.0) > kTolerance) {
    std::ostringstream os;
    os.precision(17);
    os << "SimplexPoint: sum_j m_j x_j = " << total << " != 1";
    throw SimplexError(os.str());
  }
  weights_ = weights_.cwiseMax(0.0);
}

SimplexPoint::SimplexPoint(Vector weights)
    : SimplexPoint(weights, std::vector<int>(static_cast<std::size_t>(weights.size()), 1)) {}

SimplexPoint SimplexPoint::barycenter(const std::vector<int>& multiplicities) {
  const auto n = static_cast<Eigen::Index>(multiplicities.size());
  Vector w(n);
  for (Eigen::Index j = 0; j < n; ++j) w(j) = 1.0 / (static_cast<double>(n) * multiplicities[j]);
  return SimplexPoint(w, multiplicities);
}

TransitionOperator build_operator(const CayleyGraph& graph, const SimplexPoint& x) {
  if (x.size() != graph.class_count())
    throw SimplexError("build_operator: simplex point has " + std::to_string(x.size()) +
                       " weights but the graph has " + std::to_string(graph.class_count()) +
                       " edge classes");
  const int n = graph.vertex_count;
  Matrix p = Matrix::Zero(n, n);
  for (int v = 0; v < n; ++v)
    for (const auto& nb : graph.adjacency[v]) p(v, nb.vertex) = x[nb.label];
  return {x, std::move(p)};
}

SimplexPoint project_to_simplex(const Vector& raw, const std::vector<int>& multiplicities) {
  const auto n = raw.size();
  if (n == 0 || static_cast<std::size_t>(n) != multiplicities.size())
    throw DimensionError("project_to_simplex: size mismatch");
  for (int m : multiplicities)
    if (m <= 0) throw SimplexError("project_to_simplex: multiplicities must be positive");

  // KKT: x_j = max(0, r_j - tau m_j). Components enter the support in order
  // of decreasing r_j / m_j; find the largest support with consistent tau.
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    return raw(a) / multiplicities[a] > raw(b) / multiplicities[b];
  });
  double num = -1.0, den = 0.0, tau = 0.0;
  for (Eigen::Index s = 0; s < n; ++s) {
    const auto j = order[s];
    const double m = multiplicities[j];
    const double cand = (num + m * raw(j)) / (den + m * m);
    if (raw(j) - cand * m <= 0.0 && s > 0) break;
    num += m * raw(j);
    den += m * m;
    tau = cand;
  }
  Vector x(n);
  for (Eigen::Index j = 0; j < n; ++j) x(j) = std::max(0.0, raw(j) - tau * multiplicities[j]);

  // Clean rounding so the constraint holds to machine precision.
  double total = 0;
  for (Eigen::Index j = 0; j < n; ++j) total += multiplicities[j] * x(j);
  x /= total;
  return SimplexPoint(x, multiplicities);
}

double lambda1(const CayleyGraph& graph, const SimplexPoint& x) {
  const Vector values = eigvalsh(build_operator(graph, x).matrix);
  return values(1);
}

}  // namespace coxspec
