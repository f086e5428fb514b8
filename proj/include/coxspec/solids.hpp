#pragma once

// Minimisation of lambda_1 over the simplex, critical-point certificates, the
// curves of partially equilateral embeddings and their boundary limits.

#include <optional>
#include <string>
#include <vector>

#include "coxspec/coxeter.hpp"
#include "coxspec/coxmaps.hpp"
#include "coxspec/randwalk.hpp"
#include "coxspec/spectral.hpp"

namespace coxspec {

/// Group, Cayley graph and fundamental domain for one Coxeter datum.
struct CoxeterModel {
  ReflectionGroup group;
  CayleyGraph graph;
  FundamentalDomain domain;

  static CoxeterModel build(const CoxeterDatum& datum);
  const std::vector<int>& multiplicities() const { return graph.class_multiplicities; }
  SimplexPoint barycenter() const { return SimplexPoint::barycenter(multiplicities()); }
};

struct ClosedFormMinimum {
  SimplexPoint point;
  double lambda;
};

/// X0 = (3+rho+eta, 3+3eta, 6+2eta) / (12+rho+6eta),
/// lambda = (12+6eta-rho) / (12+6eta+rho), for the rank-3 family with
/// m12 = 2, m13 = 3, eta = 2 cos(pi/m23), rho = 3 - eta^2.
ClosedFormMinimum closed_form_minimum(const CoxeterDatum& datum);

/// Central difference of lambda_1 along xi = e_a/m_a - e_b/m_b.
double directional_derivative(const CayleyGraph& graph, const SimplexPoint& x, int a, int b, double h = 1e-6);

struct PairDerivative {
  int a;
  int b;
  double value;             // D lambda_1 [xi_ab]
  double identity_residual; // |<Phi(e),Phi(e s_a)> - <Phi(e),Phi(e s_b)> - (k/n) value|
};

struct CertificateOptions {
  double fd_step = 1e-6;
  double gradient_tol = 1e-6;
  double equilateral_tol = 1e-7;
  double min_gap = 1e-4;
};

struct CriticalReport {
  SimplexPoint point;
  double lambda;
  int multiplicity;
  double gap;  // distance of the lambda_1 cluster to its neighbours
  std::vector<PairDerivative> derivatives;
  double gradient_norm;  // max_ab |D lambda_1 [xi_ab]|
  std::vector<double> class_lengths;
  double length_ratio;   // max / min class length
  bool equilateral;
  bool critical;

  /// Equilateral iff critical.
  bool correspondence_holds() const { return equilateral == critical; }
  double max_identity_residual() const;
};

/// Throws DomainError when the lambda_1 cluster gap is <= options.min_gap.
CriticalReport critical_certificate(const CoxeterModel& model, const SimplexPoint& x,
                                    const CertificateOptions& options = {});

struct OptimizerOptions {
  double fd_step = 1e-6;
  int max_iterations = 10000;
  double armijo = 1e-4;
  double step_tolerance = 1e-13;
};

struct MinimizationReport {
  ClosedFormMinimum closed_form;
  SimplexPoint numeric_point;
  double numeric_lambda;
  int iterations;
  double point_deviation;   // ||X_numeric - X0||_inf
  double lambda_deviation;  // |lambda_numeric - lambda(X0)|
  CriticalReport certificate;  // at X0
};

/// Projected gradient descent with central-difference gradients and Armijo
/// backtracking, started at the barycenter, plus the closed-form minimiser.
/// Throws ConvergenceError (message carries the best iterate) on reaching
/// the iteration cap.
MinimizationReport minimize_lambda1(const CoxeterModel& model, const OptimizerOptions& options = {});

enum class Curve { C1, C2, C3 };

Curve parse_curve(const std::string& name);
std::string curve_name(Curve c);

/// alpha pattern of a curve: the two coefficients that stay equal are t, the
/// remaining one is 1 (C1: (1,t,t), C2: (t,1,t), C3: (t,t,1)).
Vector curve_alpha(Curve c, double t);

/// Closed-form C2 for H3:
/// ((5-phi)t + phi, 3phi t^2 + 3t, 6t + 2phi) / (3phi t^2 + (14-phi) t + 3phi).
SimplexPoint h3_curve_c2(double t);

struct CurveSample {
  Curve curve;
  double t;
  SimplexPoint point;
  double lambda;
  std::vector<double> class_lengths;  // measured on the spectral embedding
  int distinct_points;  // merged within 1e-2 of the longest class length
};

/// Throws DomainError for t <= 0 or rank != 3.
CurveSample curve_point(const CoxeterModel& model, Curve curve, double t);

struct BoundaryLimit {
  Vector alpha;                // extrapolated limit coefficients, max = 1
  std::vector<bool> support;   // which coefficients survive
  Vector point;                // unit limit point in the fundamental domain
  int distinct_vertices;       // size of the deduplicated orbit
  std::vector<int> configuration;  // vertex configuration of the limit solid
  std::string label;           // e.g. "(5,6,6)"
};

/// Limit of Psi_Delta^{-1} as X tends to a boundary point. Edge-interior
/// targets are approached on the straight line from the barycenter
/// (eps_n = 2^-n, n = 1..8); vertex targets need the curve reaching them.
/// Coefficients are extrapolated linearly in eps.
BoundaryLimit boundary_limit(const CoxeterModel& model, const SimplexPoint& target,
                             std::optional<Curve> curve = std::nullopt);

/// Vertex configuration of the polytope spanned by `points` (rows indexed by
/// group element), using the alternating face cycles collapsed under
/// merging of coincident points. Canonical (lexicographically least rotation
/// or reflection). Rank 3 only.
std::vector<int> vertex_configuration(const CayleyGraph& graph, const Matrix& points, double tol);
std::string configuration_label(const std::vector<int>& configuration);

struct SweepRow {
  SimplexPoint point;
  double lambda;
  int multiplicity;
  std::vector<double> class_lengths;
};

/// Interior lattice points (a, b, c) / (g + 1) with a, b, c >= 1, in
/// lexicographic order; g = 2 gives the barycenter only. Rank 3 only.
/// Evaluated on `threads` workers (0 = COXSPEC_THREADS or hardware count).
std::vector<SweepRow> sweep_lambda1(const CoxeterModel& model, int grid, int threads = 0);

/// Worker count from COXSPEC_THREADS, falling back to the hardware count.
int default_thread_count();

}  // namespace coxspec
