#include "coxspec/solids.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <numbers>
#include <set>
#include <sstream>
#include <mutex>
#include <thread>

namespace coxspec {

CoxeterModel CoxeterModel::build(const CoxeterDatum& datum) {
  ReflectionGroup group = generate_group(datum);
  CayleyGraph graph = cayley_graph(group);
  FundamentalDomain domain = fundamental_vectors(group);
  return {std::move(group), std::move(graph), std::move(domain)};
}

ClosedFormMinimum closed_form_minimum(const CoxeterDatum& datum) {
  if (datum.rank() != 3 || datum.orders(0, 1) != 2 || datum.orders(0, 2) != 3)
    throw DomainError("closed_form_minimum: needs a rank-3 datum with m12 = 2, m13 = 3");
  const double eta = 2.0 * std::cos(std::numbers::pi / datum.orders(1, 2));
  const double rho = 3.0 - eta * eta;
  Vector x(3);
  x << 3.0 + rho + eta, 3.0 + 3.0 * eta, 6.0 + 2.0 * eta;
  x /= 12.0 + rho + 6.0 * eta;
  const double lambda = (12.0 + 6.0 * eta - rho) / (12.0 + 6.0 * eta + rho);
  return {SimplexPoint(x), lambda};
}

namespace {

Vector exchange_direction(const SimplexPoint& x, int a, int b) {
  Vector xi = Vector::Zero(x.size());
  xi(a) = 1.0 / x.multiplicities()[a];
  xi(b) = -1.0 / x.multiplicities()[b];
  return xi;
}

// Shifted point; the simplex constraint is preserved by construction.
SimplexPoint shifted(const SimplexPoint& x, const Vector& direction, double t) {
  return SimplexPoint(x.weights() + t * direction, x.multiplicities());
}

}  // namespace

double directional_derivative(const CayleyGraph& graph, const SimplexPoint& x, int a, int b, double h) {
  const Vector xi = exchange_direction(x, a, b);
  return (lambda1(graph, shifted(x, xi, h)) - lambda1(graph, shifted(x, xi, -h))) / (2.0 * h);
}

double CriticalReport::max_identity_residual() const {
  double worst = 0;
  for (const auto& d : derivatives) worst = std::max(worst, d.identity_residual);
  return worst;
}

CriticalReport critical_certificate(const CoxeterModel& model, const SimplexPoint& x,
                                    const CertificateOptions& options) {
  if (!x.interior()) throw DomainError("critical_certificate: point must be interior");
  const auto op = build_operator(model.graph, x);
  const auto clusters = spectrum_clusters(op);
  if (clusters.size() < 3) throw DomainError("critical_certificate: spectrum has fewer than three clusters");
  const auto& c1 = clusters[1];
  const double gap = std::min(clusters[0].eigenvalue - c1.eigenvalue, c1.eigenvalue - clusters[2].eigenvalue);
  if (gap <= options.min_gap) {
    std::ostringstream os;
    os << "critical_certificate: lambda_1 cluster gap " << gap << " <= " << options.min_gap
       << "; multiplicity is not locally constant";
    throw DomainError(os.str());
  }

  const Embedding emb = spectral_representation(op, c1);
  CriticalReport r{x, c1.eigenvalue, c1.multiplicity, gap, {}, 0.0, edge_class_lengths(emb, model.graph),
                   0.0, false, false};

  const auto [lo, hi] = std::minmax_element(r.class_lengths.begin(), r.class_lengths.end());
  r.length_ratio = (*lo > 0) ? *hi / *lo : INFINITY;
  r.equilateral = r.length_ratio <= 1.0 + options.equilateral_tol;

  const int n = model.graph.vertex_count;
  const double k = c1.multiplicity;
  const Vector origin = emb.points.row(0).transpose();
  const int classes = x.size();
  const double h = std::min(options.fd_step, 0.25 * x.weights().minCoeff());
  for (int a = 0; a < classes; ++a)
    for (int b = a + 1; b < classes; ++b) {
      const double value = directional_derivative(model.graph, x, a, b, h);
      const double lhs = origin.dot(emb.points.row(model.graph.neighbor(0, a)).transpose()) -
                         origin.dot(emb.points.row(model.graph.neighbor(0, b)).transpose());
      r.derivatives.push_back({a, b, value, std::abs(lhs - k / n * value)});
      r.gradient_norm = std::max(r.gradient_norm, std::abs(value));
    }
  r.critical = r.gradient_norm <= options.gradient_tol;
  return r;
}

MinimizationReport minimize_lambda1(const CoxeterModel& model, const OptimizerOptions& options) {
  const auto closed = closed_form_minimum(model.group.datum());
  const auto& mult = model.multiplicities();
  const int classes = static_cast<int>(mult.size());
  Vector m(classes);
  for (int j = 0; j < classes; ++j) m(j) = mult[j];

  // Ambient gradient with the last component pinned to zero, projected onto
  // the tangent space {v : m . v = 0}.
  auto gradient = [&](const SimplexPoint& x) {
    const double h = std::min(options.fd_step, 0.25 * x.weights().minCoeff());
    Vector g = Vector::Zero(classes);
    for (int a = 0; a + 1 < classes; ++a)
      g(a) = mult[a] * directional_derivative(model.graph, x, a, classes - 1, h);
    return Vector(g - (m.dot(g) / m.squaredNorm()) * m);
  };

  SimplexPoint x = model.barycenter();
  double f = lambda1(model.graph, x);
  Vector g = gradient(x);
  double step = 1.0;
  int it = 0;
  for (;; ++it) {
    if (it >= options.max_iterations) {
      std::ostringstream os;
      os.precision(15);
      os << "minimize_lambda1: no convergence after " << it << " iterations; best iterate ("
         << x.weights().transpose() << ") with lambda_1 = " << f;
      throw ConvergenceError(os.str());
    }
    bool accepted = false;
    Vector delta;
    double f_new = f;
    SimplexPoint candidate = x;
    for (; step > 1e-20; step *= 0.5) {
      candidate = project_to_simplex(x.weights() - step * g, mult);
      delta = candidate.weights() - x.weights();
      if (delta.lpNorm<Eigen::Infinity>() < options.step_tolerance) break;
      f_new = lambda1(model.graph, candidate);
      if (f_new <= f + options.armijo * g.dot(delta)) {
        accepted = true;
        break;
      }
    }
    if (!accepted) break;

    const Vector g_new = gradient(candidate);
    const Vector dg = g_new - g;
    const double curvature = delta.dot(dg);
    // Barzilai-Borwein guess for the next trial step.
    step = curvature > 0 ? delta.squaredNorm() / curvature : 2.0 * step;
    x = candidate;
    f = f_new;
    g = g_new;
  }

  MinimizationReport report{closed, x, f, it, 0.0, 0.0, critical_certificate(model, closed.point)};
  report.point_deviation = (x.weights() - closed.point.weights()).lpNorm<Eigen::Infinity>();
  report.lambda_deviation = std::abs(f - closed.lambda);
  return report;
}

Curve parse_curve(const std::string& name) {
  if (name == "C1") return Curve::C1;
  if (name == "C2") return Curve::C2;
  if (name == "C3") return Curve::C3;
  throw UsageError("unknown curve '" + name + "' (expected C1, C2 or C3)");
}

std::string curve_name(Curve c) { return "C" + std::to_string(static_cast<int>(c) + 1); }

Vector curve_alpha(Curve c, double t) {
  if (!(t > 0) || !std::isfinite(t)) throw DomainError("curve parameter t must be positive and finite");
  Vector alpha = Vector::Constant(3, t);
  alpha(static_cast<int>(c)) = 1.0;
  return alpha;
}

SimplexPoint h3_curve_c2(double t) {
  if (!(t > 0)) throw DomainError("h3_curve_c2: t must be positive");
  const double phi = std::numbers::phi;
  Vector x(3);
  x << (5.0 - phi) * t + phi, 3.0 * phi * t * t + 3.0 * t, 6.0 * t + 2.0 * phi;
  return SimplexPoint(x / (3.0 * phi * t * t + (14.0 - phi) * t + 3.0 * phi));
}

CurveSample curve_point(const CoxeterModel& model, Curve curve, double t) {
  if (model.group.rank() != 3) throw DomainError("curve_point: rank-3 groups only");
  const auto psi = psi_maps(model.domain, fundamental_point(model.domain, curve_alpha(curve, t)));
  const auto op = build_operator(model.graph, psi.weights);
  const auto clusters = spectrum_clusters(op);
  const Embedding emb = spectral_representation(op, clusters.at(1));
  CurveSample s{curve, t, psi.weights, clusters[1].eigenvalue, edge_class_lengths(emb, model.graph), 0};
  const double longest = *std::max_element(s.class_lengths.begin(), s.class_lengths.end());
  s.distinct_points = distinct_points(emb.points, 1e-2 * longest);
  return s;
}

std::vector<int> vertex_configuration(const CayleyGraph& graph, const Matrix& points, double tol) {
  if (points.cols() != 3) throw DimensionError("vertex_configuration: points must be in R^3");
  const auto ids = point_clusters(points, tol);
  const int origin = ids[0];

  // Collapse every alternating cycle; keep genuine polygons through the origin.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> polygons;
  for (const auto& face : face_cycles(graph)) {
    std::vector<int> poly;
    for (int v : face.vertices)
      if (poly.empty() || poly.back() != ids[v]) poly.push_back(ids[v]);
    while (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
    if (poly.size() < 3 || std::find(poly.begin(), poly.end(), origin) == poly.end()) continue;
    std::vector<int> key = poly;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end()) continue;
    if (seen.insert(key).second) polygons.push_back(poly);
  }

  // Order faces around the origin vertex by the angle of their centroids in
  // the tangent plane.
  const Eigen::Vector3d q = points.row(0).transpose();
  const Eigen::Vector3d normal = q.normalized();
  Eigen::Vector3d u = normal.unitOrthogonal();
  const Eigen::Vector3d w = normal.cross(u);
  std::vector<std::pair<double, int>> around;
  for (const auto& poly : polygons) {
    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (int id : poly) {
      for (int v = 0; v < graph.vertex_count; ++v)
        if (ids[v] == id) {
          centroid += points.row(v).transpose();
          break;
        }
    }
    centroid /= static_cast<double>(poly.size());
    const Eigen::Vector3d d = centroid - q;
    around.emplace_back(std::atan2(d.dot(w), d.dot(u)), static_cast<int>(poly.size()));
  }
  std::sort(around.begin(), around.end());
  std::vector<int> sizes;
  for (const auto& [angle, size] : around) sizes.push_back(size);

  std::vector<int> best = sizes;
  for (int flip = 0; flip < 2; ++flip) {
    std::vector<int> s = sizes;
    if (flip) std::reverse(s.begin(), s.end());
    for (std::size_t r = 0; r < s.size(); ++r) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      best = std::min(best, s);
    }
  }
  return best;
}

std::string configuration_label(const std::vector<int>& configuration) {
  std::string out = "(";
  for (std::size_t i = 0; i < configuration.size(); ++i)
    out += (i ? "," : "") + std::to_string(configuration[i]);
  return out + ")";
}

BoundaryLimit boundary_limit(const CoxeterModel& model, const SimplexPoint& target, std::optional<Curve> curve) {
  const int k = model.group.rank();
  if (target.size() != k) throw DimensionError("boundary_limit: target does not match rank");
  int positive = 0;
  for (int j = 0; j < k; ++j) positive += target[j] > 0.0;
  if (positive == k) throw DomainError("boundary_limit: target must lie on the simplex boundary");

  constexpr int kSteps = 8;
  std::vector<Vector> alphas;
  if (positive == 1) {
    if (!curve)
      throw DomainError("boundary_limit: the limit at a simplex vertex depends on the approach; pass a curve");
    if (k != 3 || target[static_cast<int>(*curve)] <= 0.0)
      throw DomainError("boundary_limit: curve " + curve_name(*curve) + " does not end at this vertex");
    for (int n = 1; n <= kSteps; ++n) {
      const auto psi = psi_maps(model.domain, fundamental_point(model.domain, curve_alpha(*curve, std::ldexp(1.0, n))));
      alphas.push_back(psi_delta_inverse(model.domain, psi.weights).alpha);
    }
  } else {
    const Vector centre = model.barycenter().weights();
    for (int n = 1; n <= kSteps; ++n) {
      const double eps = std::ldexp(1.0, -n);
      const SimplexPoint xn((1.0 - eps) * target.weights() + eps * centre, target.multiplicities());
      alphas.push_back(psi_delta_inverse(model.domain, xn).alpha);
    }
  }

  // eps halves each step: linear extrapolation to eps = 0.
  Vector alpha = 2.0 * alphas[kSteps - 1] - alphas[kSteps - 2];
  alpha /= alpha.maxCoeff();
  BoundaryLimit out;
  out.support.resize(k);
  for (int j = 0; j < k; ++j) {
    out.support[j] = alpha(j) > 1e-2;
    if (!out.support[j]) alpha(j) = 0.0;
  }
  out.alpha = alpha;
  out.point = (model.domain.vectors * alpha).normalized();
  const Matrix orbit_points = orbit(model.group, out.point);
  out.distinct_vertices = distinct_points(orbit_points, 1e-6);
  if (k == 3) {
    out.configuration = vertex_configuration(model.graph, orbit_points, 1e-6);
    out.label = configuration_label(out.configuration);
  }
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("COXSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<SweepRow> sweep_lambda1(const CoxeterModel& model, int grid, int threads) {
  if (grid < 2) throw DomainError("sweep_lambda1: grid resolution must be >= 2");
  if (model.group.rank() != 3) throw DomainError("sweep_lambda1: rank-3 groups only");

  std::vector<Vector> points;
  const int g = grid + 1;
  for (int a = 1; a < g; ++a)
    for (int b = 1; a + b < g; ++b) {
      Vector x(3);
      x << a, b, g - a - b;
      points.push_back(x / g);
    }

  std::vector<std::optional<SweepRow>> rows(points.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < points.size();) {
      try {
        const SimplexPoint x(points[i], model.multiplicities());
        const auto op = build_operator(model.graph, x);
        const auto clusters = spectrum_clusters(op);
        const Embedding emb = spectral_representation(op, clusters.at(1));
        rows[i] = SweepRow{x, clusters[1].eigenvalue, clusters[1].multiplicity, edge_class_lengths(emb, model.graph)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int count = std::max(1, threads > 0 ? threads : default_thread_count());
  std::vector<std::jthread> pool;
  for (int t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  std::vector<SweepRow> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

}  // namespace coxspec
