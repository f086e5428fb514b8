#include "coxspec/verify.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "coxspec/fourier.hpp"
#include "coxspec/mesh_io.hpp"
#include "coxspec/solids.hpp"

namespace coxspec {

namespace {

using Checks = std::vector<CheckResult>;

// measured <= tolerance
void at_most(Checks& out, std::string id, double measured, double tol) {
  out.push_back({std::move(id), measured, tol, std::isfinite(measured) && measured <= tol});
}

// measured == expected (integer-valued quantities)
void equals(Checks& out, std::string id, double measured, double expected) {
  out.push_back({std::move(id), measured, 0.0, measured == expected});
}

void flag(Checks& out, std::string id, bool ok) { out.push_back({std::move(id), ok ? 1.0 : 0.0, 0.0, ok}); }

const std::vector<std::string> kGroups{"A3", "B3", "H3"};

double eta_of(const std::string& g) {
  if (g == "A3") return 1.0;
  if (g == "B3") return std::numbers::sqrt2;
  return std::numbers::phi;
}

Embedding lambda1_embedding(const CoxeterModel& model, const SimplexPoint& x) {
  const auto op = build_operator(model.graph, x);
  return spectral_representation(op, spectrum_clusters(op).at(1));
}

void closed_forms(Checks& out) {
  for (const auto& g : kGroups) {
    const auto model = CoxeterModel::build(CoxeterDatum::from_name(g));
    const auto report = minimize_lambda1(model);
    const double eta = eta_of(g), rho = 3.0 - eta * eta;
    const double lambda_star = (12 + 6 * eta - rho) / (12 + 6 * eta + rho);
    at_most(out, g + ".min.lambda", std::abs(report.numeric_lambda - lambda_star), 1e-9);
    at_most(out, g + ".min.point", report.point_deviation, 1e-6);

    const auto op = build_operator(model.graph, model.barycenter());
    const auto clusters = spectrum_clusters(op);
    at_most(out, g + ".barycenter.lambda1", std::abs(clusters.at(1).eigenvalue - (1 + std::sqrt(4 - rho)) / 3), 1e-9);
    equals(out, g + ".barycenter.multiplicity", clusters.at(1).multiplicity, 3);
  }
}

void invariants(Checks& out) {
  const int orders[] = {24, 48, 120};
  for (std::size_t i = 0; i < kGroups.size(); ++i) {
    const auto& g = kGroups[i];
    const auto model = CoxeterModel::build(CoxeterDatum::from_name(g));
    equals(out, g + ".order", model.group.order(), orders[i]);
    equals(out, g + ".edges", model.graph.edge_count, 3 * orders[i] / 2);

    const SimplexPoint x(Vector::Constant(3, 1.0 / 3.0));
    const auto op = build_operator(model.graph, SimplexPoint((Vector(3) << 0.2, 0.3, 0.5).finished()));
    const Vector ev = eigvalsh(op.matrix);
    at_most(out, g + ".bipartite_symmetry", (ev + ev.reverse()).cwiseAbs().maxCoeff(), 1e-9);

    const Matrix orb = orbit(model.group, psi_delta_inverse(model.domain, x).point);
    double norm_err = 0;
    for (int c = 0; c < 3; ++c) norm_err = std::max(norm_err, std::abs(orb.col(c).squaredNorm() - orders[i] / 3.0));
    at_most(out, g + ".orbit_coordinate_norms", norm_err, 1e-8);

    const Embedding emb = lambda1_embedding(model, x);
    at_most(out, g + ".gram_invariance", gram_invariance_check(emb, model.group), 1e-8);

    const MeshDocument mesh = make_mesh(model, emb, x);
    bool partition = true;
    try {
      validate_mesh(mesh);
    } catch (const Error&) {
      partition = false;
    }
    flag(out, g + ".faces_partition_edges", partition);
    equals(out, g + ".euler", mesh.euler_characteristic(), 2);
    std::istringstream in(format_off(mesh));
    const MeshDocument back = parse_off(in);
    bool exact = back.vertices.size() == mesh.vertices.size() && back.faces == mesh.faces;
    for (std::size_t v = 0; exact && v < mesh.vertices.size(); ++v) exact = back.vertices[v] == mesh.vertices[v];
    flag(out, g + ".off_roundtrip", exact);
  }
  const auto h3 = CoxeterModel::build(CoxeterDatum::H3());
  const auto census = MeshDocument{{}, [&] {
                                     std::vector<std::vector<int>> f;
                                     for (const auto& face : face_cycles(h3.graph)) f.push_back(face.vertices);
                                     return f;
                                   }(), {}}.face_census();
  equals(out, "H3.faces.4", census.count(4) ? census.at(4) : 0, 30);
  equals(out, "H3.faces.6", census.count(6) ? census.at(6) : 0, 20);
  equals(out, "H3.faces.10", census.count(10) ? census.at(10) : 0, 12);
}

void critical_points(Checks& out) {
  for (const auto& g : kGroups) {
    const auto model = CoxeterModel::build(CoxeterDatum::from_name(g));
    const auto x0 = closed_form_minimum(model.group.datum()).point;
    const auto at_x0 = critical_certificate(model, x0);
    at_most(out, g + ".X0.gradient", at_x0.gradient_norm, 1e-6);
    at_most(out, g + ".X0.length_ratio", at_x0.length_ratio - 1.0, 1e-7);
    flag(out, g + ".X0.critical_and_equilateral", at_x0.critical && at_x0.equilateral);
    at_most(out, g + ".X0.derivative_identity", at_x0.max_identity_residual(), 1e-5);

    const auto at_bary = critical_certificate(model, model.barycenter());
    out.push_back({g + ".barycenter.gradient", at_bary.gradient_norm, 1e-3, at_bary.gradient_norm > 1e-3});
    flag(out, g + ".barycenter.neither", !at_bary.critical && !at_bary.equilateral);
    at_most(out, g + ".barycenter.derivative_identity", at_bary.max_identity_residual(), 1e-5);
  }
}

void curves(Checks& out) {
  const auto model = CoxeterModel::build(CoxeterDatum::H3());
  for (double t : {0.1, 1.0, 10.0}) {
    const auto sample = curve_point(model, Curve::C2, t);
    const Vector diff = sample.point.weights() - h3_curve_c2(t).weights();
    at_most(out, "H3.C2.closed_form.t=" + std::to_string(t), diff.cwiseAbs().maxCoeff(), 1e-9);
  }
  const auto far = curve_point(model, Curve::C2, 1e3);
  const double others = std::min(far.class_lengths[0], far.class_lengths[2]);
  at_most(out, "H3.C2.beta_ratio.t=1000", far.class_lengths[1] / others, 1e-2);

  // C2 starts at (1/3, 0, 2/3) as t -> 0.
  const auto start = boundary_limit(model, SimplexPoint((Vector(3) << 1.0 / 3.0, 0.0, 2.0 / 3.0).finished()));
  equals(out, "H3.C2.limit.t->0.vertices", start.distinct_vertices, 20);
  Vector e2 = Vector::Zero(3);
  e2(1) = 1.0;
  const auto end = boundary_limit(model, SimplexPoint(e2), Curve::C2);
  equals(out, "H3.C2.limit.t->inf.vertices", end.distinct_vertices, 60);

  const int expected[] = {12, 20, 30};
  for (int j = 0; j < 3; ++j) {
    Vector target = Vector::Constant(3, 0.5);
    target(j) = 0.0;
    const auto lim = boundary_limit(model, SimplexPoint(target));
    equals(out, "H3.edge_limit.x" + std::to_string(j + 1) + "=0.vertices", lim.distinct_vertices, expected[j]);
  }

  const Vector centre = model.barycenter().weights();
  for (int j = 0; j < 3; ++j) {
    Vector target = Vector::Constant(3, 0.5);
    target(j) = 0.0;
    const double eps = 1e-4;
    // Rescale so that the distance of the point to the face x_j = 0 is eps.
    const double s = eps / centre(j);
    const double lam = lambda1(model.graph, SimplexPoint((1 - s) * target + s * centre));
    out.push_back({"H3.near_boundary.x" + std::to_string(j + 1), lam, 0.999, lam > 0.999});
  }
}

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::to_json() const {
  nlohmann::json doc;
  doc["suite"] = suite;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    doc["checks"].push_back(
        {{"id", c.id}, {"measured", c.measured}, {"tolerance", c.tolerance}, {"verdict", c.pass ? "pass" : "fail"}});
  return doc.dump(2);
}

std::vector<std::string> suite_names() { return {"closed_forms", "invariants", "theorem2", "curves", "all"}; }

VerifyReport run_suite(const std::string& name) {
  VerifyReport report{name, {}};
  const bool all = name == "all";
  bool known = all;
  auto run = [&](const char* suite, void (*fn)(Checks&)) {
    if (all || name == suite) {
      known = true;
      fn(report.checks);
    }
  };
  run("closed_forms", closed_forms);
  run("invariants", invariants);
  run("theorem2", critical_points);
  run("curves", curves);
  if (!known) throw UsageError("unknown verify suite '" + name + "'");
  return report;
}

}  // namespace coxspec
