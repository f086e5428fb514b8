// coxspec: command-line front end for the Coxeter spectral toolkit.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "coxspec/fourier.hpp"
#include "coxspec/mesh_io.hpp"
#include "coxspec/solids.hpp"
#include "coxspec/verify.hpp"

using namespace coxspec;

namespace {

constexpr int kUsageExit = 2;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string join(const Vector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) out += (i ? "," : "") + num(v(i));
  return out;
}

std::string join(const std::vector<double>& v) {
  return join(Vector(Eigen::Map<const Vector>(v.data(), static_cast<Eigen::Index>(v.size()))));
}

struct PointArgs {
  std::optional<double> x, y, z;
  std::string point;

  void attach(CLI::App* cmd) {
    cmd->add_option("--x", x, "weight of edge class 1");
    cmd->add_option("--y", y, "weight of edge class 2");
    cmd->add_option("--z", z, "weight of edge class 3");
    cmd->add_option("--point", point, "weights as x,y,z");
  }

  SimplexPoint resolve(const CoxeterModel& model) const {
    const bool any_xyz = x || y || z;
    if (any_xyz && !point.empty()) throw UsageError("use either --x/--y/--z or --point, not both");
    if (!any_xyz && point.empty()) return model.barycenter();
    std::vector<double> w;
    if (any_xyz) {
      if (!(x && y && z)) throw UsageError("--x, --y and --z must be given together");
      w = {*x, *y, *z};
    } else {
      std::stringstream ss(point);
      for (std::string item; std::getline(ss, item, ',');) {
        try {
          std::size_t used = 0;
          w.push_back(std::stod(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::logic_error&) {
          throw UsageError("--point: cannot parse '" + item + "'");
        }
      }
    }
    if (static_cast<int>(w.size()) != model.group.rank())
      throw UsageError("point needs " + std::to_string(model.group.rank()) + " weights");
    return SimplexPoint(Eigen::Map<Vector>(w.data(), static_cast<Eigen::Index>(w.size())), model.multiplicities());
  }
};

CoxeterModel load(const std::string& name) { return CoxeterModel::build(CoxeterDatum::from_name(name)); }

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open file for writing", path);
  return out;
}

int cmd_group(const std::string& name) {
  const auto model = load(name);
  const auto census = [&] {
    std::map<int, int> c;
    for (const auto& f : face_cycles(model.graph)) ++c[static_cast<int>(f.vertices.size())];
    return c;
  }();
  std::cout << "group " << model.group.datum().name << "\n"
            << "rank " << model.group.rank() << "\n"
            << "order " << model.group.order() << "\n"
            << "cayley_edges " << model.graph.edge_count << "\n"
            << "edge_classes " << model.graph.class_count() << "\n"
            << "volume " << num(model.domain.volume) << "\n";
  for (const auto& [size, count] : census) std::cout << "faces " << size << "-gon " << count << "\n";
  return 0;
}

int cmd_spectrum(const std::string& name, const PointArgs& args) {
  const auto model = load(name);
  const auto x = args.resolve(model);
  const auto op = build_operator(model.graph, x);
  std::cout << "point " << join(x.weights()) << "\n";
  std::cout << "eigenvalue,multiplicity\n";
  for (const auto& c : spectrum_clusters(op)) std::cout << num(c.eigenvalue) << "," << c.multiplicity << "\n";
  if (model.group.rank() == 3)
    std::cout << "fourier_mu1_deviation " << num(crosscheck_mu1(x, model.group, model.graph)) << "\n";
  return 0;
}

int cmd_embed(const std::string& name, const PointArgs& args, const std::string& which, const std::string& out,
              const std::string& format) {
  const auto model = load(name);
  const auto x = args.resolve(model);
  const auto op = build_operator(model.graph, x);
  const auto clusters = spectrum_clusters(op);
  std::size_t index = 1;
  if (which != "second") {
    try {
      std::size_t used = 0;
      index = std::stoul(which, &used);
      if (used != which.size()) throw std::invalid_argument(which);
    } catch (const std::logic_error&) {
      throw UsageError("--eigenvalue must be 'second' or a cluster index");
    }
  }
  if (index >= clusters.size())
    throw UsageError("--eigenvalue: only " + std::to_string(clusters.size()) + " distinct eigenvalues");
  const Embedding emb = spectral_representation(op, clusters[index]);
  if (emb.dimension() != 3)
    throw DimensionError("eigenvalue " + num(emb.eigenvalue) + " has multiplicity " +
                         std::to_string(emb.dimension()) + "; a mesh needs multiplicity 3");
  const MeshDocument mesh = make_mesh(model, emb, x);
  validate_mesh(mesh);
  const std::size_t bytes = format == "obj" ? export_obj(mesh, out) : export_off(mesh, out);
  std::cout << "eigenvalue " << num(emb.eigenvalue) << "\n"
            << "vertices " << mesh.vertices.size() << " faces " << mesh.faces.size() << " edges "
            << mesh.edge_count() << "\n"
            << "distinct_points " << distinct_points(emb.points, 1e-6 * emb.radius()) << "\n"
            << "class_lengths " << join(mesh.metadata.class_lengths) << "\n"
            << "wrote " << bytes << " bytes to " << out << "\n";
  return 0;
}

int cmd_minimize(const std::string& name) {
  const auto model = load(name);
  const auto r = minimize_lambda1(model);
  std::cout << "closed_form_point " << join(r.closed_form.point.weights()) << "\n"
            << "closed_form_lambda1 " << num(r.closed_form.lambda) << "\n"
            << "numeric_point " << join(r.numeric_point.weights()) << "\n"
            << "numeric_lambda1 " << num(r.numeric_lambda) << "\n"
            << "iterations " << r.iterations << "\n"
            << "point_deviation " << num(r.point_deviation) << "\n"
            << "lambda_deviation " << num(r.lambda_deviation) << "\n"
            << "gradient_norm " << num(r.certificate.gradient_norm) << "\n"
            << "equilateral " << (r.certificate.equilateral ? "yes" : "no") << "\n";
  return 0;
}

int cmd_curve(const std::string& name, const std::string& curve_arg, double t_min, double t_max, int samples,
              const std::string& out) {
  if (!(t_min > 0) || !(t_max >= t_min)) throw UsageError("need 0 < --t-min <= --t-max");
  if (samples < 1) throw UsageError("--samples must be positive");
  const Curve curve = parse_curve(curve_arg);
  const auto model = load(name);
  auto file = open_out(out);
  file << "t,x,y,z,lambda1,len1,len2,len3,distinct\n";
  for (int i = 0; i < samples; ++i) {
    const double f = samples == 1 ? 0.0 : static_cast<double>(i) / (samples - 1);
    const double t = t_min * std::pow(t_max / t_min, f);
    const auto s = curve_point(model, curve, t);
    file << num(t) << "," << join(s.point.weights()) << "," << num(s.lambda) << "," << join(s.class_lengths) << ","
         << s.distinct_points << "\n";
  }
  std::cout << "wrote " << samples << " samples of " << curve_name(curve) << " to " << out << "\n";
  return 0;
}

int cmd_sweep(const std::string& name, int grid, int threads, const std::string& out) {
  const auto model = load(name);
  const auto rows = sweep_lambda1(model, grid, threads);
  auto file = open_out(out);
  file << "x,y,z,lambda1,mult,len1,len2,len3\n";
  for (const auto& r : rows)
    file << join(r.point.weights()) << "," << num(r.lambda) << "," << r.multiplicity << ","
         << join(r.class_lengths) << "\n";
  std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& out) {
  const auto report = run_suite(suite);
  if (out.empty()) {
    std::cout << report.to_json() << "\n";
  } else {
    open_out(out) << report.to_json() << "\n";
  }
  int failed = 0;
  for (const auto& c : report.checks) failed += !c.pass;
  std::cerr << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of invariant random walks on rank-3 Coxeter groups"};
  app.require_subcommand(1);

  std::string group = "H3";
  PointArgs point;
  const std::vector<std::string> groups{"A3", "B3", "H3"};
  auto add_group = [&](CLI::App* cmd) {
    cmd->add_option("--group", group, "Coxeter group")->check(CLI::IsMember(groups));
  };

  auto* group_cmd = app.add_subcommand("group", "build the group and print its structure");
  add_group(group_cmd);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of P_X with multiplicities");
  add_group(spectrum_cmd);
  point.attach(spectrum_cmd);

  std::string eigenvalue = "second", out, format = "off";
  auto* embed_cmd = app.add_subcommand("embed", "export the spectral embedding as a mesh");
  add_group(embed_cmd);
  point.attach(embed_cmd);
  embed_cmd->add_option("--eigenvalue", eigenvalue, "'second' or a cluster index (0 = top)");
  embed_cmd->add_option("--out", out, "output file")->required();
  embed_cmd->add_option("--format", format, "off or obj")->check(CLI::IsMember({"off", "obj"}));

  auto* minimize_cmd = app.add_subcommand("minimize", "minimise lambda_1 over the simplex");
  add_group(minimize_cmd);

  std::string curve = "C2";
  double t_min = 1e-2, t_max = 1e2;
  int samples = 41;
  auto* curve_cmd = app.add_subcommand("curve", "sample a curve of partially equilateral points");
  add_group(curve_cmd);
  curve_cmd->add_option("--curve", curve, "C1, C2 or C3");
  curve_cmd->add_option("--t-min", t_min, "smallest parameter");
  curve_cmd->add_option("--t-max", t_max, "largest parameter");
  curve_cmd->add_option("--samples", samples, "log-spaced samples");
  curve_cmd->add_option("--out", out, "CSV output")->required();

  int grid = 20, threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "lambda_1 over an interior simplex lattice");
  add_group(sweep_cmd);
  sweep_cmd->add_option("--grid", grid, "lattice resolution");
  sweep_cmd->add_option("--threads", threads, "worker threads (0 = automatic)");
  sweep_cmd->add_option("--out", out, "CSV output")->required();

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run a self-check suite");
  verify_cmd->add_option("--suite", suite, "closed_forms, invariants, theorem2, curves or all");
  verify_cmd->add_option("--out", out, "JSON report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }

  try {
    if (*group_cmd) return cmd_group(group);
    if (*spectrum_cmd) return cmd_spectrum(group, point);
    if (*embed_cmd) return cmd_embed(group, point, eigenvalue, out, format);
    if (*minimize_cmd) return cmd_minimize(group);
    if (*curve_cmd) return cmd_curve(group, curve, t_min, t_max, samples, out);
    if (*sweep_cmd) return cmd_sweep(group, grid, threads, out);
    if (*verify_cmd) return cmd_verify(suite, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << " (" << e.path() << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
