#include "coxspec/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <utility>

namespace coxspec {

namespace {

std::set<std::pair<int, int>> edges_of(const MeshDocument& mesh) {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : mesh.faces)
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      edges.emplace(std::min(a, b), std::max(a, b));
    }
  return edges;
}

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

std::size_t write_file(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open file for writing", path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("write failed", path.string());
  return text.size();
}

}  // namespace

int MeshDocument::edge_count() const { return static_cast<int>(edges_of(*this).size()); }

int MeshDocument::euler_characteristic() const {
  return static_cast<int>(vertices.size()) - edge_count() + static_cast<int>(faces.size());
}

std::map<int, int> MeshDocument::face_census() const {
  std::map<int, int> census;
  for (const auto& f : faces) ++census[static_cast<int>(f.size())];
  return census;
}

MeshDocument make_mesh(const CoxeterModel& model, const Embedding& emb, const SimplexPoint& x) {
  if (emb.dimension() != 3) throw DimensionError("make_mesh: embedding must be 3-dimensional");
  MeshDocument mesh;
  for (int i = 0; i < emb.size(); ++i) mesh.vertices.emplace_back(emb.points.row(i).transpose());

  for (const auto& face : face_cycles(model.graph)) {
    std::vector<int> cycle = face.vertices;
    Eigen::Vector3d normal = Eigen::Vector3d::Zero(), centroid = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto& a = mesh.vertices[cycle[i]];
      const auto& b = mesh.vertices[cycle[(i + 1) % cycle.size()]];
      normal += a.cross(b);  // Newell
      centroid += a;
    }
    if (normal.dot(centroid) < 0) std::reverse(cycle.begin() + 1, cycle.end());
    mesh.faces.push_back(std::move(cycle));
  }

  mesh.metadata.group = model.group.datum().name;
  mesh.metadata.point.assign(x.weights().data(), x.weights().data() + x.size());
  mesh.metadata.lambda = emb.eigenvalue;
  mesh.metadata.class_lengths = edge_class_lengths(emb, model.graph);
  return mesh;
}

void validate_mesh(const MeshDocument& mesh) {
  const int n = static_cast<int>(mesh.vertices.size());
  std::map<std::pair<int, int>, int> incidence;
  for (const auto& f : mesh.faces) {
    if (f.size() < 3) throw InvarianceError("validate_mesh: face with fewer than three vertices");
    for (std::size_t i = 0; i < f.size(); ++i) {
      const int a = f[i], b = f[(i + 1) % f.size()];
      if (a < 0 || a >= n) throw InvarianceError("validate_mesh: face index out of range");
      ++incidence[{std::min(a, b), std::max(a, b)}];
    }
  }
  for (const auto& [edge, count] : incidence)
    if (count != 2) throw InvarianceError("validate_mesh: edge not shared by exactly two faces");
}

std::string format_off(const MeshDocument& mesh) {
  std::string out = "OFF\n";
  out += std::to_string(mesh.vertices.size()) + " " + std::to_string(mesh.faces.size()) + " " +
         std::to_string(mesh.edge_count()) + "\n";
  for (const auto& v : mesh.vertices) {
    for (int c = 0; c < 3; ++c) {
      if (c) out += ' ';
      append_number(out, v(c));
    }
    out += '\n';
  }
  for (const auto& f : mesh.faces) {
    out += std::to_string(f.size());
    for (int i : f) out += " " + std::to_string(i);
    out += '\n';
  }
  return out;
}

MeshDocument parse_off(std::istream& in) {
  auto next_line = [&](std::string& line) {
    while (std::getline(in, line)) {
      const auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') return true;
    }
    return false;
  };
  std::string line;
  if (!next_line(line) || line.rfind("OFF", 0) != 0) throw IoError("parse_off: missing OFF header", "<stream>");
  std::size_t nv = 0, nf = 0, ne = 0;
  if (!next_line(line) || !(std::istringstream(line) >> nv >> nf >> ne))
    throw IoError("parse_off: malformed counts line", "<stream>");

  MeshDocument mesh;
  for (std::size_t i = 0; i < nv; ++i) {
    Eigen::Vector3d v;
    std::istringstream ls;
    if (!next_line(line)) throw IoError("parse_off: truncated vertex list", "<stream>");
    // strtod round-trips %.17g exactly.
    const char* p = line.c_str();
    for (int c = 0; c < 3; ++c) {
      char* end = nullptr;
      v(c) = std::strtod(p, &end);
      if (end == p) throw IoError("parse_off: malformed vertex line", "<stream>");
      p = end;
    }
    mesh.vertices.push_back(v);
  }
  for (std::size_t i = 0; i < nf; ++i) {
    if (!next_line(line)) throw IoError("parse_off: truncated face list", "<stream>");
    std::istringstream ls(line);
    std::size_t count = 0;
    if (!(ls >> count)) throw IoError("parse_off: malformed face line", "<stream>");
    std::vector<int> face(count);
    for (auto& idx : face)
      if (!(ls >> idx)) throw IoError("parse_off: malformed face line", "<stream>");
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

std::string format_obj(const MeshDocument& mesh) {
  std::string out;
  for (const auto& v : mesh.vertices) {
    out += "v";
    for (int c = 0; c < 3; ++c) {
      out += ' ';
      append_number(out, v(c));
    }
    out += '\n';
  }
  for (const auto& f : mesh.faces) {
    out += "f";
    for (int i : f) out += " " + std::to_string(i + 1);
    out += '\n';
  }
  return out;
}

std::size_t export_off(const MeshDocument& mesh, const std::filesystem::path& path) {
  return write_file(format_off(mesh), path);
}

std::size_t export_obj(const MeshDocument& mesh, const std::filesystem::path& path) {
  return write_file(format_obj(mesh), path);
}

}  // namespace coxspec
