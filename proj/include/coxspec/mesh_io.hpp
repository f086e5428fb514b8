#pragma once

// Polyhedral meshes of 3-dimensional embeddings and their OFF / OBJ text forms.

#include <Eigen/Dense>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "coxspec/solids.hpp"

namespace coxspec {

struct MeshMetadata {
  std::string group;
  std::vector<double> point;  // simplex weights X
  double lambda = 0;
  std::vector<double> class_lengths;
};

struct MeshDocument {
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::vector<int>> faces;
  MeshMetadata metadata;

  /// Distinct undirected edges appearing in faces.
  int edge_count() const;
  int euler_characteristic() const;
  /// Face size -> number of faces.
  std::map<int, int> face_census() const;
};

/// Vertices Phi(i), faces = alternating generator cycles, each oriented with
/// its normal pointing away from the origin. Throws DimensionError unless the
/// embedding is 3-dimensional.
MeshDocument make_mesh(const CoxeterModel& model, const Embedding& emb, const SimplexPoint& x);

/// Throws InvarianceError if a face index is out of range, a face has fewer
/// than three vertices, or some edge does not lie in exactly two faces.
void validate_mesh(const MeshDocument& mesh);

/// "OFF", "V F E", vertex lines with 17 significant digits, "n i1 ... in".
std::string format_off(const MeshDocument& mesh);
/// Parses the subset of OFF written by format_off (comments starting with '#'
/// and blank lines are skipped). Throws IoError on malformed input.
MeshDocument parse_off(std::istream& in);
/// "v x y z" and "f i1 ... in" (1-based) records, same precision as OFF.
std::string format_obj(const MeshDocument& mesh);

/// Writes the text and returns the number of bytes written. Throws IoError.
std::size_t export_off(const MeshDocument& mesh, const std::filesystem::path& path);
std::size_t export_obj(const MeshDocument& mesh, const std::filesystem::path& path);

}  // namespace coxspec
