#pragma once

// Finite Coxeter groups realised as reflection groups and their Cayley graphs.

#include <Eigen/Dense>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxspec/linalg.hpp"

namespace coxspec {

/// Coxeter matrix m_ij of a rank-k group. Diagonal entries are stored as 2
/// (meaning s_i^2 = e) and ignored otherwise.
struct CoxeterDatum {
  std::string name;
  Eigen::MatrixXi orders;

  int rank() const { return static_cast<int>(orders.rows()); }

  /// Three built-in rank-3 groups. Generator order follows the Gram matrix
  ///   [[1, 0, -1/2], [0, 1, -eta/2], [-1/2, -eta/2, 1]]
  /// with eta = 1, sqrt(2), golden ratio for A3, B3, H3, so that pairs
  /// (s1,s2), (s1,s3), (s2,s3) generate dihedral groups of order 4, 6, 2*m23.
  static CoxeterDatum A3();
  static CoxeterDatum B3();
  static CoxeterDatum H3();

  /// Parse "A3", "B3", "H3", or a general linear-diagram name such as "A4",
  /// "B4", "H4", "F4", "D4".
  static CoxeterDatum from_name(const std::string& name);

  /// Validate symmetry and m_ij >= 2. Throws GroupError.
  void validate() const;
};

/// M_ij = -cos(pi / m_ij), M_ii = 1.
Matrix gram_matrix(const CoxeterDatum& datum);

/// True iff the Gram matrix is positive definite.
bool is_finite_type(const CoxeterDatum& datum);

/// Unit simple roots as the columns of a k x k matrix, with Gram matrix equal
/// to gram_matrix(datum) and det(n_1, ..., n_k) > 0.
Matrix simple_roots(const CoxeterDatum& datum);

/// I - 2 n n^T. Throws DomainError unless | ||n|| - 1 | <= 1e-12.
Matrix reflection_matrix(const Vector& unit_normal);

/// All elements of the group as orthogonal matrices, element 0 = identity.
class ReflectionGroup {
public:
  static constexpr double kDedupTolerance = 1e-6;

  const CoxeterDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int order() const { return static_cast<int>(elements_.size()); }

  /// Column j is the simple root n_j.
  const Matrix& roots() const { return roots_; }
  const std::vector<Matrix>& generators() const { return generators_; }
  const Matrix& generator(int j) const { return generators_[j]; }
  const std::vector<Matrix>& elements() const { return elements_; }
  const Matrix& element(int i) const { return elements_[i]; }

  /// Index of element(i) * generator(j).
  int successor(int i, int j) const { return successors_(i, j); }
  const Eigen::MatrixXi& successor_table() const { return successors_; }

  /// Word length of element(i) in the generators (BFS distance from e).
  int word_length(int i) const { return word_length_[i]; }

  /// Index of the element equal to `m` within kDedupTolerance, if any.
  std::optional<int> find(const Matrix& m) const;

  /// Permutation i -> index(element(g) * element(i)).
  std::vector<int> left_action(int g) const;

private:
  friend ReflectionGroup generate_group(const CoxeterDatum&, int);

  double key(const Matrix& m) const;
  void insert(Matrix m, int word_length);

  CoxeterDatum datum_;
  Matrix roots_;
  std::vector<Matrix> generators_;
  std::vector<Matrix> elements_;
  Eigen::MatrixXi successors_;
  std::vector<int> word_length_;
  Matrix key_weights_;
  std::multimap<double, int> index_;
};

/// Breadth-first closure under right multiplication by the generators.
/// Throws GroupError when the datum is not of finite type or the element
/// count exceeds `max_elements`.
ReflectionGroup generate_group(const CoxeterDatum& datum, int max_elements = 100000);

struct Neighbor {
  int vertex;
  int label;  // generator index = edge class
};

/// Cay(G, S) with edges {g, g s_j} labelled by j.
struct CayleyGraph {
  int vertex_count = 0;
  int edge_count = 0;
  std::vector<std::vector<Neighbor>> adjacency;
  /// Per edge class, the number of class edges at a vertex (1 for involutions).
  std::vector<int> class_multiplicities;
  /// 0/1 colouring by word-length parity.
  std::vector<int> colour;

  int class_count() const { return static_cast<int>(class_multiplicities.size()); }
  /// Neighbour of v across the class-`label` edge.
  int neighbor(int v, int label) const;
};

/// Builds the graph and checks it is simple, connected, regular of degree k
/// and properly 2-coloured by word-length parity. Throws InvarianceError
/// otherwise.
CayleyGraph cayley_graph(const ReflectionGroup& group);

/// Closed walk alternating labels a, b starting at `start`; length 2 m_ab.
std::vector<int> alternating_cycle(const CayleyGraph& graph, int start, int a, int b);

struct Face {
  int label_a;
  int label_b;
  std::vector<int> vertices;  // cyclic order
};

/// Every alternating (a, b) cycle for a < b, each listed once.
std::vector<Face> face_cycles(const CayleyGraph& graph);

}  // namespace coxspec
