#pragma once

// Eigenvalue clusters of P_X and the spectral representations they induce.

#include <optional>
#include <vector>

#include "coxspec/coxeter.hpp"
#include "coxspec/randwalk.hpp"

namespace coxspec {

struct SpectralCluster {
  double eigenvalue;  // mean of the clustered eigenvalues
  int multiplicity;
  Matrix basis;       // n x multiplicity, orthonormal columns
  /// Set when a chain of eigenvalues spaced below the tolerance spanned more
  /// than the tolerance; the finer partition was chosen.
  bool ambiguous = false;
};

/// Clusters of the full spectrum, sorted descending; multiplicities sum to n.
std::vector<SpectralCluster> spectrum_clusters(const TransitionOperator& op, double cluster_tol = 1e-7);

/// Rows are Phi(i) in R^k.
struct Embedding {
  Matrix points;
  double eigenvalue;

  int dimension() const { return static_cast<int>(points.cols()); }
  int size() const { return static_cast<int>(points.rows()); }
  /// A multiplicity-one cluster embeds into R^1; allowed but usually not what
  /// the caller wants.
  bool one_dimensional() const { return dimension() == 1; }
  /// Mean of ||Phi(i)||.
  double radius() const;
};

/// Canonical orthonormal basis of the cluster eigenspace: Gram-Schmidt of the
/// projected standard basis vectors, then largest-|entry|-positive signs.
/// Throws InvarianceError if the cluster is not an eigenspace of `op` or the
/// image does not lie on a sphere.
Embedding spectral_representation(const TransitionOperator& op, const SpectralCluster& cluster);

/// Length of Phi(v) - Phi(w) per edge class (index = class). Throws
/// InvarianceError when lengths within a class spread by more than `tol`.
std::vector<double> edge_class_lengths(const Embedding& emb, const CayleyGraph& graph, double tol = 1e-8);

/// True iff all pairwise point distances exceed `tol`; by default
/// 1e-6 times the sphere radius.
bool check_faithful(const Embedding& emb, std::optional<double> tol = std::nullopt);

/// max |<Phi(i),Phi(j)> - <Phi(g i),Phi(g j)>| over the given group elements
/// g (all elements when empty) and all vertex pairs.
double gram_invariance_check(const Embedding& emb, const ReflectionGroup& group,
                             const std::vector<int>& elements = {});

/// Number of clusters among `points` (rows) when points closer than `tol`
/// are merged transitively.
int distinct_points(const Matrix& points, double tol);

/// Cluster id of every row, ids in order of first appearance.
std::vector<int> point_clusters(const Matrix& points, double tol);

}  // namespace coxspec
