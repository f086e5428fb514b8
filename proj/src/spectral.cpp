#include "coxspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace coxspec {

std::vector<SpectralCluster> spectrum_clusters(const TransitionOperator& op, double cluster_tol) {
  const auto eig = eigh_symmetric(op.matrix);
  const Vector& values = eig.eigenvalues;
  const int n = static_cast<int>(values.size());

  std::vector<SpectralCluster> clusters;
  auto emit = [&](int begin, int end, bool ambiguous) {
    const int k = end - begin;
    clusters.push_back({values.segment(begin, k).mean(), k, eig.eigenvectors.middleCols(begin, k), ambiguous});
  };

  int begin = 0;
  while (begin < n) {
    int end = begin + 1;
    while (end < n && values(end - 1) - values(end) <= cluster_tol) ++end;
    if (values(begin) - values(end - 1) <= cluster_tol) {
      emit(begin, end, false);
    } else {
      // A chain of small gaps wider than the tolerance: split greedily from
      // the top so that every piece has spread <= cluster_tol.
      int start = begin;
      for (int i = begin + 1; i <= end; ++i) {
        if (i == end || values(start) - values(i) > cluster_tol) {
          emit(start, i, true);
          start = i;
        }
      }
    }
    begin = end;
  }
  return clusters;
}

double Embedding::radius() const { return points.rowwise().norm().mean(); }

Embedding spectral_representation(const TransitionOperator& op, const SpectralCluster& cluster) {
  const Matrix& basis = cluster.basis;
  const int n = static_cast<int>(basis.rows());
  const int k = static_cast<int>(basis.cols());
  if (n != op.matrix.rows() || k != cluster.multiplicity || k == 0)
    throw DimensionError("spectral_representation: cluster does not belong to this operator");
  const double residual = (op.matrix * basis - cluster.eigenvalue * basis).colwise().norm().maxCoeff();
  if (residual > 1e-8) {
    std::ostringstream os;
    os << "spectral_representation: eigen-residual " << residual << " exceeds 1e-8";
    throw InvarianceError(os.str());
  }

  // Row i of `basis` holds the coordinates of the projection of e_i onto the
  // eigenspace; Gram-Schmidt on these coordinates (twice, for stability)
  // makes the result independent of the solver's choice of basis.
  Matrix coeffs(k, k);
  int chosen = 0;
  for (int i = 0; i < n && chosen < k; ++i) {
    Vector c = basis.row(i).transpose();
    for (int pass = 0; pass < 2; ++pass)
      for (int q = 0; q < chosen; ++q) c -= coeffs.col(q).dot(c) * coeffs.col(q);
    const double norm = c.norm();
    if (norm > 1e-3) coeffs.col(chosen++) = c / norm;
  }
  if (chosen < k) throw InvarianceError("spectral_representation: could not orient eigenspace basis");

  Matrix points = basis * coeffs;
  for (int c = 0; c < k; ++c) detail::fix_sign(points.col(c));

  Embedding emb{std::move(points), cluster.eigenvalue};
  const Vector norms = emb.points.rowwise().norm();
  if (norms.maxCoeff() - norms.minCoeff() > 1e-8)
    throw InvarianceError("spectral_representation: image does not lie on a sphere");
  return emb;
}

std::vector<double> edge_class_lengths(const Embedding& emb, const CayleyGraph& graph, double tol) {
  if (emb.size() != graph.vertex_count)
    throw DimensionError("edge_class_lengths: embedding and graph sizes differ");
  const int classes = graph.class_count();
  std::vector<double> lo(classes, INFINITY), hi(classes, -INFINITY);
  for (int v = 0; v < graph.vertex_count; ++v)
    for (const auto& nb : graph.adjacency[v]) {
      if (nb.vertex < v) continue;
      const double len = (emb.points.row(v) - emb.points.row(nb.vertex)).norm();
      lo[nb.label] = std::min(lo[nb.label], len);
      hi[nb.label] = std::max(hi[nb.label], len);
    }
  std::vector<double> lengths(classes);
  for (int c = 0; c < classes; ++c) {
    if (hi[c] - lo[c] > tol) {
      std::ostringstream os;
      os << "edge_class_lengths: class " << c << " lengths spread by " << hi[c] - lo[c];
      throw InvarianceError(os.str());
    }
    lengths[c] = 0.5 * (lo[c] + hi[c]);
  }
  return lengths;
}

bool check_faithful(const Embedding& emb, std::optional<double> tol) {
  const double threshold = tol.value_or(1e-6 * emb.radius());
  const int n = emb.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((emb.points.row(i) - emb.points.row(j)).norm() <= threshold) return false;
  return true;
}

double gram_invariance_check(const Embedding& emb, const ReflectionGroup& group,
                             const std::vector<int>& elements) {
  if (emb.size() != group.order())
    throw DimensionError("gram_invariance_check: embedding is not indexed by group elements");
  std::vector<int> gammas = elements;
  if (gammas.empty()) {
    gammas.resize(group.order());
    std::iota(gammas.begin(), gammas.end(), 0);
  }
  const Matrix gram = emb.points * emb.points.transpose();
  const int n = emb.size();
  double worst = 0.0;
  for (int g : gammas) {
    const auto perm = group.left_action(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        worst = std::max(worst, std::abs(gram(i, j) - gram(perm[i], perm[j])));
  }
  return worst;
}

std::vector<int> point_clusters(const Matrix& points, double tol) {
  const int n = static_cast<int>(points.rows());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((points.row(i) - points.row(j)).norm() < tol) parent[root(j)] = root(i);

  std::vector<int> id(n, -1), remap(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    const int r = root(i);
    if (remap[r] < 0) remap[r] = next++;
    id[i] = remap[r];
  }
  return id;
}

int distinct_points(const Matrix& points, double tol) {
  const auto ids = point_clusters(points, tol);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

}  // namespace coxspec
