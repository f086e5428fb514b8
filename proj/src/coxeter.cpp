#include "coxspec/coxeter.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <sstream>

namespace coxspec {

namespace {

CoxeterDatum rank3(std::string name, int m23) {
  CoxeterDatum d{std::move(name), Eigen::MatrixXi::Constant(3, 3, 2)};
  d.orders(0, 2) = d.orders(2, 0) = 3;
  d.orders(1, 2) = d.orders(2, 1) = m23;
  return d;
}

// Linear diagram 0 - 1 - ... - (k-1) with the given bond orders.
CoxeterDatum linear(std::string name, const std::vector<int>& bonds) {
  const int k = static_cast<int>(bonds.size()) + 1;
  CoxeterDatum d{std::move(name), Eigen::MatrixXi::Constant(k, k, 2)};
  for (int i = 0; i + 1 < k; ++i) d.orders(i, i + 1) = d.orders(i + 1, i) = bonds[i];
  return d;
}

}  // namespace

CoxeterDatum CoxeterDatum::A3() { return rank3("A3", 3); }
CoxeterDatum CoxeterDatum::B3() { return rank3("B3", 4); }
CoxeterDatum CoxeterDatum::H3() { return rank3("H3", 5); }

CoxeterDatum CoxeterDatum::from_name(const std::string& name) {
  if (name == "A3") return A3();
  if (name == "B3") return B3();
  if (name == "H3") return H3();
  if (name == "F4") return linear(name, {3, 4, 3});
  if (name == "H4") return linear(name, {3, 3, 5});
  if (name.size() >= 2) {
    int k = 0;
    std::istringstream is(name.substr(1));
    if ((is >> k) && is.eof()) {
      switch (name[0]) {
        case 'A':
          if (k >= 1) return linear(name, std::vector<int>(k - 1, 3));
          break;
        case 'B':
          if (k >= 2) {
            std::vector<int> bonds(k - 1, 3);
            bonds.back() = 4;
            return linear(name, bonds);
          }
          break;
        case 'D':
          if (k >= 4) {
            CoxeterDatum d = linear(name, std::vector<int>(k - 2, 3));
            Eigen::MatrixXi m = Eigen::MatrixXi::Constant(k, k, 2);
            m.topLeftCorner(k - 1, k - 1) = d.orders;
            m(k - 3, k - 1) = m(k - 1, k - 3) = 3;
            d.orders = m;
            return d;
          }
          break;
        default:
          break;
      }
    }
  }
  throw GroupError("unknown Coxeter group name '" + name + "'");
}

void CoxeterDatum::validate() const {
  const int k = rank();
  if (k < 1 || orders.cols() != k) throw GroupError("Coxeter matrix must be square and non-empty");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (orders(i, j) != orders(j, i)) throw GroupError("Coxeter matrix must be symmetric");
      if (i != j && orders(i, j) < 2) throw GroupError("Coxeter orders m_ij must be >= 2");
    }
}

Matrix gram_matrix(const CoxeterDatum& datum) {
  datum.validate();
  const int k = datum.rank();
  Matrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      m(i, j) = (i == j) ? 1.0 : -std::cos(std::numbers::pi / datum.orders(i, j));
  // cos(pi/2) is 6e-17 in floating point; commuting generators get exact zeros.
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && datum.orders(i, j) == 2) m(i, j) = 0.0;
  return m;
}

bool is_finite_type(const CoxeterDatum& datum) {
  Eigen::LLT<Matrix> llt(gram_matrix(datum));
  return llt.info() == Eigen::Success;
}

Matrix simple_roots(const CoxeterDatum& datum) {
  const Matrix gram = gram_matrix(datum);
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success)
    throw GroupError(datum.name + ": not a finite Coxeter group (Gram matrix not positive definite)");
  // gram = L L^T; rows of L are the roots, so the root matrix (columns n_j) is L^T.
  Matrix roots = llt.matrixL().transpose();
  for (int j = 0; j < roots.cols(); ++j) roots.col(j).normalize();
  if (det(roots) < 0) roots.row(roots.rows() - 1) *= -1.0;  // ambient reflection keeps the Gram matrix
  return roots;
}

Matrix reflection_matrix(const Vector& unit_normal) {
  if (std::abs(unit_normal.norm() - 1.0) > 1e-12)
    throw DomainError("reflection_matrix: normal vector must have unit length");
  const auto k = unit_normal.size();
  return Matrix::Identity(k, k) - 2.0 * unit_normal * unit_normal.transpose();
}

double ReflectionGroup::key(const Matrix& m) const { return m.cwiseProduct(key_weights_).sum(); }

std::optional<int> ReflectionGroup::find(const Matrix& m) const {
  if (m.rows() != rank() || m.cols() != rank()) return std::nullopt;
  const double k = key(m);
  const double reach = kDedupTolerance * key_weights_.cwiseAbs().sum();
  for (auto it = index_.lower_bound(k - reach); it != index_.end() && it->first <= k + reach; ++it) {
    if ((elements_[it->second] - m).cwiseAbs().maxCoeff() < kDedupTolerance) return it->second;
  }
  return std::nullopt;
}

void ReflectionGroup::insert(Matrix m, int length) {
  index_.emplace(key(m), static_cast<int>(elements_.size()));
  elements_.push_back(std::move(m));
  word_length_.push_back(length);
}

std::vector<int> ReflectionGroup::left_action(int g) const {
  std::vector<int> perm(order());
  for (int i = 0; i < order(); ++i) {
    auto idx = find(elements_[g] * elements_[i]);
    if (!idx) throw InvarianceError("left_action: product not found in group");
    perm[i] = *idx;
  }
  return perm;
}

ReflectionGroup generate_group(const CoxeterDatum& datum, int max_elements) {
  ReflectionGroup group;
  group.datum_ = datum;
  group.roots_ = simple_roots(datum);
  const int k = datum.rank();
  for (int j = 0; j < k; ++j) group.generators_.push_back(reflection_matrix(group.roots_.col(j)));

  // Fixed, generic weights for the search key of the element index.
  group.key_weights_.resize(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) group.key_weights_(i, j) = 1.0 + std::sqrt(2.0 + 3 * i + 7 * j);

  group.insert(Matrix::Identity(k, k), 0);
  std::vector<std::vector<int>> succ;
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    succ.emplace_back(k, -1);
    for (int j = 0; j < k; ++j) {
      Matrix product = group.elements_[head] * group.generators_[j];
      auto found = group.find(product);
      if (!found) {
        if (static_cast<int>(group.elements_.size()) >= max_elements)
          throw GroupError(datum.name + ": group too large or not finite (more than " +
                           std::to_string(max_elements) + " elements)");
        found = static_cast<int>(group.elements_.size());
        group.insert(std::move(product), group.word_length_[head] + 1);
      }
      succ[head][j] = *found;
    }
  }

  const int n = group.order();
  group.successors_.resize(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) group.successors_(i, j) = succ[i][j];

  // Closure pass: every successor resolves and right multiplication is an involution.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j)
      if (group.successors_(group.successors_(i, j), j) != i)
        throw InvarianceError(datum.name + ": successor table is not closed under s_j^2 = e");
  return group;
}

int CayleyGraph::neighbor(int v, int label) const {
  for (const auto& nb : adjacency[v])
    if (nb.label == label) return nb.vertex;
  throw DomainError("CayleyGraph::neighbor: no edge with label " + std::to_string(label));
}

CayleyGraph cayley_graph(const ReflectionGroup& group) {
  const int n = group.order();
  const int k = group.rank();
  CayleyGraph g;
  g.vertex_count = n;
  g.adjacency.resize(n);
  g.class_multiplicities.assign(k, 1);
  g.colour.resize(n);

  for (int v = 0; v < n; ++v) {
    g.colour[v] = group.word_length(v) % 2;
    for (int j = 0; j < k; ++j) {
      const int w = group.successor(v, j);
      if (w == v) throw InvarianceError("cayley_graph: loop at vertex " + std::to_string(v));
      for (const auto& nb : g.adjacency[v])
        if (nb.vertex == w) throw InvarianceError("cayley_graph: multiple edge");
      g.adjacency[v].push_back({w, j});
    }
  }
  g.edge_count = n * k / 2;

  for (int v = 0; v < n; ++v)
    for (const auto& nb : g.adjacency[v])
      if (g.colour[v] == g.colour[nb.vertex])
        throw InvarianceError("cayley_graph: word-length parity is not a proper 2-colouring");

  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (const auto& nb : g.adjacency[v])
      if (!seen[nb.vertex]) {
        seen[nb.vertex] = 1;
        ++reached;
        queue.push_back(nb.vertex);
      }
  }
  if (reached != n) throw InvarianceError("cayley_graph: graph is not connected");
  return g;
}

std::vector<int> alternating_cycle(const CayleyGraph& graph, int start, int a, int b) {
  std::vector<int> cycle{start};
  int v = start;
  for (int step = 0;; ++step) {
    v = graph.neighbor(v, step % 2 == 0 ? a : b);
    if (v == start && step % 2 == 1) break;
    if (step > 2 * graph.vertex_count) throw InvarianceError("alternating_cycle: walk does not close");
    cycle.push_back(v);
  }
  return cycle;
}

std::vector<Face> face_cycles(const CayleyGraph& graph) {
  std::vector<Face> faces;
  const int k = graph.class_count();
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) {
      std::vector<char> used(graph.vertex_count, 0);
      for (int v = 0; v < graph.vertex_count; ++v) {
        if (used[v]) continue;
        Face f{a, b, alternating_cycle(graph, v, a, b)};
        for (int w : f.vertices) used[w] = 1;
        faces.push_back(std::move(f));
      }
    }
  return faces;
}

}  // namespace coxspec
