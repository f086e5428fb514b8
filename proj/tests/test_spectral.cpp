#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxspec/coxmaps.hpp"
#include "coxspec/spectral.hpp"
#include "oracles.hpp"

using namespace coxspec;

namespace {

struct Fixture {
  ReflectionGroup group;
  CayleyGraph graph;
};

const Fixture& model(const std::string& g) {
  static std::map<std::string, Fixture> cache;
  auto it = cache.find(g);
  if (it == cache.end()) {
    auto group = generate_group(CoxeterDatum::from_name(g));
    auto graph = cayley_graph(group);
    it = cache.emplace(g, Fixture{std::move(group), std::move(graph)}).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("cluster multiplicities and the trivial eigenvalue") {
  std::mt19937_64 rng(2);
  for (const std::string g : {"A3", "B3", "H3"}) {
    CAPTURE(g);
    const auto& m = model(g);
    for (int trial = 0; trial < 10; ++trial) {
      const SimplexPoint x(oracle::interior_point(rng));
      const auto op = build_operator(m.graph, x);
      const auto clusters = spectrum_clusters(op);
      int total = 0;
      for (const auto& c : clusters) total += c.multiplicity;
      CHECK(total == m.graph.vertex_count);
      CHECK(clusters[0].eigenvalue == doctest::Approx(1.0));
      CHECK(clusters[0].multiplicity == 1);
      const Vector f0 = clusters[0].basis.col(0);
      CHECK((f0.array() - f0(0)).abs().maxCoeff() < 1e-12);
      CHECK(clusters[1].multiplicity == 3);
      // Symmetric about the origin.
      const Vector ev = eigvalsh(op.matrix);
      CHECK((ev + ev.reverse()).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
}

TEST_CASE("lambda1 eigenspaces have dimension three at random interior points") {
  std::mt19937_64 rng(23);
  for (const std::string g : {"A3", "B3", "H3"}) {
    for (int trial = 0; trial < 100; ++trial) {
      const SimplexPoint x(oracle::interior_point(rng, 1e-3));
      const auto clusters = spectrum_clusters(build_operator(model(g).graph, x));
      CHECK(clusters.at(1).multiplicity == 3);
    }
  }
}

TEST_CASE("spectral representation is an orthonormal invariant eigenbasis") {
  const auto& m = model("H3");
  const SimplexPoint x(Eigen::Vector3d(0.2, 0.3, 0.5));
  const auto op = build_operator(m.graph, x);
  const auto clusters = spectrum_clusters(op);
  const Embedding emb = spectral_representation(op, clusters[1]);
  REQUIRE(emb.dimension() == 3);
  CHECK((emb.points.transpose() * emb.points - Matrix::Identity(3, 3)).norm() < 1e-12);
  CHECK((op.matrix * emb.points - emb.eigenvalue * emb.points).norm() < 1e-12);
  // sum ||Phi(i)||^2 = k, all equal: radius sqrt(3/120)
  CHECK(emb.radius() == doctest::Approx(std::sqrt(3.0 / 120)).epsilon(1e-12));
  CHECK(gram_invariance_check(emb, m.group) <= 1e-8);
  CHECK(check_faithful(emb));

  const auto lengths = edge_class_lengths(emb, m.graph);
  REQUIRE(lengths.size() == 3);
  for (double l : lengths) CHECK(l > 0);

  // Deterministic basis: recomputation gives the same matrix.
  const Embedding again = spectral_representation(op, spectrum_clusters(op)[1]);
  CHECK((again.points - emb.points).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("embedding Gram matrix equals the orbit Gram matrix") {
  std::mt19937_64 rng(31);
  for (const std::string g : {"A3", "B3", "H3"}) {
    CAPTURE(g);
    const auto& m = model(g);
    const auto domain = fundamental_vectors(m.group);
    for (int trial = 0; trial < 5; ++trial) {
      const SimplexPoint x(oracle::interior_point(rng));
      const auto op = build_operator(m.graph, x);
      const Embedding emb = spectral_representation(op, spectrum_clusters(op)[1]);
      const Vector p0 = std::sqrt(3.0 / m.group.order()) * psi_delta_inverse(domain, x).point;
      const Matrix orb = orbit(m.group, p0);
      CHECK((emb.points * emb.points.transpose() - orb * orb.transpose()).cwiseAbs().maxCoeff() <= 1e-8);
    }
  }
}

TEST_CASE("point clustering") {
  Matrix pts(5, 2);
  pts << 0, 0, 1e-9, 0, 1, 1, 1, 1 + 1e-9, 5, 5;
  CHECK(distinct_points(pts, 1e-6) == 3);
  CHECK(point_clusters(pts, 1e-6) == std::vector<int>{0, 0, 1, 1, 2});
  CHECK(distinct_points(pts, 10) == 1);
}

TEST_CASE("non-eigenspace clusters are rejected") {
  const auto& m = model("A3");
  const auto op = build_operator(m.graph, SimplexPoint(Eigen::Vector3d(0.2, 0.3, 0.5)));
  auto cluster = spectrum_clusters(op)[1];
  cluster.eigenvalue += 0.1;
  CHECK_THROWS_AS(spectral_representation(op, cluster), InvarianceError);
}
