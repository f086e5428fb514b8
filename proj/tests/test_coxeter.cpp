#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "coxspec/coxeter.hpp"
#include "oracles.hpp"

using namespace coxspec;

TEST_CASE("Gram matrices and simple roots") {
  for (const std::string g : {"A3", "B3", "H3"}) {
    CAPTURE(g);
    const auto datum = CoxeterDatum::from_name(g);
    const Matrix m = gram_matrix(datum);
    Matrix expected(3, 3);
    const double e = oracle::eta(g);
    expected << 1, 0, -0.5, 0, 1, -e / 2, -0.5, -e / 2, 1;
    CHECK((m - expected).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(m(0, 1) == 0.0);
    CHECK(is_finite_type(datum));

    const Matrix n = simple_roots(datum);
    CHECK((n.transpose() * n - m).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(n.determinant() > 0);
    CHECK(n.determinant() * n.determinant() == doctest::Approx(oracle::rho(g) / 4).epsilon(1e-13));
  }
}

TEST_CASE("datum validation") {
  auto d = CoxeterDatum::A3();
  d.orders(0, 1) = 3;
  CHECK_THROWS_AS(d.validate(), GroupError);
  CHECK_THROWS_AS(CoxeterDatum::from_name("Q7"), GroupError);
  auto affine = CoxeterDatum::A3();
  affine.orders(0, 1) = affine.orders(1, 0) = 3;  // triangle diagram, infinite group
  CHECK_FALSE(is_finite_type(affine));
}

TEST_CASE("reflections are involutive isometries") {
  const Matrix n = simple_roots(CoxeterDatum::H3());
  for (int j = 0; j < 3; ++j) {
    const Matrix s = reflection_matrix(n.col(j));
    CHECK((s * s - Matrix::Identity(3, 3)).norm() < 1e-14);
    CHECK((s * n.col(j) + n.col(j)).norm() < 1e-14);
    CHECK(s.determinant() == doctest::Approx(-1.0));
  }
  CHECK_THROWS_AS(reflection_matrix(Vector::Constant(3, 1.0)), DomainError);
}

TEST_CASE("group orders and multiplication table") {
  for (const std::string g : {"A3", "B3", "H3"}) {
    CAPTURE(g);
    const auto group = generate_group(CoxeterDatum::from_name(g));
    REQUIRE(group.order() == oracle::order(g));
    CHECK(group.word_length(0) == 0);
    CHECK((group.element(0) - Matrix::Identity(3, 3)).norm() < 1e-15);
    // Right multiplication by a generator: table agrees with matrices.
    for (int i = 0; i < group.order(); ++i)
      for (int j = 0; j < 3; ++j) {
        const int s = group.successor(i, j);
        CHECK((group.element(i) * group.generator(j) - group.element(s)).cwiseAbs().maxCoeff() < 1e-9);
        CHECK(std::abs(group.word_length(s) - group.word_length(i)) == 1);
      }
    // The longest word has one letter per reflection: 6, 9, 15.
    int longest = 0;
    for (int i = 0; i < group.order(); ++i) longest = std::max(longest, group.word_length(i));
    const int reflections = g == "A3" ? 6 : g == "B3" ? 9 : 15;
    CHECK(longest == reflections);
    CHECK(group.find(-Matrix::Identity(3, 3)).has_value() == (g != "A3"));
  }
}

TEST_CASE("group is closed under products and lookups are exact") {
  const auto group = generate_group(CoxeterDatum::H3());
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> pick(0, group.order() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = pick(rng), b = pick(rng), c = pick(rng);
    const Matrix ab = group.element(a) * group.element(b);
    const auto idx = group.find(ab);
    REQUIRE(idx.has_value());
    CHECK((group.element(*idx) - ab).cwiseAbs().maxCoeff() < 1e-9);
    // (ab)c = a(bc) through the lookup table
    const auto bc = group.find(group.element(b) * group.element(c));
    REQUIRE(bc.has_value());
    CHECK(group.find(group.element(*idx) * group.element(c)) == group.find(group.element(a) * group.element(*bc)));
    CHECK((group.element(a).transpose() * group.element(a) - Matrix::Identity(3, 3)).norm() < 1e-12);
  }
  Matrix not_member = Matrix::Identity(3, 3);
  not_member(0, 0) = 0.5;
  CHECK_FALSE(group.find(not_member).has_value());
}

TEST_CASE("generation cap is enforced") {
  CHECK_THROWS_AS(generate_group(CoxeterDatum::H3(), 100), GroupError);
}

TEST_CASE("Cayley graph structure") {
  for (const std::string g : {"A3", "B3", "H3"}) {
    CAPTURE(g);
    const auto group = generate_group(CoxeterDatum::from_name(g));
    const auto graph = cayley_graph(group);
    const int n = oracle::order(g);
    CHECK(graph.vertex_count == n);
    CHECK(graph.edge_count == 3 * n / 2);
    CHECK(graph.class_count() == 3);
    CHECK(graph.class_multiplicities == std::vector<int>{1, 1, 1});
    for (int v = 0; v < n; ++v) {
      REQUIRE(graph.adjacency[v].size() == 3);
      std::set<int> labels;
      for (const auto& nb : graph.adjacency[v]) {
        labels.insert(nb.label);
        CHECK(graph.colour[nb.vertex] != graph.colour[v]);
        CHECK(graph.neighbor(nb.vertex, nb.label) == v);
      }
      CHECK(labels.size() == 3);
    }
    // Left multiplication preserves labelled adjacency.
    for (int h = 0; h < n; h += 7) {
      const auto perm = group.left_action(h);
      for (int v = 0; v < n; ++v)
        for (int j = 0; j < 3; ++j) CHECK(perm[graph.neighbor(v, j)] == graph.neighbor(perm[v], j));
    }
  }
}

TEST_CASE("face cycles have lengths 2 m_ab and partition the edges") {
  for (const std::string g : {"A3", "B3", "H3"}) {
    CAPTURE(g);
    const auto group = generate_group(CoxeterDatum::from_name(g));
    const auto graph = cayley_graph(group);
    const int m23 = g == "A3" ? 3 : g == "B3" ? 4 : 5;
    std::map<std::pair<int, int>, int> expected_len{{{0, 1}, 4}, {{0, 2}, 6}, {{1, 2}, 2 * m23}};
    std::map<std::pair<int, int>, int> edge_use;
    const int n = oracle::order(g);
    int faces = 0;
    for (const auto& f : face_cycles(graph)) {
      ++faces;
      CHECK(static_cast<int>(f.vertices.size()) == expected_len[{f.label_a, f.label_b}]);
      for (std::size_t i = 0; i < f.vertices.size(); ++i) {
        const int a = f.vertices[i], b = f.vertices[(i + 1) % f.vertices.size()];
        ++edge_use[{std::min(a, b), std::max(a, b)}];
      }
    }
    CHECK(faces == n / 4 + n / 6 + n / (2 * m23));
    CHECK(static_cast<int>(edge_use.size()) == graph.edge_count);
    for (const auto& [e, c] : edge_use) CHECK(c == 2);
    CHECK(n - graph.edge_count + faces == 2);
  }
  const auto h3 = cayley_graph(generate_group(CoxeterDatum::H3()));
  const auto cyc = alternating_cycle(h3, 0, 1, 2);
  CHECK(cyc.size() == 10);
  CHECK(cyc.front() == 0);
}
