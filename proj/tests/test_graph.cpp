#include "doctest.h"
#include "oracles.hpp"
#include "phigraph/errors.hpp"
#include "phigraph/graph.hpp"

using namespace phigraph;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Label> labels;
  for (std::size_t v = 1; v <= n; ++v) labels.push_back(Label::integer(v));
  Graph g(std::move(labels));
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete(std::size_t n) {
  std::vector<Label> labels;
  for (std::size_t v = 1; v <= n; ++v) labels.push_back(Label::integer(v));
  Graph g(std::move(labels));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_CASE("labels render") {
  CHECK(Label::integer(5).render() == "v_5");
  CHECK(Label::subset(2, 4).render() == "v_{2,4}");
  CHECK(Label::subset(2, 4, BigNat(15)).render() == "v_{2,4}(15)");
}

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(Graph({Label::integer(1), Label::integer(1)}), ConstructionError);
  Graph g({Label::integer(1), Label::integer(2)});
  CHECK_THROWS_AS(g.add_edge(0, 0), ConstructionError);
  CHECK_THROWS_AS(g.add_edge(0, 2), ConstructionError);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  CHECK(g.size() == 1);
  CHECK(g.find("v_2") == 1u);
  CHECK_FALSE(g.find("v_3").has_value());

  CHECK_THROWS_AS(build_graph({Label::integer(1)}, {{Label::integer(1), Label::integer(9)}}),
                  ConstructionError);

  std::vector<Label> many;
  for (std::size_t v = 0; v <= Graph::kMaxOrder; ++v) many.push_back(Label::integer(v));
  CHECK_THROWS_AS(Graph(std::move(many)), GuardError);
}

TEST_CASE("edges are sorted pairs and rows span multiple words") {
  Graph g = complete(130);
  CHECK(g.size() == 130 * 129 / 2);
  auto e = g.edges();
  CHECK(std::is_sorted(e.begin(), e.end()));
  CHECK(e.front() == std::pair<VertexId, VertexId>{0, 1});
  CHECK(g.adjacent(0, 129));
  CHECK(g.degree(77) == 129);
  CHECK(g.row(3).size() == 3);
}

TEST_CASE("cycles, forests and completeness") {
  CHECK(is_acyclic(Graph({Label::integer(1)})));
  CHECK(is_complete(Graph({Label::integer(1)})));
  Graph c5 = cycle(5);
  CHECK_FALSE(is_acyclic(c5));
  auto found = find_cycle(c5);
  REQUIRE(found);
  CHECK(found->size() == 5);
  for (std::size_t j = 0; j < found->size(); ++j) {
    CHECK(c5.adjacent((*found)[j], (*found)[(j + 1) % found->size()]));
  }
  Graph path = remove_vertex(c5, 4);
  CHECK(is_acyclic(path));
  CHECK_FALSE(find_cycle(path).has_value());
  CHECK(is_connected(path));
  CHECK(degree_sequence(path) == std::vector<std::size_t>{2, 2, 1, 1});
}

TEST_CASE("eulerian") {
  CHECK_FALSE(is_eulerian(Graph({Label::integer(1)})));
  CHECK(is_eulerian(cycle(4)));
  CHECK(is_eulerian(complete(5)));
  CHECK_FALSE(is_eulerian(complete(4)));
  // two disjoint triangles: even degrees, disconnected
  Graph two = build_graph(
      {Label::integer(1), Label::integer(2), Label::integer(3), Label::integer(4), Label::integer(5),
       Label::integer(6)},
      {{Label::integer(1), Label::integer(2)},
       {Label::integer(2), Label::integer(3)},
       {Label::integer(1), Label::integer(3)},
       {Label::integer(4), Label::integer(5)},
       {Label::integer(5), Label::integer(6)},
       {Label::integer(4), Label::integer(6)}});
  CHECK_FALSE(is_eulerian(two));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 400; ++t) {
    Graph g = oracle::random_graph(3 + t % 8, 0.5, rng);
    const auto m = oracle::matrix(g);
    bool isolated = false;
    for (VertexId v = 0; v < g.order(); ++v) isolated |= g.degree(v) == 0;
    const bool expected = !oracle::euler_circuit(m).empty() && !isolated;
    CHECK(is_eulerian(g) == expected);
  }
}

TEST_CASE("triangles") {
  CHECK_FALSE(contains_triangle(cycle(4)).found);
  auto t = contains_triangle(complete(4));
  REQUIRE(t.found);
  CHECK(*t.witness == std::array<VertexId, 3>{0, 1, 2});
  CHECK(triangle_count(complete(5)) == 10);
  CHECK(triangle_count(cycle(3)) == 1);
}

TEST_CASE("complement and quasi-complement") {
  Graph c5 = cycle(5);
  CHECK(same_labelled_graph(complement(complement(c5)), c5));
  CHECK(complement(c5).size() == 5);

  // star K_{1,3} centred at v_1: quasi-complement at the centre is K_4
  Graph star = build_graph({Label::integer(1), Label::integer(2), Label::integer(3), Label::integer(4)},
                           {{Label::integer(1), Label::integer(2)},
                            {Label::integer(1), Label::integer(3)},
                            {Label::integer(1), Label::integer(4)}});
  Graph q = quasi_complement(star, Label::integer(1));
  CHECK(is_complete(q));
  CHECK(q.label(0) == Label::integer(1));
  CHECK(same_labelled_graph(quasi_complement(q, Label::integer(1)), star));
  CHECK_THROWS_AS(quasi_complement(star, Label::integer(9)), ConstructionError);

  Graph j = join_universal(cycle(4), Label::integer(99));
  CHECK(j.order() == 5);
  CHECK(j.degree(4) == 4);
  CHECK(has_universal_vertex(j));
  CHECK_THROWS_AS(join_universal(cycle(4), Label::integer(2)), ConstructionError);
}

TEST_CASE("induced subgraphs keep labels") {
  Graph k5 = complete(5);
  std::vector<VertexId> keep{1, 3, 4};
  Graph h = induced_subgraph(k5, keep);
  CHECK(h.order() == 3);
  CHECK(h.size() == 3);
  CHECK(h.label(0) == Label::integer(2));
}
