#include "doctest.h"
#include "oracles.hpp"
#include "phigraph/phifamily.hpp"
#include "phigraph/setgraph.hpp"
#include "phigraph/solvers.hpp"

using namespace phigraph;

namespace {

Graph from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<Label> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back(Label::integer(v));
  Graph g(std::move(labels));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph petersen() {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({i + 5, (i + 2) % 5 + 5});
  }
  return from_edges(10, e);
}

// Mycielski graph of C_5: triangle-free with chromatic number 4.
Graph grotzsch() {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i + 5, (i + 1) % 5});
    e.push_back({i + 5, (i + 4) % 5});
    e.push_back({i + 5, 10});
  }
  return from_edges(11, e);
}

// Family graphs of order <= limit, plus seeded random graphs.
std::vector<Graph> corpus(std::size_t limit, std::uint64_t seed, int randoms) {
  std::vector<Graph> out;
  for (std::uint64_t n = 1; n <= 60; ++n) {
    if (euler_phi(n) > limit) continue;
    out.push_back(phi_family(n, FamilyId::phi_divisor));
    out.push_back(phi_family(n, FamilyId::phi_coprime));
    if ((std::size_t{1} << euler_phi(n)) - 1 <= limit) {
      out.push_back(phi_family(n, FamilyId::phi_setgraph));
      out.push_back(phi_family(n, FamilyId::phi_lcm_divisor));
      out.push_back(phi_family(n, FamilyId::phi_lcm_coprime));
    }
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < randoms; ++t) {
    const std::size_t order = 1 + t % limit;
    out.push_back(oracle::random_graph(order, 0.2 + 0.6 * (t % 7) / 6.0, rng));
  }
  return out;
}

}  // namespace

TEST_CASE("chromatic number matches brute-force colouring") {
  for (const Graph& g : corpus(8, 1, 400)) {
    const auto chi = chromatic_number(g);
    REQUIRE(chi);
    CHECK(*chi == oracle::chromatic_number(oracle::matrix(g)));
  }
}

TEST_CASE("named graphs") {
  CHECK(*chromatic_number(petersen()) == 3);
  CHECK(*clique_number(petersen()) == 2);
  CHECK(*domination_number(petersen()) == 3);
  CHECK(*chromatic_number(grotzsch()) == 4);
  CHECK(*clique_number(grotzsch()) == 2);
  CHECK(*chromatic_number(Graph{}) == 0);
  CHECK(*clique_number(Graph({Label::integer(1)})) == 1);
}

TEST_CASE("maximum cliques match subset enumeration") {
  for (const Graph& g : corpus(10, 2, 300)) {
    if (g.order() == 0) continue;
    const auto cliques = maximum_cliques(g);
    REQUIRE(cliques);
    CHECK(*cliques.value == oracle::maximum_cliques(oracle::matrix(g)));
    CHECK(*clique_number(g) == cliques.value->front().size());
  }
}

TEST_CASE("domination number matches exhaustive search") {
  for (const Graph& g : corpus(10, 3, 200)) {
    if (g.order() == 0) continue;
    const auto gamma = domination_number(g);
    REQUIRE(gamma);
    CHECK(*gamma == oracle::domination_number(oracle::matrix(g)));
  }
}

TEST_CASE("perfectness") {
  std::vector<std::pair<VertexId, VertexId>> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}};
  CHECK_FALSE(*is_perfect_bounded(from_edges(5, c5)));
  std::vector<std::pair<VertexId, VertexId>> c6{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  CHECK(*is_perfect_bounded(from_edges(6, c6)));
  CHECK(*is_perfect_bounded(phi_family(24, FamilyId::phi_coprime)));
  CHECK(is_perfect_bounded(petersen(), Guards{.max_order_perfect = 9}).status == SolveStatus::skipped_guard);
}

TEST_CASE("guards and budgets") {
  Guards tight;
  tight.max_order_exact = 9;
  CHECK(chromatic_number(petersen(), tight).status == SolveStatus::skipped_guard);
  CHECK_FALSE(clique_number(petersen(), tight));
  Guards dom;
  dom.max_order_domination = 5;
  CHECK(domination_number(petersen(), dom).status == SolveStatus::skipped_guard);
}

TEST_CASE("isomorphism") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    Graph g = oracle::random_graph(4 + t % 12, 0.4, rng);
    std::vector<VertexId> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<VertexId, VertexId>> e;
    for (auto [u, v] : g.edges()) e.push_back({perm[u], perm[v]});
    Graph h = from_edges(g.order(), e);
    const auto map = find_isomorphism(g, h);
    REQUIRE(map);
    REQUIRE(map.value->has_value());
    const auto& f = **map.value;
    for (auto [u, v] : g.edges()) CHECK(h.adjacent(f[u], f[v]));
  }
  std::vector<std::pair<VertexId, VertexId>> c6{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}};
  std::vector<std::pair<VertexId, VertexId>> two_c3{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  CHECK_FALSE(*are_isomorphic(from_edges(6, c6), from_edges(6, two_c3)));
  CHECK(*are_isomorphic(phi_family(5, FamilyId::phi_setgraph), phi_family(8, FamilyId::phi_setgraph)));
}

TEST_CASE("invariant report for the divisor graph on S_phi(24)") {
  const auto r = invariant_report(phi_family(24, FamilyId::phi_divisor));
  CHECK(r.order == 8);
  CHECK(r.size == 7);
  CHECK(r.max_degree == 7);
  CHECK(r.min_degree == 1);
  CHECK(r.is_acyclic);
  CHECK(r.has_universal_vertex);
  CHECK(r.triangle_count == 0);
  CHECK(*r.chromatic_number == 2);
  CHECK(*r.clique_number == 2);
  CHECK(*r.domination_number == 1);
  CHECK(*r.is_perfect);
}
