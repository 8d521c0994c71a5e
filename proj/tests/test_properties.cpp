// Randomised structural properties with fixed seeds.

#include "doctest.h"
#include "oracles.hpp"
#include "phigraph/phifamily.hpp"
#include "phigraph/setgraph.hpp"
#include "phigraph/solvers.hpp"

using namespace phigraph;

TEST_CASE("handshake, complement and quasi-complement") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 30;
    const Graph g = oracle::random_graph(n, 0.35, rng);
    std::size_t total = 0;
    for (VertexId v = 0; v < n; ++v) total += g.degree(v);
    CHECK(total == 2 * g.size());

    const Graph c = complement(g);
    CHECK(c.size() + g.size() == n * (n - 1) / 2);
    CHECK(same_labelled_graph(complement(c), g));

    const Label u = g.label(static_cast<VertexId>(t % n));
    const Graph q = quasi_complement(g, u);
    CHECK(q.degree(*q.find(u)) == n - 1);
    const Graph qq = quasi_complement(q, u);
    // twice restores everything except the hub, which stays universal
    for (auto [a, b] : g.edges()) {
      if (g.label(a) != u && g.label(b) != u) CHECK(qq.adjacent(a, b));
    }
    CHECK(qq.size() == g.size() - g.degree(*g.find(u)) + (n - 1));
  }
}

TEST_CASE("acyclic iff no cycle is found") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 300; ++t) {
    const Graph g = oracle::random_graph(2 + t % 12, 0.12 + 0.01 * (t % 20), rng);
    const auto cycle = find_cycle(g);
    CHECK(is_acyclic(g) == !cycle.has_value());
    if (cycle) {
      CHECK(cycle->size() >= 3);
      for (std::size_t j = 0; j < cycle->size(); ++j) {
        CHECK(g.adjacent((*cycle)[j], (*cycle)[(j + 1) % cycle->size()]));
      }
    }
  }
}

TEST_CASE("colouring bounds") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 150; ++t) {
    const Graph g = oracle::random_graph(5 + t % 25, 0.5, rng);
    const auto chi = chromatic_number(g);
    const auto omega = clique_number(g);
    REQUIRE(chi);
    REQUIRE(omega);
    std::size_t delta = 0;
    for (VertexId v = 0; v < g.order(); ++v) delta = std::max(delta, g.degree(v));
    CHECK(*omega <= *chi);
    CHECK(*chi <= delta + 1);
  }
}

TEST_CASE("weight tables count every non-empty subset") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::vector<std::uint64_t> base;
    std::uint64_t x = 0;
    std::uniform_int_distribution<std::uint64_t> step(1, 20);
    for (int j = 0; j < 1 + t % 8; ++j) base.push_back(x += step(rng));
    const auto table = weight_multiplicity_table(base);
    CHECK(table.total() == (std::size_t{1} << base.size()) - 1);
    CHECK(table.entries.rbegin()->first == lcm_of_set(base));
  }
}

TEST_CASE("lcm set-graphs on S_phi(n) for phi(n) <= 8") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const auto phi = euler_phi(n);
    if (phi > 8) continue;
    const Graph gd = phi_family(n, FamilyId::phi_lcm_divisor);
    const Graph gp = phi_family(n, FamilyId::phi_lcm_coprime);
    const std::size_t top = (std::size_t{1} << phi) - 2;
    CAPTURE(n);
    CHECK(gd.degree(0) == top);
    CHECK(gp.degree(0) == top);
    for (VertexId v = 0; v < gd.order(); ++v) CHECK(gd.degree(v) % 2 == 0);
    // the full set carries lcm(S_phi(n)), which every weight divides
    CHECK(gd.degree(static_cast<VertexId>(gd.order() - 1)) == top);
  }
}
