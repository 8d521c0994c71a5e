#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the solvers they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "phigraph/graph.hpp"
#include "phigraph/numtheory.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const phigraph::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline bool colourable(const Matrix& m, std::size_t k, std::vector<int>& colour, std::size_t v) {
  if (v == m.size()) return true;
  for (std::size_t c = 0; c < k; ++c) {
    bool clash = false;
    for (std::size_t u = 0; u < v && !clash; ++u) clash = m[u][v] && colour[u] == static_cast<int>(c);
    if (clash) continue;
    colour[v] = static_cast<int>(c);
    if (colourable(m, k, colour, v + 1)) return true;
  }
  colour[v] = -1;
  return false;
}

/// Smallest k admitting a proper k-colouring, by trying every k in turn.
inline std::size_t chromatic_number(const Matrix& m) {
  if (m.empty()) return 0;
  for (std::size_t k = 1;; ++k) {
    std::vector<int> colour(m.size(), -1);
    if (colourable(m, k, colour, 0)) return k;
  }
}

inline bool is_clique(const Matrix& m, std::uint32_t mask) {
  for (std::size_t u = 0; u < m.size(); ++u) {
    if (!((mask >> u) & 1)) continue;
    for (std::size_t v = u + 1; v < m.size(); ++v) {
      if (((mask >> v) & 1) && !m[u][v]) return false;
    }
  }
  return true;
}

/// Every maximum clique by scanning all 2^n vertex subsets.
inline std::vector<std::vector<phigraph::VertexId>> maximum_cliques(const Matrix& m) {
  std::vector<std::vector<phigraph::VertexId>> best;
  std::size_t size = 0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m.size()); ++mask) {
    const auto pc = static_cast<std::size_t>(__builtin_popcount(mask));
    if (pc < size || !is_clique(m, mask)) continue;
    if (pc > size) {
      best.clear();
      size = pc;
    }
    std::vector<phigraph::VertexId> c;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if ((mask >> v) & 1) c.push_back(static_cast<phigraph::VertexId>(v));
    }
    best.push_back(std::move(c));
  }
  std::sort(best.begin(), best.end());
  return best;
}

inline std::size_t domination_number(const Matrix& m) {
  std::size_t best = m.size();
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m.size()); ++mask) {
    bool ok = true;
    for (std::size_t v = 0; v < m.size() && ok; ++v) {
      if ((mask >> v) & 1) continue;
      bool hit = false;
      for (std::size_t u = 0; u < m.size() && !hit; ++u) hit = ((mask >> u) & 1) && m[u][v];
      ok = hit;
    }
    if (ok) best = std::min<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

/// Hierholzer's construction; returns the closed walk, or empty when the
/// edges cannot be traversed in a single circuit.
inline std::vector<std::size_t> euler_circuit(Matrix m) {
  std::size_t edges = 0;
  for (std::size_t u = 0; u < m.size(); ++u) {
    for (std::size_t v = u + 1; v < m.size(); ++v) edges += m[u][v];
  }
  if (edges == 0) return {};
  Matrix original = m;
  std::size_t start = 0;
  while (std::none_of(m[start].begin(), m[start].end(), [](bool b) { return b; })) ++start;
  std::vector<std::size_t> stack{start}, walk;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    auto it = std::find(m[u].begin(), m[u].end(), true);
    if (it == m[u].end()) {
      walk.push_back(u);
      stack.pop_back();
    } else {
      const auto v = static_cast<std::size_t>(it - m[u].begin());
      m[u][v] = m[v][u] = false;
      stack.push_back(v);
    }
  }
  if (walk.size() != edges + 1 || walk.front() != walk.back()) return {};
  // the stack walk is only a circuit if every step uses a fresh original edge
  for (std::size_t j = 0; j + 1 < walk.size(); ++j) {
    if (!original[walk[j]][walk[j + 1]]) return {};
    original[walk[j]][walk[j + 1]] = original[walk[j + 1]][walk[j]] = false;
  }
  return walk;
}

inline std::uint64_t phi_by_count(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= n; ++i) c += std::gcd(i, n) == 1;
  return c;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (n % p) continue;
    bool prime = true;
    for (std::uint64_t q = 2; q * q <= p && prime; ++q) prime = p % q != 0;
    if (prime) out.push_back(p);
  }
  return out;
}

/// Erdos-Renyi graph with integer labels 1..n.
inline phigraph::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::vector<phigraph::Label> labels;
  for (std::size_t v = 1; v <= n; ++v) labels.push_back(phigraph::Label::integer(v));
  phigraph::Graph g(std::move(labels));
  std::bernoulli_distribution coin(p);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(static_cast<phigraph::VertexId>(u), static_cast<phigraph::VertexId>(v));
    }
  }
  return g;
}

}  // namespace oracle
