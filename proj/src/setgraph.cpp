#include "phigraph/setgraph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>

#include "phigraph/errors.hpp"

namespace phigraph {

Label SubsetVertex::label(bool with_iota) const {
  return with_iota ? Label::subset(s, i, iota) : Label::subset(s, i);
}

std::size_t WeightTable::total() const {
  std::size_t t = 0;
  for (const auto& [w, m] : entries) t += m;
  return t;
}

std::size_t WeightTable::multiplicity(const BigNat& weight) const {
  auto it = entries.find(weight);
  return it == entries.end() ? 0 : it->second;
}

namespace {

void check_base(std::span<const std::uint64_t> base, unsigned cap, const char* op) {
  if (base.empty()) throw UsageError(std::string(op) + ": base set is empty");
  if (base.size() > cap) {
    throw GuardError(std::string(op) + ": base set of size " + std::to_string(base.size()) +
                     " exceeds the cap " + std::to_string(cap));
  }
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (base[j] == 0) throw UsageError(std::string(op) + ": elements must be positive");
    if (j > 0 && base[j] <= base[j - 1]) {
      throw UsageError(std::string(op) + ": base set must be strictly increasing");
    }
  }
}

std::vector<SubsetVertex> enumerate_unchecked(std::size_t n) {
  std::vector<SubsetVertex> out;
  out.reserve((std::size_t{1} << n) - 1);
  std::vector<unsigned> pos;
  for (unsigned s = 1; s <= n; ++s) {
    pos.resize(s);
    std::iota(pos.begin(), pos.end(), 0u);
    unsigned index = 0;
    while (true) {
      SubsetVertex v;
      v.s = s;
      v.i = ++index;
      for (unsigned p : pos) v.members |= std::uint32_t{1} << p;
      out.push_back(std::move(v));
      // Advance to the next combination in lexicographic order.
      int k = static_cast<int>(s) - 1;
      while (k >= 0 && pos[k] == n - s + k) --k;
      if (k < 0) break;
      ++pos[k];
      for (unsigned j = k + 1; j < s; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return out;
}

enum class WeightRelation { divides, coprime };

Graph derivative_graph(std::span<const std::uint64_t> base, const SetGraphLimits& limits,
                       WeightRelation relation) {
  check_base(base, std::min(limits.enumeration_cap, limits.edge_cap), "derivative set-graph");
  auto vertices = assign_iota_weights(base, limits);
  std::vector<Label> labels;
  labels.reserve(vertices.size());
  for (const auto& v : vertices) labels.push_back(v.label(true));
  Graph g(std::move(labels));
  const std::size_t n = vertices.size();

  const BigNat& largest = vertices.back().iota;  // the full set carries lcm(A)
  if (largest <= std::numeric_limits<std::uint64_t>::max()) {
    std::vector<std::uint64_t> w(n);
    for (std::size_t k = 0; k < n; ++k) w[k] = vertices[k].iota.convert_to<std::uint64_t>();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const bool edge = relation == WeightRelation::divides
                              ? (w[b] % w[a] == 0 || w[a] % w[b] == 0)
                              : std::gcd(w[a], w[b]) == 1;
        if (edge) g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
      }
    }
    return g;
  }
  for (std::size_t a = 0; a < n; ++a) {
    const BigNat& x = vertices[a].iota;
    for (std::size_t b = a + 1; b < n; ++b) {
      const BigNat& y = vertices[b].iota;
      const bool edge = relation == WeightRelation::divides
                            ? (y % x == 0 || x % y == 0)
                            : boost::multiprecision::gcd(x, y) == 1;
      if (edge) g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
  }
  return g;
}

}  // namespace

std::vector<SubsetVertex> enumerate_indexed_subsets(std::span<const std::uint64_t> base,
                                                    const SetGraphLimits& limits) {
  check_base(base, limits.enumeration_cap, "enumerate_indexed_subsets");
  return enumerate_unchecked(base.size());
}

std::vector<SubsetVertex> assign_iota_weights(std::span<const std::uint64_t> base,
                                              const SetGraphLimits& limits) {
  auto vertices = enumerate_indexed_subsets(base, limits);
  const std::size_t masks = std::size_t{1} << base.size();
  std::vector<BigNat> lcm(masks);
  lcm[0] = 1;
  for (std::size_t m = 1; m < masks; ++m) {
    const auto low = static_cast<std::size_t>(std::countr_zero(m));
    const BigNat& prev = lcm[m & (m - 1)];
    const BigNat element = base[low];
    lcm[m] = prev / boost::multiprecision::gcd(prev, element) * element;
  }
  for (auto& v : vertices) v.iota = lcm[v.members];
  return vertices;
}

WeightTable weight_multiplicity_table(std::span<const std::uint64_t> base,
                                      const SetGraphLimits& limits) {
  WeightTable table;
  for (const auto& v : assign_iota_weights(base, limits)) ++table.entries[v.iota];
  return table;
}

Graph build_set_graph(std::span<const std::uint64_t> base, const SetGraphLimits& limits) {
  check_base(base, std::min(limits.enumeration_cap, limits.edge_cap), "build_set_graph");
  auto vertices = enumerate_unchecked(base.size());
  std::vector<Label> labels;
  labels.reserve(vertices.size());
  for (const auto& v : vertices) labels.push_back(v.label(false));
  Graph g(std::move(labels));
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      if (vertices[a].members & vertices[b].members) {
        g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
      }
    }
  }
  return g;
}

Graph lcm_divisor_setgraph(std::span<const std::uint64_t> base, const SetGraphLimits& limits) {
  return derivative_graph(base, limits, WeightRelation::divides);
}

Graph lcm_coprime_setgraph(std::span<const std::uint64_t> base, const SetGraphLimits& limits) {
  return derivative_graph(base, limits, WeightRelation::coprime);
}

bool set_divides(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y) {
  if (x.empty() || y.empty()) throw UsageError("set_divides: sets must be non-empty");
  return std::any_of(x.begin(), x.end(),
                     [&](std::uint64_t a) { return std::find(y.begin(), y.end(), a) != y.end(); });
}

}  // namespace phigraph
