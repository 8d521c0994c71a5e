#include "phigraph/phifamily.hpp"

#include <numeric>
#include <string>

#include "phigraph/errors.hpp"
#include "phigraph/numtheory.hpp"
#include "phigraph/setgraph.hpp"

namespace phigraph {

std::string_view to_string(FamilyId id) {
  switch (id) {
    case FamilyId::divisor:
      return "divisor";
    case FamilyId::coprime:
      return "coprime";
    case FamilyId::relative_divisor:
      return "relative_divisor";
    case FamilyId::phi_divisor:
      return "phi_divisor";
    case FamilyId::phi_coprime:
      return "phi_coprime";
    case FamilyId::phi_setgraph:
      return "phi_setgraph";
    case FamilyId::phi_lcm_divisor:
      return "phi_lcm_divisor";
    case FamilyId::phi_lcm_coprime:
      return "phi_lcm_coprime";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view name) {
  for (FamilyId id : kAllFamilies) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool takes_explicit_set(FamilyId id) {
  return id == FamilyId::divisor || id == FamilyId::coprime || id == FamilyId::relative_divisor;
}

bool is_setgraph_family(FamilyId id) {
  return id == FamilyId::phi_setgraph || id == FamilyId::phi_lcm_divisor ||
         id == FamilyId::phi_lcm_coprime;
}

namespace {

void check_set(std::span<const std::uint64_t> set, const char* op) {
  if (set.empty()) throw UsageError(std::string(op) + ": set is empty");
  for (std::size_t j = 0; j < set.size(); ++j) {
    if (set[j] == 0) throw UsageError(std::string(op) + ": elements must be positive");
    if (j > 0 && set[j] <= set[j - 1]) {
      throw UsageError(std::string(op) + ": set must be strictly increasing");
    }
  }
}

template <class Adjacent>
Graph integer_graph(std::span<const std::uint64_t> set, Adjacent adjacent) {
  std::vector<Label> labels;
  labels.reserve(set.size());
  for (std::uint64_t x : set) labels.push_back(Label::integer(x));
  Graph g(std::move(labels));
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (adjacent(set[a], set[b])) g.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }
  }
  return g;
}

}  // namespace

Graph divisor_graph(std::span<const std::uint64_t> set) {
  check_set(set, "divisor_graph");
  return integer_graph(set, [](std::uint64_t a, std::uint64_t b) { return a % b == 0 || b % a == 0; });
}

Graph coprime_graph(std::span<const std::uint64_t> set) {
  check_set(set, "coprime_graph");
  return integer_graph(set, [](std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) == 1; });
}

Graph relative_divisor_graph(std::span<const std::uint64_t> set) {
  check_set(set, "relative_divisor_graph");
  if (set.front() == 1) throw UsageError("relative_divisor_graph: 1 must be excluded from the set");
  return integer_graph(set, [](std::uint64_t a, std::uint64_t b) { return std::gcd(a, b) != 1; });
}

Graph set_family(FamilyId id, std::span<const std::uint64_t> set) {
  switch (id) {
    case FamilyId::divisor:
      return divisor_graph(set);
    case FamilyId::coprime:
      return coprime_graph(set);
    case FamilyId::relative_divisor:
      return relative_divisor_graph(set);
    default:
      throw UsageError("family '" + std::string(to_string(id)) + "' is built from n, not from a set");
  }
}

namespace {

std::vector<std::uint64_t> setgraph_base(std::uint64_t n, const Guards& guards) {
  auto base = phi_context(n).phi_set;
  if (base.size() > guards.phi_cap) {
    throw GuardError("phi(" + std::to_string(n) + ") = " + std::to_string(base.size()) +
                     " exceeds the set-graph phi cap " + std::to_string(guards.phi_cap));
  }
  return base;
}

SetGraphLimits limits_for(const Guards& guards) {
  SetGraphLimits limits;
  limits.edge_cap = guards.phi_cap;
  limits.enumeration_cap = std::max(limits.enumeration_cap, guards.phi_cap);
  return limits;
}

}  // namespace

Graph phi_family(std::uint64_t n, FamilyId id, const Guards& guards) {
  if (n == 0) throw UsageError("phi_family: n must be >= 1");
  switch (id) {
    case FamilyId::phi_divisor:
      return divisor_graph(phi_context(n).phi_set);
    case FamilyId::phi_coprime:
      return coprime_graph(phi_context(n).phi_set);
    case FamilyId::phi_setgraph:
      return build_set_graph(setgraph_base(n, guards), limits_for(guards));
    case FamilyId::phi_lcm_divisor:
      return lcm_divisor_setgraph(setgraph_base(n, guards), limits_for(guards));
    case FamilyId::phi_lcm_coprime:
      return lcm_coprime_setgraph(setgraph_base(n, guards), limits_for(guards));
    default:
      throw UsageError("family '" + std::string(to_string(id)) + "' needs an explicit set");
  }
}

IdentityCheck complement_identity_holds(std::uint64_t n) {
  const auto set = phi_context(n).phi_set;
  IdentityCheck out;
  out.applicable = true;
  for (std::size_t a = 1; a < set.size() && out.applicable; ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (set[b] % set[a] != 0 && std::gcd(set[a], set[b]) != 1) {
        out.applicable = false;
        out.blocking_pair.emplace(Label::integer(set[a]).render(), Label::integer(set[b]).render());
        break;
      }
    }
  }
  const Graph gd = divisor_graph(set);
  const Graph gp = coprime_graph(set);
  const Label hub = Label::integer(1);
  out.d_identity = same_labelled_graph(gd, quasi_complement(gp, hub));
  out.p_identity = same_labelled_graph(gp, quasi_complement(gd, hub));
  return out;
}

IdentityCheck weighted_complement_identity_holds(std::uint64_t n, const Guards& guards) {
  const auto base = setgraph_base(n, guards);
  const auto vertices = assign_iota_weights(base, limits_for(guards));
  IdentityCheck out;
  out.applicable = true;
  for (std::size_t a = 1; a < vertices.size() && out.applicable; ++a) {
    const BigNat& x = vertices[a].iota;
    for (std::size_t b = a + 1; b < vertices.size(); ++b) {
      const BigNat& y = vertices[b].iota;
      const bool divisible = y % x == 0 || x % y == 0;
      if (!divisible && boost::multiprecision::gcd(x, y) != 1) {
        out.applicable = false;
        out.blocking_pair.emplace(vertices[a].label(true).render(), vertices[b].label(true).render());
        break;
      }
    }
  }
  const Graph gd = lcm_divisor_setgraph(base, limits_for(guards));
  const Graph gp = lcm_coprime_setgraph(base, limits_for(guards));
  const Label hub = vertices.front().label(true);
  out.d_identity = same_labelled_graph(gd, quasi_complement(gp, hub));
  out.p_identity = same_labelled_graph(gp, quasi_complement(gd, hub));
  return out;
}

}  // namespace phigraph
