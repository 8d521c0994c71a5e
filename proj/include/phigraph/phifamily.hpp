#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "phigraph/graph.hpp"
#include "phigraph/solvers.hpp"

namespace phigraph {

enum class FamilyId {
  divisor,
  coprime,
  relative_divisor,
  phi_divisor,
  phi_coprime,
  phi_setgraph,
  phi_lcm_divisor,
  phi_lcm_coprime,
};

inline constexpr std::array<FamilyId, 8> kAllFamilies = {
    FamilyId::divisor,      FamilyId::coprime,         FamilyId::relative_divisor,
    FamilyId::phi_divisor,  FamilyId::phi_coprime,     FamilyId::phi_setgraph,
    FamilyId::phi_lcm_divisor, FamilyId::phi_lcm_coprime};

std::string_view to_string(FamilyId id);
std::optional<FamilyId> parse_family(std::string_view name);

/// Families built from an explicit integer set rather than from n.
bool takes_explicit_set(FamilyId id);
/// Families whose vertices are subsets of S_phi(n).
bool is_setgraph_family(FamilyId id);

/// Edge iff one element properly divides the other. S must be non-empty and
/// distinct; vertices follow S's order.
Graph divisor_graph(std::span<const std::uint64_t> set);

/// Edge iff gcd = 1.
Graph coprime_graph(std::span<const std::uint64_t> set);

/// Edge iff gcd > 1. Throws UsageError when 1 is in the set.
Graph relative_divisor_graph(std::span<const std::uint64_t> set);

/// Builds one of the explicit-set families.
Graph set_family(FamilyId id, std::span<const std::uint64_t> set);

/// Builds a phi_* family on S_phi(n). Set-graph families are refused with a
/// GuardError when phi(n) exceeds guards.phi_cap.
Graph phi_family(std::uint64_t n, FamilyId id, const Guards& guards = {});

/// Outcome of checking G_d = quasi-complement of G_p at the unit vertex and
/// vice versa, under the "every pair is divisible or coprime" hypothesis.
struct IdentityCheck {
  bool applicable = false;
  bool d_identity = false;
  bool p_identity = false;
  // First pair (in vertex order) violating the hypothesis, rendered labels.
  std::optional<std::pair<std::string, std::string>> blocking_pair;
};

/// Unweighted form on S_phi(n) with hub v_1.
IdentityCheck complement_identity_holds(std::uint64_t n);

/// Weighted form on the lcm weights of S_phi(n) with hub v_{1,1}(1).
/// Refuses with GuardError above guards.phi_cap.
IdentityCheck weighted_complement_identity_holds(std::uint64_t n, const Guards& guards = {});

}  // namespace phigraph
