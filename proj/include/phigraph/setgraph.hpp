#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "phigraph/graph.hpp"
#include "phigraph/numtheory.hpp"

namespace phigraph {

/// One non-empty subset of the base set A, indexed as the i-th (1-based)
/// s-element subset. Within each size, subsets follow lexicographic order
/// of their element positions.
struct SubsetVertex {
  unsigned s = 0;
  unsigned i = 0;
  std::uint32_t members = 0;  // bit j set iff A[j] is in the subset
  BigNat iota = 0;            // lcm of the members; 0 until assigned

  Label label(bool with_iota) const;
};

struct SetGraphLimits {
  unsigned enumeration_cap = 20;  // |A| for subset enumeration and weights
  unsigned edge_cap = 14;         // |A| for building any set-graph edge set
};

/// Weight -> number of vertices carrying it.
struct WeightTable {
  std::map<BigNat, std::size_t> entries;

  std::size_t total() const;
  std::size_t multiplicity(const BigNat& weight) const;
};

/// All 2^|A| - 1 non-empty subsets, grouped by size. A must be strictly
/// increasing and positive.
std::vector<SubsetVertex> enumerate_indexed_subsets(std::span<const std::uint64_t> base,
                                                    const SetGraphLimits& limits = {});

/// As enumerate_indexed_subsets, with iota set to the lcm of each subset.
std::vector<SubsetVertex> assign_iota_weights(std::span<const std::uint64_t> base,
                                              const SetGraphLimits& limits = {});

WeightTable weight_multiplicity_table(std::span<const std::uint64_t> base,
                                      const SetGraphLimits& limits = {});

/// Intersection graph of the non-empty subsets (labels v_{s,i}).
Graph build_set_graph(std::span<const std::uint64_t> base, const SetGraphLimits& limits = {});

/// First derivative: edge iff one lcm weight divides the other (labels
/// v_{s,i}(iota)). Equal weights are adjacent.
Graph lcm_divisor_setgraph(std::span<const std::uint64_t> base, const SetGraphLimits& limits = {});

/// Second derivative: edge iff the lcm weights are coprime.
Graph lcm_coprime_setgraph(std::span<const std::uint64_t> base, const SetGraphLimits& limits = {});

/// X "divides" Y iff they intersect. Throws UsageError if either is empty.
bool set_divides(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y);

}  // namespace phigraph
