#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "phigraph/graph.hpp"

namespace phigraph {

/// Size and time caps for the exact (exponential-time) computations.
struct Guards {
  std::size_t max_order_exact = 4095;       // chromatic and clique number
  std::size_t max_order_domination = 64;
  std::size_t max_order_perfect = 12;
  std::size_t max_order_isomorphism = 255;
  double time_budget_seconds = 60.0;        // per exact computation
  unsigned phi_cap = 12;                    // set-graph families
};

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() : end_(Clock::time_point::max()) {}
  static Deadline after(double seconds);
  static Deadline never() { return Deadline(); }

  bool expired() const { return end_ != Clock::time_point::max() && Clock::now() >= end_; }

 private:
  Clock::time_point end_;
};

enum class SolveStatus { computed, skipped_guard, skipped_time };

const char* to_string(SolveStatus status);

/// Result of a guarded exact computation: a value when computed, otherwise
/// the reason it was skipped.
template <class T>
struct Exact {
  SolveStatus status = SolveStatus::skipped_guard;
  std::optional<T> value;

  static Exact computed(T v) { return {SolveStatus::computed, std::move(v)}; }
  static Exact skipped(SolveStatus why) { return {why, std::nullopt}; }

  explicit operator bool() const { return value.has_value(); }
  const T& operator*() const { return *value; }
};

/// Exact chromatic number: DSATUR branch and bound between a clique lower
/// bound and a greedy upper bound.
Exact<std::size_t> chromatic_number(const Graph& g, const Guards& guards = {});

/// Exact clique number by colour-bounded branch and bound.
Exact<std::size_t> clique_number(const Graph& g, const Guards& guards = {});

/// Every maximum clique, each as a sorted vertex list, sorted
/// lexicographically. Bron-Kerbosch with Tomita pivoting and size pruning.
Exact<std::vector<std::vector<VertexId>>> maximum_cliques(const Graph& g,
                                                          const Guards& guards = {});

/// Exact domination number.
Exact<std::size_t> domination_number(const Graph& g, const Guards& guards = {});

/// chi(H) == omega(H) for every induced subgraph H. Only attempted up to
/// guards.max_order_perfect vertices.
Exact<bool> is_perfect_bounded(const Graph& g, const Guards& guards = {});

/// Structural isomorphism (labels ignored) by colour refinement with
/// individualisation backtracking.
Exact<bool> are_isomorphic(const Graph& g, const Graph& h, const Guards& guards = {});

/// An explicit isomorphism g -> h when one exists (mapping[v] = image of v).
Exact<std::optional<std::vector<VertexId>>> find_isomorphism(const Graph& g, const Graph& h,
                                                             const Guards& guards = {});

struct InvariantReport {
  std::size_t order = 0;
  std::size_t size = 0;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::vector<std::size_t> degree_sequence;
  bool is_connected = false;
  bool is_acyclic = false;
  bool is_complete = false;
  bool is_eulerian = false;
  bool has_universal_vertex = false;
  std::uint64_t triangle_count = 0;
  Exact<std::size_t> chromatic_number;
  Exact<std::size_t> clique_number;
  Exact<std::size_t> domination_number;
  Exact<bool> is_perfect;
};

InvariantReport invariant_report(const Graph& g, const Guards& guards = {});

}  // namespace phigraph
