#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "phigraph/numtheory.hpp"

namespace phigraph {

using VertexId = std::uint32_t;

/// Vertex label. Integer labels render as `v_5`; subset labels render as
/// `v_{s,i}` or, when an lcm weight is attached, `v_{s,i}(iota)`.
struct Label {
  enum class Kind { integer, subset };

  Kind kind = Kind::integer;
  std::uint64_t value = 0;
  unsigned s = 0;
  unsigned i = 0;
  std::optional<BigNat> iota;

  static Label integer(std::uint64_t v);
  static Label subset(unsigned s, unsigned i, std::optional<BigNat> iota = std::nullopt);

  std::string render() const;
  bool operator==(const Label&) const = default;
};

/// Simple undirected graph over labelled vertices, stored as a dense bitset
/// adjacency matrix. Vertex order is the order labels were supplied in and is
/// the canonical order for all exports.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 16383;

  Graph() = default;
  explicit Graph(std::vector<Label> labels);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return size_; }

  const std::vector<Label>& labels() const { return labels_; }
  const Label& label(VertexId v) const { return labels_.at(v); }
  std::optional<VertexId> find(const Label& label) const;
  std::optional<VertexId> find(const std::string& rendered) const;

  bool adjacent(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const { return degree_.at(v); }
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Adjacency row of v as 64-bit words; bit u set iff uv is an edge.
  std::span<const std::uint64_t> row(VertexId v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t words() const { return words_; }

  /// Adds uv. Repeated edges collapse; loops and out-of-range ids throw
  /// ConstructionError.
  void add_edge(VertexId u, VertexId v);

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::vector<Label> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<std::size_t> degree_;
  std::size_t size_ = 0;
};

/// Builds a graph from labels and label pairs, validating both.
Graph build_graph(std::vector<Label> labels,
                  const std::vector<std::pair<Label, Label>>& edges);

/// Label-respecting equality: same label set and same edges between labels.
bool same_labelled_graph(const Graph& g, const Graph& h);

std::vector<std::size_t> degree_sequence(const Graph& g);  // non-increasing
bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);
/// A cycle as a vertex list (closing edge implied), found by depth-first
/// search in vertex order.
std::optional<std::vector<VertexId>> find_cycle(const Graph& g);
bool is_complete(const Graph& g);
bool is_eulerian(const Graph& g);
bool has_universal_vertex(const Graph& g);

struct TriangleResult {
  bool found = false;
  std::optional<std::array<VertexId, 3>> witness;
};
/// First triangle in lexicographic vertex order.
TriangleResult contains_triangle(const Graph& g);
std::uint64_t triangle_count(const Graph& g);

Graph complement(const Graph& g);
Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep);
Graph remove_vertex(const Graph& g, VertexId v);
/// G + v: appends a vertex adjacent to every existing vertex.
Graph join_universal(const Graph& g, Label label);
/// Removes u, complements the rest, re-joins u universally. u keeps its
/// position in the vertex order.
Graph quasi_complement(const Graph& g, const Label& u);

}  // namespace phigraph
