#include "phigraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "phigraph/errors.hpp"

namespace phigraph {

Label Label::integer(std::uint64_t v) {
  Label l;
  l.kind = Kind::integer;
  l.value = v;
  return l;
}

Label Label::subset(unsigned s, unsigned i, std::optional<BigNat> iota) {
  Label l;
  l.kind = Kind::subset;
  l.s = s;
  l.i = i;
  l.iota = std::move(iota);
  return l;
}

std::string Label::render() const {
  if (kind == Kind::integer) return "v_" + std::to_string(value);
  std::string out = "v_{" + std::to_string(s) + "," + std::to_string(i) + "}";
  if (iota) out += "(" + iota->str() + ")";
  return out;
}

Graph::Graph(std::vector<Label> labels) : labels_(std::move(labels)) {
  if (labels_.size() > kMaxOrder) {
    throw GuardError("graph order " + std::to_string(labels_.size()) +
                     " exceeds the dense-storage cap " + std::to_string(kMaxOrder));
  }
  index_.reserve(labels_.size());
  for (std::size_t v = 0; v < labels_.size(); ++v) {
    auto [it, inserted] = index_.emplace(labels_[v].render(), static_cast<VertexId>(v));
    if (!inserted) throw ConstructionError("duplicate vertex label " + it->first);
  }
  words_ = (labels_.size() + 63) / 64;
  adj_.assign(words_ * labels_.size(), 0);
  degree_.assign(labels_.size(), 0);
}

std::optional<VertexId> Graph::find(const Label& label) const { return find(label.render()); }

std::optional<VertexId> Graph::find(const std::string& rendered) const {
  auto it = index_.find(rendered);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  return (row(u)[v / 64] >> (v % 64)) & 1u;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(degree_[v]);
  auto r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    for (std::uint64_t bits = r[w]; bits; bits &= bits - 1) {
      out.push_back(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
    }
  }
  return out;
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u >= order() || v >= order()) throw ConstructionError("edge endpoint out of range");
  if (u == v) throw ConstructionError("loop at " + labels_[u].render());
  if (adjacent(u, v)) return;
  adj_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  adj_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  ++degree_[u];
  ++degree_[v];
  ++size_;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(size_);
  for (VertexId u = 0; u < order(); ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_graph(std::vector<Label> labels,
                  const std::vector<std::pair<Label, Label>>& edges) {
  Graph g(std::move(labels));
  for (const auto& [a, b] : edges) {
    auto u = g.find(a);
    auto v = g.find(b);
    if (!u) throw ConstructionError("unknown label " + a.render());
    if (!v) throw ConstructionError("unknown label " + b.render());
    g.add_edge(*u, *v);
  }
  return g;
}

bool same_labelled_graph(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<VertexId> map(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    auto w = h.find(g.label(v));
    if (!w) return false;
    map[v] = *w;
  }
  for (auto [u, v] : g.edges()) {
    if (!h.adjacent(map[u], map[v])) return false;
  }
  return true;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq(g.order());
  for (VertexId v = 0; v < g.order(); ++v) seq[v] = g.degree(v);
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

namespace {

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> stack;
  std::size_t components = 0;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

}  // namespace

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

bool is_acyclic(const Graph& g) { return g.size() + component_count(g) == g.order(); }

std::optional<std::vector<VertexId>> find_cycle(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
  std::vector<VertexId> path;
  std::optional<std::vector<VertexId>> cycle;

  std::function<bool(VertexId, std::optional<VertexId>)> dfs =
      [&](VertexId u, std::optional<VertexId> from) -> bool {
    state[u] = 1;
    path.push_back(u);
    for (VertexId w : g.neighbors(u)) {
      if (from && w == *from) continue;
      if (state[w] == 1) {
        auto start = std::find(path.begin(), path.end(), w);
        cycle.emplace(start, path.end());
        return true;
      }
      if (state[w] == 0 && dfs(w, u)) return true;
    }
    path.pop_back();
    state[u] = 2;
    return false;
  };

  for (VertexId s = 0; s < n; ++s) {
    if (state[s] == 0 && dfs(s, std::nullopt)) return cycle;
  }
  return std::nullopt;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_eulerian(const Graph& g) {
  if (g.size() == 0) return false;
  if (!is_connected(g)) return false;
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

bool has_universal_vertex(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v) {
    if (g.degree(v) + 1 == g.order()) return true;
  }
  return false;
}

TriangleResult contains_triangle(const Graph& g) {
  const std::size_t words = g.words();
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      auto ru = g.row(u);
      auto rv = g.row(v);
      for (std::size_t w = (v + 1) / 64; w < words; ++w) {
        std::uint64_t common = ru[w] & rv[w];
        if (w == (v + 1) / 64) common &= ~std::uint64_t{0} << ((v + 1) % 64);
        if (common) {
          auto x = static_cast<VertexId>(w * 64 + std::countr_zero(common));
          return {true, std::array<VertexId, 3>{u, v, x}};
        }
      }
    }
  }
  return {};
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t total = 0;
  for (auto [u, v] : g.edges()) {
    auto ru = g.row(u);
    auto rv = g.row(v);
    for (std::size_t w = 0; w < g.words(); ++w) total += std::popcount(ru[w] & rv[w]);
  }
  return total / 3;
}

Graph complement(const Graph& g) {
  Graph out(g.labels());
  for (VertexId u = 0; u < g.order(); ++u) {
    for (VertexId v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  std::vector<Label> labels;
  labels.reserve(keep.size());
  for (VertexId v : keep) labels.push_back(g.label(v));
  Graph out(std::move(labels));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (g.adjacent(keep[a], keep[b])) {
        out.add_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
      }
    }
  }
  return out;
}

Graph remove_vertex(const Graph& g, VertexId v) {
  std::vector<VertexId> keep;
  keep.reserve(g.order());
  for (VertexId u = 0; u < g.order(); ++u) {
    if (u != v) keep.push_back(u);
  }
  return induced_subgraph(g, keep);
}

Graph join_universal(const Graph& g, Label label) {
  if (g.find(label)) throw ConstructionError("join: label already present: " + label.render());
  std::vector<Label> labels = g.labels();
  labels.push_back(std::move(label));
  Graph out(std::move(labels));
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const auto hub = static_cast<VertexId>(g.order());
  for (VertexId u = 0; u < hub; ++u) out.add_edge(u, hub);
  return out;
}

Graph quasi_complement(const Graph& g, const Label& u) {
  auto hub = g.find(u);
  if (!hub) throw ConstructionError("quasi_complement: unknown vertex " + u.render());
  Graph out(g.labels());
  for (VertexId a = 0; a < g.order(); ++a) {
    for (VertexId b = a + 1; b < g.order(); ++b) {
      if (a == *hub || b == *hub || !g.adjacent(a, b)) out.add_edge(a, b);
    }
  }
  return out;
}

}  // namespace phigraph
