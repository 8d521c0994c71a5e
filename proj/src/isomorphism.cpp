#include <algorithm>
#include <map>

#include "phigraph/solvers.hpp"

namespace phigraph {

namespace {

using Colouring = std::vector<std::uint32_t>;

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& g, const Graph& h, Deadline deadline)
      : g_(g), h_(h), deadline_(deadline) {}

  std::optional<std::vector<VertexId>> run() {
    Colouring cg(g_.order(), 0);
    Colouring ch(h_.order(), 0);
    return search(std::move(cg), std::move(ch));
  }

  bool timed_out() const { return timed_out_; }

 private:
  // Joint colour refinement; false when the two colourings become
  // incompatible (different class sizes).
  bool refine(Colouring& cg, Colouring& ch) const {
    std::size_t classes = count_classes(cg, ch);
    while (true) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      auto signature = [](const Graph& graph, const Colouring& c, VertexId v) {
        std::vector<std::uint32_t> sig{c[v]};
        for (VertexId w : graph.neighbors(v)) sig.push_back(c[w]);
        std::sort(sig.begin() + 1, sig.end());
        return sig;
      };
      std::vector<std::vector<std::uint32_t>> sg(g_.order()), sh(h_.order());
      for (VertexId v = 0; v < g_.order(); ++v) ids.emplace(sg[v] = signature(g_, cg, v), 0);
      for (VertexId v = 0; v < h_.order(); ++v) ids.emplace(sh[v] = signature(h_, ch, v), 0);
      std::uint32_t next = 0;
      for (auto& [sig, id] : ids) id = next++;
      for (VertexId v = 0; v < g_.order(); ++v) cg[v] = ids[sg[v]];
      for (VertexId v = 0; v < h_.order(); ++v) ch[v] = ids[sh[v]];
      if (!same_histogram(cg, ch)) return false;
      const std::size_t now = ids.size();
      if (now == classes) return true;
      classes = now;
    }
  }

  static std::size_t count_classes(const Colouring& cg, const Colouring& ch) {
    std::vector<std::uint32_t> all(cg);
    all.insert(all.end(), ch.begin(), ch.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
  }

  static bool same_histogram(const Colouring& cg, const Colouring& ch) {
    std::map<std::uint32_t, long> hist;
    for (auto c : cg) ++hist[c];
    for (auto c : ch) --hist[c];
    return std::all_of(hist.begin(), hist.end(), [](const auto& kv) { return kv.second == 0; });
  }

  std::optional<std::vector<VertexId>> search(Colouring cg, Colouring ch) {
    if (timed_out_) return std::nullopt;
    if (++nodes_ % 64 == 0 && deadline_.expired()) {
      timed_out_ = true;
      return std::nullopt;
    }
    if (!refine(cg, ch)) return std::nullopt;

    std::map<std::uint32_t, std::vector<VertexId>> cells_g, cells_h;
    for (VertexId v = 0; v < g_.order(); ++v) cells_g[cg[v]].push_back(v);
    for (VertexId v = 0; v < h_.order(); ++v) cells_h[ch[v]].push_back(v);

    const std::vector<VertexId>* target = nullptr;
    std::uint32_t target_colour = 0;
    for (const auto& [colour, cell] : cells_g) {
      if (cell.size() > 1 && (!target || cell.size() < target->size())) {
        target = &cell;
        target_colour = colour;
      }
    }
    if (!target) {
      std::vector<VertexId> mapping(g_.order());
      for (const auto& [colour, cell] : cells_g) mapping[cell.front()] = cells_h[colour].front();
      for (auto [u, v] : g_.edges()) {
        if (!h_.adjacent(mapping[u], mapping[v])) return std::nullopt;
      }
      return mapping;
    }

    const std::uint32_t fresh = static_cast<std::uint32_t>(g_.order() + h_.order() + 1);
    const VertexId v = target->front();
    for (VertexId w : cells_h[target_colour]) {
      Colouring ng = cg;
      Colouring nh = ch;
      ng[v] = fresh;
      nh[w] = fresh;
      if (auto found = search(std::move(ng), std::move(nh))) return found;
      if (timed_out_) return std::nullopt;
    }
    return std::nullopt;
  }

  const Graph& g_;
  const Graph& h_;
  Deadline deadline_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

Exact<std::optional<std::vector<VertexId>>> find_isomorphism(const Graph& g, const Graph& h,
                                                             const Guards& guards) {
  using Result = Exact<std::optional<std::vector<VertexId>>>;
  const std::size_t order = std::max(g.order(), h.order());
  if (order > guards.max_order_isomorphism) return Result::skipped(SolveStatus::skipped_guard);
  if (g.order() != h.order() || g.size() != h.size() || degree_sequence(g) != degree_sequence(h)) {
    return Result::computed(std::nullopt);
  }
  IsomorphismSearch search(g, h, Deadline::after(guards.time_budget_seconds));
  auto mapping = search.run();
  if (search.timed_out()) return Result::skipped(SolveStatus::skipped_time);
  return Result::computed(std::move(mapping));
}

Exact<bool> are_isomorphic(const Graph& g, const Graph& h, const Guards& guards) {
  auto found = find_isomorphism(g, h, guards);
  if (!found) return Exact<bool>::skipped(found.status);
  return Exact<bool>::computed(found.value->has_value());
}

}  // namespace phigraph
