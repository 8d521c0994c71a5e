#include "phigraph/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#include "bits.hpp"

namespace phigraph {

using detail::Bits;

Deadline Deadline::after(double seconds) {
  Deadline d;
  if (seconds > 0 && seconds < 1e9) {
    d.end_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds));
  }
  return d;
}

const char* to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::computed:
      return "computed";
    case SolveStatus::skipped_guard:
      return "skipped-guard";
    case SolveStatus::skipped_time:
      return "skipped-time";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kCheckEvery = 1024;

// Adjacency rows relabelled so that vertex 0 has the largest degree.
struct OrderedAdjacency {
  std::vector<VertexId> original;  // new index -> graph vertex
  std::vector<Bits> rows;

  explicit OrderedAdjacency(const Graph& g) : original(g.order()) {
    std::iota(original.begin(), original.end(), VertexId{0});
    std::stable_sort(original.begin(), original.end(),
                     [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
    std::vector<VertexId> position(g.order());
    for (std::size_t i = 0; i < original.size(); ++i) position[original[i]] = static_cast<VertexId>(i);
    rows.assign(g.order(), Bits(g.order()));
    for (std::size_t i = 0; i < original.size(); ++i) {
      for (VertexId w : g.neighbors(original[i])) rows[i].set(position[w]);
    }
  }
};

// Colour-bounded maximum clique search (MCQ style, bitset variant).
class CliqueSearch {
 public:
  CliqueSearch(const OrderedAdjacency& adj, Deadline deadline)
      : adj_(adj), deadline_(deadline) {}

  std::vector<VertexId> run(std::size_t lower_bound_hint = 0) {
    const std::size_t n = adj_.rows.size();
    best_size_ = 0;
    greedy_seed();
    if (lower_bound_hint > best_size_) best_size_ = lower_bound_hint;
    Bits p = Bits::full(n);
    current_.clear();
    expand(p);
    return best_;
  }

  bool timed_out() const { return timed_out_; }

 private:
  void greedy_seed() {
    const std::size_t n = adj_.rows.size();
    Bits p = Bits::full(n);
    std::vector<VertexId> clique;
    while (p.any()) {
      std::size_t pick = n;
      std::size_t pick_deg = 0;
      p.for_each([&](std::size_t v) {
        std::size_t d = adj_.rows[v].and_count(p);
        if (pick == n || d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      });
      clique.push_back(static_cast<VertexId>(pick));
      p &= adj_.rows[pick];
    }
    if (clique.size() > best_size_) {
      best_size_ = clique.size();
      best_ = clique;
    }
  }

  void expand(Bits p) {
    if (timed_out_) return;
    if (++nodes_ % kCheckEvery == 0 && deadline_.expired()) {
      timed_out_ = true;
      return;
    }
    std::vector<VertexId> order;
    std::vector<std::size_t> bound;
    colour_sort(p, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + bound[k] <= best_size_) return;
      const VertexId v = order[k];
      current_.push_back(v);
      Bits next = p & adj_.rows[v];
      if (!next.any()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (timed_out_) return;
      p.reset(v);
    }
  }

  void colour_sort(const Bits& p, std::vector<VertexId>& order, std::vector<std::size_t>& bound) const {
    Bits uncoloured = p;
    std::size_t colour = 0;
    while (uncoloured.any()) {
      ++colour;
      Bits q = uncoloured;
      while (q.any()) {
        std::size_t v = q.first();
        q.reset(v);
        q.subtract(adj_.rows[v]);
        uncoloured.reset(v);
        order.push_back(static_cast<VertexId>(v));
        bound.push_back(colour);
      }
    }
  }

  const OrderedAdjacency& adj_;
  Deadline deadline_;
  std::vector<VertexId> current_;
  std::vector<VertexId> best_;
  std::size_t best_size_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

// Greedy DSATUR colouring; returns the number of colours used.
std::size_t dsatur_greedy(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<Bits> seen(n, Bits(n + 1));
  std::vector<std::size_t> sat(n, 0);
  std::size_t used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      if (pick == n || sat[v] > sat[pick] || (sat[v] == sat[pick] && g.degree(v) > g.degree(pick))) pick = v;
    }
    std::size_t c = 0;
    while (seen[pick].test(c)) ++c;
    colour[pick] = static_cast<int>(c);
    used = std::max(used, c + 1);
    for (VertexId w : g.neighbors(static_cast<VertexId>(pick))) {
      if (colour[w] < 0 && !seen[w].test(c)) {
        seen[w].set(c);
        ++sat[w];
      }
    }
  }
  return used;
}

// Exact DSATUR branch and bound with a pre-coloured clique.
class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, std::size_t lower, std::size_t upper, Deadline deadline)
      : g_(g), n_(g.order()), lower_(lower), upper_(upper), width_(upper), deadline_(deadline),
        colour_(n_, -1), counts_(n_ * upper, 0), sat_(n_, 0) {}

  std::size_t run(const std::vector<VertexId>& clique) {
    std::size_t coloured = 0;
    for (std::size_t c = 0; c < clique.size(); ++c) {
      assign(clique[c], c);
      ++coloured;
    }
    search(coloured, clique.size());
    return upper_;
  }

  bool timed_out() const { return timed_out_; }

 private:
  void assign(VertexId v, std::size_t c) {
    colour_[v] = static_cast<int>(c);
    for (VertexId w : g_.neighbors(v)) {
      if (counts_[w * width_ + c]++ == 0) ++sat_[w];
    }
  }

  void unassign(VertexId v) {
    const auto c = static_cast<std::size_t>(colour_[v]);
    colour_[v] = -1;
    for (VertexId w : g_.neighbors(v)) {
      if (--counts_[w * width_ + c] == 0) --sat_[w];
    }
  }

  void search(std::size_t coloured, std::size_t used) {
    if (timed_out_ || upper_ == lower_ || used >= upper_) return;
    if (++nodes_ % kCheckEvery == 0 && deadline_.expired()) {
      timed_out_ = true;
      return;
    }
    if (coloured == n_) {
      upper_ = used;
      return;
    }
    std::size_t pick = n_;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      if (pick == n_ || sat_[v] > sat_[pick] ||
          (sat_[v] == sat_[pick] && g_.degree(static_cast<VertexId>(v)) > g_.degree(static_cast<VertexId>(pick)))) {
        pick = v;
      }
    }
    const auto v = static_cast<VertexId>(pick);
    for (std::size_t c = 0; c < used; ++c) {
      if (counts_[v * width_ + c] != 0) continue;
      assign(v, c);
      search(coloured + 1, used);
      unassign(v);
      if (timed_out_ || upper_ == lower_) return;
    }
    if (used + 1 < upper_) {
      assign(v, used);
      search(coloured + 1, used + 1);
      unassign(v);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t lower_;
  std::size_t upper_;
  std::size_t width_;
  Deadline deadline_;
  std::vector<int> colour_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::size_t> sat_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

struct CliqueOutcome {
  std::vector<VertexId> clique;  // graph vertex ids
  bool exact = false;
};

CliqueOutcome max_clique(const Graph& g, Deadline deadline) {
  OrderedAdjacency adj(g);
  CliqueSearch search(adj, deadline);
  auto found = search.run();
  CliqueOutcome out;
  for (VertexId v : found) out.clique.push_back(adj.original[v]);
  out.exact = !search.timed_out();
  return out;
}

}  // namespace

Exact<std::size_t> clique_number(const Graph& g, const Guards& guards) {
  if (g.order() > guards.max_order_exact) return Exact<std::size_t>::skipped(SolveStatus::skipped_guard);
  if (g.order() == 0) return Exact<std::size_t>::computed(0);
  auto outcome = max_clique(g, Deadline::after(guards.time_budget_seconds));
  if (!outcome.exact) return Exact<std::size_t>::skipped(SolveStatus::skipped_time);
  return Exact<std::size_t>::computed(outcome.clique.size());
}

Exact<std::size_t> chromatic_number(const Graph& g, const Guards& guards) {
  if (g.order() > guards.max_order_exact) return Exact<std::size_t>::skipped(SolveStatus::skipped_guard);
  if (g.order() == 0) return Exact<std::size_t>::computed(0);
  const Deadline deadline = Deadline::after(guards.time_budget_seconds);
  auto clique = max_clique(g, deadline);
  const std::size_t upper = dsatur_greedy(g);
  const std::size_t lower = clique.clique.size();
  if (lower == upper) return Exact<std::size_t>::computed(upper);
  if (!clique.exact) return Exact<std::size_t>::skipped(SolveStatus::skipped_time);
  ColouringSearch search(g, lower, upper, deadline);
  const std::size_t chi = search.run(clique.clique);
  if (search.timed_out()) return Exact<std::size_t>::skipped(SolveStatus::skipped_time);
  return Exact<std::size_t>::computed(chi);
}

namespace {

class PivotEnumerator {
 public:
  PivotEnumerator(const Graph& g, std::size_t target, Deadline deadline)
      : n_(g.order()), target_(target), deadline_(deadline) {
    rows_.reserve(n_);
    for (VertexId v = 0; v < n_; ++v) rows_.emplace_back(n_, g.row(v));
  }

  void run() {
    std::vector<VertexId> r;
    expand(r, Bits::full(n_), Bits(n_));
  }

  bool timed_out() const { return timed_out_; }
  std::vector<std::vector<VertexId>>& found() { return found_; }

 private:
  void expand(std::vector<VertexId>& r, Bits p, Bits x) {
    if (timed_out_) return;
    if (++nodes_ % kCheckEvery == 0 && deadline_.expired()) {
      timed_out_ = true;
      return;
    }
    if (!p.any()) {
      if (!x.any() && r.size() == target_) {
        auto clique = r;
        std::sort(clique.begin(), clique.end());
        found_.push_back(std::move(clique));
      }
      return;
    }
    if (r.size() + p.count() < target_) return;

    std::size_t pivot = n_;
    std::size_t pivot_score = 0;
    auto consider = [&](std::size_t u) {
      std::size_t s = p.and_count(rows_[u]);
      if (pivot == n_ || s > pivot_score) {
        pivot = u;
        pivot_score = s;
      }
    };
    p.for_each(consider);
    x.for_each(consider);

    Bits candidates = p;
    candidates.subtract(rows_[pivot]);
    candidates.for_each([&](std::size_t v) {
      if (timed_out_) return;
      r.push_back(static_cast<VertexId>(v));
      expand(r, p & rows_[v], x & rows_[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    });
  }

  std::size_t n_;
  std::size_t target_;
  Deadline deadline_;
  std::vector<Bits> rows_;
  std::vector<std::vector<VertexId>> found_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

Exact<std::vector<std::vector<VertexId>>> maximum_cliques(const Graph& g, const Guards& guards) {
  using Result = Exact<std::vector<std::vector<VertexId>>>;
  if (g.order() > guards.max_order_exact) return Result::skipped(SolveStatus::skipped_guard);
  if (g.order() == 0) return Result::computed({});
  const Deadline deadline = Deadline::after(guards.time_budget_seconds);
  auto omega = max_clique(g, deadline);
  if (!omega.exact) return Result::skipped(SolveStatus::skipped_time);
  PivotEnumerator enumerator(g, omega.clique.size(), deadline);
  enumerator.run();
  if (enumerator.timed_out()) return Result::skipped(SolveStatus::skipped_time);
  auto cliques = std::move(enumerator.found());
  std::sort(cliques.begin(), cliques.end());
  return Result::computed(std::move(cliques));
}

namespace {

class DominationSearch {
 public:
  DominationSearch(const Graph& g, Deadline deadline) : n_(g.order()), deadline_(deadline) {
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    closed_.resize(n_);
    for (VertexId v = 0; v < n_; ++v) closed_[v] = g.row(v)[0] | (std::uint64_t{1} << v);
  }

  std::size_t run() {
    best_ = greedy();
    search(0, 0);
    return best_;
  }

  bool timed_out() const { return timed_out_; }

 private:
  std::size_t greedy() const {
    std::uint64_t dominated = 0;
    std::size_t used = 0;
    while (dominated != all_) {
      std::size_t pick = 0;
      int gain = -1;
      for (std::size_t v = 0; v < n_; ++v) {
        int c = std::popcount(closed_[v] & ~dominated);
        if (c > gain) {
          gain = c;
          pick = v;
        }
      }
      dominated |= closed_[pick];
      ++used;
    }
    return used;
  }

  void search(std::uint64_t dominated, std::size_t used) {
    if (timed_out_) return;
    if (++nodes_ % kCheckEvery == 0 && deadline_.expired()) {
      timed_out_ = true;
      return;
    }
    if (dominated == all_) {
      best_ = std::min(best_, used);
      return;
    }
    if (used + 1 >= best_) return;
    const std::uint64_t open = all_ & ~dominated;
    int max_gain = 0;
    for (std::size_t v = 0; v < n_; ++v) max_gain = std::max(max_gain, std::popcount(closed_[v] & open));
    const auto remaining = static_cast<std::size_t>(std::popcount(open));
    if (used + (remaining + max_gain - 1) / max_gain >= best_) return;

    // Branch on the undominated vertex with the fewest ways to dominate it.
    std::size_t target = n_;
    int fewest = 65;
    for (std::uint64_t bits = open; bits; bits &= bits - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(bits));
      int ways = std::popcount(closed_[v]);
      if (ways < fewest) {
        fewest = ways;
        target = v;
      }
    }
    std::vector<std::pair<int, std::size_t>> options;
    for (std::uint64_t bits = closed_[target]; bits; bits &= bits - 1) {
      auto w = static_cast<std::size_t>(std::countr_zero(bits));
      options.emplace_back(-std::popcount(closed_[w] & open), w);
    }
    std::sort(options.begin(), options.end());
    for (auto [neg_gain, w] : options) {
      search(dominated | closed_[w], used + 1);
      if (timed_out_) return;
    }
  }

  std::size_t n_;
  Deadline deadline_;
  std::uint64_t all_ = 0;
  std::vector<std::uint64_t> closed_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

Exact<std::size_t> domination_number(const Graph& g, const Guards& guards) {
  const std::size_t cap = std::min<std::size_t>(guards.max_order_domination, 64);
  if (g.order() > cap) return Exact<std::size_t>::skipped(SolveStatus::skipped_guard);
  if (g.order() == 0) return Exact<std::size_t>::computed(0);
  DominationSearch search(g, Deadline::after(guards.time_budget_seconds));
  const std::size_t gamma = search.run();
  if (search.timed_out()) return Exact<std::size_t>::skipped(SolveStatus::skipped_time);
  return Exact<std::size_t>::computed(gamma);
}

Exact<bool> is_perfect_bounded(const Graph& g, const Guards& guards) {
  const std::size_t cap = std::min<std::size_t>(guards.max_order_perfect, 20);
  if (g.order() > cap) return Exact<bool>::skipped(SolveStatus::skipped_guard);
  const std::size_t n = g.order();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<std::uint32_t> nbr(n);
  for (VertexId v = 0; v < n; ++v) nbr[v] = n ? static_cast<std::uint32_t>(g.row(v)[0]) : 0;

  std::vector<std::uint8_t> omega(subsets, 0);
  std::vector<std::uint8_t> independent(subsets, 0);
  independent[0] = 1;
  for (std::size_t m = 1; m < subsets; ++m) {
    const auto v = static_cast<std::size_t>(std::countr_zero(m));
    const std::size_t rest = m & (m - 1);
    omega[m] = std::max<std::uint8_t>(omega[rest], static_cast<std::uint8_t>(1 + omega[rest & nbr[v]]));
    independent[m] = independent[rest] && (rest & nbr[v]) == 0;
  }

  std::vector<std::uint8_t> chi(subsets, 0);
  for (std::size_t m = 1; m < subsets; ++m) {
    const std::size_t low = m & (~m + 1);
    const std::size_t rest = m ^ low;
    std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
    // Colour classes containing the lowest vertex of m.
    for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
      const std::size_t cls = sub | low;
      if (independent[cls]) best = std::min<std::uint8_t>(best, static_cast<std::uint8_t>(1 + chi[m ^ cls]));
      if (sub == 0) break;
    }
    chi[m] = best;
    if (chi[m] != omega[m]) return Exact<bool>::computed(false);
  }
  return Exact<bool>::computed(true);
}

InvariantReport invariant_report(const Graph& g, const Guards& guards) {
  InvariantReport r;
  r.order = g.order();
  r.size = g.size();
  r.degree_sequence = degree_sequence(g);
  if (!r.degree_sequence.empty()) {
    r.max_degree = r.degree_sequence.front();
    r.min_degree = r.degree_sequence.back();
  }
  r.is_connected = is_connected(g);
  r.is_acyclic = is_acyclic(g);
  r.is_complete = is_complete(g);
  r.is_eulerian = is_eulerian(g);
  r.has_universal_vertex = has_universal_vertex(g);
  r.triangle_count = triangle_count(g);
  r.chromatic_number = chromatic_number(g, guards);
  r.clique_number = clique_number(g, guards);
  r.domination_number = domination_number(g, guards);
  r.is_perfect = is_perfect_bounded(g, guards);
  return r;
}

}  // namespace phigraph
