#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "claim_defs.hpp"
#include "phigraph/numtheory.hpp"
#include "phigraph/phifamily.hpp"
#include "phigraph/setgraph.hpp"

namespace phigraph::detail {

namespace {

using u64 = std::uint64_t;

std::string join(const std::vector<u64>& xs, const char* sep) {
  std::string out;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    if (j) out += sep;
    out += std::to_string(xs[j]);
  }
  return out;
}

std::string braces(const std::vector<u64>& xs) { return "{" + join(xs, ",") + "}"; }

ClaimParam n_param(u64 n) { return {"n=" + std::to_string(n), {n}}; }

std::vector<ClaimParam> n_params(const Range& r, u64 floor) {
  std::vector<ClaimParam> out;
  for (u64 n = std::max(r.lo, floor); n <= r.hi; ++n) out.push_back(n_param(n));
  return out;
}

std::string n_range(const Range& r, u64 floor) {
  return "n=" + std::to_string(std::max(r.lo, floor)) + ".." + std::to_string(r.hi);
}

PartVerdict check(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok ? Outcome::holds : Outcome::refuted, std::move(detail)};
}

PartVerdict skip(std::string name, std::string detail) {
  return {std::move(name), Outcome::skipped, std::move(detail)};
}

PartVerdict not_applicable(std::string name, std::string detail) {
  return {std::move(name), Outcome::not_applicable, std::move(detail)};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Verdict start(const ClaimParam& p) {
  Verdict v;
  v.param = p.label;
  v.values = p.values;
  return v;
}

Verdict finish(Verdict v) {
  auto any = [&](Outcome o) {
    return std::any_of(v.parts.begin(), v.parts.end(), [&](const PartVerdict& p) { return p.result == o; });
  };
  if (any(Outcome::refuted)) {
    v.result = Outcome::refuted;
    if (!v.witness) {
      for (const auto& p : v.parts) {
        if (p.result == Outcome::refuted) {
          v.witness = p.name + ": " + p.detail;
          break;
        }
      }
    }
  } else {
    v.witness.reset();
    v.witness_values.clear();
    if (any(Outcome::skipped)) {
      v.result = Outcome::skipped;
    } else if (any(Outcome::holds)) {
      v.result = Outcome::holds;
    } else {
      v.result = Outcome::not_applicable;
    }
  }
  return v;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (VertexId v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::string render_vertices(const Graph& g, std::span<const VertexId> vs) {
  std::string out;
  for (VertexId v : vs) {
    if (!out.empty()) out += ' ';
    out += g.label(v).render();
  }
  return out;
}

// Set-graph claims are restricted to phi(n) <= the sweep's phi cap; the
// guards handed to the builders must admit at least that much.
Guards setgraph_guards(const Guards& guards, const ClaimParams& cp) {
  Guards g = guards;
  g.phi_cap = std::max(g.phi_cap, cp.phi_cap);
  return g;
}

std::optional<PartVerdict> phi_guard(u64 n, const ClaimParams& cp) {
  const u64 phi = euler_phi(n);
  if (phi <= cp.phi_cap) return std::nullopt;
  return skip("phi_cap", "phi(" + std::to_string(n) + ") = " + std::to_string(phi) +
                             " exceeds phi cap " + std::to_string(cp.phi_cap));
}

std::string phi_range(const ClaimParams& cp) {
  return n_range(cp.n, 1) + ", phi(n)<=" + std::to_string(cp.phi_cap);
}

template <class T>
std::string exact_str(const Exact<T>& e) {
  if (!e) return to_string(e.status);
  if constexpr (std::is_same_v<T, bool>) {
    return yes_no(*e);
  } else {
    return std::to_string(*e);
  }
}

PartVerdict exact_equals(std::string name, const Exact<std::size_t>& got, std::size_t want) {
  if (!got) return skip(std::move(name), to_string(got.status));
  return check(std::move(name), *got == want,
               "got " + std::to_string(*got) + ", expected " + std::to_string(want));
}

// ---- integer divisor / coprime graphs on S_phi(n) ----

struct PhiGraphs {
  PhiContext ctx;
  Graph gd;
  Graph gp;
};

PhiGraphs phi_graphs(u64 n) {
  PhiGraphs out{phi_context(n), {}, {}};
  out.gd = divisor_graph(out.ctx.phi_set);
  out.gp = coprime_graph(out.ctx.phi_set);
  return out;
}

Verdict eval_t21(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const auto g = phi_graphs(p.values[0]);
  const bool a = is_acyclic(g.gd);
  const bool c = is_complete(g.gp);
  const std::string d = "acyclic=" + yes_no(a) + " complete=" + yes_no(c);
  v.parts.push_back(check("acyclic=>complete", !a || c, d));
  v.parts.push_back(check("complete=>acyclic", !c || a, d));
  return finish(std::move(v));
}

Verdict eval_l22i(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  const u64 q = factorize_oracle(n).primes.front();
  v.parts.push_back(check("prime_divisor_below_n", q < n, std::to_string(q) + " | " + std::to_string(n)));
  return finish(std::move(v));
}

Verdict eval_l22ii(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const auto k = static_cast<std::size_t>(p.values[0]);
  const auto primes = first_primes(k + 1);
  const BigNat prod = primorial(k);
  const BigNat next = primes.back();
  const BigNat sq = next * next;
  const bool ok = prod < sq;
  const std::string d = join({primes.begin(), primes.end() - 1}, "*") + " = " + to_string(prod) +
                        (ok ? " < " : " >= ") + std::to_string(primes.back()) + "^2 = " + to_string(sq);
  v.parts.push_back(check("primorial<next_prime^2", ok, d));
  if (!ok) v.witness = d;
  return finish(std::move(v));
}

Verdict eval_t23(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  const auto g = phi_graphs(n);
  const bool a = is_acyclic(g.gd);
  const bool pre = theta_is_prime_prefix(n).holds;
  const std::string theta = "S_theta=" + braces(g.ctx.theta_set);
  v.parts.push_back(check("acyclic=>prefix", !a || pre, "acyclic=" + yes_no(a) + " " + theta));
  std::string cycle_text;
  if (pre && !a) {
    const auto cycle = find_cycle(g.gd);
    cycle_text = "cycle " + render_vertices(g.gd, *cycle);
    v.witness = cycle_text;
    for (VertexId x : *cycle) v.witness_values.push_back(g.gd.label(x).value);
  }
  v.parts.push_back(check("prefix=>acyclic", !pre || a, pre && !a ? cycle_text : theta));
  return finish(std::move(v));
}

Verdict eval_r23n(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const auto g = phi_graphs(p.values[0]);
  v.parts.push_back(check("acyclic", is_acyclic(g.gd), "edges=" + std::to_string(g.gd.size())));
  return finish(std::move(v));
}

Verdict eval_c24(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  const bool a = is_acyclic(phi_graphs(n).gd);
  v.parts.push_back(check("acyclic=>even", !a || n % 2 == 0, "acyclic with n odd"));
  return finish(std::move(v));
}

bool square_bound(const PhiContext& ctx) {
  const u64 x = *ctx.min_above_one;
  return ctx.n <= x * x;
}

Verdict eval_t25(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const auto g = phi_graphs(p.values[0]);
  const bool a = is_acyclic(g.gd);
  const bool b = square_bound(g.ctx);
  const std::string d = "x=" + std::to_string(*g.ctx.min_above_one) + " acyclic=" + yes_no(a) +
                        " n<=x^2=" + yes_no(b);
  v.parts.push_back(check("acyclic=>n<=x^2", !a || b, d));
  v.parts.push_back(check("n<=x^2=>acyclic", !b || a, d));
  return finish(std::move(v));
}

Verdict eval_c26(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  const auto g = phi_graphs(n);
  const std::pair<const char*, bool> preds[] = {
      {"prefix", theta_is_prime_prefix(n).holds},
      {"acyclic", is_acyclic(g.gd)},
      {"complete", is_complete(g.gp)},
      {"n<=x^2", square_bound(g.ctx)},
  };
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = a + 1; b < 4; ++b) {
      const std::string d = std::string(preds[a].first) + "=" + yes_no(preds[a].second) + " " +
                            preds[b].first + "=" + yes_no(preds[b].second);
      v.parts.push_back(check(std::string(preds[a].first) + "<=>" + preds[b].first,
                              preds[a].second == preds[b].second, d));
    }
  }
  return finish(std::move(v));
}

Verdict eval_p27(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  const auto prefix = theta_is_prime_prefix(n);
  if (!prefix.holds) return finish(std::move(v));
  const auto g = phi_graphs(n);
  const std::size_t delta = max_degree(g.gd);
  const auto pk = first_primes(*prefix.k).back();
  std::size_t between = 0;
  for (u64 q = pk + 1; q < n; ++q) between += is_prime(q) ? 1 : 0;
  const std::string ed = "eps(G_d)=" + std::to_string(g.gd.size());
  v.parts.push_back(check("eps_d=Delta", g.gd.size() == delta, ed + " Delta=" + std::to_string(delta)));
  v.parts.push_back(check("eps_d=prime_count", g.gd.size() == between,
                          ed + " primes in (" + std::to_string(pk) + "," + std::to_string(n) +
                              ")=" + std::to_string(between)));
  v.parts.push_back(check("eps_p=Delta(Delta+1)/2", g.gp.size() == delta * (delta + 1) / 2,
                          "eps(G_p)=" + std::to_string(g.gp.size()) + " Delta=" + std::to_string(delta)));
  return finish(std::move(v));
}

Verdict eval_o28(const ClaimParam& p, const ClaimParams&, const Guards& guards) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  if (!theta_is_prime_prefix(n).holds) return finish(std::move(v));
  const auto g = phi_graphs(n);
  const std::size_t delta = max_degree(g.gd);
  v.parts.push_back(exact_equals("gamma_d=1", domination_number(g.gd, guards), 1));
  v.parts.push_back(exact_equals("gamma_p=1", domination_number(g.gp, guards), 1));
  v.parts.push_back(exact_equals("chi_d=2", chromatic_number(g.gd, guards), 2));
  v.parts.push_back(exact_equals("chi_p=Delta+1", chromatic_number(g.gp, guards), delta + 1));
  v.parts.push_back(exact_equals("omega_d=2", clique_number(g.gd, guards), 2));
  v.parts.push_back(exact_equals("omega_p=Delta+1", clique_number(g.gp, guards), delta + 1));
  for (auto [name, graph] : {std::pair{"perfect_d", &g.gd}, std::pair{"perfect_p", &g.gp}}) {
    const auto perfect = is_perfect_bounded(*graph, guards);
    if (!perfect) {
      v.parts.push_back(skip(name, to_string(perfect.status)));
    } else {
      v.parts.push_back(check(name, *perfect, "an induced subgraph has chi > omega"));
    }
  }
  return finish(std::move(v));
}

// ---- set-graph weight claims ----

std::vector<std::vector<u64>> subsets_of(u64 lo, u64 hi, unsigned max_size) {
  std::vector<u64> pool;
  for (u64 x = lo; x <= hi; ++x) pool.push_back(x);
  std::vector<std::vector<u64>> out;
  std::vector<std::size_t> pos;
  for (unsigned s = 1; s <= max_size && s <= pool.size(); ++s) {
    pos.resize(s);
    std::iota(pos.begin(), pos.end(), std::size_t{0});
    while (true) {
      std::vector<u64> set;
      for (auto q : pos) set.push_back(pool[q]);
      out.push_back(std::move(set));
      int k = static_cast<int>(s) - 1;
      while (k >= 0 && pos[k] == pool.size() - s + k) --k;
      if (k < 0) break;
      ++pos[k];
      for (std::size_t j = k + 1; j < s; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return out;
}

bool pairwise_coprime(const std::vector<u64>& set) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (std::gcd(set[a], set[b]) != 1) return false;
    }
  }
  return true;
}

ClaimParam set_param(std::vector<u64> set, const std::string& prefix = {}) {
  return {prefix + "A=" + braces(set), std::move(set)};
}

Verdict eval_p32(const ClaimParam& p, const ClaimParams&, const Guards& guards) {
  Verdict v = start(p);
  const u64 b = p.values[0];
  std::vector<u64> base(b);
  std::iota(base.begin(), base.end(), u64{1});
  const Graph g = build_set_graph(base);
  const std::size_t want = std::size_t{1} << (b - 1);
  const auto cliques = maximum_cliques(g, guards);
  if (!cliques) {
    v.parts.push_back(skip("omega=2^(b-1)", to_string(cliques.status)));
    v.parts.push_back(skip("count=2^(b-1)", to_string(cliques.status)));
    return finish(std::move(v));
  }
  const std::size_t omega = cliques.value->front().size();
  const std::size_t count = cliques.value->size();
  const std::string d = "omega=" + std::to_string(omega) + " count=" + std::to_string(count) +
                        " expected=" + std::to_string(want);
  v.parts.push_back(check("omega=2^(b-1)", omega == want, d));
  v.parts.push_back(check("count=2^(b-1)", count == want, d));
  if (count != want || omega != want) {
    v.witness = d;
    v.witness_values = {omega, count};
  }
  return finish(std::move(v));
}

Verdict eval_p33(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const auto table = weight_multiplicity_table(p.values);
  if (p.values.front() != 1) {
    for (const auto& [w, m] : table.entries) {
      if (m != 1) {
        v.parts.push_back(check("distinct", false,
                                "weight " + to_string(w) + " has multiplicity " + std::to_string(m)));
        v.witness_values = {w.convert_to<u64>(), m};
        return finish(std::move(v));
      }
    }
    v.parts.push_back(check("distinct", true));
    return finish(std::move(v));
  }
  for (const auto& [w, m] : table.entries) {
    const std::size_t want = w == 1 ? 1 : 2;
    if (m != want) {
      v.parts.push_back(check("pairs", false,
                              "weight " + to_string(w) + " has multiplicity " + std::to_string(m)));
      v.witness_values = {w.convert_to<u64>(), m};
      return finish(std::move(v));
    }
  }
  v.parts.push_back(check("pairs", true));
  return finish(std::move(v));
}

Verdict eval_t34(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const auto table = weight_multiplicity_table(p.values);
  for (const auto& [w, m] : table.entries) {
    if (m != 1 && m % 2 == 1) {
      v.parts.push_back(check("even_repeats", false,
                              "weight " + to_string(w) + " has multiplicity " + std::to_string(m)));
      v.witness = "A=" + braces(p.values) + ": weight " + to_string(w) + " has multiplicity " +
                  std::to_string(m);
      v.witness_values = {w.convert_to<u64>(), m};
      return finish(std::move(v));
    }
  }
  v.parts.push_back(check("even_repeats", true));
  return finish(std::move(v));
}

std::vector<ClaimParam> t34_params(const ClaimParams& cp, bool require_one) {
  std::vector<ClaimParam> out;
  for (auto& set : subsets_of(1, cp.set_universe, cp.set_max_size)) {
    if (require_one && set.front() != 1) continue;
    out.push_back(set_param(std::move(set)));
  }
  return out;
}

// ---- Euler phi set-graph claims ----

Verdict eval_c35(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  const u64 m = p.values[1];
  const Guards g = setgraph_guards(guards, cp);
  const Graph gn = phi_family(n, FamilyId::phi_setgraph, g);
  const Graph gm = phi_family(m, FamilyId::phi_setgraph, g);
  const auto iso = are_isomorphic(gn, gm, guards);
  const bool eq = euler_phi(n) == euler_phi(m);
  if (!iso) {
    v.parts.push_back(skip("phi_equal=>isomorphic", to_string(iso.status)));
    v.parts.push_back(skip("isomorphic=>phi_equal", to_string(iso.status)));
    return finish(std::move(v));
  }
  const std::string d = "phi(n)=" + std::to_string(euler_phi(n)) + " phi(m)=" +
                        std::to_string(euler_phi(m)) + " isomorphic=" + yes_no(*iso);
  v.parts.push_back(check("phi_equal=>isomorphic", !eq || *iso, d));
  v.parts.push_back(check("isomorphic=>phi_equal", !*iso || eq, d));
  return finish(std::move(v));
}

std::vector<ClaimParam> c35_params(const ClaimParams& cp) {
  std::vector<u64> ns;
  for (u64 n = cp.n.lo; n <= cp.n.hi; ++n) {
    if (euler_phi(n) <= cp.iso_phi_max) ns.push_back(n);
  }
  std::vector<ClaimParam> out;
  for (std::size_t a = 0; a < ns.size(); ++a) {
    for (std::size_t b = a + 1; b < ns.size(); ++b) {
      out.push_back({"n=" + std::to_string(ns[a]) + ",m=" + std::to_string(ns[b]), {ns[a], ns[b]}});
    }
  }
  return out;
}

// Shared shell for claims on G_d(iota) / G_p(iota) of S_phi(n).
template <class Body>
Verdict with_phi_graph(const ClaimParam& p, const ClaimParams& cp, const Guards& guards, FamilyId family,
                       Body body) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  if (auto guard = phi_guard(n, cp)) {
    v.parts.push_back(*guard);
    return finish(std::move(v));
  }
  const Graph g = phi_family(n, family, setgraph_guards(guards, cp));
  body(v, g, n);
  return finish(std::move(v));
}

Verdict eval_l36(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  return with_phi_graph(p, cp, guards, FamilyId::phi_lcm_divisor, [](Verdict& v, const Graph& g, u64 n) {
    const std::size_t want = (std::size_t{1} << euler_phi(n)) - 2;
    const std::size_t delta = max_degree(g);
    std::size_t count = 0;
    for (VertexId x = 0; x < g.order(); ++x) count += g.degree(x) == delta ? 1 : 0;
    v.parts.push_back(check("Delta=2^phi-2", delta == want,
                            "Delta=" + std::to_string(delta) + " expected " + std::to_string(want)));
    v.parts.push_back(check("max_degree_count=3", count == 3,
                            "max-degree vertices=" + std::to_string(count)));
  });
}

Verdict eval_t37(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  return with_phi_graph(p, cp, guards, FamilyId::phi_lcm_divisor, [](Verdict& v, const Graph& g, u64) {
    for (VertexId x = 0; x < g.order(); ++x) {
      if (g.degree(x) % 2 == 1) {
        v.parts.push_back(check("even_degrees", false,
                                g.label(x).render() + " has degree " + std::to_string(g.degree(x))));
        return;
      }
    }
    v.parts.push_back(check("even_degrees", true));
  });
}

Verdict eval_c38(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  return with_phi_graph(p, cp, guards, FamilyId::phi_lcm_divisor, [](Verdict& v, const Graph& g, u64) {
    if (g.order() == 1) {
      v.parts.push_back(not_applicable("eulerian", "single vertex"));
      return;
    }
    v.parts.push_back(check("eulerian", is_eulerian(g),
                            "connected=" + yes_no(is_connected(g))));
  });
}

Verdict eval_c39(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  return with_phi_graph(p, cp, guards, FamilyId::phi_lcm_divisor,
                        [&](Verdict& v, const Graph& g, u64 n) {
                          const Graph s = phi_family(n, FamilyId::phi_setgraph, setgraph_guards(guards, cp));
                          const auto chi_s = chromatic_number(s, guards);
                          const auto chi_d = chromatic_number(g, guards);
                          if (!chi_s || !chi_d) {
                            v.parts.push_back(skip("chi_set<=chi_d",
                                                   "chi_set " + exact_str(chi_s) + ", chi_d " + exact_str(chi_d)));
                            return;
                          }
                          v.parts.push_back(check("chi_set<=chi_d", *chi_s <= *chi_d,
                                                  "chi_set=" + std::to_string(*chi_s) +
                                                      " chi_d=" + std::to_string(*chi_d)));
                        });
}

Verdict eval_c310(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  return with_phi_graph(p, cp, guards, FamilyId::phi_lcm_divisor, [&](Verdict& v, const Graph& g, u64) {
    const auto chi = chromatic_number(g, guards);
    const auto omega = clique_number(g, guards);
    if (!chi || !omega) {
      v.parts.push_back(skip("chi=omega", "chi " + exact_str(chi) + ", omega " + exact_str(omega)));
      return;
    }
    v.parts.push_back(check("chi=omega", *chi == *omega,
                            "chi=" + std::to_string(*chi) + " omega=" + std::to_string(*omega)));
  });
}

Verdict eval_c311(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  return with_phi_graph(p, cp, guards, FamilyId::phi_lcm_divisor, [&](Verdict& v, const Graph& g, u64 n) {
    const u64 m = n - 1;
    // floor(log2(2^m - 1)) + 1 is the bit width of 2^m - 1.
    const std::size_t formula = std::bit_width((u64{1} << m) - 1);
    const auto chi = chromatic_number(g, guards);
    v.parts.push_back(exact_equals("chi=floor(log2(2^n-1))+1", chi, formula));
    if (chi && *chi != formula) v.witness_values = {*chi, formula};
  });
}

std::vector<ClaimParam> prime_params(const ClaimParams& cp) {
  std::vector<ClaimParam> out;
  for (u64 n = std::max<u64>(cp.n.lo, 2); n <= cp.n.hi; ++n) {
    if (is_prime(n)) out.push_back({"p=" + std::to_string(n), {n}});
  }
  return out;
}

Verdict eval_garg(const ClaimParam& p, const ClaimParams&, const Guards&) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  const auto garg = garg_compute(n);
  const auto oracle = factorize_oracle(n);
  const auto ctx = phi_context(n);
  const u64 phi = euler_phi(n);
  v.parts.push_back(check("prime_set", garg.prime_set == oracle.primes,
                          "garg " + braces(garg.prime_set) + " oracle " + braces(oracle.primes)));
  v.parts.push_back(check("phi", garg.phi == phi && garg.phi == ctx.phi,
                          "garg " + std::to_string(garg.phi) + " product formula " + std::to_string(phi) +
                              " direct " + std::to_string(ctx.phi)));
  v.parts.push_back(check("phi_set", garg.literal_phi_set == ctx.phi_set && garg.phi_set == ctx.phi_set,
                          "garg " + braces(garg.literal_phi_set) + " direct " + braces(ctx.phi_set)));
  return finish(std::move(v));
}

Verdict eval_lp(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  return with_phi_graph(p, cp, guards, FamilyId::phi_lcm_coprime, [](Verdict& v, const Graph& g, u64 n) {
    const std::size_t want = (std::size_t{1} << euler_phi(n)) - 2;
    const std::size_t delta = max_degree(g);
    v.parts.push_back(check("Delta=2^phi-2", delta == want,
                            "Delta=" + std::to_string(delta) + " expected " + std::to_string(want)));
  });
}

PartVerdict identity_part(const char* name, const IdentityCheck& c) {
  const std::string both = "G_d identity=" + yes_no(c.d_identity) + " G_p identity=" + yes_no(c.p_identity);
  if (!c.applicable) {
    return not_applicable(name, c.blocking_pair->first + " and " + c.blocking_pair->second +
                                    " neither divide nor are coprime; " + both);
  }
  return check(name, c.d_identity && c.p_identity, both);
}

Verdict eval_tc(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  v.parts.push_back(identity_part("unweighted", complement_identity_holds(n)));
  if (auto guard = phi_guard(n, cp)) {
    v.parts.push_back(skip("weighted", guard->detail));
  } else {
    v.parts.push_back(identity_part("weighted", weighted_complement_identity_holds(n, setgraph_guards(guards, cp))));
  }
  return finish(std::move(v));
}

bool is_path3(const Graph& g) {
  return g.order() == 3 && g.size() == 2 && is_connected(g);
}

Verdict eval_tt(const ClaimParam& p, const ClaimParams& cp, const Guards& guards) {
  Verdict v = start(p);
  const u64 n = p.values[0];
  if (auto guard = phi_guard(n, cp)) {
    v.parts.push_back(*guard);
    return finish(std::move(v));
  }
  const Guards sg = setgraph_guards(guards, cp);
  const Graph gd = phi_family(n, FamilyId::phi_lcm_divisor, sg);
  const Graph gp = phi_family(n, FamilyId::phi_lcm_coprime, sg);
  const u64 phi = euler_phi(n);
  if (phi == 1) {
    v.parts.push_back(check("excluded: single vertex", gd.order() == 1 && gp.order() == 1,
                            "orders " + std::to_string(gd.order()) + ", " + std::to_string(gp.order())));
  } else if (phi == 2) {
    v.parts.push_back(check("excluded: G_d triangle, G_p path P_3", is_complete(gd) && gd.order() == 3 && is_path3(gp),
                            "G_d edges=" + std::to_string(gd.size()) + " G_p edges=" + std::to_string(gp.size())));
  } else {
    for (auto [name, g] : {std::pair{"triangle_d", &gd}, std::pair{"triangle_p", &gp}}) {
      const auto t = contains_triangle(*g);
      v.parts.push_back(check(name, t.found, t.found ? render_vertices(*g, *t.witness) : "triangle-free"));
    }
  }
  return finish(std::move(v));
}

// ---- registry ----

std::function<std::vector<ClaimParam>(const ClaimParams&)> n_from(u64 floor) {
  return [floor](const ClaimParams& cp) { return n_params(cp.n, floor); };
}

std::function<std::string(const ClaimParams&)> n_range_from(u64 floor) {
  return [floor](const ClaimParams& cp) { return n_range(cp.n, floor); };
}

ClaimInfo info(std::string id, std::string statement, std::string quote, std::string domain,
               std::vector<std::string> guards = {}, bool variant = false) {
  return {std::move(id), std::move(statement), std::move(quote), std::move(domain), std::move(guards), variant};
}

std::vector<ClaimDef> build_registry() {
  std::vector<ClaimDef> r;
  const std::vector<std::string> phi_guards = {"phi_cap"};
  const std::vector<std::string> exact_guards = {"phi_cap", "max_order_exact", "time_budget"};

  r.push_back({info("T2.1", "The divisor graph on the coprime residues is a forest exactly when the coprime graph on them is complete.",
                    "G_d(S_phi(n)) acyclic <=> G_p(S_phi(n)) complete", "n in range"),
               n_from(1), n_range_from(1), eval_t21, {}});
  r.push_back({info("L2.2i", "Every composite n >= 4 has a prime divisor below n.",
                    "n composite => p | n for some prime p < n", "composite n >= 4 in range"),
               [](const ClaimParams& cp) {
                 std::vector<ClaimParam> out;
                 for (u64 n = std::max<u64>(cp.n.lo, 4); n <= cp.n.hi; ++n) {
                   if (!is_prime(n)) out.push_back(n_param(n));
                 }
                 return out;
               },
               n_range_from(4), eval_l22i, {}});
  r.push_back({info("L2.2ii", "The product of the first k primes is below the square of the next prime.",
                    "p_1 * ... * p_k < p_{k+1}^2", "k in k-range"),
               [](const ClaimParams& cp) {
                 std::vector<ClaimParam> out;
                 for (u64 k = std::max<u64>(cp.k.lo, 1); k <= cp.k.hi; ++k) {
                   out.push_back({"k=" + std::to_string(k), {k}});
                 }
                 return out;
               },
               [](const ClaimParams& cp) { return "k=" + cp.k.str(); }, eval_l22ii, {}});
  r.push_back({info("T2.3", "For n >= 5 the divisor graph on the coprime residues is a forest exactly when the prime divisors of n are the first k primes.",
                    "n >= 5: G_d(S_phi(n)) acyclic <=> S_theta(n) = P(k) for some k", "n >= 5 in range"),
               n_from(5), n_range_from(5), eval_t23, {}});
  r.push_back({info("R2.3n", "For n from 1 to 4 the divisor graph on the coprime residues is a forest.",
                    "1 <= n <= 4: G_d(S_phi(n)) acyclic", "n = 1..4 (fixed)"),
               [](const ClaimParams&) {
                 std::vector<ClaimParam> out;
                 for (u64 n = 1; n <= 4; ++n) out.push_back(n_param(n));
                 return out;
               },
               [](const ClaimParams&) { return std::string("n=1..4"); }, eval_r23n, {}});
  r.push_back({info("C2.4", "For n >= 5 a forest divisor graph on the coprime residues forces n even.",
                    "n >= 5: G_d(S_phi(n)) acyclic => 2 | n", "n >= 5 in range"),
               n_from(5), n_range_from(5), eval_c24, {}});
  r.push_back({info("T2.5", "With x the least coprime residue above 1, the divisor graph is a forest exactly when n <= x^2.",
                    "x = min(S_phi(n) - {1}): G_d(S_phi(n)) acyclic <=> n <= x^2",
                    "n >= 5 in range; also reported for even n alone"),
               n_from(5), n_range_from(5), eval_t25,
               {{"even n", [](const ClaimParam& p) { return p.values[0] % 2 == 0; }}}});
  r.push_back({info("C2.6", "For n >= 5 the prime-prefix property, forest divisor graph, complete coprime graph and n <= x^2 are equivalent.",
                    "n >= 5: S_theta(n) = P(k) <=> G_d acyclic <=> G_p complete <=> n <= x^2", "n >= 5 in range"),
               n_from(5), n_range_from(5), eval_c26, {}});
  r.push_back({info("P2.7", "Under the prime-prefix hypothesis the divisor graph has Delta edges, matching the primes between p_k and n, and the coprime graph has Delta(Delta+1)/2 edges.",
                    "n >= 5, S_theta(n) = P(k): eps(G_d) = #{p prime : p_k < p < n} = Delta, eps(G_p) = Delta(Delta+1)/2",
                    "n >= 5 in range with prime-prefix divisors"),
               n_from(5), n_range_from(5), eval_p27, {}});
  r.push_back({info("O2.8", "Under the prime-prefix hypothesis both graphs have domination number 1, chi and omega are 2 for the divisor graph and Delta+1 for the coprime graph, and both are perfect.",
                    "n >= 5, S_theta(n) = P(k): gamma = 1; chi(G_d) = omega(G_d) = 2; chi(G_p) = omega(G_p) = Delta + 1; perfect",
                    "n >= 5 in range with prime-prefix divisors",
                    {"max_order_domination", "max_order_perfect", "time_budget"}),
               n_from(5), n_range_from(5), eval_o28, {}});
  r.push_back({info("P3.2", "The set-graph on b elements has clique number 2^(b-1) and exactly 2^(b-1) maximum cliques.",
                    "|A| = b: omega(G_A) = 2^(b-1), number of maximum cliques = 2^(b-1)",
                    "A = {1..b}, b = 1..base_size_max", {"max_order_exact", "time_budget"}),
               [](const ClaimParams& cp) {
                 std::vector<ClaimParam> out;
                 for (u64 b = 1; b <= cp.base_size_max; ++b) out.push_back({"|A|=" + std::to_string(b), {b}});
                 return out;
               },
               [](const ClaimParams& cp) { return "|A|=1.." + std::to_string(cp.base_size_max); }, eval_p32, {}});
  r.push_back({info("P3.3", "For pairwise coprime A the subset lcm weights are distinct when 1 is absent, and when 1 is present every weight except that of {1} occurs exactly twice.",
                    "A pairwise coprime: 1 not in A => iota injective; 1 in A => mult(w) = 2 for w != 1",
                    "pairwise coprime A within {2..coprime_universe}, and {1} joined to such sets"),
               [](const ClaimParams& cp) {
                 std::vector<ClaimParam> out;
                 auto sets = subsets_of(2, cp.coprime_universe, cp.coprime_max_size);
                 for (const auto& set : sets) {
                   if (pairwise_coprime(set)) out.push_back(set_param(set, "(i) "));
                 }
                 out.push_back(set_param({1}, "(ii) "));
                 for (const auto& set : sets) {
                   if (set.size() < cp.coprime_max_size && pairwise_coprime(set)) {
                     std::vector<u64> with_one{1};
                     with_one.insert(with_one.end(), set.begin(), set.end());
                     out.push_back(set_param(std::move(with_one), "(ii) "));
                   }
                 }
                 return out;
               },
               [](const ClaimParams& cp) {
                 return "A within {1.." + std::to_string(cp.coprime_universe) + "}, |A|<=" +
                        std::to_string(cp.coprime_max_size) + ", pairwise coprime";
               },
               eval_p33,
               {{"clause (i)", [](const ClaimParam& p) { return p.values.front() != 1; }},
                {"clause (ii)", [](const ClaimParam& p) { return p.values.front() == 1; }}}});
  r.push_back({info("T3.4", "Every subset lcm weight of a set of positive integers occurs once or an even number of times.",
                    "every iota-weight multiplicity is 1 or even",
                    "A within {1..set_universe}, 1 <= |A| <= set_max_size"),
               [](const ClaimParams& cp) { return t34_params(cp, false); },
               [](const ClaimParams& cp) {
                 return "A within {1.." + std::to_string(cp.set_universe) + "}, |A|<=" + std::to_string(cp.set_max_size);
               },
               eval_t34,
               {{"1 in A", [](const ClaimParam& p) { return p.values.front() == 1; }},
                {"1 not in A", [](const ClaimParam& p) { return p.values.front() != 1; }}}});
  r.push_back({info("C3.5", "Two Euler phi set-graphs are isomorphic exactly when the phi values agree.",
                    "G_{S_phi(n)} ~= G_{S_phi(m)} <=> phi(n) = phi(m)",
                    "pairs n < m in range with phi <= iso_phi_max", {"max_order_isomorphism", "time_budget"}),
               c35_params,
               [](const ClaimParams& cp) {
                 return "n<m in " + cp.n.str() + ", phi<=" + std::to_string(cp.iso_phi_max);
               },
               eval_c35, {}});
  r.push_back({info("L3.6", "The lcm-divisor set-graph has maximum degree 2^phi - 2, attained by exactly three vertices.",
                    "Delta(G_d(iota(S_phi(n)))) = 2^phi(n) - 2, attained by exactly 3 vertices",
                    "n in range with phi(n) <= phi_cap", phi_guards),
               n_from(1), phi_range, eval_l36, {}});
  r.push_back({info("T3.7", "Every vertex of the lcm-divisor set-graph has even degree.",
                    "d(v) even for all v in G_d(iota(S_phi(n)))", "n in range with phi(n) <= phi_cap", phi_guards),
               n_from(1), phi_range, eval_t37, {}});
  r.push_back({info("C3.8", "The lcm-divisor set-graph is Eulerian.",
                    "G_d(iota(S_phi(n))) Eulerian", "n in range with 2 <= phi(n) <= phi_cap", phi_guards),
               n_from(1), phi_range, eval_c38, {}});
  r.push_back({info("C3.9", "The set-graph needs no more colours than the lcm-divisor set-graph.",
                    "chi(G_{S_phi(n)}) <= chi(G_d(iota(S_phi(n))))", "n in range with phi(n) <= phi_cap",
                    exact_guards),
               n_from(1), phi_range, eval_c39, {}});
  r.push_back({info("C3.10", "The lcm-divisor set-graph has chromatic number equal to its clique number.",
                    "chi(G_d(iota(S_phi(m)))) = omega(G_d(iota(S_phi(m))))", "m in range with phi(m) <= phi_cap",
                    exact_guards),
               n_from(1), phi_range, eval_c310, {}});
  r.push_back({info("C3.11", "For a prime p the lcm-divisor set-graph of S_phi(p) has chromatic number floor(log2(2^(p-1) - 1)) + 1.",
                    "p prime, n = p - 1: chi(G_d(iota(S_phi(p)))) = floor(log2(2^n - 1)) + 1",
                    "primes p in range with p - 1 <= phi_cap", exact_guards),
               prime_params,
               [](const ClaimParams& cp) {
                 return "p prime in " + cp.n.str() + ", p-1<=" + std::to_string(cp.phi_cap);
               },
               eval_c311, {}});
  r.push_back({info("GARG", "The adapted trial-division procedure recovers the prime divisors of n, phi(n) and the coprime residues.",
                    "strip 2s, divide by odd i <= sqrt(o); S_phi(n) = {1..n-1} - multiples of P",
                    "n in garg-range"),
               [](const ClaimParams& cp) { return n_params(cp.garg, 2); },
               [](const ClaimParams& cp) { return n_range(cp.garg, 2); }, eval_garg, {}});
  r.push_back({info("LP", "The lcm-coprime set-graph has maximum degree 2^phi - 2.",
                    "Delta(G_p(iota(S_phi(n)))) = 2^phi(n) - 2", "n in range with phi(n) <= phi_cap", phi_guards),
               n_from(1), phi_range, eval_lp, {}});
  r.push_back({info("TC", "When every pair of non-unit vertices is divisible or coprime, each graph is the quasi-complement of the other at the unit vertex (plain residues and lcm weights).",
                    "pairs divisible or coprime => G_d = quasi-complement of G_p at the unit vertex, and vice versa",
                    "n in range; weighted form needs phi(n) <= phi_cap", phi_guards),
               n_from(1), n_range_from(1), eval_tc, {}});
  r.push_back({info("TT", "When phi(n) >= 4 both lcm set-graphs contain a triangle; for phi(n) <= 2 they are a single vertex, or a triangle and a path on 3 vertices.",
                    "phi(n) >= 4 => G_d(iota(S_phi(n))) and G_p(iota(S_phi(n))) contain a triangle",
                    "n in range with phi(n) <= phi_cap", phi_guards),
               n_from(1), phi_range, eval_tt, {}});
  return r;
}

std::vector<ClaimDef> build_variants() {
  std::vector<ClaimDef> r;
  r.push_back({info("T3.4r", "Every subset lcm weight of a set containing 1 occurs once or an even number of times.",
                    "1 in A: every iota-weight multiplicity is 1 or even",
                    "A within {1..set_universe} with 1 in A, |A| <= set_max_size", {}, true),
               [](const ClaimParams& cp) { return t34_params(cp, true); },
               [](const ClaimParams& cp) {
                 return "A within {1.." + std::to_string(cp.set_universe) + "}, 1 in A, |A|<=" +
                        std::to_string(cp.set_max_size);
               },
               eval_t34, {}});
  return r;
}

}  // namespace

const std::vector<ClaimDef>& claim_definitions() {
  static const std::vector<ClaimDef> defs = build_registry();
  return defs;
}

const std::vector<ClaimDef>& variant_definitions() {
  static const std::vector<ClaimDef> defs = build_variants();
  return defs;
}

}  // namespace phigraph::detail
