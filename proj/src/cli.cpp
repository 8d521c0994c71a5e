#include "phigraph/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "phigraph/claimlab.hpp"
#include "phigraph/errors.hpp"
#include "phigraph/io.hpp"
#include "phigraph/phifamily.hpp"
#include "phigraph/setgraph.hpp"

namespace phigraph::cli {

namespace {

std::uint64_t to_u64(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw UsageError(what + ": '" + s + "' is not a non-negative integer");
  }
  return v;
}

Range parse_range(const std::string& s, const std::string& what) {
  const auto dots = s.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = to_u64(s, what);
  } else {
    r.lo = to_u64(s.substr(0, dots), what);
    r.hi = to_u64(s.substr(dots + 2), what);
  }
  if (r.lo > r.hi) throw UsageError(what + ": lower bound exceeds upper bound in '" + s + "'");
  return r;
}

std::vector<std::uint64_t> parse_set(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(to_u64(item, "--set"));
  if (out.empty()) throw UsageError("--set: empty set");
  return out;
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

// Guard overrides shared by every subcommand; environment first, flags win.
struct GuardFlags {
  std::optional<std::size_t> max_order;
  std::optional<double> time_budget;
  std::optional<unsigned> phi_cap;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-order", max_order, "Largest order for exact chromatic/clique search");
    cmd->add_option("--time-budget", time_budget, "Seconds per exact computation");
    cmd->add_option("--phi-cap", phi_cap, "Largest phi(n) for set-graph families");
  }

  Guards resolve(unsigned default_phi_cap) const {
    Guards g;
    g.phi_cap = default_phi_cap;
    if (auto e = env("PHIGRAPH_MAX_ORDER")) g.max_order_exact = to_u64(*e, "PHIGRAPH_MAX_ORDER");
    if (auto e = env("PHIGRAPH_TIME_BUDGET")) {
      try {
        g.time_budget_seconds = std::stod(*e);
      } catch (const std::exception&) {
        throw UsageError("PHIGRAPH_TIME_BUDGET: '" + *e + "' is not a number");
      }
    }
    if (auto e = env("PHIGRAPH_PHI_CAP")) g.phi_cap = static_cast<unsigned>(to_u64(*e, "PHIGRAPH_PHI_CAP"));
    if (max_order) g.max_order_exact = *max_order;
    if (time_budget) g.time_budget_seconds = *time_budget;
    if (phi_cap) g.phi_cap = *phi_cap;
    if (g.time_budget_seconds <= 0) throw UsageError("time budget must be positive");
    return g;
  }
};

std::string family_names() {
  std::string out;
  for (FamilyId id : kAllFamilies) out += (out.empty() ? "" : ", ") + std::string(to_string(id));
  return out;
}

struct GraphTarget {
  std::string family;
  std::optional<std::uint64_t> n;
  std::string set;

  void attach(CLI::App* cmd) {
    cmd->add_option("family", family, "Graph family (" + family_names() + ")")->required();
    cmd->add_option("n", n, "Build from S_phi(n)");
    cmd->add_option("--set", set, "Explicit comma-separated set for divisor, coprime, relative_divisor");
  }

  FamilyId id() const {
    auto id = parse_family(family);
    if (!id) throw UsageError("unknown family '" + family + "'; valid families: " + family_names());
    return *id;
  }

  Graph build(const Guards& guards) const {
    const FamilyId f = id();
    if (takes_explicit_set(f)) {
      if (set.empty()) throw UsageError("family '" + family + "' needs --set a,b,...");
      if (n) throw UsageError("family '" + family + "' takes --set, not n");
      return set_family(f, parse_set(set));
    }
    if (!set.empty()) throw UsageError("family '" + family + "' is built from n, not --set");
    if (!n) throw UsageError("family '" + family + "' needs n");
    return phi_family(*n, f, guards);
  }
};

constexpr unsigned kBuildPhiCap = 12;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler phi divisor, coprime and set-graph toolkit", "phigraph"};
  app.require_subcommand(1);

  std::string format;

  auto* phiset = app.add_subcommand("phiset", "Coprime residues and prime divisors of n");
  std::uint64_t phiset_n = 1;
  phiset->add_option("n", phiset_n)->required();
  phiset->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* build = app.add_subcommand("build", "Build a graph family");
  GraphTarget build_target;
  GuardFlags build_guards;
  build_target.attach(build);
  build_guards.attach(build);
  build->add_option("--format", format)->check(CLI::IsMember({"dot", "json", "table", "csv"}));

  auto* invariants = app.add_subcommand("invariants", "Invariant report for a graph family");
  GraphTarget inv_target;
  GuardFlags inv_guards;
  inv_target.attach(invariants);
  inv_guards.attach(invariants);
  invariants->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* check = app.add_subcommand("check", "Evaluate a claim (or all) over a range");
  std::string claim_id;
  std::string range_text, k_text, garg_text;
  unsigned jobs = 1;
  bool strict = false;
  GuardFlags check_guards;
  check->add_option("id", claim_id, "Claim id, or 'all'")->required();
  check->add_option("--range", range_text, "n range a..b");
  check->add_option("--k-range", k_text, "k range a..b");
  check->add_option("--garg-range", garg_text, "n range for the factorization check");
  check->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  check->add_flag("--strict", strict, "Exit 2 when any counterexample is found");
  check_guards.attach(check);
  check->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  auto* claims = app.add_subcommand("claims", "List the claim catalog");
  claims->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }

  std::string result;
  int code = ok;
  try {
    if (phiset->parsed()) {
      if (phiset_n == 0) throw UsageError("n must be >= 1");
      const auto ctx = phi_context(phiset_n);
      result = format == "json" ? phiset_json(ctx) : phiset_text(ctx);
    } else if (build->parsed()) {
      const Guards guards = build_guards.resolve(kBuildPhiCap);
      if (format == "csv") {
        const FamilyId f = build_target.id();
        if (!is_setgraph_family(f)) throw UsageError("--format csv (weight table) needs a set-graph family");
        if (!build_target.n) throw UsageError("family '" + build_target.family + "' needs n");
        auto base = phi_context(*build_target.n).phi_set;
        if (base.size() > guards.phi_cap) {
          throw GuardError("phi(" + std::to_string(*build_target.n) + ") = " + std::to_string(base.size()) +
                           " exceeds the set-graph phi cap " + std::to_string(guards.phi_cap));
        }
        result = to_csv(weight_multiplicity_table(base));
      } else {
        const Graph g = build_target.build(guards);
        if (format == "json") {
          result = to_json(g);
        } else if (format == "table") {
          result = to_table(g);
        } else {
          result = to_dot(g);
        }
      }
    } else if (invariants->parsed()) {
      const Guards guards = inv_guards.resolve(kBuildPhiCap);
      const Graph g = inv_target.build(guards);
      const auto report = invariant_report(g, guards);
      result = format == "json" ? invariants_json(report) : invariants_text(report);
    } else if (check->parsed()) {
      ClaimParams params;
      const Guards guards = check_guards.resolve(params.phi_cap);
      params.phi_cap = guards.phi_cap;
      params.jobs = jobs;
      if (!range_text.empty()) params.n = parse_range(range_text, "--range");
      if (!k_text.empty()) params.k = parse_range(k_text, "--k-range");
      if (!garg_text.empty()) params.garg = parse_range(garg_text, "--garg-range");
      if (params.n.lo == 0) throw UsageError("--range: n must be >= 1");
      if (params.k.lo == 0) throw UsageError("--k-range: k must be >= 1");
      if (params.garg.lo < 2) throw UsageError("--garg-range: n must be >= 2");
      std::vector<ClaimReport> reports;
      if (claim_id == "all") {
        reports = evaluate_all(params, guards, true);
      } else {
        reports.push_back(evaluate_claim(claim_id, params, guards));
      }
      const bool single = claim_id != "all";
      if (format == "json") {
        result = single ? report_json(reports.front()) : reports_json(reports);
      } else {
        result = reports_table(reports);
      }
      const bool any = std::any_of(reports.begin(), reports.end(),
                                   [](const ClaimReport& r) { return !r.counterexamples.empty(); });
      if (strict && any) code = counterexample;
    } else if (claims->parsed()) {
      std::vector<ClaimInfo> all = list_claims();
      all.insert(all.end(), list_variants().begin(), list_variants().end());
      result = format == "json" ? claims_json(all) : claims_table(all);
    }
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return guard;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const ConstructionError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  out << result;
  return code;
}

}  // namespace phigraph::cli
