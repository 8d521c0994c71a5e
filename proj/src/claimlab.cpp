#include "phigraph/claimlab.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "claim_defs.hpp"
#include "phigraph/errors.hpp"

namespace phigraph {

std::string Range::str() const { return std::to_string(lo) + ".." + std::to_string(hi); }

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::holds:
      return "holds";
    case Outcome::refuted:
      return "refuted";
    case Outcome::skipped:
      return "skipped";
    case Outcome::not_applicable:
      return "not-applicable";
  }
  return "?";
}

const char* to_string(Summary summary) {
  switch (summary) {
    case Summary::holds_on_range:
      return "holds-on-range";
    case Summary::refuted:
      return "refuted";
    case Summary::mixed:
      return "mixed";
    case Summary::all_skipped:
      return "all-skipped";
  }
  return "?";
}

const Verdict* ClaimReport::find(std::string_view param) const {
  for (const auto& v : verdicts) {
    if (v.param == param) return &v;
  }
  return nullptr;
}

namespace {

using detail::ClaimDef;
using detail::ClaimParam;

struct Tally {
  std::size_t holds = 0;
  std::size_t refuted = 0;

  void add(Outcome o) {
    if (o == Outcome::holds) ++holds;
    if (o == Outcome::refuted) ++refuted;
  }
  Summary summary() const {
    if (refuted == 0) return holds > 0 ? Summary::holds_on_range : Summary::all_skipped;
    return holds == 0 ? Summary::refuted : Summary::mixed;
  }
};

std::vector<Verdict> run_params(const ClaimDef& def, const std::vector<ClaimParam>& params,
                                const ClaimParams& cp, const Guards& guards) {
  std::vector<Verdict> out(params.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(cp.jobs, static_cast<unsigned>(params.size())));
  if (jobs <= 1) {
    for (std::size_t j = 0; j < params.size(); ++j) out[j] = def.evaluate(params[j], cp, guards);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      const std::size_t j = next.fetch_add(1);
      if (j >= params.size()) return;
      try {
        out[j] = def.evaluate(params[j], cp, guards);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = params.size();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

ClaimReport run(const ClaimDef& def, const ClaimParams& cp, const Guards& guards) {
  const auto params = def.params(cp);
  ClaimReport report;
  report.claim_id = def.info.id;
  report.quote = def.info.quote;
  report.range = def.range(cp);
  report.verdicts = run_params(def, params, cp, guards);

  Tally all;
  std::map<std::string, Tally> parts;
  std::vector<Tally> scopes(def.scopes.size());
  for (std::size_t j = 0; j < params.size(); ++j) {
    const Verdict& v = report.verdicts[j];
    all.add(v.result);
    if (v.result == Outcome::refuted) {
      report.counterexamples.push_back({v.param, v.witness.value_or("")});
    } else if (v.result == Outcome::skipped) {
      report.skipped.push_back(v.param);
    }
    for (const auto& p : v.parts) parts[p.name].add(p.result);
    for (std::size_t s = 0; s < def.scopes.size(); ++s) {
      if (def.scopes[s].includes(params[j])) scopes[s].add(v.result);
    }
  }
  report.summary = all.summary();
  for (const auto& [name, tally] : parts) report.part_summaries[name] = tally.summary();
  for (std::size_t s = 0; s < def.scopes.size(); ++s) {
    report.scopes.push_back({def.scopes[s].name, scopes[s].summary(),
                             scopes[s].holds + scopes[s].refuted, scopes[s].refuted});
  }
  return report;
}

const ClaimDef* find_def(std::string_view id) {
  for (const auto* list : {&detail::claim_definitions(), &detail::variant_definitions()}) {
    for (const auto& def : *list) {
      if (def.info.id == id) return &def;
    }
  }
  return nullptr;
}

std::vector<ClaimInfo> infos(const std::vector<ClaimDef>& defs) {
  std::vector<ClaimInfo> out;
  out.reserve(defs.size());
  for (const auto& d : defs) out.push_back(d.info);
  return out;
}

}  // namespace

const std::vector<ClaimInfo>& list_claims() {
  static const std::vector<ClaimInfo> claims = infos(detail::claim_definitions());
  return claims;
}

const std::vector<ClaimInfo>& list_variants() {
  static const std::vector<ClaimInfo> variants = infos(detail::variant_definitions());
  return variants;
}

ClaimReport evaluate_claim(std::string_view id, const ClaimParams& params, const Guards& guards) {
  const ClaimDef* def = find_def(id);
  if (!def) {
    std::string valid;
    for (const auto* list : {&list_claims(), &list_variants()}) {
      for (const auto& info : *list) valid += (valid.empty() ? "" : ", ") + info.id;
    }
    throw UsageError("unknown claim id '" + std::string(id) + "'; valid ids: " + valid);
  }
  return run(*def, params, guards);
}

std::vector<ClaimReport> evaluate_all(const ClaimParams& params, const Guards& guards,
                                      bool include_variants) {
  std::vector<ClaimReport> out;
  for (const auto& def : detail::claim_definitions()) out.push_back(run(def, params, guards));
  if (include_variants) {
    for (const auto& def : detail::variant_definitions()) out.push_back(run(def, params, guards));
  }
  return out;
}

}  // namespace phigraph
