#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phigraph/solvers.hpp"

namespace phigraph {

struct Range {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  bool contains(std::uint64_t x) const { return lo <= x && x <= hi; }
  std::string str() const;
};

/// Parameter domains for a sweep.
struct ClaimParams {
  Range n{1, 200};
  Range k{1, 10};
  Range garg{2, 10000};
  unsigned phi_cap = 10;          // derivative set-graph claims
  unsigned base_size_max = 4;     // maximum-clique count
  unsigned set_universe = 12;     // weight-parity claims: A within {1..U}
  unsigned set_max_size = 5;
  unsigned coprime_universe = 30; // pairwise-coprime weight claims
  unsigned coprime_max_size = 4;
  unsigned iso_phi_max = 5;       // isomorphism claim: pairs with phi <= this
  unsigned jobs = 1;
};

enum class Outcome { holds, refuted, skipped, not_applicable };
enum class Summary { holds_on_range, refuted, mixed, all_skipped };

const char* to_string(Outcome outcome);
const char* to_string(Summary summary);

struct PartVerdict {
  std::string name;
  Outcome result = Outcome::holds;
  std::string detail;
};

struct Verdict {
  std::string param;                   // e.g. "n=210", "A={2,3,6}"
  std::vector<std::uint64_t> values;   // the parameter itself
  Outcome result = Outcome::holds;
  std::vector<PartVerdict> parts;
  std::optional<std::string> witness;  // set when refuted
  std::vector<std::uint64_t> witness_values;
};

struct Counterexample {
  std::string param;
  std::string witness;
};

struct ScopeSummary {
  std::string scope;
  Summary summary = Summary::all_skipped;
  std::size_t evaluated = 0;
  std::size_t counterexamples = 0;
};

struct ClaimReport {
  std::string claim_id;
  std::string quote;
  std::string range;
  std::vector<Verdict> verdicts;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> skipped;
  Summary summary = Summary::all_skipped;
  std::map<std::string, Summary> part_summaries;
  std::vector<ScopeSummary> scopes;

  const Verdict* find(std::string_view param) const;
};

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::string quote;
  std::string domain;
  std::vector<std::string> guards;
  bool variant = false;
};

/// The statement catalog, one entry per statement, in catalog order.
const std::vector<ClaimInfo>& list_claims();
/// Repaired variants of refuted statements (suffixed ids).
const std::vector<ClaimInfo>& list_variants();

/// Throws UsageError for an unknown id.
ClaimReport evaluate_claim(std::string_view id, const ClaimParams& params, const Guards& guards);

std::vector<ClaimReport> evaluate_all(const ClaimParams& params, const Guards& guards,
                                      bool include_variants = false);

}  // namespace phigraph
