#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "phigraph/claimlab.hpp"
#include "phigraph/errors.hpp"
#include "phigraph/io.hpp"
#include "phigraph/phifamily.hpp"
#include "phigraph/setgraph.hpp"

using namespace phigraph;

namespace {

ClaimParams with_range(std::uint64_t lo, std::uint64_t hi) {
  ClaimParams p;
  p.n = {lo, hi};
  return p;
}

}  // namespace

TEST_CASE("catalog") {
  const auto& claims = list_claims();
  CHECK(claims.size() == 24);
  std::set<std::string> ids;
  for (const auto& c : claims) {
    ids.insert(c.id);
    CHECK_FALSE(c.quote.empty());
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.variant);
  }
  CHECK(ids.size() == 24);
  CHECK(ids.count("T2.3") == 1);
  REQUIRE(list_variants().size() == 1);
  CHECK(list_variants().front().id == "T3.4r");
  CHECK(list_variants().front().variant);
  CHECK_THROWS_AS(evaluate_claim("T9.9", {}, {}), UsageError);
}

TEST_CASE("T2.3 is refuted at n = 210 by the cycle v_1 v_11 v_121") {
  const auto r = evaluate_claim("T2.3", with_range(5, 300), {});
  CHECK(r.summary == Summary::mixed);
  CHECK(r.range == "n=5..300");
  const Verdict* v = r.find("n=210");
  REQUIRE(v);
  CHECK(v->result == Outcome::refuted);
  CHECK(v->witness == "cycle v_1 v_11 v_121");
  CHECK(v->witness_values == std::vector<std::uint64_t>{1, 11, 121});
  // the witness alone re-establishes the violation
  const Graph g = phi_family(210, FamilyId::phi_divisor);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto a = g.find(Label::integer(v->witness_values[j]));
    const auto b = g.find(Label::integer(v->witness_values[(j + 1) % 3]));
    REQUIRE(a);
    REQUIRE(b);
    CHECK(g.adjacent(*a, *b));
  }
  CHECK(theta_is_prime_prefix(210).holds);
  CHECK(r.part_summaries.at("acyclic=>prefix") == Summary::holds_on_range);
  CHECK(r.part_summaries.at("prefix=>acyclic") == Summary::mixed);
}

TEST_CASE("L2.2ii first fails at k = 4") {
  const auto r = evaluate_claim("L2.2ii", {}, {});
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples.front().param == "k=4");
  CHECK(r.counterexamples.front().witness == "2*3*5*7 = 210 >= 11^2 = 121");
  CHECK(r.find("k=3")->result == Outcome::holds);
}

TEST_CASE("statements that hold on the default range") {
  for (const char* id : {"T2.1", "L2.2i", "R2.3n", "T2.5", "T3.7", "LP", "TT", "T3.4r", "C3.10"}) {
    const auto r = evaluate_claim(id, {}, {});
    CHECK_MESSAGE(r.summary == Summary::holds_on_range, id);
    CHECK(r.counterexamples.empty());
  }
  const auto c24 = evaluate_claim("C2.4", with_range(5, 300), {});
  CHECK(c24.summary == Summary::holds_on_range);
}

TEST_CASE("T3.4 over general sets") {
  const auto r = evaluate_claim("T3.4", {}, {});
  CHECK(r.summary == Summary::mixed);
  REQUIRE_FALSE(r.counterexamples.empty());
  CHECK(r.counterexamples.front().param == "A={2,3,6}");
  const Verdict* v = r.find("A={2,3,6}");
  CHECK(v->witness_values == std::vector<std::uint64_t>{6, 5});
  CHECK(weight_multiplicity_table(v->values).multiplicity(6) == 5);
  REQUIRE(r.scopes.size() == 2);
  CHECK(r.scopes[0].scope == "1 in A");
  CHECK(r.scopes[0].summary == Summary::holds_on_range);
  CHECK(r.scopes[1].summary == Summary::mixed);
}

TEST_CASE("every T3.4 witness re-validates") {
  const auto r = evaluate_claim("T3.4", {}, {});
  for (const auto& v : r.verdicts) {
    if (v.result != Outcome::refuted) continue;
    const auto m = weight_multiplicity_table(v.values).multiplicity(v.witness_values[0]);
    CHECK(m == v.witness_values[1]);
    CHECK(m % 2 == 1);
    CHECK(m > 1);
  }
}

TEST_CASE("guard-blocked parameters are skipped, never held") {
  ClaimParams p;
  p.phi_cap = 4;
  const auto r = evaluate_claim("T3.7", p, {});
  const Verdict* v7 = r.find("n=7");
  REQUIRE(v7);
  CHECK(v7->result == Outcome::skipped);
  CHECK(std::find(r.skipped.begin(), r.skipped.end(), "n=7") != r.skipped.end());
  CHECK(r.find("n=5")->result == Outcome::holds);

  ClaimParams tiny = with_range(7, 7);
  tiny.phi_cap = 4;
  CHECK(evaluate_claim("LP", tiny, {}).summary == Summary::all_skipped);
}

TEST_CASE("TC applicability") {
  const auto r = evaluate_claim("TC", with_range(1, 30), {});
  for (const char* n : {"n=3", "n=4", "n=6", "n=24"}) CHECK_MESSAGE(r.find(n)->result == Outcome::holds, n);
  CHECK(r.find("n=15")->result == Outcome::not_applicable);
}

TEST_CASE("P3.2 maximum clique counts") {
  const auto r = evaluate_claim("P3.2", {}, {});
  CHECK(r.find("|A|=3")->result == Outcome::holds);
  const Verdict* v4 = r.find("|A|=4");
  CHECK(v4->result == Outcome::refuted);
  CHECK(v4->witness_values == std::vector<std::uint64_t>{8, 12});
  CHECK(r.part_summaries.at("omega=2^(b-1)") == Summary::holds_on_range);
}

TEST_CASE("C3.11 at small primes") {
  const auto r = evaluate_claim("C3.11", with_range(2, 11), {});
  CHECK(r.find("p=2")->result == Outcome::holds);
  const Verdict* p5 = r.find("p=5");
  CHECK(p5->result == Outcome::refuted);
  CHECK(p5->witness_values == std::vector<std::uint64_t>{11, 4});
}

TEST_CASE("summaries and counterexamples agree") {
  ClaimParams p = with_range(1, 60);
  p.garg = {2, 500};
  for (const auto& r : evaluate_all(p, {}, true)) {
    const bool refuted = r.summary == Summary::refuted || r.summary == Summary::mixed;
    CHECK_MESSAGE(refuted == !r.counterexamples.empty(), r.claim_id);
    CHECK_FALSE(r.verdicts.empty());
    for (const auto& v : r.verdicts) CHECK((v.result == Outcome::refuted) == v.witness.has_value());
  }
}

TEST_CASE("parallel evaluation matches serial") {
  ClaimParams serial = with_range(1, 80);
  serial.garg = {2, 2000};
  ClaimParams parallel = serial;
  parallel.jobs = 8;
  CHECK(reports_json(evaluate_all(serial, {}, true)) == reports_json(evaluate_all(parallel, {}, true)));
}
