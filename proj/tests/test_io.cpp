#include "doctest.h"
#include "oracles.hpp"
#include "phigraph/errors.hpp"
#include "phigraph/io.hpp"
#include "phigraph/phifamily.hpp"

using namespace phigraph;

TEST_CASE("label parsing") {
  CHECK(parse_label("v_5") == Label::integer(5));
  CHECK(parse_label("v_{2,4}") == Label::subset(2, 4));
  CHECK(parse_label("v_{2,4}(15)") == Label::subset(2, 4, BigNat(15)));
  CHECK(parse_label("v_{1,1}(18446744400127067027)").iota == BigNat("18446744400127067027"));
  for (const char* bad : {"", "v_", "x_5", "v_5a", "v_{2}", "v_{2,4", "v_{2,4}(x)", "v_{2,4}15"}) {
    CHECK_THROWS_AS(parse_label(bad), UsageError);
  }
}

TEST_CASE("DOT output is exact") {
  const std::string want =
      "graph G {\n"
      "  \"v_{1,1}(1)\";\n"
      "  \"v_{1,2}(2)\";\n"
      "  \"v_{2,1}(2)\";\n"
      "  \"v_{1,1}(1)\" -- \"v_{1,2}(2)\";\n"
      "  \"v_{1,1}(1)\" -- \"v_{2,1}(2)\";\n"
      "  \"v_{1,2}(2)\" -- \"v_{2,1}(2)\";\n"
      "}\n";
  CHECK(to_dot(phi_family(3, FamilyId::phi_lcm_divisor)) == want);
}

TEST_CASE("DOT round trip") {
  for (std::uint64_t n : {1, 5, 15, 24, 30}) {
    for (FamilyId id : kAllFamilies) {
      if (takes_explicit_set(id)) continue;
      const Graph g = phi_family(n, id);
      const Graph back = parse_dot(to_dot(g));
      CHECK(back.labels() == g.labels());
      CHECK(back.edges() == g.edges());
    }
  }
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::random_graph(1 + t, 0.3, rng);
    CHECK(same_labelled_graph(parse_dot(to_dot(g)), g));
  }
}

TEST_CASE("DOT reader rejects malformed input") {
  CHECK_THROWS_AS(parse_dot(""), UsageError);
  CHECK_THROWS_AS(parse_dot("digraph G {\n}\n"), UsageError);
  CHECK_THROWS_AS(parse_dot("graph G {\n  \"v_1\";\n"), UsageError);
  CHECK_THROWS_AS(parse_dot("graph G {\n  \"v_1\"\n}\n"), UsageError);
  CHECK_THROWS_AS(parse_dot("graph G {\n  \"v_1\" -- \"v_2\";\n}\n"), UsageError);
  CHECK_THROWS_AS(parse_dot("graph G {\n  \"v_1\";\n  \"v_1\";\n}\n"), UsageError);
}

TEST_CASE("graph JSON") {
  const std::string want = R"({
  "labels": [
    "v_1",
    "v_2"
  ],
  "edges": [
    [
      0,
      1
    ]
  ]
}
)";
  CHECK(to_json(phi_family(3, FamilyId::phi_divisor)) == want);
}

TEST_CASE("weight CSV is ordered by weight") {
  CHECK(to_csv(weight_multiplicity_table(std::vector<std::uint64_t>{1, 3, 5, 7})) ==
        "weight,multiplicity\n1,1\n3,2\n5,2\n7,2\n15,2\n21,2\n35,2\n105,2\n");
}

TEST_CASE("phiset text") {
  CHECK(phiset_text(phi_context(24)) == "n=24\nphi=8\nS_phi={1,5,7,11,13,17,19,23}\nS_theta={2,3}\nx=5\n");
  CHECK(phiset_text(phi_context(1)).find("x=none") != std::string::npos);
}

TEST_CASE("report JSON carries the stable fields") {
  ClaimParams p;
  p.n = {5, 20};
  const auto r = evaluate_claim("T2.3", p, {});
  const std::string j = report_json(r);
  CHECK(j == report_json(evaluate_claim("T2.3", p, {})));
  const auto at = [&](const char* key) { return j.find(std::string("\"") + key + "\""); };
  CHECK(at("claim_id") < at("quote"));
  CHECK(at("quote") < at("range"));
  CHECK(at("range") < at("summary"));
  CHECK(at("summary") < at("verdicts"));
  CHECK(j.find("\"witness\": \"cycle v_1 v_3 v_9\"") != std::string::npos);
}
