#include "doctest.h"
#include "oracles.hpp"
#include "phigraph/errors.hpp"
#include "phigraph/numtheory.hpp"

using namespace phigraph;
using V = std::vector<std::uint64_t>;

TEST_CASE("euler_phi agrees with a direct gcd count") {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    CHECK_MESSAGE(euler_phi(n) == oracle::phi_by_count(n), "n=" << n);
  }
  CHECK_THROWS_AS(euler_phi(0), UsageError);
}

TEST_CASE("phi_context for small n") {
  auto c24 = phi_context(24);
  CHECK(c24.phi == 8);
  CHECK(c24.phi_set == V{1, 5, 7, 11, 13, 17, 19, 23});
  CHECK(c24.theta_set == V{2, 3});
  CHECK(c24.min_above_one == 5u);

  auto c15 = phi_context(15);
  CHECK(c15.phi_set == V{1, 2, 4, 7, 8, 11, 13, 14});
  CHECK(c15.theta_set == V{3, 5});

  auto c1 = phi_context(1);
  CHECK(c1.phi == 1);
  CHECK(c1.phi_set == V{1});
  CHECK(c1.theta_set.empty());
  CHECK_FALSE(c1.min_above_one.has_value());

  auto c2 = phi_context(2);
  CHECK(c2.phi_set == V{1});
  CHECK_FALSE(c2.min_above_one.has_value());
}

TEST_CASE("prime divisors match trial division") {
  for (std::uint64_t n = 2; n <= 3000; ++n) {
    CHECK(phi_context(n).theta_set == oracle::prime_divisors(n));
  }
}

TEST_CASE("factorize_oracle") {
  auto f = factorize_oracle(360);
  CHECK(f.primes == V{2, 3, 5});
  CHECK(f.exponents == std::vector<unsigned>{3, 2, 1});
  CHECK(factorize_oracle(97).primes == V{97});
  CHECK_THROWS_AS(factorize_oracle(1), UsageError);
}

TEST_CASE("garg_compute recovers primes and residues") {
  for (std::uint64_t n = 2; n <= 10000; ++n) {
    const auto g = garg_compute(n);
    REQUIRE_MESSAGE(g.prime_set == factorize_oracle(n).primes, "n=" << n);
    REQUIRE(g.phi == euler_phi(n));
    REQUIRE(g.literal_phi_set == phi_context(n).phi_set);
  }
  SUBCASE("residual prime completes Step 2") {
    auto g6 = garg_compute(6);
    CHECK(g6.prime_set == V{2, 3});
    CHECK(g6.residual_completion);
    CHECK(g6.phi_set == V{1, 5});
    auto g9 = garg_compute(9);
    CHECK(g9.prime_set == V{3});
    CHECK_FALSE(g9.residual_completion);
  }
  SUBCASE("odd prime does not pick up 2") {
    auto g = garg_compute(13);
    CHECK(g.prime_set == V{13});
    CHECK(g.phi == 12);
  }
  SUBCASE("n = 2") {
    auto g = garg_compute(2);
    CHECK(g.prime_set == V{2});
    CHECK(g.phi_set == V{1});
  }
  CHECK_THROWS_AS(garg_compute(1), UsageError);
}

TEST_CASE("lcm_of_set") {
  CHECK(lcm_of_set(V{1, 3, 5, 7}) == 105);
  CHECK(lcm_of_set(V{4, 6}) == 12);
  V upto50(50);
  std::iota(upto50.begin(), upto50.end(), 1);
  CHECK(to_string(lcm_of_set(upto50)) == "3099044504245996706400");
  CHECK_THROWS_AS(lcm_of_set(V{}), UsageError);
  CHECK_THROWS_AS(lcm_of_set(V{3, 0}), UsageError);
}

TEST_CASE("primes, primorials and prefixes") {
  CHECK(first_primes(10) == V{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(first_primes(0).empty());
  CHECK(primorial(4) == 210);
  CHECK(to_string(primorial(10)) == "6469693230");
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(121));

  auto p30 = theta_is_prime_prefix(30);
  CHECK(p30.holds);
  CHECK(p30.k == 3u);
  CHECK(theta_is_prime_prefix(2).k == 1u);
  CHECK(theta_is_prime_prefix(16).holds);
  CHECK_FALSE(theta_is_prime_prefix(15).holds);
  CHECK_FALSE(theta_is_prime_prefix(10).holds);
}
