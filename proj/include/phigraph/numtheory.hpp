#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace phigraph {

/// Arbitrary-precision natural number. Subset LCMs outgrow 64 bits quickly.
using BigNat = boost::multiprecision::cpp_int;

std::string to_string(const BigNat& value);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// lcm of every element of `xs`. Throws UsageError on an empty list or a zero.
BigNat lcm_of_set(std::span<const std::uint64_t> xs);

/// Trial-division primality test.
bool is_prime(std::uint64_t n);

struct Factorization {
  std::uint64_t n = 1;
  std::vector<std::uint64_t> primes;  // strictly increasing
  std::vector<unsigned> exponents;    // parallel to primes, all >= 1
};

/// Plain trial-division factorization, used as the independent reference for
/// the Garg procedure. Requires n >= 2.
Factorization factorize_oracle(std::uint64_t n);

/// Output of the adapted Vishwas Garg procedure.
struct GargResult {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> prime_set;        // the set P after Steps 1-2
  std::vector<std::uint64_t> literal_phi_set;  // Step 4: {1..n-1} minus P'
  std::vector<std::uint64_t> phi_set;          // reconciled to 1 <= i <= n
  std::uint64_t phi = 0;                       // |phi_set|
  // Step 2 left a residual > 1 after the odd candidates up to sqrt(o) were
  // exhausted; that residual is itself prime and was added to P.
  bool residual_completion = false;
};

/// Runs Steps 1-4 of the Garg procedure. Requires n >= 2.
GargResult garg_compute(std::uint64_t n);

/// phi(n) by the product formula over factorize_oracle(n). Requires n >= 1.
std::uint64_t euler_phi(std::uint64_t n);

struct PhiContext {
  std::uint64_t n = 1;
  std::uint64_t phi = 1;
  std::vector<std::uint64_t> phi_set;    // {i : 1 <= i <= n, gcd(i, n) = 1}
  std::vector<std::uint64_t> theta_set;  // prime divisors of n
  std::optional<std::uint64_t> min_above_one;
};

/// Builds the coprime residues by a direct gcd filter (independent of Garg).
PhiContext phi_context(std::uint64_t n);

/// The k smallest primes, increasing.
std::vector<std::uint64_t> first_primes(std::size_t k);

/// Product of the first k primes.
BigNat primorial(std::size_t k);

struct PrimePrefix {
  bool holds = false;
  std::optional<std::size_t> k;
};

/// Whether the prime divisors of n are exactly the first k primes.
PrimePrefix theta_is_prime_prefix(std::uint64_t n);

}  // namespace phigraph
