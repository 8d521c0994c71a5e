#include "phigraph/numtheory.hpp"

#include <algorithm>
#include <numeric>

#include "phigraph/errors.hpp"

namespace phigraph {

std::string to_string(const BigNat& value) { return value.str(); }

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

BigNat lcm_of_set(std::span<const std::uint64_t> xs) {
  if (xs.empty()) throw UsageError("lcm_of_set: empty input");
  BigNat acc = 1;
  for (std::uint64_t x : xs) {
    if (x == 0) throw UsageError("lcm_of_set: elements must be positive");
    BigNat bx = x;
    acc = acc / boost::multiprecision::gcd(acc, bx) * bx;
  }
  return acc;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize_oracle(std::uint64_t n) {
  if (n < 2) throw UsageError("factorize_oracle: n must be >= 2");
  Factorization f;
  f.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d <= rest / d; d += (d == 2 ? 1 : 2)) {
    if (rest % d != 0) continue;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    f.primes.push_back(d);
    f.exponents.push_back(e);
  }
  if (rest > 1) {
    f.primes.push_back(rest);
    f.exponents.push_back(1);
  }
  return f;
}

GargResult garg_compute(std::uint64_t n) {
  if (n < 2) throw UsageError("garg_compute: n must be >= 2");
  GargResult r;
  r.n = n;

  // Step 1: strip powers of two.
  std::uint64_t odd = n;
  while (odd % 2 == 0) odd /= 2;
  if (odd != n) r.prime_set.push_back(2);

  // Step 2: odd candidates 3, 5, 7, ... up to floor(sqrt(o)).
  if (odd > 1) {
    const std::uint64_t o = odd;
    for (std::uint64_t i = 3; i <= o / i; i += 2) {
      if (odd % i != 0) continue;
      r.prime_set.push_back(i);
      while (odd % i == 0) odd /= i;
    }
    if (odd > 1) {
      r.prime_set.push_back(odd);
      r.residual_completion = true;
    }
  }

  // Step 3: P' = P together with every multiple t*p <= n.
  std::vector<bool> struck(n + 1, false);
  for (std::uint64_t p : r.prime_set) {
    for (std::uint64_t m = p; m <= n; m += p) struck[m] = true;
  }

  // Step 4: S = {1..n-1} - P'.
  for (std::uint64_t i = 1; i < n; ++i) {
    if (!struck[i]) r.literal_phi_set.push_back(i);
  }
  r.phi_set = r.literal_phi_set;
  if (!struck[n] && std::gcd(n, n) == 1) r.phi_set.push_back(n);
  r.phi = r.phi_set.size();
  return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw UsageError("euler_phi: n must be >= 1");
  if (n == 1) return 1;
  std::uint64_t result = n;
  for (std::uint64_t p : factorize_oracle(n).primes) result = result / p * (p - 1);
  return result;
}

PhiContext phi_context(std::uint64_t n) {
  if (n == 0) throw UsageError("phi_context: n must be >= 1");
  PhiContext ctx;
  ctx.n = n;
  for (std::uint64_t i = 1; i <= n; ++i) {
    if (std::gcd(i, n) == 1) ctx.phi_set.push_back(i);
  }
  ctx.phi = ctx.phi_set.size();
  if (n >= 2) ctx.theta_set = factorize_oracle(n).primes;
  if (ctx.phi_set.size() > 1) ctx.min_above_one = ctx.phi_set[1];
  return ctx;
}

std::vector<std::uint64_t> first_primes(std::size_t k) {
  std::vector<std::uint64_t> primes;
  primes.reserve(k);
  for (std::uint64_t c = 2; primes.size() < k; ++c) {
    bool prime = true;
    for (std::uint64_t p : primes) {
      if (p > c / p) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

BigNat primorial(std::size_t k) {
  BigNat acc = 1;
  for (std::uint64_t p : first_primes(k)) acc *= p;
  return acc;
}

PrimePrefix theta_is_prime_prefix(std::uint64_t n) {
  if (n < 2) throw UsageError("theta_is_prime_prefix: n must be >= 2");
  const auto theta = factorize_oracle(n).primes;
  if (theta == first_primes(theta.size())) return {true, theta.size()};
  return {false, std::nullopt};
}

}  // namespace phigraph
