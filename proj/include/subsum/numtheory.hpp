#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace subsum {

// Exact nonnegative count; the invariant value >= 0 is maintained by callers.
using Count = mpz_class;
// Exact signed value, used for Phi(r, b) and signed formula terms.
using SignedCount = mpz_class;

// gcd(a, 0) == a, gcd(0, 0) == 0.
std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

// All positive divisors of m in ascending order. Throws std::invalid_argument for m == 0.
std::vector<std::uint64_t> divisors(std::uint64_t m);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
};

// Trial-division factorization, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(std::uint64_t m);

int moebius(std::uint64_t r);
std::uint64_t euler_phi(std::uint64_t r);

/// Exact binomial coefficient C(n, k); zero when k > n.
///
/// Evaluated as the running product prod_{i=1..k} (n-k+i)/i, where every
/// partial product is itself a binomial coefficient so each division is exact.
Count binomial(std::uint64_t n, std::uint64_t k);

}  // namespace subsum
