#include "subsum/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

static_assert(sizeof(unsigned long) == sizeof(std::uint64_t), "GMP ui calls assume 64-bit unsigned long");

namespace subsum {

namespace {

void require_positive(std::uint64_t value, const char* what) {
  if (value == 0) {
    throw std::invalid_argument(std::string(what) + ": argument must be positive");
  }
}

}  // namespace

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept { return std::gcd(a, b); }

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  require_positive(m, "divisors");
  std::vector<std::uint64_t> low;
  std::vector<std::uint64_t> high;
  for (std::uint64_t d = 1; d <= m / d; ++d) {
    if (m % d != 0) continue;
    low.push_back(d);
    if (d != m / d) high.push_back(m / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<PrimePower> factorize(std::uint64_t m) {
  require_positive(m, "factorize");
  std::vector<PrimePower> factors;
  for (std::uint64_t p = 2; p <= m / p; ++p) {
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    factors.push_back({p, e});
  }
  if (m > 1) factors.push_back({m, 1});
  return factors;
}

int moebius(std::uint64_t r) {
  require_positive(r, "moebius");
  int sign = 1;
  for (const auto& [p, e] : factorize(r)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t r) {
  require_positive(r, "euler_phi");
  std::uint64_t result = r;
  for (const auto& [p, e] : factorize(r)) result = result / p * (p - 1);
  return result;
}

Count binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Count acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= static_cast<unsigned long>(n - k + i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return acc;
}

}  // namespace subsum
