#include "subsum/counting.hpp"

#include <stdexcept>
#include <string>

namespace subsum {

namespace {

// One admissible d for a fixed r: mu(r/d) != 0.
struct DivisorTerm {
  int mu;
  std::uint64_t product;                   // prod_i gcd(n_i, d)
  std::vector<std::uint64_t> factor_gcds;  // gcd(n_i, d), per coordinate
};

// Everything about an outer index r that does not depend on b.
struct OuterTerm {
  Count weight;  // (-1)^{k + k/r} C(n/r, k/r), signed
  std::vector<DivisorTerm> divisor_terms;
};

std::vector<DivisorTerm> divisor_terms_for(const GroupSpec& spec, std::uint64_t r) {
  std::vector<DivisorTerm> terms;
  for (const auto d : divisors(r)) {
    const int mu = moebius(r / d);
    if (mu == 0) continue;
    DivisorTerm term{mu, 1, {}};
    term.factor_gcds.reserve(spec.factor_count());
    for (const auto n_i : spec.moduli()) {
      const std::uint64_t g = gcd(n_i, d);
      term.factor_gcds.push_back(g);
      term.product *= g;  // divides the group order, no overflow
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

bool admits(const DivisorTerm& term, const GroupElement& b) {
  for (std::size_t i = 0; i < term.factor_gcds.size(); ++i) {
    if (b.residues[i] % term.factor_gcds[i] != 0) return false;
  }
  return true;
}

SignedCount evaluate_phi(const std::vector<DivisorTerm>& terms, const GroupElement& b) {
  SignedCount phi = 0;
  for (const auto& term : terms) {
    if (!admits(term, b)) continue;
    if (term.mu > 0) {
      phi += static_cast<unsigned long>(term.product);
    } else {
      phi -= static_cast<unsigned long>(term.product);
    }
  }
  return phi;
}

std::vector<OuterTerm> outer_terms(const GroupSpec& spec, std::uint64_t k) {
  const std::uint64_t n = spec.order();
  std::vector<OuterTerm> terms;
  for (const auto r : divisors(gcd(n, k))) {
    const std::uint64_t kr = k / r;
    OuterTerm term{binomial(n / r, kr), divisor_terms_for(spec, r)};
    if ((k + kr) % 2 == 1) term.weight = -term.weight;
    terms.push_back(std::move(term));
  }
  return terms;
}

Count finish(const SignedCount& signed_sum, const GroupSpec& spec, std::uint64_t k, const GroupElement& b) {
  const unsigned long n = spec.order();
  if (!mpz_divisible_ui_p(signed_sum.get_mpz_t(), n) || sgn(signed_sum) < 0) {
    throw std::logic_error("internal error: divisor sum " + signed_sum.get_str() + " for G=(" +
                           spec.to_string() + "), k=" + std::to_string(k) + ", b=(" + to_string(b) +
                           ") is not a nonnegative multiple of the order");
  }
  Count result;
  mpz_divexact_ui(result.get_mpz_t(), signed_sum.get_mpz_t(), n);
  return result;
}

SignedCount accumulate(const std::vector<OuterTerm>& terms, const GroupElement& b) {
  SignedCount sum = 0;
  for (const auto& term : terms) sum += term.weight * evaluate_phi(term.divisor_terms, b);
  return sum;
}

}  // namespace

Count CountTable::column_sum() const {
  Count sum = 0;
  for (const auto& entry : entries) sum += entry;
  return sum;
}

SignedCount phi_lw(const GroupSpec& spec, std::uint64_t r, const GroupElement& b) {
  spec.validate(b);
  if (r == 0) throw std::invalid_argument("phi_lw: r must be positive");
  return evaluate_phi(divisor_terms_for(spec, r), b);
}

Count count_subset_sums(const GroupSpec& spec, std::uint64_t k, const GroupElement& b) {
  spec.validate(b);
  if (k > spec.order()) return 0;
  return finish(accumulate(outer_terms(spec, k), b), spec, k, b);
}

CountTable count_table(const GroupSpec& spec, std::uint64_t k) {
  const std::uint64_t n = spec.order();
  CountTable table{spec, k, std::vector<Count>(n, 0)};
  if (k > n) return table;
  const auto terms = outer_terms(spec, k);
  for (std::uint64_t rank = 0; rank < n; ++rank) {
    const GroupElement b = spec.element_at(rank);
    table.entries[rank] = finish(accumulate(terms, b), spec, k, b);
  }
  return table;
}

}  // namespace subsum
