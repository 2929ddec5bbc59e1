#pragma once

#include <cstdint>
#include <vector>

#include "subsum/group.hpp"
#include "subsum/numtheory.hpp"

namespace subsum {

/// N(k, b) for every b in G. Entries are indexed by lexicographic element
/// rank, so `entries[spec.rank_of(b)]` is the count for b.
struct CountTable {
  GroupSpec spec;
  std::uint64_t k = 0;
  std::vector<Count> entries;

  const Count& at(const GroupElement& b) const { return entries.at(spec.rank_of(b)); }
  Count column_sum() const;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

/// Phi(r, b) = sum over d | r with gcd(n_i, d) | b_i for all i of
/// mu(r/d) * prod_i gcd(n_i, d). A zero coordinate passes every divisibility test.
SignedCount phi_lw(const GroupSpec& spec, std::uint64_t r, const GroupElement& b);

/// Number of k-subsets of G whose elements sum to b, from the explicit
/// divisor-sum formula
///
///   N(k, b) = (1/n) * sum_{r | gcd(n, k)} (-1)^{k + k/r} C(n/r, k/r) Phi(r, b).
///
/// Returns 0 for k > n. The signed sum is checked for divisibility by n and
/// nonnegativity; a failure there is an internal error (std::logic_error).
Count count_subset_sums(const GroupSpec& spec, std::uint64_t k, const GroupElement& b);

// Same as count_subset_sums for every b, sharing the per-r divisor data.
CountTable count_table(const GroupSpec& spec, std::uint64_t k);

}  // namespace subsum
