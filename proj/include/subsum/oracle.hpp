#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsum/counting.hpp"

namespace subsum {

// Largest order oracle_enum accepts.
inline constexpr std::uint64_t kEnumOrderLimit = 20;

// Counts by listing every k-subset of G. Throws std::invalid_argument when
// the order exceeds kEnumOrderLimit.
CountTable oracle_enum(const GroupSpec& spec, std::uint64_t k);

enum class ElementOrder { kLexicographic, kReversed };

/// Counts by a take-or-skip recurrence over the elements, with state
/// (number taken, partial sum rank). Memory is (k+1) * n big integers.
CountTable oracle_dp(const GroupSpec& spec, std::uint64_t k,
                     ElementOrder order = ElementOrder::kLexicographic);

// Pinned verification family up to the given order: every Z_m, plus every
// nondecreasing tuple of 2 or 3 factors from {2,3,4,5,6,8,9}.
std::vector<GroupSpec> verification_family(std::uint64_t max_order);

enum class OracleChoice { kEnum, kDp, kBoth };

struct Mismatch {
  GroupSpec spec;
  std::uint64_t k = 0;
  GroupElement b;
  Count formula;
  std::optional<Count> enumerated;
  std::optional<Count> dynamic;

  std::string describe() const;
};

// Compares count_table against the chosen oracles for every k in [0, n].
std::optional<Mismatch> verify_against_oracles(const GroupSpec& spec, OracleChoice choice);

}  // namespace subsum
