#include "subsum/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace subsum {

namespace {

// shift[s] = rank(element_at(s) + e) for a fixed element e.
std::vector<std::uint64_t> translation(const GroupSpec& spec, const GroupElement& e) {
  const std::uint64_t n = spec.order();
  std::vector<std::uint64_t> shift(n);
  for (std::uint64_t s = 0; s < n; ++s) shift[s] = spec.rank_of(add(spec, spec.element_at(s), e));
  return shift;
}

}  // namespace

CountTable oracle_enum(const GroupSpec& spec, std::uint64_t k) {
  const std::uint64_t n = spec.order();
  if (n > kEnumOrderLimit) {
    throw std::invalid_argument("oracle_enum: group order " + std::to_string(n) + " exceeds the limit of " +
                                std::to_string(kEnumOrderLimit) + " for exhaustive enumeration");
  }
  CountTable table{spec, k, std::vector<Count>(n, 0)};
  if (k > n) return table;

  const auto all = elements(spec);
  // Choose positions via a descending selection mask; prev_permutation walks
  // every k-combination exactly once.
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    GroupElement sum = spec.identity();
    for (std::uint64_t i = 0; i < n; ++i) {
      if (chosen[i]) sum = add(spec, sum, all[i]);
    }
    ++table.entries[spec.rank_of(sum)];
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return table;
}

CountTable oracle_dp(const GroupSpec& spec, std::uint64_t k, ElementOrder order) {
  const std::uint64_t n = spec.order();
  CountTable table{spec, k, std::vector<Count>(n, 0)};
  if (k > n) return table;

  // ways[j][s]: subsets of the processed prefix with j elements summing to rank s.
  std::vector<std::vector<Count>> ways(k + 1, std::vector<Count>(n, 0));
  ways[0][0] = 1;  // the identity has rank 0

  std::vector<std::uint64_t> sequence(n);
  std::iota(sequence.begin(), sequence.end(), std::uint64_t{0});
  if (order == ElementOrder::kReversed) std::reverse(sequence.begin(), sequence.end());

  std::uint64_t processed = 0;
  for (const auto rank : sequence) {
    const auto shift = translation(spec, spec.element_at(rank));
    ++processed;
    // Descending j so each element is taken at most once.
    for (std::uint64_t j = std::min(k, processed); j >= 1; --j) {
      const auto& from = ways[j - 1];
      auto& to = ways[j];
      for (std::uint64_t s = 0; s < n; ++s) {
        if (sgn(from[s]) != 0) to[shift[s]] += from[s];
      }
    }
  }
  table.entries = std::move(ways[k]);
  return table;
}

std::vector<GroupSpec> verification_family(std::uint64_t max_order) {
  static constexpr std::uint64_t kFactors[] = {2, 3, 4, 5, 6, 8, 9};
  std::vector<GroupSpec> family;
  for (std::uint64_t m = 1; m <= max_order; ++m) family.emplace_back(std::vector<std::uint64_t>{m});
  for (const auto a : kFactors) {
    for (const auto b : kFactors) {
      if (b < a || a * b > max_order) continue;
      family.emplace_back(std::vector<std::uint64_t>{a, b});
      for (const auto c : kFactors) {
        if (c < b || a * b * c > max_order) continue;
        family.emplace_back(std::vector<std::uint64_t>{a, b, c});
      }
    }
  }
  return family;
}

std::string Mismatch::describe() const {
  std::string text = "mismatch: moduli=" + spec.to_string() + " k=" + std::to_string(k) + " b=" +
                     to_string(b) + " formula=" + formula.get_str();
  if (enumerated) text += " enum=" + enumerated->get_str();
  if (dynamic) text += " dp=" + dynamic->get_str();
  return text;
}

std::optional<Mismatch> verify_against_oracles(const GroupSpec& spec, OracleChoice choice) {
  const bool use_enum = choice != OracleChoice::kDp;
  const bool use_dp = choice != OracleChoice::kEnum;
  for (std::uint64_t k = 0; k <= spec.order(); ++k) {
    const CountTable formula = count_table(spec, k);
    std::optional<CountTable> enumerated;
    std::optional<CountTable> dynamic;
    if (use_enum) enumerated = oracle_enum(spec, k);
    if (use_dp) dynamic = oracle_dp(spec, k);
    for (std::uint64_t rank = 0; rank < spec.order(); ++rank) {
      const bool enum_ok = !enumerated || enumerated->entries[rank] == formula.entries[rank];
      const bool dp_ok = !dynamic || dynamic->entries[rank] == formula.entries[rank];
      if (enum_ok && dp_ok) continue;
      Mismatch mismatch{spec, k, spec.element_at(rank), formula.entries[rank], {}, {}};
      if (enumerated) mismatch.enumerated = enumerated->entries[rank];
      if (dynamic) mismatch.dynamic = dynamic->entries[rank];
      return mismatch;
    }
  }
  return std::nullopt;
}

}  // namespace subsum
