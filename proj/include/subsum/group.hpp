#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace subsum {

// A residue vector (b_1, ..., b_s). Validity is relative to a GroupSpec.
struct GroupElement {
  std::vector<std::uint64_t> residues;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Lexicographic by residue vector.
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Finite abelian group Z_{n_1} x ... x Z_{n_s}, given by any list of
/// positive moduli (factors equal to 1 are allowed, no divisibility chain is
/// required). Elements are ranked in lexicographic order, which is the
/// mixed-radix number with the last coordinate least significant.
class GroupSpec {
 public:
  // Throws std::invalid_argument for an empty list or a zero modulus, and
  // std::overflow_error when the order does not fit in 64 bits.
  explicit GroupSpec(std::vector<std::uint64_t> moduli);

  // Parses "4" or "2,2,3".
  static GroupSpec parse(std::string_view text);

  const std::vector<std::uint64_t>& moduli() const noexcept { return moduli_; }
  std::size_t factor_count() const noexcept { return moduli_.size(); }
  std::uint64_t order() const noexcept { return order_; }

  bool contains(const GroupElement& element) const noexcept;
  // Throws std::invalid_argument when the element does not belong to this group.
  void validate(const GroupElement& element) const;

  std::uint64_t rank_of(const GroupElement& element) const;
  GroupElement element_at(std::uint64_t rank) const;

  GroupElement identity() const;

  std::string to_string() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  std::vector<std::uint64_t> moduli_;
  std::uint64_t order_ = 1;
};

// Reduces each coordinate into [0, n_i) with a nonnegative modulus.
GroupElement canonicalize(const GroupSpec& spec, std::span<const std::int64_t> raw);

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupSpec& spec, const GroupElement& a);
GroupElement subtract(const GroupSpec& spec, const GroupElement& a, const GroupElement& b);

// All n elements in lexicographic order.
std::vector<GroupElement> elements(const GroupSpec& spec);

// Sum of every element of the group.
GroupElement total_sum(const GroupSpec& spec);

// Parses "0,1,2" and canonicalizes it; arity must match the spec.
GroupElement parse_element(const GroupSpec& spec, std::string_view text);
std::string to_string(const GroupElement& element);

}  // namespace subsum
