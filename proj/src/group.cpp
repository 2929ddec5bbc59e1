#include "subsum/group.hpp"

#include <charconv>
#include <stdexcept>

namespace subsum {

namespace {

template <typename Int>
std::vector<Int> parse_list(std::string_view text, const char* what) {
  std::vector<Int> values;
  if (text.empty()) throw std::invalid_argument(std::string("empty ") + what);
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Int value{};
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
      throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(text) + "'");
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return values;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<std::uint64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("group spec needs at least one modulus");
  for (const auto m : moduli_) {
    if (m == 0) throw std::invalid_argument("group moduli must be positive");
    if (__builtin_mul_overflow(order_, m, &order_)) {
      throw std::overflow_error("group order exceeds 64 bits");
    }
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  return GroupSpec(parse_list<std::uint64_t>(text, "group spec"));
}

bool GroupSpec::contains(const GroupElement& element) const noexcept {
  if (element.residues.size() != moduli_.size()) return false;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (element.residues[i] >= moduli_[i]) return false;
  }
  return true;
}

void GroupSpec::validate(const GroupElement& element) const {
  if (element.residues.size() != moduli_.size()) {
    throw std::invalid_argument("element " + subsum::to_string(element) + " has " +
                                std::to_string(element.residues.size()) + " coordinates, group " +
                                to_string() + " has " + std::to_string(moduli_.size()));
  }
  if (!contains(element)) {
    throw std::invalid_argument("element " + subsum::to_string(element) + " is not reduced modulo " +
                                to_string());
  }
}

std::uint64_t GroupSpec::rank_of(const GroupElement& element) const {
  validate(element);
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) rank = rank * moduli_[i] + element.residues[i];
  return rank;
}

GroupElement GroupSpec::element_at(std::uint64_t rank) const {
  if (rank >= order_) throw std::out_of_range("element rank out of range");
  GroupElement element{std::vector<std::uint64_t>(moduli_.size())};
  for (std::size_t i = moduli_.size(); i-- > 0;) {
    element.residues[i] = rank % moduli_[i];
    rank /= moduli_[i];
  }
  return element;
}

GroupElement GroupSpec::identity() const {
  return GroupElement{std::vector<std::uint64_t>(moduli_.size(), 0)};
}

std::string GroupSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

GroupElement canonicalize(const GroupSpec& spec, std::span<const std::int64_t> raw) {
  const auto& moduli = spec.moduli();
  if (raw.size() != moduli.size()) {
    throw std::invalid_argument("expected " + std::to_string(moduli.size()) + " coordinates, got " +
                                std::to_string(raw.size()));
  }
  GroupElement element{std::vector<std::uint64_t>(moduli.size())};
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    // Moduli above INT64_MAX leave every int64 value's sign to decide the residue.
    if (raw[i] >= 0) {
      element.residues[i] = static_cast<std::uint64_t>(raw[i]) % moduli[i];
    } else {
      const std::uint64_t magnitude = static_cast<std::uint64_t>(-(raw[i] + 1)) + 1;
      const std::uint64_t r = magnitude % moduli[i];
      element.residues[i] = r == 0 ? 0 : moduli[i] - r;
    }
  }
  return element;
}

GroupElement add(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  spec.validate(a);
  spec.validate(b);
  const auto& moduli = spec.moduli();
  GroupElement sum{std::vector<std::uint64_t>(moduli.size())};
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    // a_i, b_i < n_i, so a_i >= n_i - b_i decides wraparound without overflow.
    const std::uint64_t room = moduli[i] - b.residues[i];
    sum.residues[i] = a.residues[i] >= room ? a.residues[i] - room : a.residues[i] + b.residues[i];
  }
  return sum;
}

GroupElement negate(const GroupSpec& spec, const GroupElement& a) {
  spec.validate(a);
  const auto& moduli = spec.moduli();
  GroupElement inverse{std::vector<std::uint64_t>(moduli.size())};
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    inverse.residues[i] = a.residues[i] == 0 ? 0 : moduli[i] - a.residues[i];
  }
  return inverse;
}

GroupElement subtract(const GroupSpec& spec, const GroupElement& a, const GroupElement& b) {
  return add(spec, a, negate(spec, b));
}

std::vector<GroupElement> elements(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (std::uint64_t rank = 0; rank < spec.order(); ++rank) out.push_back(spec.element_at(rank));
  return out;
}

GroupElement total_sum(const GroupSpec& spec) {
  // Coordinate i takes each residue order/n_i times, so its sum is
  // (order/n_i) * n_i(n_i-1)/2 mod n_i. That is 0 unless n_i is even and
  // order/n_i is odd, in which case it is n_i/2.
  const auto& moduli = spec.moduli();
  GroupElement sum = spec.identity();
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    const std::uint64_t multiplicity = spec.order() / moduli[i];
    if (moduli[i] % 2 == 0 && multiplicity % 2 == 1) sum.residues[i] = moduli[i] / 2;
  }
  return sum;
}

GroupElement parse_element(const GroupSpec& spec, std::string_view text) {
  const auto raw = parse_list<std::int64_t>(text, "group element");
  return canonicalize(spec, raw);
}

std::string to_string(const GroupElement& element) {
  std::string out;
  for (std::size_t i = 0; i < element.residues.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(element.residues[i]);
  }
  return out;
}

}  // namespace subsum
