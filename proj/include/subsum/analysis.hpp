#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "subsum/counting.hpp"

namespace subsum {

using Rational = mpq_class;

inline constexpr unsigned kDefaultPrecision = 12;

// Renders q with exactly `digits` fractional digits, rounding half to even.
std::string render_decimal(const Rational& q, unsigned digits);

/// min_b N(k, b) / max_b N(k, b) with lexicographically first witnesses.
struct RatioReport {
  GroupSpec spec;
  std::uint64_t k = 0;
  Count min_count;
  Count max_count;
  GroupElement argmin;
  GroupElement argmax;
  Rational ratio;

  std::string decimal(unsigned digits = kDefaultPrecision) const { return render_decimal(ratio, digits); }
};

// Requires 1 <= k <= n-1; other k give a degenerate ratio and are rejected.
RatioReport uniformity_ratio(const GroupSpec& spec, std::uint64_t k);
RatioReport uniformity_ratio(const CountTable& table);

// The r = 1 term C(n, k)/n in lowest terms.
Rational main_term(std::uint64_t n, std::uint64_t k);

// k * C(n/2, k/2); n and k must both be even and positive, k <= n.
Count deviation_bound(std::uint64_t n, std::uint64_t k);

struct DeviationCheck {
  bool holds = true;
  std::optional<GroupElement> violation;  // first b breaking the bound
};

// Checks |n N(k,b) - C(n,k)| <= n k C(n/2, k/2) for every b in G.
DeviationCheck deviation_check(const GroupSpec& spec, std::uint64_t k);

// C(n/2,k/2) / C(n,k) <= (k/n)^{k/2}, compared exactly as
// C(n/2,k/2) n^{k/2} <= C(n,k) k^{k/2}.
bool binomial_ratio_check(std::uint64_t n, std::uint64_t k);

// n k^2 C(n/2,k/2) / C(n,k), formed exactly and rounded once to double.
double vanishing_expr(std::uint64_t n, std::uint64_t k);

// L_n(k) = ln(n k^2 (k/n)^{k/2}) with natural log, continuous in k.
double l_value(std::uint64_t n, double k);

// d^2 L_n / dk^2 = 1/(2k) - 2/k^2; independent of n.
double l_second_derivative(double k);

struct EndpointCheck {
  bool holds = false;
  std::uint64_t argmax = 0;
  double max_value = 0.0;
};

// Scans every integer k in [4, floor(n/2)+1] and reports whether L_n peaks
// at one of the two ends. Requires n >= 8.
EndpointCheck endpoint_max_check(std::uint64_t n);

/// Proof quantities for one (n, k); parity-undefined fields stay empty.
struct BoundReport {
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  Rational main_term;
  std::optional<Count> deviation_bound;
  std::optional<double> vanishing_expr;
  std::optional<double> l_value;
};

BoundReport bound_report(std::uint64_t n, std::uint64_t k);

// ---------------------------------------------------------------------------
// Convergence sweeps

enum class Family { kCyclic, kElementary2, kTwoFactor };

// Accepts "cyclic", "elementary-2" and "two-factor".
Family parse_family(std::string_view text);
std::string_view family_label(Family family);

// The family member of order n: Z_n, Z_2^s with 2^s = n, or Z_2 x Z_{n/2}.
// Throws std::invalid_argument when n does not fit the family.
GroupSpec family_spec(Family family, std::uint64_t n);

struct KRule {
  enum class Kind { kFixed, kHalfPlusOne };
  Kind kind = Kind::kHalfPlusOne;
  std::uint64_t fixed = 0;

  // Accepts "fixed:K" and "half-plus-one".
  static KRule parse(std::string_view text);
  std::uint64_t apply(std::uint64_t n) const { return kind == Kind::kFixed ? fixed : n / 2 + 1; }
};

struct SweepRow {
  std::string family;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  std::optional<Count> min_count;
  std::optional<Count> max_count;
  std::optional<Rational> ratio;
  std::string ratio_decimal;
  std::optional<double> vanishing_expr;
  std::optional<double> l_value;
  std::string error;  // nonempty when the row could not be evaluated
};

// One row per distinct order, ascending. Infeasible orders yield a row with
// `error` set instead of throwing.
std::vector<SweepRow> convergence_sweep(Family family, std::vector<std::uint64_t> orders, const KRule& rule,
                                        unsigned precision = kDefaultPrecision);

// Shortest round-trip decimal form of a double.
std::string format_real(double value);

// Header plus one line per row; empty fields for missing values.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace subsum
