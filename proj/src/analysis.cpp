#include "subsum/analysis.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace subsum {

namespace {

void require_even_pair(std::uint64_t n, std::uint64_t k, const char* what) {
  if (n == 0 || k == 0 || n % 2 != 0 || k % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": n and k must be even and positive (got n=" +
                                std::to_string(n) + ", k=" + std::to_string(k) + ")");
  }
  if (k > n) {
    throw std::invalid_argument(std::string(what) + ": k=" + std::to_string(k) + " exceeds n=" +
                                std::to_string(n));
  }
}

Count power(std::uint64_t base, std::uint64_t exponent) {
  Count result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

}  // namespace

std::string render_decimal(const Rational& q, unsigned digits) {
  Count num = abs(q.get_num());
  const Count& den = q.get_den();
  num *= power(10, digits);
  Count scaled;
  Count rem;
  mpz_tdiv_qr(scaled.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int half = cmp(Count(2 * rem), den);
  if (half > 0 || (half == 0 && mpz_odd_p(scaled.get_mpz_t()))) ++scaled;

  std::string text = scaled.get_str();
  if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
  if (digits > 0) text.insert(text.size() - digits, 1, '.');
  if (sgn(q) < 0 && sgn(scaled) != 0) text.insert(0, 1, '-');
  return text;
}

RatioReport uniformity_ratio(const CountTable& table) {
  const std::uint64_t n = table.spec.order();
  if (table.k < 1 || table.k + 1 > n) {
    throw std::invalid_argument("uniformity ratio needs 1 <= k <= n-1 (got k=" + std::to_string(table.k) +
                                ", n=" + std::to_string(n) + "); other k leave most counts at zero");
  }
  const auto [lo, hi] = std::minmax_element(table.entries.begin(), table.entries.end(),
                                            [](const Count& a, const Count& b) { return cmp(a, b) < 0; });
  // minmax_element returns the last maximum; the first one is wanted.
  const auto first_max = std::find(table.entries.begin(), table.entries.end(), *hi);
  const auto argmin = static_cast<std::uint64_t>(lo - table.entries.begin());
  const auto argmax = static_cast<std::uint64_t>(first_max - table.entries.begin());
  RatioReport report{table.spec,
                     table.k,
                     *lo,
                     *first_max,
                     table.spec.element_at(argmin),
                     table.spec.element_at(argmax),
                     Rational(*lo, *first_max)};
  report.ratio.canonicalize();
  return report;
}

RatioReport uniformity_ratio(const GroupSpec& spec, std::uint64_t k) {
  const std::uint64_t n = spec.order();
  if (k < 1 || k + 1 > n) {
    throw std::invalid_argument("uniformity ratio needs 1 <= k <= n-1 (got k=" + std::to_string(k) +
                                ", n=" + std::to_string(n) + "); other k leave most counts at zero");
  }
  return uniformity_ratio(count_table(spec, k));
}

Rational main_term(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::invalid_argument("main_term: n must be positive");
  if (k > n) throw std::invalid_argument("main_term: k exceeds n");
  Rational q(binomial(n, k), Count(static_cast<unsigned long>(n)));
  q.canonicalize();
  return q;
}

Count deviation_bound(std::uint64_t n, std::uint64_t k) {
  require_even_pair(n, k, "deviation_bound");
  return binomial(n / 2, k / 2) * static_cast<unsigned long>(k);
}

DeviationCheck deviation_check(const GroupSpec& spec, std::uint64_t k) {
  const std::uint64_t n = spec.order();
  require_even_pair(n, k, "deviation_check");
  const Count limit = deviation_bound(n, k) * static_cast<unsigned long>(n);
  const Count total = binomial(n, k);
  const CountTable table = count_table(spec, k);
  for (std::uint64_t rank = 0; rank < n; ++rank) {
    const Count gap = abs(Count(table.entries[rank] * static_cast<unsigned long>(n) - total));
    if (gap > limit) return {false, spec.element_at(rank)};
  }
  return {};
}

bool binomial_ratio_check(std::uint64_t n, std::uint64_t k) {
  require_even_pair(n, k, "binomial_ratio_check");
  const Count lhs = binomial(n / 2, k / 2) * power(n, k / 2);
  const Count rhs = binomial(n, k) * power(k, k / 2);
  return lhs <= rhs;
}

double vanishing_expr(std::uint64_t n, std::uint64_t k) {
  require_even_pair(n, k, "vanishing_expr");
  Rational value(binomial(n / 2, k / 2) * static_cast<unsigned long>(n) * power(k, 2), binomial(n, k));
  value.canonicalize();
  return value.get_d();
}

double l_value(std::uint64_t n, double k) {
  if (n == 0 || !(k > 0.0)) throw std::invalid_argument("l_value: n and k must be positive");
  const double log_n = std::log(static_cast<double>(n));
  const double log_k = std::log(k);
  return log_n + 2.0 * log_k + 0.5 * k * (log_k - log_n);
}

double l_second_derivative(double k) {
  if (!(k > 0.0)) throw std::invalid_argument("l_second_derivative: k must be positive");
  return 1.0 / (2.0 * k) - 2.0 / (k * k);
}

EndpointCheck endpoint_max_check(std::uint64_t n) {
  if (n < 8) throw std::invalid_argument("endpoint_max_check: n must be at least 8");
  const std::uint64_t last = n / 2 + 1;
  EndpointCheck check{false, 4, l_value(n, 4.0)};
  for (std::uint64_t k = 5; k <= last; ++k) {
    const double value = l_value(n, static_cast<double>(k));
    if (value > check.max_value) check = {false, k, value};
  }
  check.holds = check.argmax == 4 || check.argmax == last;
  return check;
}

BoundReport bound_report(std::uint64_t n, std::uint64_t k) {
  BoundReport report{n, k, main_term(n, k), {}, {}, {}};
  if (n % 2 == 0 && k % 2 == 0 && k > 0) {
    report.deviation_bound = deviation_bound(n, k);
    report.vanishing_expr = vanishing_expr(n, k);
  }
  if (k >= 1) report.l_value = l_value(n, static_cast<double>(k));
  return report;
}

Family parse_family(std::string_view text) {
  if (text == "cyclic") return Family::kCyclic;
  if (text == "elementary-2") return Family::kElementary2;
  if (text == "two-factor") return Family::kTwoFactor;
  throw std::invalid_argument("unknown family '" + std::string(text) +
                              "' (expected cyclic, elementary-2 or two-factor)");
}

std::string_view family_label(Family family) {
  switch (family) {
    case Family::kCyclic:
      return "cyclic";
    case Family::kElementary2:
      return "elementary-2";
    case Family::kTwoFactor:
      return "two-factor";
  }
  return "unknown";
}

GroupSpec family_spec(Family family, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("order must be positive");
  switch (family) {
    case Family::kCyclic:
      return GroupSpec({n});
    case Family::kElementary2: {
      if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("elementary-2 needs a power of two >= 2, got " + std::to_string(n));
      }
      return GroupSpec(std::vector<std::uint64_t>(static_cast<std::size_t>(std::countr_zero(n)), 2));
    }
    case Family::kTwoFactor:
      if (n % 2 != 0) throw std::invalid_argument("two-factor needs an even order, got " + std::to_string(n));
      return GroupSpec({2, n / 2});
  }
  throw std::invalid_argument("unknown family");
}

KRule KRule::parse(std::string_view text) {
  if (text == "half-plus-one") return {Kind::kHalfPlusOne, 0};
  constexpr std::string_view prefix = "fixed:";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (!digits.empty() && ec == std::errc{} && end == digits.data() + digits.size()) {
      return {Kind::kFixed, value};
    }
  }
  throw std::invalid_argument("malformed k-rule '" + std::string(text) + "' (expected fixed:K or half-plus-one)");
}

std::vector<SweepRow> convergence_sweep(Family family, std::vector<std::uint64_t> orders, const KRule& rule,
                                        unsigned precision) {
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());

  std::vector<SweepRow> rows;
  rows.reserve(orders.size());
  for (const auto n : orders) {
    SweepRow row;
    row.family = family_label(family);
    row.n = n;
    row.k = rule.apply(n);
    try {
      const GroupSpec spec = family_spec(family, n);
      if (row.k < 1 || row.k + 1 > n) {
        throw std::invalid_argument("k=" + std::to_string(row.k) + " is outside [1, n-1]");
      }
      const RatioReport report = uniformity_ratio(spec, row.k);
      row.min_count = report.min_count;
      row.max_count = report.max_count;
      row.ratio = report.ratio;
      row.ratio_decimal = report.decimal(precision);
      if (n % 2 == 0 && row.k % 2 == 0) row.vanishing_expr = vanishing_expr(n, row.k);
      row.l_value = l_value(n, static_cast<double>(row.k));
    } catch (const std::invalid_argument& e) {
      row.error = e.what();
    } catch (const std::overflow_error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_real(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "family,n,k,min_count,max_count,ratio_decimal,vanishing_expr,l_value\n";
  for (const auto& row : rows) {
    out << row.family << ',' << row.n << ',' << row.k << ',';
    if (row.min_count) out << row.min_count->get_str();
    out << ',';
    if (row.max_count) out << row.max_count->get_str();
    out << ',' << row.ratio_decimal << ',';
    if (row.vanishing_expr) out << format_real(*row.vanishing_expr);
    out << ',';
    if (row.l_value) out << format_real(*row.l_value);
    out << '\n';
  }
}

}  // namespace subsum
