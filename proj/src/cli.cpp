#include "subsum/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subsum/analysis.hpp"
#include "subsum/counting.hpp"
#include "subsum/oracle.hpp"

namespace subsum::cli {

namespace {

using nlohmann::json;

// A user-facing problem with the request; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string moduli;
  std::uint64_t k = 0;
  std::string target;
  std::uint64_t n = 0;
  std::uint64_t max_order = 0;
  std::string oracle = "both";
  unsigned precision = kDefaultPrecision;
  std::string format = "plain";
  std::string family;
  std::string orders;
  std::string k_rule;
  std::string out_path;
};

json element_json(const GroupElement& element) { return json(element.residues); }

std::vector<std::uint64_t> parse_orders(const std::string& text) {
  // Orders share the comma-list syntax of group specs.
  return GroupSpec::parse(text).moduli();
}

void emit_count(const Options& opt, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(opt.moduli);
  const GroupElement target = parse_element(spec, opt.target);
  out << count_subset_sums(spec, opt.k, target).get_str() << '\n';
}

void emit_table(const Options& opt, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(opt.moduli);
  if (opt.k > spec.order()) {
    throw UsageError("k=" + std::to_string(opt.k) + " exceeds the group order " + std::to_string(spec.order()));
  }
  const CountTable table = count_table(spec, opt.k);
  if (opt.format == "json") {
    json entries = json::array();
    for (std::uint64_t rank = 0; rank < spec.order(); ++rank) {
      entries.push_back({{"element", element_json(spec.element_at(rank))},
                         {"count", table.entries[rank].get_str()}});
    }
    const json doc = {{"moduli", spec.moduli()}, {"k", opt.k}, {"entries", entries}};
    out << doc.dump(2) << '\n';
  } else if (opt.format == "csv") {
    out << "element,count\n";
    for (std::uint64_t rank = 0; rank < spec.order(); ++rank) {
      out << '"' << to_string(spec.element_at(rank)) << "\"," << table.entries[rank].get_str() << '\n';
    }
  } else {
    for (std::uint64_t rank = 0; rank < spec.order(); ++rank) {
      out << to_string(spec.element_at(rank)) << '\t' << table.entries[rank].get_str() << '\n';
    }
  }
}

int emit_verify(const Options& opt, std::ostream& out) {
  const OracleChoice choice = opt.oracle == "enum" ? OracleChoice::kEnum
                              : opt.oracle == "dp" ? OracleChoice::kDp
                                                   : OracleChoice::kBoth;
  if (choice != OracleChoice::kDp && opt.max_order > kEnumOrderLimit) {
    throw UsageError("--max-order " + std::to_string(opt.max_order) + " is above the enumeration limit of " +
                     std::to_string(kEnumOrderLimit) + "; use --oracle dp");
  }
  const auto family = verification_family(opt.max_order);
  std::uint64_t tables = 0;
  for (const auto& spec : family) {
    if (const auto mismatch = verify_against_oracles(spec, choice)) {
      out << mismatch->describe() << '\n';
      return kVerificationFailed;
    }
    tables += spec.order() + 1;
  }
  out << "verified " << family.size() << " groups, " << tables << " tables (oracle: " << opt.oracle
      << "): all match\n";
  return kOk;
}

void emit_ratio(const Options& opt, std::ostream& out) {
  const GroupSpec spec = GroupSpec::parse(opt.moduli);
  const RatioReport report = uniformity_ratio(spec, opt.k);
  if (opt.format == "json") {
    const json doc = {{"moduli", spec.moduli()},
                      {"k", opt.k},
                      {"min_count", report.min_count.get_str()},
                      {"max_count", report.max_count.get_str()},
                      {"argmin", element_json(report.argmin)},
                      {"argmax", element_json(report.argmax)},
                      {"ratio", report.ratio.get_str()},
                      {"ratio_decimal", report.decimal(opt.precision)}};
    out << doc.dump(2) << '\n';
    return;
  }
  out << "min_count: " << report.min_count.get_str() << '\n'
      << "argmin: " << to_string(report.argmin) << '\n'
      << "max_count: " << report.max_count.get_str() << '\n'
      << "argmax: " << to_string(report.argmax) << '\n'
      << "ratio: " << report.ratio.get_str() << '\n'
      << "ratio_decimal: " << report.decimal(opt.precision) << '\n';
}

void emit_bounds(const Options& opt, std::ostream& out) {
  if (opt.n == 0) throw UsageError("--n must be positive");
  if (opt.k > opt.n) throw UsageError("--k must not exceed --n");
  const BoundReport report = bound_report(opt.n, opt.k);
  if (opt.format == "json") {
    json doc = {{"n", report.n}, {"k", report.k}, {"main_term", report.main_term.get_str()}};
    if (report.deviation_bound) doc["deviation_bound"] = report.deviation_bound->get_str();
    if (report.vanishing_expr) doc["vanishing_expr"] = *report.vanishing_expr;
    if (report.l_value) doc["l_value"] = *report.l_value;
    out << doc.dump(2) << '\n';
    return;
  }
  out << "main_term: " << report.main_term.get_str() << '\n';
  if (report.deviation_bound) out << "deviation_bound: " << report.deviation_bound->get_str() << '\n';
  if (report.vanishing_expr) out << "vanishing_expr: " << format_real(*report.vanishing_expr) << '\n';
  if (report.l_value) out << "l_value: " << format_real(*report.l_value) << '\n';
}

void emit_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
  const Family family = parse_family(opt.family);
  const KRule rule = KRule::parse(opt.k_rule);
  const auto rows = convergence_sweep(family, parse_orders(opt.orders), rule, opt.precision);
  for (const auto& row : rows) {
    if (!row.error.empty()) err << "warning: n=" << row.n << ": " << row.error << '\n';
  }
  write_sweep_csv(out, rows);
}

// Buffers output so --out files are only written on success.
int with_output(const Options& opt, std::ostream& out, const std::function<int(std::ostream&)>& body) {
  std::ostringstream buffer;
  const int code = body(buffer);
  if (opt.out_path.empty()) {
    out << buffer.str();
    return code;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file || !(file << buffer.str())) throw UsageError("cannot write " + opt.out_path);
  return code;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact subset-sum counts in finite abelian groups"};
  app.name("subsum");
  app.require_subcommand(1);

  const auto add_moduli = [&](CLI::App* sub) {
    sub->add_option("--moduli", opt.moduli, "Cyclic factors, e.g. 4 or 2,2,3")->required();
  };
  const auto add_k = [&](CLI::App* sub) { sub->add_option("--k", opt.k, "Subset size")->required(); };
  const auto add_format = [&](CLI::App* sub, std::vector<std::string> formats) {
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(std::move(formats)));
  };
  const auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--precision", opt.precision, "Decimal digits of the rendered ratio")
        ->check(CLI::Range(1u, 10000u));
  };
  const auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
  };

  auto* count = app.add_subcommand("count", "Print N(k, b) for one target b");
  add_moduli(count);
  add_k(count);
  count->add_option("--target", opt.target, "Target element, e.g. 0,1,2")->required();

  auto* table = app.add_subcommand("table", "Print N(k, b) for every b");
  add_moduli(table);
  add_k(table);
  add_format(table, {"plain", "json", "csv"});
  add_out(table);

  auto* verify = app.add_subcommand("verify", "Check the formula against brute-force oracles");
  verify->add_option("--max-order", opt.max_order, "Largest group order in the family")->required();
  verify->add_option("--oracle", opt.oracle, "Which oracle(s) to compare with")
      ->check(CLI::IsMember({"enum", "dp", "both"}));

  auto* ratio = app.add_subcommand("ratio", "Report min/max of N(k, .) and their ratio");
  add_moduli(ratio);
  add_k(ratio);
  add_precision(ratio);
  add_format(ratio, {"plain", "json"});
  add_out(ratio);

  auto* bounds = app.add_subcommand("bounds", "Evaluate the bound quantities for (n, k)");
  bounds->add_option("--n", opt.n, "Group order")->required();
  add_k(bounds);
  add_format(bounds, {"plain", "json"});
  add_out(bounds);

  auto* sweep = app.add_subcommand("sweep", "Ratio and bound trace over a group family, as CSV");
  sweep->add_option("--family", opt.family, "cyclic, elementary-2 or two-factor")->required();
  sweep->add_option("--orders", opt.orders, "Comma-separated group orders")->required();
  sweep->add_option("--k-rule", opt.k_rule, "fixed:K or half-plus-one")->required();
  add_precision(sweep);
  add_out(sweep);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsageError;
  }

  try {
    return with_output(opt, out, [&](std::ostream& sink) {
      if (*count) emit_count(opt, sink);
      if (*table) emit_table(opt, sink);
      if (*verify) return emit_verify(opt, sink);
      if (*ratio) emit_ratio(opt, sink);
      if (*bounds) emit_bounds(opt, sink);
      if (*sweep) emit_sweep(opt, sink, err);
      return kOk;
    });
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace subsum::cli
