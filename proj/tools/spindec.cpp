#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spindec/decomp.hpp"
#include "spindec/grothendieck.hpp"
#include "spindec/partition.hpp"
#include "spindec/tables.hpp"
#include "spindec/verify.hpp"

// Exit code contract: 0 success / all match, 1 comparison mismatch or suite
// violation, 2 usage or input error.
namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

spindec::Partition parse_partition_arg(const std::string& text) {
  try {
    return spindec::Partition::parse(text);
  } catch (const spindec::PartitionParseError& e) {
    throw UsageError("malformed partition '" + text + "' at position " +
                     std::to_string(e.position) + ": " + e.what());
  }
}

// "straight:2" / "double:0" -> (kind, b)
std::pair<spindec::ColumnKind, int64_t> parse_col_arg(const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("--col expects straight:B or double:B, got '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string num = text.substr(colon + 1);
  int64_t b = 0;
  try {
    size_t used = 0;
    b = std::stoll(num, &used);
    if (used != num.size() || b < 0) throw std::invalid_argument(num);
  } catch (const std::exception&) {
    throw UsageError("--col expects a nonnegative decimal B, got '" + num + "'");
  }
  if (kind == "straight") return {spindec::ColumnKind::Straight, b};
  if (kind == "double") return {spindec::ColumnKind::Double, b};
  throw UsageError("--col kind must be 'straight' or 'double', got '" + kind + "'");
}

int run_entry(int64_t n, int64_t a, const std::string& col) {
  const auto [kind, b] = parse_col_arg(col);
  try {
    const spindec::EntryValue v = kind == spindec::ColumnKind::Straight
                                      ? spindec::EntryValue::exact(spindec::straight_entry(n, a, b))
                                      : spindec::double_entry(n, a, b);
    std::cout << v.to_string() << "\n";
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int run_table(int64_t n, const std::string& format, const std::string& out_path) {
  spindec::TableFormat fmt;
  if (format == "text") fmt = spindec::TableFormat::Text;
  else if (format == "csv") fmt = spindec::TableFormat::Csv;
  else if (format == "latex") fmt = spindec::TableFormat::Latex;
  else throw UsageError("--format must be text, csv, or latex, got '" + format + "'");
  std::string rendered;
  try {
    rendered = render_table(spindec::build_table(n), fmt);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  if (out_path.empty()) {
    std::cout << rendered;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + out_path + "' for writing");
  out << rendered;
  if (!out.flush()) throw UsageError("write to '" + out_path + "' failed");
  return kExitOk;
}

int run_compare(int64_t n, const std::string& ref_path) {
  std::ifstream in(ref_path, std::ios::binary);
  if (!in) throw UsageError("cannot open reference file '" + ref_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  spindec::ReferenceTable ref;
  try {
    ref = spindec::parse_reference_csv(buffer.str());
  } catch (const spindec::ReferenceParseError& e) {
    throw UsageError(ref_path + ":" + std::to_string(e.line) + ":" +
                     std::to_string(e.column) + ": " + e.what());
  }
  spindec::DecompTable table;
  try {
    table = spindec::build_table(n);
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  const auto mismatches = spindec::compare_table(table, ref);
  for (const auto& mm : mismatches) std::cout << "mismatch " << mm.to_string() << "\n";
  std::cout << "mismatches: " << mismatches.size() << "\n";
  return mismatches.empty() ? kExitOk : kExitViolation;
}

int run_expand(const std::string& basis, const std::string& partition,
               const std::string& ops) {
  spindec::BasisKind kind;
  if (basis == "sym") kind = spindec::BasisKind::Sym;
  else if (basis == "spin") kind = spindec::BasisKind::Spin;
  else throw UsageError("--basis must be sym or spin, got '" + basis + "'");
  const spindec::Partition lam = parse_partition_arg(partition);
  spindec::FormalSum sum;
  try {
    sum = spindec::FormalSum::single({kind, lam});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  // ops: comma-separated tokens e0, e1, f0, f1, applied left to right.
  size_t pos = 0;
  while (pos <= ops.size()) {
    size_t next = ops.find(',', pos);
    if (next == std::string::npos) next = ops.size();
    const std::string token = ops.substr(pos, next - pos);
    if (token.size() != 2 || (token[0] != 'e' && token[0] != 'f') ||
        (token[1] != '0' && token[1] != '1'))
      throw UsageError("--ops tokens must be e0, e1, f0, or f1, got '" + token + "'");
    const int i = token[1] - '0';
    sum = token[0] == 'e' ? apply_e(sum, i) : apply_f(sum, i);
    if (next == ops.size()) break;
    pos = next + 1;
  }
  std::cout << to_string(sum) << "\n";
  return kExitOk;
}

int run_verify(const std::string& suite, std::optional<int64_t> max_n) {
  spindec::SuiteBounds bounds;
  if (max_n) {
    const int64_t k = *max_n;
    if (k < 1) throw UsageError("--max-n must be >= 1");
    // Override the range of the selected suite (every suite for "all").
    bounds.case_identities = bounds.recurrence = bounds.power = bounds.blocks =
        bounds.shift = bounds.diagonal = bounds.regularization = bounds.convention = k;
  }
  std::vector<spindec::SuiteReport> reports;
  try {
    reports = spindec::run_suites(suite, bounds);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool all_passed = true;
  for (const auto& report : reports) {
    std::cout << report.to_string();
    all_passed = all_passed && report.passed();
  }
  return all_passed ? kExitOk : kExitViolation;
}

int run_util(const std::string& op, const std::string& partition,
             std::optional<int64_t> n) {
  if (op == "bounds") {
    if (!n) throw UsageError("util bounds requires --n");
    spindec::Bounds b;
    try {
      b = spindec::bounds(*n);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    std::cout << "M=" << b.M << " m=" << b.m << " mbar=" << b.mbar << "\n";
    return kExitOk;
  }
  if (op != "dbl" && op != "bardbl" && op != "regularize" && op != "content" &&
      op != "barcontent")
    throw UsageError("unknown util operation '" + op + "'");
  if (partition.empty())
    throw UsageError("util " + op + " requires --partition");
  const spindec::Partition lam = parse_partition_arg(partition);
  try {
    if (op == "dbl") {
      std::cout << spindec::dbl(lam).to_string() << "\n";
    } else if (op == "bardbl") {
      std::cout << spindec::bar_dbl(lam).to_string() << "\n";
    } else if (op == "regularize") {
      std::cout << spindec::regularize(lam).to_string() << "\n";
    } else if (op == "content") {
      const spindec::Content c = spindec::content(lam);
      std::cout << "(" << c.c0 << "," << c.c1 << ")\n";
    } else if (op == "barcontent") {
      const spindec::Content c = spindec::bar_content(lam);
      std::cout << "(" << c.c0 << "," << c.c1 << ")\n";
    } else {
      throw UsageError("unknown util operation '" + op + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verified table generator for characteristic-2 spin decomposition numbers"};
  app.require_subcommand(1);

  int64_t n = 0, a = 0;
  std::string col, format = "text", out_path, ref_path;
  std::string basis, partition_text, ops;
  std::string suite = "all";
  std::optional<int64_t> max_n;
  std::string util_op;
  std::optional<int64_t> util_n;
  std::string util_partition;

  auto* entry = app.add_subcommand("entry", "Print one table entry");
  entry->add_option("--n", n, "Rank")->required();
  entry->add_option("--a", a, "Row index a (row (n-a,a))")->required();
  entry->add_option("--col", col, "Column: straight:B or double:B")->required();

  auto* table = app.add_subcommand("table", "Render the full table for a rank");
  table->add_option("--n", n, "Rank")->required();
  table->add_option("--format", format, "text|csv|latex (default text)");
  table->add_option("--out", out_path, "Write to file instead of stdout");

  auto* compare = app.add_subcommand("compare", "Compare a built table to a reference CSV");
  compare->add_option("--n", n, "Rank")->required();
  compare->add_option("--reference", ref_path, "Reference CSV file")->required();

  auto* expand = app.add_subcommand("expand", "Apply branching operators to a basis class");
  expand->add_option("--basis", basis, "sym|spin")->required();
  expand->add_option("--partition", partition_text, "Partition, e.g. \"9,8\"")->required();
  expand->add_option("--ops", ops, "Comma-separated e0/e1/f0/f1, applied left to right")
      ->required();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite,
                     "all|case-identities|recurrence|power|expansions|blocks|shift|diag|"
                     "regularize|convention (default all)");
  verify->add_option("--max-n", max_n, "Override the suite's range bound");

  auto* util = app.add_subcommand("util", "Partition utilities");
  util->add_option("op", util_op, "dbl|bardbl|regularize|content|barcontent|bounds")
      ->required();
  util->add_option("--partition", util_partition, "Partition, e.g. \"9,3\"");
  util->add_option("--n", util_n, "Rank (for bounds)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (entry->parsed()) return run_entry(n, a, col);
    if (table->parsed()) return run_table(n, format, out_path);
    if (compare->parsed()) return run_compare(n, ref_path);
    if (expand->parsed()) return run_expand(basis, partition_text, ops);
    if (verify->parsed()) return run_verify(suite, max_n);
    if (util->parsed()) return run_util(util_op, util_partition, util_n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
