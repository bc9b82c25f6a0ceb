#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spindec/decomp.hpp"
#include "spindec/partition.hpp"

// Assembled decomposition tables, their renderers (text, CSV, LaTeX), and
// comparison against externally tabulated reference CSV files.
namespace spindec {

enum class RowEps { Zero, PlusMinus };

struct RowLabel {
  int64_t a = 0;
  Partition lam;  // (n-a, a)
  RowEps eps = RowEps::Zero;
  std::string to_string() const;  // "S((9,3),0)" / "S((12),+-)"
};

struct DecompTable {
  int64_t n = 0;
  std::vector<RowLabel> rows;
  std::vector<ColumnLabel> cols;
  std::vector<std::vector<EntryValue>> cells;  // cells[row][col]
};

// Rows a = 0..m_n; columns from classify_columns.  Requires n >= 4.
DecompTable build_table(int64_t n);

enum class TableFormat { Text, Csv, Latex };
std::string render_table(const DecompTable& table, TableFormat format);

// Reference CSV cells.  The vocabulary extends the tool's: blank (zero),
// a bare integer, "<=k", "?", and "k=?" for a value that is known from
// external computation but not produced by the closed formulas here.
enum class RefKind { Blank, Value, ExternalValue, AtMost, Unknown };

struct RefCell {
  RefKind kind = RefKind::Blank;
  int64_t value = 0;
  std::string raw;  // original field text, for reporting
};

struct ReferenceTable {
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<std::vector<RefCell>> cells;
};

struct ReferenceParseError : std::runtime_error {
  ReferenceParseError(const std::string& what, size_t line, size_t column)
      : std::runtime_error(what), line(line), column(column) {}
  size_t line;    // 1-based
  size_t column;  // 1-based byte column of the offending field or character
};

// Parses a reference CSV: '#' lines are comments, fields may be quoted with
// '"' (doubled to escape), the header row starts with a "row" cell followed by
// column labels.  Throws ReferenceParseError on malformed input.
ReferenceTable parse_reference_csv(std::string_view text);

struct Mismatch {
  std::string row;
  std::string col;
  std::string tool;
  std::string ref;
  std::string to_string() const;
};

// Cell-by-cell comparison.  Exact(v) matches blank (v = 0), "v", and "v=?";
// AtMost(v) matches "<=v"; Unknown matches "?" and any "k=?".  Label or shape
// disagreements are reported as mismatches against pseudo-cells "(labels)".
std::vector<Mismatch> compare_table(const DecompTable& table,
                                    const ReferenceTable& ref);

}  // namespace spindec
