#include "spindec/tables.hpp"

#include <algorithm>
#include <charconv>

namespace spindec {

std::string RowLabel::to_string() const {
  return "S((" + lam.to_string() + ")," + (eps == RowEps::Zero ? "0" : "+-") + ")";
}

DecompTable build_table(int64_t n) {
  if (n < 4) throw std::out_of_range("build_table: n must be >= 4");
  DecompTable t;
  t.n = n;
  const Bounds bd = bounds(n);
  for (int64_t a = 0; a <= bd.m; ++a) {
    Partition lam = a == 0 ? Partition({n}) : Partition({n - a, a});
    const RowEps eps = (n - lam.length()) % 2 == 0 ? RowEps::Zero : RowEps::PlusMinus;
    t.rows.push_back({a, std::move(lam), eps});
  }
  t.cols = classify_columns(n);
  for (const RowLabel& row : t.rows) {
    std::vector<EntryValue> line;
    line.reserve(t.cols.size());
    for (const ColumnLabel& col : t.cols)
      line.push_back(col.kind == ColumnKind::Straight
                         ? EntryValue::exact(straight_entry(n, row.a, col.b))
                         : double_entry(n, row.a, col.b));
    t.cells.push_back(std::move(line));
  }
  return t;
}

namespace {

// Cell text in tool vocabulary; exact zeros render blank inside tables.
std::string cell_text(const EntryValue& v) {
  if (v.kind == EntryKind::Exact && v.value == 0) return "";
  return v.to_string();
}

std::string csv_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string render_text(const DecompTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"row"};
  for (const auto& col : t.cols) header.push_back(col.mu.to_string());
  grid.push_back(std::move(header));
  for (size_t r = 0; r < t.rows.size(); ++r) {
    std::vector<std::string> line{t.rows[r].to_string()};
    for (const auto& cell : t.cells[r]) line.push_back(cell_text(cell));
    grid.push_back(std::move(line));
  }
  std::vector<size_t> width(grid[0].size(), 0);
  for (const auto& line : grid)
    for (size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::string out;
  for (const auto& line : grid) {
    std::string text;
    for (size_t c = 0; c < line.size(); ++c) {
      if (c > 0) text += "  ";
      if (c == 0)  // row labels flush left, cells flush right
        text += line[c] + std::string(width[c] - line[c].size(), ' ');
      else
        text += std::string(width[c] - line[c].size(), ' ') + line[c];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text;
    out += '\n';
  }
  return out;
}

std::string render_csv(const DecompTable& t) {
  std::string out = csv_quote("row");
  for (const auto& col : t.cols) out += "," + csv_quote(col.mu.to_string());
  out += '\n';
  for (size_t r = 0; r < t.rows.size(); ++r) {
    out += csv_quote(t.rows[r].to_string());
    for (const auto& cell : t.cells[r]) out += "," + csv_quote(cell_text(cell));
    out += '\n';
  }
  return out;
}

std::string latex_row_label(const RowLabel& row) {
  return "$S((" + row.lam.to_string() + ")," +
         (row.eps == RowEps::Zero ? "0" : "\\pm") + ")$";
}

std::string render_latex(const DecompTable& t) {
  std::string out = "\\begin{tabular}{l|*{" + std::to_string(t.cols.size()) + "}{c}}\n";
  for (const auto& col : t.cols) out += " & $D^{(" + col.mu.to_string() + ")}$";
  out += " \\\\\n\\hline\n";
  for (size_t r = 0; r < t.rows.size(); ++r) {
    out += latex_row_label(t.rows[r]);
    for (const auto& cell : t.cells[r]) {
      out += " & ";
      if (cell.kind == EntryKind::AtMost)
        out += "$\\leq " + std::to_string(cell.value) + "$";
      else
        out += cell_text(cell);
    }
    out += " \\\\\n";
  }
  out += "\\end{tabular}\n";
  return out;
}

}  // namespace

std::string render_table(const DecompTable& t, TableFormat format) {
  switch (format) {
    case TableFormat::Text: return render_text(t);
    case TableFormat::Csv: return render_csv(t);
    case TableFormat::Latex: return render_latex(t);
  }
  throw std::logic_error("render_table: bad format");
}

namespace {

struct Field {
  std::string text;
  size_t column = 0;  // 1-based byte column of the field start
};

// Splits one CSV line; supports '"' quoting with '""' escapes.
std::vector<Field> split_csv_line(std::string_view line, size_t line_no) {
  std::vector<Field> fields;
  size_t pos = 0;
  while (true) {
    Field f;
    f.column = pos + 1;
    if (pos < line.size() && line[pos] == '"') {
      ++pos;
      bool closed = false;
      while (pos < line.size()) {
        if (line[pos] == '"') {
          if (pos + 1 < line.size() && line[pos + 1] == '"') {
            f.text += '"';
            pos += 2;
          } else {
            ++pos;
            closed = true;
            break;
          }
        } else {
          f.text += line[pos++];
        }
      }
      if (!closed)
        throw ReferenceParseError("unterminated quoted field", line_no, f.column);
      if (pos < line.size() && line[pos] != ',')
        throw ReferenceParseError("unexpected character after quoted field",
                                  line_no, pos + 1);
    } else {
      while (pos < line.size() && line[pos] != ',') {
        if (line[pos] == '"')
          throw ReferenceParseError("stray quote inside unquoted field",
                                    line_no, pos + 1);
        f.text += line[pos++];
      }
    }
    fields.push_back(std::move(f));
    if (pos == line.size()) break;
    ++pos;  // consume ','
    if (pos == line.size()) {
      fields.push_back({"", line.size() + 1});
      break;
    }
  }
  return fields;
}

RefCell parse_ref_cell(const Field& f, size_t line_no) {
  RefCell cell;
  cell.raw = f.text;
  const std::string& s = f.text;
  if (s.empty()) {
    cell.kind = RefKind::Blank;
    return cell;
  }
  if (s == "?") {
    cell.kind = RefKind::Unknown;
    return cell;
  }
  auto parse_int = [&](std::string_view digits, int64_t& out) {
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
    return ec == std::errc{} && ptr == digits.data() + digits.size() && out >= 0;
  };
  if (s.size() > 2 && s.compare(0, 2, "<=") == 0) {
    if (!parse_int(std::string_view(s).substr(2), cell.value))
      throw ReferenceParseError("malformed upper-bound cell '" + s + "'",
                                line_no, f.column);
    cell.kind = RefKind::AtMost;
    return cell;
  }
  if (s.size() > 2 && s.compare(s.size() - 2, 2, "=?") == 0) {
    if (!parse_int(std::string_view(s).substr(0, s.size() - 2), cell.value))
      throw ReferenceParseError("malformed externally-known cell '" + s + "'",
                                line_no, f.column);
    cell.kind = RefKind::ExternalValue;
    return cell;
  }
  if (!parse_int(s, cell.value))
    throw ReferenceParseError("unrecognized cell '" + s + "'", line_no, f.column);
  cell.kind = RefKind::Value;
  return cell;
}

}  // namespace

ReferenceTable parse_reference_csv(std::string_view text) {
  ReferenceTable ref;
  bool have_header = false;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      pos = end + 1;
      continue;
    }
    auto fields = split_csv_line(line, line_no);
    if (!have_header) {
      if (fields.empty() || fields[0].text != "row")
        throw ReferenceParseError("header must start with a 'row' cell", line_no,
                                  fields.empty() ? 1 : fields[0].column);
      for (size_t k = 1; k < fields.size(); ++k)
        ref.col_labels.push_back(fields[k].text);
      if (ref.col_labels.empty())
        throw ReferenceParseError("header has no column labels", line_no, 1);
      have_header = true;
    } else {
      if (fields.size() != ref.col_labels.size() + 1)
        throw ReferenceParseError(
            "expected " + std::to_string(ref.col_labels.size() + 1) + " fields, got " +
                std::to_string(fields.size()),
            line_no, 1);
      ref.row_labels.push_back(fields[0].text);
      std::vector<RefCell> cells;
      for (size_t k = 1; k < fields.size(); ++k)
        cells.push_back(parse_ref_cell(fields[k], line_no));
      ref.cells.push_back(std::move(cells));
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (!have_header)
    throw ReferenceParseError("no header row found", line_no, 1);
  if (ref.cells.empty())
    throw ReferenceParseError("no data rows found", line_no, 1);
  return ref;
}

std::string Mismatch::to_string() const {
  return "row=" + row + " col=" + col + " tool=" + tool + " ref=" + ref;
}

namespace {

bool cell_matches(const EntryValue& tool, const RefCell& ref) {
  switch (tool.kind) {
    case EntryKind::Exact:
      return (ref.kind == RefKind::Blank && tool.value == 0) ||
             ((ref.kind == RefKind::Value || ref.kind == RefKind::ExternalValue) &&
              ref.value == tool.value);
    case EntryKind::AtMost:
      return ref.kind == RefKind::AtMost && ref.value == tool.value;
    case EntryKind::Unknown:
      return ref.kind == RefKind::Unknown || ref.kind == RefKind::ExternalValue;
  }
  return false;
}

}  // namespace

std::vector<Mismatch> compare_table(const DecompTable& table,
                                    const ReferenceTable& ref) {
  std::vector<Mismatch> out;
  std::vector<std::string> tool_cols;
  for (const auto& col : table.cols) tool_cols.push_back(col.mu.to_string());
  std::vector<std::string> tool_rows;
  for (const auto& row : table.rows) tool_rows.push_back(row.to_string());
  if (tool_cols != ref.col_labels) {
    std::string want, have;
    for (const auto& s : tool_cols) want += "[" + s + "]";
    for (const auto& s : ref.col_labels) have += "[" + s + "]";
    out.push_back({"(labels)", "(labels)", want, have});
    return out;
  }
  if (tool_rows != ref.row_labels) {
    std::string want, have;
    for (const auto& s : tool_rows) want += "[" + s + "]";
    for (const auto& s : ref.row_labels) have += "[" + s + "]";
    out.push_back({"(labels)", "(labels)", want, have});
    return out;
  }
  for (size_t r = 0; r < table.rows.size(); ++r)
    for (size_t c = 0; c < table.cols.size(); ++c)
      if (!cell_matches(table.cells[r][c], ref.cells[r][c]))
        out.push_back({tool_rows[r], tool_cols[c],
                       table.cells[r][c].to_string(), ref.cells[r][c].raw});
  return out;
}

}  // namespace spindec
