#include "spindec/decomp.hpp"

#include <algorithm>
#include <stdexcept>

#include "spindec/dyadic.hpp"

namespace spindec {

EntryValue EntryValue::exact(int64_t v) {
  if (v < 0) throw std::invalid_argument("EntryValue: negative value");
  return {EntryKind::Exact, v};
}

EntryValue EntryValue::at_most(int64_t v) {
  if (v < 0) throw std::invalid_argument("EntryValue: negative value");
  if (v == 0) return exact(0);  // an upper bound of 0 is an exact 0
  return {EntryKind::AtMost, v};
}

EntryValue EntryValue::unknown() { return {EntryKind::Unknown, 0}; }

std::string EntryValue::to_string() const {
  switch (kind) {
    case EntryKind::Exact: return std::to_string(value);
    case EntryKind::AtMost: return "<=" + std::to_string(value);
    case EntryKind::Unknown: return "?";
  }
  throw std::logic_error("EntryValue: bad kind");
}

int64_t james_specht(int64_t n, int64_t a, int64_t b) {
  const Bounds bd = bounds(n);
  if (a < 0 || a > bd.M || b < 0 || b > bd.m)
    throw std::out_of_range("james_specht: indices out of range");
  return g_contains(n - 2 * b + 1, a - b);
}

int64_t straight_entry(int64_t n, int64_t a, int64_t b) {
  if (n < 3) throw std::out_of_range("straight_entry: n must be >= 3");
  const Bounds bd = bounds(n);
  if (a < 0 || a > bd.m || b < 0 || b > (n - 3) / 2)
    throw std::out_of_range("straight_entry: indices out of range");
  const int64_t r8 = n % 8;
  const int64_t gap = n - 2 * a;
  const bool b_even = b % 2 == 0;
  // The nonzero pattern, by n mod 8 and the parity of b.
  const bool hit = (n % 2 == 0 && gap == 2) ||
                   (r8 == 0 && b_even && gap == 4) ||
                   (r8 == 4 && !b_even && gap == 4) ||
                   ((r8 == 1 || r8 == 3) && b_even && gap == 1) ||
                   ((r8 == 1 || r8 == 3) && !b_even && gap == 3) ||
                   ((r8 == 5 || r8 == 7) && !b_even && gap == 1) ||
                   ((r8 == 5 || r8 == 7) && b_even && gap == 3);
  if (!hit) return 0;
  return pow2(d_exponent(n - 2 * b + 1));
}

bool equality_condition(int64_t n, int64_t b, int64_t c) {
  if (n < 4 || n % 4 != 0 || b % 2 != 0 || b < 2 || b > bounds(n).mbar ||
      c < b || c > n / 2)
    throw std::out_of_range("equality_condition: indices out of range");
  const int64_t lhs = g_contains(n - 2 * b + 1, c - b) +
                      g_contains(n - 2 * b - 1, c - b - 1) -
                      g_contains(n - 2 * b - 3, c - b - 2);
  int64_t rhs = 0;
  if (c % 2 == 0) {
    const int64_t delta = c != n / 2 ? 1 : 0;
    rhs = delta * g_contains(n - 2 * b - 4, c - b) +
          (1 + delta) * g_contains(n - 2 * b - 4, c - b - 4);
  } else {
    rhs = 2 * g_contains(n - 2 * b - 4, c - b - 1) +
          g_contains(n - 2 * b - 4, c - b - 5);
  }
  return lhs == rhs;
}

BoundResolution resolve_bounded_case(int64_t n, int64_t a, int64_t b) {
  if (n % 4 != 0 || b % 2 != 0 || b < 2)
    throw std::invalid_argument("resolve_bounded_case: needs 4 | n and even b >= 2");
  const Bounds bd = bounds(n);
  if (a < 0 || a > bd.m || b > bd.mbar)
    throw std::out_of_range("resolve_bounded_case: indices out of range");
  BoundResolution r;
  r.killed = ((a - b) % 4 + 4) % 4 == 2;
  r.bound = 2 * g_contains(n - 2 * b - 3, a - b) +
            2 * g_contains(n - 2 * b - 3, a - b - 3);
  if (r.killed) r.bound = 0;
  const int64_t q = a - b + 1 >= 0 ? (a - b + 1) / 4 : -((-(a - b + 1) + 3) / 4);
  r.cert_nu = q == 0 || (q > 0 && nu2(q) >= nu2((n - 2 * b) / 4));
  r.cert_g = g_contains(n - 2 * b - 4, 4 * q - 4) == 0;
  r.cert_c = false;
  for (int64_t c : {a, a + 1}) {
    const int64_t rem = ((c - b) % 4 + 4) % 4;
    if ((rem != 0 && rem != 1) || c < b || c > n / 2) continue;
    if (equality_condition(n, b, c)) r.cert_c = true;
  }
  return r;
}

EntryValue double_entry(int64_t n, int64_t a, int64_t b) {
  if (n < 4) throw std::out_of_range("double_entry: n must be >= 4");
  const Bounds bd = bounds(n);
  if (a < 0 || a > bd.m || b < 0 || b > bd.mbar)
    throw std::out_of_range("double_entry: indices out of range");
  if (b == 0) {
    // Column dbl((n)): the top row is exact, the others are open.
    if (a == 0) return EntryValue::exact(pow2(Partition({n}).even_part_count() / 2));
    return EntryValue::unknown();
  }
  const int64_t g1 = g_contains(n - 2 * b, a - b);
  const int64_t g2 = g_contains(n - 2 * b - 2, a - b - 1);
  const int64_t r4 = n % 4;
  const bool b_even = b % 2 == 0;
  if ((r4 == 1 && b_even) || (r4 == 2 && !b_even) || (r4 == 3 && !b_even))
    return EntryValue::exact(g1);
  if (r4 == 2 && b_even) return EntryValue::exact(2 * g1);
  if ((r4 == 1 && !b_even) || (r4 == 3 && b_even))
    return EntryValue::exact(g1 - g2);
  if (r4 == 0 && !b_even) return EntryValue::exact(g1 + 2 * g2);
  // 4 | n with b even >= 2: bounded case with exactness certificates.
  const BoundResolution r = resolve_bounded_case(n, a, b);
  if (r.exact()) return EntryValue::exact(r.bound);
  return EntryValue::at_most(r.bound);
}

std::vector<ColumnLabel> classify_columns(int64_t n) {
  if (n < 4) throw std::out_of_range("classify_columns: n must be >= 4");
  const Bounds bd = bounds(n);
  std::vector<ColumnLabel> cols;
  for (int64_t b = 0; b <= (n - 3) / 2; ++b)
    cols.push_back({ColumnKind::Straight, b, Partition({n - b, b})});
  for (int64_t b = 0; b <= bd.mbar; ++b) {
    auto mu = try_dbl(Partition({n - b, b}));
    if (!mu || !mu->is_strict())
      throw std::logic_error("classify_columns: double label not 2-regular");
    cols.push_back({ColumnKind::Double, b, *std::move(mu)});
  }
  std::sort(cols.begin(), cols.end(), [](const ColumnLabel& x, const ColumnLabel& y) {
    return y.mu < x.mu;
  });
  for (size_t k = 1; k < cols.size(); ++k)
    if (cols[k].mu == cols[k - 1].mu)
      throw std::logic_error("classify_columns: duplicate column label");
  return cols;
}

}  // namespace spindec
