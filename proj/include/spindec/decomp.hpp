#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spindec/partition.hpp"

// Characteristic-2 decomposition multiplicities for the two-part rows.
// Columns come in two kinds:
//   Straight(b) — labelled by the two-part partition (n-b, b);
//   Double(b)   — labelled by dbl((n-b, b)), which is 2-regular for b <= mbar_n.
// Entries are exact values, upper bounds, or unknown.
namespace spindec {

enum class EntryKind { Exact, AtMost, Unknown };

struct EntryValue {
  EntryKind kind = EntryKind::Unknown;
  int64_t value = 0;  // meaningful for Exact and AtMost

  static EntryValue exact(int64_t v);
  static EntryValue at_most(int64_t v);  // at_most(0) collapses to exact(0)
  static EntryValue unknown();
  std::string to_string() const;  // "8" / "<=2" / "?"
  friend bool operator==(const EntryValue&, const EntryValue&) = default;
};

// Multiplicity of the 2-regular column (n-b, b) in the Specht row (n-a, a):
// g(n - 2b + 1, a - b).  Requires n >= 1, 0 <= a <= M_n, 0 <= b <= m_n.
int64_t james_specht(int64_t n, int64_t a, int64_t b);

// Multiplicity of the straight column (n-b, b) in the spin row (n-a, a):
// 2^{d(n - 2b + 1)} when the (n mod 8, parity of b, n - 2a) pattern matches,
// else 0.  Requires n >= 3, 0 <= a <= m_n, 0 <= b <= floor((n-3)/2).
int64_t straight_entry(int64_t n, int64_t a, int64_t b);

// Multiplicity of the double column dbl((n-b, b)) in the spin row (n-a, a).
// Requires n >= 4, 0 <= a <= m_n, 0 <= b <= mbar_n.  The b = 0 column is
// exact 2^{floor(h2((n)) / 2)} in row a = 0 and unknown in rows a >= 1.
// For 4 | n with b even >= 2 the value is an upper bound unless one of the
// exactness certificates of resolve_bounded_case fires.
EntryValue double_entry(int64_t n, int64_t a, int64_t b);

// Certification identity for the bounded case: true when
//   g(n-2b+1, c-b) + g(n-2b-1, c-b-1) - g(n-2b-3, c-b-2)
// equals the side dictated by the parity of c:
//   c even: [c != n/2]*g(n-2b-4, c-b)   + (1 + [c != n/2])*g(n-2b-4, c-b-4)
//   c odd:  2*g(n-2b-4, c-b-1)          + g(n-2b-4, c-b-5)
// Requires 4 | n, b even, 2 <= b <= mbar_n, b <= c <= n/2.
bool equality_condition(int64_t n, int64_t b, int64_t c);

// Full resolution of the bounded case (4 | n, b even >= 2).  All certificates
// are evaluated eagerly so verification can inspect each one.
struct BoundResolution {
  int64_t bound = 0;   // 2*g(n-2b-3, a-b) + 2*g(n-2b-3, a-b-3)
  bool killed = false; // a - b = 2 mod 4: entry is exactly 0
  bool cert_nu = false;    // q = floor((a-b+1)/4) is 0, or nu2(q) >= nu2((n-2b)/4)
  bool cert_g = false;     // g(n-2b-4, 4q-4) = 0
  bool cert_c = false;     // equality_condition holds for some c in {a, a+1}
                           // with c - b = 0 or 1 mod 4 and c <= n/2
  bool exact() const { return killed || bound == 0 || cert_nu || cert_g || cert_c; }
};
BoundResolution resolve_bounded_case(int64_t n, int64_t a, int64_t b);

enum class ColumnKind { Straight, Double };

struct ColumnLabel {
  ColumnKind kind = ColumnKind::Straight;
  int64_t b = 0;
  Partition mu;  // (n-b, b) or dbl((n-b, b))
  friend bool operator==(const ColumnLabel&, const ColumnLabel&) = default;
};

// All columns at rank n in descending lexicographic order of their labels:
// straight b = 0..floor((n-3)/2) plus double b = 0..mbar_n.  Requires n >= 4.
std::vector<ColumnLabel> classify_columns(int64_t n);

}  // namespace spindec
