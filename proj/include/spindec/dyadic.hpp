#pragma once

#include <cstdint>

// Dyadic (base-2) arithmetic helpers underlying every multiplicity formula in
// this library.  All three functions are small enough to be total and fast:
// the table builders call them millions of times.
namespace spindec {

// 2-adic valuation: largest e with 2^e dividing m.  Requires m >= 1.
int64_t nu2(int64_t m);

// For m >= 1 write m = 2^{a_1} + ... + 2^{a_k} with a_1 > ... > a_k >= 0.
// Then d_exponent(m) = a_1 + k - 3 (highest bit position plus popcount minus
// three).  May be negative for m <= 2.
int64_t d_exponent(int64_t m);

// Binary containment indicator g(ell, m):
//   g(ell, m) = 1  iff  m >= 0, every binary digit of m is also set in ell,
//                       and there is k with m < 2^k <= ell
//   g(ell, m) = 0  otherwise (in particular for m < 0 and for ell = m = 0).
// The last condition is equivalent to 2^{bit_width(m)} <= ell with
// bit_width(0) = 0.  Total in both arguments.
int g_contains(int64_t ell, int64_t m);

// 2^e with range checking.  Requires 0 <= e <= 62.
int64_t pow2(int64_t e);

}  // namespace spindec
