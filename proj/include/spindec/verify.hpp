#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Self-verification suites: each one checks an identity or cross-computation
// that the multiplicity formulas must satisfy, over an exhaustive range.  A
// suite reports the number of instances checked, any failures, and notes for
// expected behaviour worth surfacing (e.g. counterexamples outside an
// identity's hypothesis).
namespace spindec {

struct SuiteReport {
  std::string suite;
  int64_t instances = 0;
  std::vector<std::string> failures;  // capped; see truncated_failures
  std::vector<std::string> notes;
  int64_t total_failures = 0;
  bool passed() const { return total_failures == 0; }
  std::string to_string() const;  // FAIL/NOTE lines plus a final OK/FAILED line
  void fail(const std::string& instance);
};

// The six per-parity branching identities behind the double-column formulas,
// for all admissible (n, a, b) with n <= max_n.
SuiteReport suite_case_identities(int64_t max_n = 400);

// Pascal-style recurrence g(k, l) = g(k-1, l) + g(k-1, l-1) under the
// hypothesis nu2(l) >= nu2(k) or g(k-1, l-1) = 0, for 0 <= l < k <= max_k.
// Counterexamples outside the hypothesis are expected and reported as notes.
SuiteReport suite_recurrence(int64_t max_k = 4096);

// Power-of-two collapse: for odd n, writing n + 1 = h * 2^k with k >= 1
// maximal (h = 2 allowed when n + 1 is a 2-power, else h odd > 1),
//   2^{d(n-1)+1} - sum_{i=1}^{k-1} 2^{d(n - 2^{i+1} + 1) + 1} = 2^{d(n+1)}.
SuiteReport suite_power_identity(int64_t max_n = 100000);

// Operator expansions: the eight odd-rank double-operator identities and the
// eight even-rank single-operator identities (mod classes with > 2 rows),
// each at its three smallest admissible ranks.
SuiteReport suite_expansions();

// Block consistency: every nonzero table entry for n <= max_n has
// bar_content(row label) == content(column label).
SuiteReport suite_blocks(int64_t max_n = 200);

// Shift stability: exact double-column entries agree between (n, a, b) and
// (n+4, a+2, b+2) for a, b >= 1, n <= max_n.
SuiteReport suite_shift(int64_t max_n = 100);

// Diagonal entries: double_entry(n, b, b) = 2^{floor(h2((n-b, b)) / 2)} exactly,
// for 1 <= b <= mbar_n, n <= max_n.
SuiteReport suite_diagonal(int64_t max_n = 200);

// Doubling vs regularization: dbl(lam) = regularize(bar_dbl(lam)) for every
// strict lam with |lam| <= max_size whose dbl is a strict partition, except
// the partitions ending with the parts 2, 1, where the identity provably
// fails (dbl keeps a part 2 on one row, bar_dbl spreads it over two, and the
// trailing 1 shifts ladders); those are logged as notes, not failures.
SuiteReport suite_regularization(int64_t max_size = 40);

// Residue-rule audit: the implemented bar-residue rule must yield zero block
// violations for n <= max_n, while the literal-sentence rule must demonstrably
// break block consistency and one operator expansion.
SuiteReport suite_convention_audit(int64_t max_n = 200);

struct SuiteBounds {
  int64_t case_identities = 400;
  int64_t recurrence = 4096;
  int64_t power = 100000;
  int64_t blocks = 200;
  int64_t shift = 100;
  int64_t diagonal = 200;
  int64_t regularization = 40;
  int64_t convention = 200;
};

// Runs one suite by name, or all of them for "all".  Throws
// std::invalid_argument for an unknown name.
std::vector<SuiteReport> run_suites(const std::string& name,
                                    const SuiteBounds& bounds = {});

}  // namespace spindec
