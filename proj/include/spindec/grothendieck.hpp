#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "spindec/partition.hpp"

// Integer formal sums of basis classes and the induction/restriction
// operators acting on them.  Two families of classes are supported:
//   Sym(mu)   — classes indexed by arbitrary partitions, where the operators
//               move over ordinary addable/removable nodes of residue i with
//               coefficient 1;
//   Spin(lam) — classes indexed by strict partitions, where the operators move
//               over strictness-preserving nodes of bar-residue i with
//               coefficient 2^{x_A}; x_A = 1 exactly when the node is not the
//               first-column node of the last/new row and |lam| - h(lam) is
//               odd (|lam| always the size of the source partition).
// A sum is kept homogeneous: one family, one partition size.
namespace spindec {

enum class BasisKind { Sym, Spin };

struct BasisClass {
  BasisKind kind = BasisKind::Sym;
  Partition lam;
  friend bool operator==(const BasisClass&, const BasisClass&) = default;
};

// Map order: Sym before Spin, then descending lexicographic on partitions.
struct BasisClassOrder {
  bool operator()(const BasisClass& x, const BasisClass& y) const {
    if (x.kind != y.kind) return x.kind == BasisKind::Sym;
    return y.lam < x.lam;
  }
};

class FormalSum {
 public:
  using Terms = std::map<BasisClass, int64_t, BasisClassOrder>;

  FormalSum() = default;
  static FormalSum single(BasisClass c, int64_t coeff = 1);

  // Checked accumulation; zero coefficients are erased.  Throws
  // std::invalid_argument when mixing kinds or sizes, std::overflow_error on
  // coefficient overflow.  Spin classes must be strict.
  void add(const BasisClass& c, int64_t coeff);

  const Terms& terms() const { return terms_; }
  int64_t coeff(const BasisClass& c) const;
  bool empty() const { return terms_.empty(); }

  FormalSum& operator+=(const FormalSum& other);
  FormalSum& operator-=(const FormalSum& other);
  friend bool operator==(const FormalSum&, const FormalSum&) = default;

 private:
  Terms terms_;
};

// Lowering/raising operators for residue i (0 or 1), applied term by term.
FormalSum apply_e(const FormalSum& sum, int i, BarRule rule = BarRule::Implemented);
FormalSum apply_f(const FormalSum& sum, int i, BarRule rule = BarRule::Implemented);

// Drops every term whose partition has more than max_rows parts.
FormalSum truncate_rows(const FormalSum& sum, int64_t max_rows);

// Keeps the terms whose (bar-)content equals c.
FormalSum block_component(const FormalSum& sum, Content c,
                          BarRule rule = BarRule::Implemented);

// "2*Spin(11,8) + 1*Sym(9,3)"; the empty sum renders as "0".
std::string to_string(const FormalSum& sum);

}  // namespace spindec
