#include "spindec/grothendieck.hpp"

#include <stdexcept>

namespace spindec {

namespace {

int64_t checked_add(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("FormalSum: coefficient overflow");
  return out;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("FormalSum: coefficient overflow");
  return out;
}

void validate_class(const BasisClass& c) {
  if (c.kind == BasisKind::Spin && !c.lam.is_strict())
    throw std::invalid_argument("FormalSum: Spin classes must be strict");
}

}  // namespace

FormalSum FormalSum::single(BasisClass c, int64_t coeff) {
  FormalSum s;
  s.add(c, coeff);
  return s;
}

void FormalSum::add(const BasisClass& c, int64_t coeff) {
  if (coeff == 0) return;
  validate_class(c);
  if (!terms_.empty()) {
    const BasisClass& ref = terms_.begin()->first;
    if (ref.kind != c.kind || ref.lam.size() != c.lam.size())
      throw std::invalid_argument("FormalSum: sums are homogeneous in kind and size");
  }
  auto it = terms_.find(c);
  if (it == terms_.end()) {
    terms_.emplace(c, coeff);
    return;
  }
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

int64_t FormalSum::coeff(const BasisClass& c) const {
  auto it = terms_.find(c);
  return it == terms_.end() ? 0 : it->second;
}

FormalSum& FormalSum::operator+=(const FormalSum& other) {
  for (const auto& [c, k] : other.terms_) add(c, k);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& other) {
  for (const auto& [c, k] : other.terms_) add(c, checked_mul(k, -1));
  return *this;
}

namespace {

// Shared body of apply_e/apply_f: `lower` selects removal vs addition.
FormalSum apply_operator(const FormalSum& sum, int i, bool lower, BarRule rule) {
  if (i != 0 && i != 1)
    throw std::invalid_argument("apply_e/apply_f: residue must be 0 or 1");
  FormalSum out;
  for (const auto& [c, k] : sum.terms()) {
    if (c.kind == BasisKind::Sym) {
      const auto nodes = lower ? removable_nodes(c.lam) : addable_nodes(c.lam);
      for (Node a : nodes) {
        if (residue(a) != i) continue;
        Partition mu = lower ? with_node_removed(c.lam, a) : with_node_added(c.lam, a);
        out.add({BasisKind::Sym, std::move(mu)}, k);
      }
    } else {
      const auto nodes = lower ? bar_removable_nodes(c.lam) : bar_addable_nodes(c.lam);
      const int64_t h = c.lam.length();
      const bool odd_excess = (c.lam.size() - h) % 2 != 0;
      for (Node a : nodes) {
        if (bar_residue(a, rule) != i) continue;
        // Coefficient doubles unless the node is the first-column node of the
        // last row (removal) / the new row (addition), or the size-minus-rows
        // excess of the source is even.
        const Node plain{lower ? h : h + 1, 1};
        const int64_t coeff = (odd_excess && !(a == plain)) ? 2 : 1;
        Partition mu = lower ? with_node_removed(c.lam, a) : with_node_added(c.lam, a);
        out.add({BasisKind::Spin, std::move(mu)}, checked_mul(k, coeff));
      }
    }
  }
  return out;
}

}  // namespace

FormalSum apply_e(const FormalSum& sum, int i, BarRule rule) {
  return apply_operator(sum, i, true, rule);
}

FormalSum apply_f(const FormalSum& sum, int i, BarRule rule) {
  return apply_operator(sum, i, false, rule);
}

FormalSum truncate_rows(const FormalSum& sum, int64_t max_rows) {
  FormalSum out;
  for (const auto& [c, k] : sum.terms())
    if (c.lam.length() <= max_rows) out.add(c, k);
  return out;
}

FormalSum block_component(const FormalSum& sum, Content want, BarRule rule) {
  FormalSum out;
  for (const auto& [c, k] : sum.terms()) {
    const Content have =
        c.kind == BasisKind::Sym ? content(c.lam) : bar_content(c.lam, rule);
    if (have == want) out.add(c, k);
  }
  return out;
}

std::string to_string(const FormalSum& sum) {
  if (sum.empty()) return "0";
  std::string out;
  for (const auto& [c, k] : sum.terms()) {
    if (!out.empty()) out += " + ";
    out += std::to_string(k);
    out += '*';
    out += c.kind == BasisKind::Sym ? "Sym(" : "Spin(";
    out += c.lam.to_string();
    out += ')';
  }
  return out;
}

}  // namespace spindec
