#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Partition combinatorics: Young diagrams, residues and contents, node
// addition/removal, the two doubling maps on strict partitions,
// 2-regularization, dominance, signature reduction, and the row/column index
// bounds used by the table builder.
namespace spindec {

// A node (box) of a Young diagram.  Rows and columns are 1-based.
struct Node {
  int64_t row = 0;
  int64_t col = 0;
  friend bool operator==(const Node&, const Node&) = default;
};

struct PartitionParseError : std::runtime_error {
  PartitionParseError(const std::string& what, size_t position)
      : std::runtime_error(what), position(position) {}
  size_t position;  // byte offset into the parsed text
};

// Integer partition: weakly decreasing positive parts.  Zero parts are
// dropped on construction, so structural equality is partition equality.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int64_t> parts);

  // Parses comma-separated parts, e.g. "9,3,1".  Throws PartitionParseError
  // (with byte offset) on malformed text or parts out of order.
  static Partition parse(std::string_view text);

  const std::vector<int64_t>& parts() const { return parts_; }
  int64_t size() const;                                        // number of nodes
  int64_t length() const { return static_cast<int64_t>(parts_.size()); }
  int64_t even_part_count() const;                             // h_2
  int64_t part(int64_t i) const;  // 1-based; 0 beyond the last part
  bool is_strict() const;         // all parts distinct (equivalently 2-regular)
  bool empty() const { return parts_.empty(); }
  std::string to_string() const;  // "9,3,1"; empty partition renders as ""

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the part sequences (a proper prefix compares smaller).
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y);

 private:
  std::vector<int64_t> parts_;
};

// Residue of a node: (col - row) mod 2.
int residue(Node a);

// Residue rule for spin combinatorics, a function of the column only.  The
// implemented rule assigns bar-residue 0 to columns j with j mod 4 in {0, 1}.
// The literal-sentence rule (0 for j mod 4 in {0, 3}) is kept solely so the
// convention-audit suite can demonstrate that it breaks block consistency.
enum class BarRule { Implemented, LiteralSentence };
int bar_residue(Node a, BarRule rule = BarRule::Implemented);

struct Content {
  int64_t c0 = 0;
  int64_t c1 = 0;
  friend bool operator==(const Content&, const Content&) = default;
};
// Node counts by residue / bar-residue.  bar_content requires a strict input.
Content content(const Partition& lam);
Content bar_content(const Partition& lam, BarRule rule = BarRule::Implemented);

// Node lists in increasing row order.
std::vector<Node> addable_nodes(const Partition& lam);
std::vector<Node> removable_nodes(const Partition& lam);
// Addable/removable nodes that keep the partition strict.  Require strict input.
std::vector<Node> bar_addable_nodes(const Partition& lam);
std::vector<Node> bar_removable_nodes(const Partition& lam);

Partition with_node_added(const Partition& lam, Node a);
Partition with_node_removed(const Partition& lam, Node a);

// Doubling maps on strict partitions: each part a contributes the pair
//   dbl:     (ceil((a+1)/2), floor((a-1)/2))
//   bar_dbl: (ceil(a/2),     floor(a/2))
// with zero parts dropped.  bar_dbl always yields a partition; dbl can produce
// an out-of-order sequence (e.g. on (3,2)), in which case dbl throws
// std::domain_error and try_dbl returns nullopt.
Partition dbl(const Partition& lam);
std::optional<Partition> try_dbl(const Partition& lam);
Partition bar_dbl(const Partition& lam);

// 2-regularization: nodes slide to the top of their ladders
// {(i, j) : i + j - 1 = L}; the result is the unique strict partition with the
// same number of nodes on every ladder.
Partition regularize(const Partition& lam);

// Dominance: mu dominates lam iff every prefix sum of mu is >= the matching
// prefix sum of lam.  Requires |mu| == |lam|.
bool dominates(const Partition& mu, const Partition& lam);

struct Bounds {
  int64_t M;     // floor(n/2):       last two-part Specht row index
  int64_t m;     // floor((n-1)/2):   last two-part spin row index
  int64_t mbar;  // floor((n-4)/2), or (n-6)/2 when 4 | n: last double column
};
Bounds bounds(int64_t n);  // requires n >= 1

// Signature reduction for residue i: addable/removable i-nodes are scanned in
// increasing column order (no two can share a column); a removable node whose
// successor on the reduction stack is addable cancels with it, recursively.
// Survivors are the normal (removable) and conormal (addable) nodes, each kept
// in increasing column order.
struct Signature {
  int64_t eps = 0;  // number of normal nodes
  int64_t phi = 0;  // number of conormal nodes
  std::vector<Node> normal;
  std::vector<Node> conormal;
};
Signature signature(const Partition& lam, int i);
// Remove the leftmost normal node / add the rightmost conormal node.
// nullopt when there is none.
std::optional<Partition> tilde_e(const Partition& lam, int i);
std::optional<Partition> tilde_f(const Partition& lam, int i);

}  // namespace spindec
