#include "spindec/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace spindec {

Partition::Partition(std::vector<int64_t> parts) : parts_(std::move(parts)) {
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (parts_[k] < 0)
      throw std::invalid_argument("Partition: parts must be nonnegative");
    if (k > 0 && parts_[k] > parts_[k - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::parse(std::string_view text) {
  std::vector<int64_t> parts;
  size_t pos = 0;
  if (text.empty()) return Partition{};
  while (true) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first)
      throw PartitionParseError("expected a part (nonnegative integer)", pos);
    if (value < 0) throw PartitionParseError("parts must be nonnegative", pos);
    if (!parts.empty() && value > parts.back())
      throw PartitionParseError("parts must be weakly decreasing", pos);
    parts.push_back(value);
    pos = static_cast<size_t>(ptr - text.data());
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw PartitionParseError("expected ',' between parts", pos);
    ++pos;
    if (pos == text.size())
      throw PartitionParseError("trailing ',' without a part", pos);
  }
  return Partition(std::move(parts));
}

int64_t Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), int64_t{0});
}

int64_t Partition::even_part_count() const {
  return std::count_if(parts_.begin(), parts_.end(),
                       [](int64_t p) { return p % 2 == 0; });
}

int64_t Partition::part(int64_t i) const {
  if (i < 1) throw std::out_of_range("Partition::part: index is 1-based");
  return i <= length() ? parts_[static_cast<size_t>(i - 1)] : 0;
}

bool Partition::is_strict() const {
  for (size_t k = 1; k < parts_.size(); ++k)
    if (parts_[k] == parts_[k - 1]) return false;
  return true;
}

std::string Partition::to_string() const {
  std::string out;
  for (size_t k = 0; k < parts_.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
  return std::lexicographical_compare_three_way(
      x.parts_.begin(), x.parts_.end(), y.parts_.begin(), y.parts_.end());
}

int residue(Node a) {
  return static_cast<int>(((a.col - a.row) % 2 + 2) % 2);
}

int bar_residue(Node a, BarRule rule) {
  const int64_t r = ((a.col % 4) + 4) % 4;
  if (rule == BarRule::Implemented) return (r == 0 || r == 1) ? 0 : 1;
  return (r == 0 || r == 3) ? 0 : 1;
}

Content content(const Partition& lam) {
  Content c;
  for (int64_t i = 1; i <= lam.length(); ++i)
    for (int64_t j = 1; j <= lam.part(i); ++j)
      (residue({i, j}) == 0 ? c.c0 : c.c1)++;
  return c;
}

Content bar_content(const Partition& lam, BarRule rule) {
  if (!lam.is_strict())
    throw std::invalid_argument("bar_content: partition must be strict");
  Content c;
  for (int64_t i = 1; i <= lam.length(); ++i)
    for (int64_t j = 1; j <= lam.part(i); ++j)
      (bar_residue({i, j}, rule) == 0 ? c.c0 : c.c1)++;
  return c;
}

std::vector<Node> addable_nodes(const Partition& lam) {
  std::vector<Node> out;
  const int64_t h = lam.length();
  for (int64_t i = 1; i <= h; ++i)
    if (i == 1 || lam.part(i - 1) > lam.part(i)) out.push_back({i, lam.part(i) + 1});
  out.push_back({h + 1, 1});
  return out;
}

std::vector<Node> removable_nodes(const Partition& lam) {
  std::vector<Node> out;
  const int64_t h = lam.length();
  for (int64_t i = 1; i <= h; ++i)
    if (lam.part(i) > lam.part(i + 1)) out.push_back({i, lam.part(i)});
  return out;
}

Partition with_node_added(const Partition& lam, Node a) {
  auto parts = lam.parts();
  if (a.row == lam.length() + 1) {
    if (a.col != 1) throw std::invalid_argument("with_node_added: node not addable");
    parts.push_back(1);
    return Partition(std::move(parts));
  }
  if (a.row < 1 || a.row > lam.length() || a.col != lam.part(a.row) + 1)
    throw std::invalid_argument("with_node_added: node not addable");
  parts[static_cast<size_t>(a.row - 1)]++;
  return Partition(std::move(parts));
}

Partition with_node_removed(const Partition& lam, Node a) {
  if (a.row < 1 || a.row > lam.length() || a.col != lam.part(a.row))
    throw std::invalid_argument("with_node_removed: node not removable");
  auto parts = lam.parts();
  parts[static_cast<size_t>(a.row - 1)]--;
  return Partition(std::move(parts));
}

std::vector<Node> bar_addable_nodes(const Partition& lam) {
  if (!lam.is_strict())
    throw std::invalid_argument("bar_addable_nodes: partition must be strict");
  std::vector<Node> out;
  for (Node a : addable_nodes(lam))
    if (with_node_added(lam, a).is_strict()) out.push_back(a);
  return out;
}

std::vector<Node> bar_removable_nodes(const Partition& lam) {
  if (!lam.is_strict())
    throw std::invalid_argument("bar_removable_nodes: partition must be strict");
  std::vector<Node> out;
  for (Node a : removable_nodes(lam))
    if (with_node_removed(lam, a).is_strict()) out.push_back(a);
  return out;
}

namespace {

Partition double_by_parts(const Partition& lam, bool shifted,
                          bool* ordered_out) {
  if (!lam.is_strict())
    throw std::invalid_argument("dbl/bar_dbl: partition must be strict");
  std::vector<int64_t> parts;
  for (int64_t i = 1; i <= lam.length(); ++i) {
    const int64_t a = lam.part(i);
    // shifted: a -> (ceil((a+1)/2), floor((a-1)/2));  plain: a -> (ceil(a/2), floor(a/2))
    const int64_t hi = shifted ? (a + 2) / 2 : (a + 1) / 2;
    const int64_t lo = shifted ? (a - 1) / 2 : a / 2;
    if (hi > 0) parts.push_back(hi);
    if (lo > 0) parts.push_back(lo);
  }
  bool ordered = true;
  for (size_t k = 1; k < parts.size(); ++k)
    if (parts[k] > parts[k - 1]) ordered = false;
  if (ordered_out) *ordered_out = ordered;
  if (!ordered) return Partition{};
  return Partition(std::move(parts));
}

}  // namespace

Partition dbl(const Partition& lam) {
  bool ordered = true;
  Partition out = double_by_parts(lam, true, &ordered);
  if (!ordered)
    throw std::domain_error("dbl: result is not weakly decreasing for " +
                            lam.to_string());
  return out;
}

std::optional<Partition> try_dbl(const Partition& lam) {
  bool ordered = true;
  Partition out = double_by_parts(lam, true, &ordered);
  if (!ordered) return std::nullopt;
  return out;
}

Partition bar_dbl(const Partition& lam) {
  bool ordered = true;
  Partition out = double_by_parts(lam, false, &ordered);
  if (!ordered)  // cannot happen: floor(a/2) >= ceil(b/2) whenever a > b
    throw std::logic_error("bar_dbl: unexpected unordered result");
  return out;
}

Partition regularize(const Partition& lam) {
  if (lam.empty()) return lam;
  // Count nodes on each ladder L = row + col - 1.
  const int64_t max_ladder = [&] {
    int64_t m = 0;
    for (int64_t i = 1; i <= lam.length(); ++i)
      m = std::max(m, i + lam.part(i) - 1);
    return m;
  }();
  std::vector<int64_t> count(static_cast<size_t>(max_ladder) + 1, 0);
  for (int64_t i = 1; i <= lam.length(); ++i)
    for (int64_t j = 1; j <= lam.part(i); ++j) count[static_cast<size_t>(i + j - 1)]++;
  // Slide nodes to the tops of their ladders: row r collects the ladders that
  // hold at least r nodes.
  std::vector<int64_t> rows;
  for (int64_t r = 1;; ++r) {
    int64_t len = 0;
    for (int64_t L = 1; L <= max_ladder; ++L)
      if (count[static_cast<size_t>(L)] >= r) len++;
    if (len == 0) break;
    rows.push_back(len);
  }
  Partition out(std::move(rows));
  // The slide is valid only if it reproduces the ladder counts (rows must pick
  // up contiguous ladder ranges); verify rather than assume.
  std::vector<int64_t> check(static_cast<size_t>(max_ladder) + 1, 0);
  for (int64_t i = 1; i <= out.length(); ++i)
    for (int64_t j = 1; j <= out.part(i); ++j) {
      const int64_t L = i + j - 1;
      if (L > max_ladder) throw std::logic_error("regularize: ladder overflow");
      check[static_cast<size_t>(L)]++;
    }
  if (check != count || !out.is_strict())
    throw std::logic_error("regularize: ladder counts not preserved");
  return out;
}

bool dominates(const Partition& mu, const Partition& lam) {
  if (mu.size() != lam.size())
    throw std::invalid_argument("dominates: partitions must have equal size");
  int64_t su = 0, sl = 0;
  const int64_t len = std::max(mu.length(), lam.length());
  for (int64_t i = 1; i <= len; ++i) {
    su += mu.part(i);
    sl += lam.part(i);
    if (su < sl) return false;
  }
  return true;
}

Bounds bounds(int64_t n) {
  if (n < 1) throw std::invalid_argument("bounds: n must be >= 1");
  auto floordiv2 = [](int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); };
  Bounds b{};
  b.M = n / 2;
  b.m = (n - 1) / 2;
  b.mbar = (n % 4 == 0) ? (n - 6) / 2 : floordiv2(n - 4);
  return b;
}

Signature signature(const Partition& lam, int i) {
  if (i != 0 && i != 1) throw std::invalid_argument("signature: residue must be 0 or 1");
  struct Item {
    Node node;
    bool addable;
  };
  std::vector<Item> items;
  for (Node a : removable_nodes(lam))
    if (residue(a) == i) items.push_back({a, false});
  for (Node a : addable_nodes(lam))
    if (residue(a) == i) items.push_back({a, true});
  std::sort(items.begin(), items.end(),
            [](const Item& x, const Item& y) { return x.node.col < y.node.col; });
  std::vector<Item> stack;
  for (const Item& it : items) {
    if (it.addable && !stack.empty() && !stack.back().addable)
      stack.pop_back();
    else
      stack.push_back(it);
  }
  Signature s;
  for (const Item& it : stack)
    (it.addable ? s.conormal : s.normal).push_back(it.node);
  s.eps = static_cast<int64_t>(s.normal.size());
  s.phi = static_cast<int64_t>(s.conormal.size());
  return s;
}

std::optional<Partition> tilde_e(const Partition& lam, int i) {
  const Signature s = signature(lam, i);
  if (s.normal.empty()) return std::nullopt;
  return with_node_removed(lam, s.normal.front());
}

std::optional<Partition> tilde_f(const Partition& lam, int i) {
  const Signature s = signature(lam, i);
  if (s.conormal.empty()) return std::nullopt;
  return with_node_added(lam, s.conormal.back());
}

}  // namespace spindec
