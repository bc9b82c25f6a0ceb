#include "spindec/dyadic.hpp"

#include <bit>
#include <stdexcept>

namespace spindec {

int64_t nu2(int64_t m) {
  if (m < 1) throw std::invalid_argument("nu2: argument must be positive");
  return std::countr_zero(static_cast<uint64_t>(m));
}

int64_t d_exponent(int64_t m) {
  if (m < 1) throw std::invalid_argument("d_exponent: argument must be positive");
  const auto u = static_cast<uint64_t>(m);
  const int64_t high = std::bit_width(u) - 1;
  return high + std::popcount(u) - 3;
}

int g_contains(int64_t ell, int64_t m) {
  if (m < 0 || ell < 0) return 0;
  const auto ue = static_cast<uint64_t>(ell);
  const auto um = static_cast<uint64_t>(m);
  if ((um & ~ue) != 0) return 0;  // some digit of m missing from ell
  // Smallest power of two strictly above m must still be <= ell.
  const int width = std::bit_width(um);
  if (width >= 63) return 0;
  return (int64_t{1} << width) <= ell ? 1 : 0;
}

int64_t pow2(int64_t e) {
  if (e < 0 || e > 62) throw std::overflow_error("pow2: exponent out of range");
  return int64_t{1} << e;
}

}  // namespace spindec
