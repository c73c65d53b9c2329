#pragma once

#include <bit>
#include <cstdint>

namespace disjnet {

/// Word with the low n bits set, 0 <= n <= 64.
constexpr std::uint64_t low_mask(unsigned n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

constexpr std::uint64_t bit(unsigned i) { return std::uint64_t{1} << i; }

constexpr bool test_bit(std::uint64_t w, unsigned i) {
  return ((w >> i) & std::uint64_t{1}) != 0;
}

/// Calls f(i) for every set bit of w, in ascending order.
template <typename F>
constexpr void for_each_bit(std::uint64_t w, F&& f) {
  while (w != 0) {
    f(static_cast<unsigned>(std::countr_zero(w)));
    w &= w - 1;
  }
}

constexpr unsigned popcount(std::uint64_t w) {
  return static_cast<unsigned>(std::popcount(w));
}

}  // namespace disjnet
