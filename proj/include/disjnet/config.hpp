#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "disjnet/bits.hpp"

namespace disjnet {

/// A Boolean configuration of fixed dimension n <= 64, stored in one machine
/// word. Bit i holds the state x_i, so the word value doubles as the state
/// index under the little-endian convention used throughout the library.
class Config {
 public:
  Config() = default;

  /// Throws InputError if bits have positions >= dim or dim > 64.
  Config(std::uint64_t bits, unsigned dim);

  static Config zeros(unsigned dim) { return Config(0, dim); }
  static Config ones(unsigned dim) { return Config(low_mask(dim), dim); }
  static Config unit(unsigned i, unsigned dim);
  static Config from_support(const std::vector<unsigned>& vertices, unsigned dim);

  std::uint64_t bits() const { return bits_; }
  unsigned dim() const { return dim_; }
  bool get(unsigned i) const { return test_bit(bits_, i); }
  unsigned weight() const { return popcount(bits_); }
  std::vector<unsigned> support() const;

  /// Renders x_0 x_1 ... x_{n-1} left to right, e.g. "0110".
  std::string to_string() const;

  friend bool operator==(const Config&, const Config&) = default;

 private:
  std::uint64_t bits_ = 0;
  unsigned dim_ = 0;
};

/// Componentwise join / meet; dimensions must match.
Config operator|(const Config& x, const Config& y);
Config operator&(const Config& x, const Config& y);

/// Componentwise order: x <= y.
bool leq(const Config& x, const Config& y);

unsigned hamming_distance(const Config& x, const Config& y);

}  // namespace disjnet
