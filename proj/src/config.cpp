#include "disjnet/config.hpp"

#include "disjnet/errors.hpp"
#include "disjnet/graph.hpp"

namespace disjnet {

Config::Config(std::uint64_t bits, unsigned dim) : bits_(bits), dim_(dim) {
  if (dim > kMaxVertices)
    throw InputError("configuration dimension " + std::to_string(dim) +
                     " exceeds the " + std::to_string(kMaxVertices) + "-bit word");
  if ((bits & ~low_mask(dim)) != 0)
    throw InputError("configuration has bits above dimension " + std::to_string(dim));
}

Config Config::unit(unsigned i, unsigned dim) {
  if (i >= dim)
    throw InputError("unit position " + std::to_string(i) +
                     " out of range for dimension " + std::to_string(dim));
  return Config(bit(i), dim);
}

Config Config::from_support(const std::vector<unsigned>& vertices, unsigned dim) {
  std::uint64_t w = 0;
  for (unsigned v : vertices) {
    if (v >= dim)
      throw InputError("support vertex " + std::to_string(v) +
                       " out of range for dimension " + std::to_string(dim));
    w |= bit(v);
  }
  return Config(w, dim);
}

std::vector<unsigned> Config::support() const {
  std::vector<unsigned> out;
  for_each_bit(bits_, [&](unsigned i) { out.push_back(i); });
  return out;
}

std::string Config::to_string() const {
  std::string s(dim_, '0');
  for_each_bit(bits_, [&](unsigned i) { s[i] = '1'; });
  return s;
}

namespace {
void check_same_dim(const Config& x, const Config& y) {
  if (x.dim() != y.dim())
    throw InputError("configuration dimensions differ: " + std::to_string(x.dim()) +
                     " vs " + std::to_string(y.dim()));
}
}  // namespace

Config operator|(const Config& x, const Config& y) {
  check_same_dim(x, y);
  return Config(x.bits() | y.bits(), x.dim());
}

Config operator&(const Config& x, const Config& y) {
  check_same_dim(x, y);
  return Config(x.bits() & y.bits(), x.dim());
}

bool leq(const Config& x, const Config& y) {
  check_same_dim(x, y);
  return (x.bits() & ~y.bits()) == 0;
}

unsigned hamming_distance(const Config& x, const Config& y) {
  check_same_dim(x, y);
  return popcount(x.bits() ^ y.bits());
}

}  // namespace disjnet
