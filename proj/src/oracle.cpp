#include "disjnet/oracle.hpp"

#include <algorithm>

#include "disjnet/errors.hpp"

namespace disjnet {

FunctionalGraph build_functional_graph(const TruthTableNetwork& f, unsigned cap) {
  if (f.dim() > cap)
    throw ResourceError("dimension " + std::to_string(f.dim()) +
                        " exceeds the brute-force cap " + std::to_string(cap));
  const std::uint64_t states = std::uint64_t{1} << f.dim();

  FunctionalGraph fg;
  fg.n = f.dim();
  fg.successor.resize(states);
  fg.on_cycle.assign(states, false);
  fg.transients.assign(states, 0);
  fg.periods.assign(states, 0);
  for (std::uint64_t s = 0; s < states; ++s) fg.successor[s] = f.apply(s);

  // 0 = untouched, 1 = on the path being walked, 2 = fully resolved.
  std::vector<unsigned char> color(states, 0);
  std::vector<std::uint64_t> path;
  for (std::uint64_t start = 0; start < states; ++start) {
    if (color[start] != 0) continue;
    path.clear();
    std::uint64_t s = start;
    while (color[s] == 0) {
      color[s] = 1;
      path.push_back(s);
      s = fg.successor[s];
    }
    const std::uint64_t len = path.size();
    if (color[s] == 1) {
      // The walk closed on itself: everything from the first visit of s on is
      // a brand-new cycle, everything before it leads into that cycle.
      std::uint64_t pos = 0;
      while (path[pos] != s) ++pos;
      const std::uint64_t period = len - pos;
      for (std::uint64_t i = pos; i < len; ++i) {
        fg.on_cycle[path[i]] = true;
        fg.transients[path[i]] = 0;
        fg.periods[path[i]] = period;
      }
      for (std::uint64_t i = 0; i < pos; ++i) {
        fg.transients[path[i]] = pos - i;
        fg.periods[path[i]] = period;
      }
    } else {
      // The walk ran into already-resolved territory at s.
      for (std::uint64_t i = 0; i < len; ++i) {
        fg.transients[path[i]] = fg.transients[s] + (len - i);
        fg.periods[path[i]] = fg.periods[s];
      }
    }
    for (std::uint64_t v : path) color[v] = 2;
  }
  return fg;
}

std::vector<std::uint64_t> oracle_image_set(const TruthTableNetwork& f, unsigned cap) {
  const FunctionalGraph fg = build_functional_graph(f, cap);
  std::vector<std::uint64_t> image = fg.successor;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  return image;
}

std::vector<std::uint64_t> oracle_periodic_set(const TruthTableNetwork& f,
                                               unsigned cap) {
  const FunctionalGraph fg = build_functional_graph(f, cap);
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < fg.successor.size(); ++s)
    if (fg.on_cycle[s]) out.push_back(s);
  return out;
}

std::vector<std::uint64_t> oracle_fixed_set(const TruthTableNetwork& f, unsigned cap) {
  if (f.dim() > cap)
    throw ResourceError("dimension " + std::to_string(f.dim()) +
                        " exceeds the brute-force cap " + std::to_string(cap));
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < f.states(); ++s)
    if (f.apply(s) == s) out.push_back(s);
  return out;
}

}  // namespace disjnet
