#ifndef RAMSEY_COLORING_HPP
#define RAMSEY_COLORING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class EdgeColor { Blue = 0, Red = 1 };

inline EdgeColor other_color(EdgeColor c) {
  return c == EdgeColor::Red ? EdgeColor::Blue : EdgeColor::Red;
}

// Total red/blue assignment on all pairs of a complete host. Serialized as N
// plus a bit-string over lexicographic pair order, 1 = red.
struct TwoColoring {
  int n = 0;
  std::vector<uint8_t> bits;

  TwoColoring() = default;
  explicit TwoColoring(int n_) : n(n_), bits(static_cast<size_t>(pair_count(n_)), 0) {}

  static TwoColoring all(int n, EdgeColor c);
  static TwoColoring random(int n, uint64_t seed);

  EdgeColor color(int u, int v) const {
    return bits[static_cast<size_t>(pair_index(u, v, n))] ? EdgeColor::Red : EdgeColor::Blue;
  }
  void set(int u, int v, EdgeColor c) {
    bits[static_cast<size_t>(pair_index(u, v, n))] = c == EdgeColor::Red ? 1 : 0;
  }

  TwoColoring swapped() const;
  Graph color_graph(EdgeColor c) const;

  std::string serialize() const;
  static TwoColoring parse(const std::string& text);

  bool operator==(const TwoColoring&) const = default;
};

}  // namespace ramsey

#endif
