#include "ramsey/coloring.hpp"

#include <sstream>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

TwoColoring TwoColoring::all(int n, EdgeColor c) {
  TwoColoring col(n);
  if (c == EdgeColor::Red) std::fill(col.bits.begin(), col.bits.end(), 1);
  return col;
}

TwoColoring TwoColoring::random(int n, uint64_t seed) {
  TwoColoring col(n);
  for (size_t k = 0; k < col.bits.size(); ++k)
    col.bits[k] = static_cast<uint8_t>(counter_hash(seed, 0, k) & 1ULL);
  return col;
}

TwoColoring TwoColoring::swapped() const {
  TwoColoring out = *this;
  for (auto& b : out.bits) b ^= 1;
  return out;
}

Graph TwoColoring::color_graph(EdgeColor c) const {
  std::vector<std::pair<int, int>> edges;
  uint8_t want = c == EdgeColor::Red ? 1 : 0;
  for (long long k = 0; k < pair_count(n); ++k)
    if (bits[static_cast<size_t>(k)] == want) edges.push_back(pair_from_index(k, n));
  return build_graph(n, edges);
}

std::string TwoColoring::serialize() const {
  std::ostringstream out;
  out << n << "\n";
  for (uint8_t b : bits) out << (b ? '1' : '0');
  out << "\n";
  return out.str();
}

TwoColoring TwoColoring::parse(const std::string& text) {
  std::istringstream in(text);
  int n = -1;
  if (!(in >> n) || n < 0) throw std::invalid_argument("TwoColoring: malformed input");
  std::string wire;
  in >> wire;  // absent only when there are no pairs
  if (static_cast<long long>(wire.size()) != pair_count(n))
    throw std::invalid_argument("TwoColoring: bit-string length mismatch");
  TwoColoring col(n);
  for (size_t k = 0; k < wire.size(); ++k) {
    if (wire[k] != '0' && wire[k] != '1')
      throw std::invalid_argument("TwoColoring: bit-string must be 0/1");
    col.bits[k] = wire[k] == '1';
  }
  return col;
}

}  // namespace ramsey
