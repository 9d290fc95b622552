#ifndef RAMSEY_RNG_HPP
#define RAMSEY_RNG_HPP

#include <cstdint>
#include <vector>

namespace ramsey {

// SplitMix64 finalizer.
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so any lane can be replayed or evaluated out of
// order without shared state. Test vectors are pinned in the unit tests.
inline uint64_t counter_hash(uint64_t seed, uint64_t stream, uint64_t counter) {
  uint64_t z = mix64(seed + 0x9E3779B97F4A7C15ULL * (stream + 1));
  return mix64(z + 0x9E3779B97F4A7C15ULL * (counter + 1));
}

// Stateful view over one (seed, stream) lane.
class CounterRng {
 public:
  CounterRng(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

  uint64_t next() { return counter_hash(seed_, stream_, counter_++); }

  // uniform in [0,1) with 53 random bits
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [0, bound); modulo bias is < bound/2^64 and irrelevant here
  uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1))); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t seed_;
  uint64_t stream_;
  uint64_t counter_ = 0;
};

}  // namespace ramsey

#endif
