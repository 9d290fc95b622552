#ifndef RAMSEY_DETAIL_BITROWS_HPP
#define RAMSEY_DETAIL_BITROWS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace ramsey::detail {

// Row-major adjacency bitmatrix over an arbitrary vertex relabeling.
struct BitRows {
  int n = 0;
  int words = 0;
  std::vector<uint64_t> data;

  BitRows() = default;
  BitRows(int n_, int words_) : n(n_), words(words_), data(static_cast<size_t>(n_) * words_, 0) {}

  uint64_t* row(int v) { return data.data() + static_cast<size_t>(v) * words; }
  const uint64_t* row(int v) const { return data.data() + static_cast<size_t>(v) * words; }
  void set(int v, int bit) { row(v)[bit >> 6] |= 1ULL << (bit & 63); }
  bool test(int v, int bit) const { return (row(v)[bit >> 6] >> (bit & 63)) & 1ULL; }
};

struct BitVec {
  int words = 0;
  std::vector<uint64_t> w;

  BitVec() = default;
  explicit BitVec(int bits) : words((bits + 63) / 64), w(static_cast<size_t>((bits + 63) / 64), 0) {}

  void set(int bit) { w[static_cast<size_t>(bit >> 6)] |= 1ULL << (bit & 63); }
  void reset(int bit) { w[static_cast<size_t>(bit >> 6)] &= ~(1ULL << (bit & 63)); }
  bool test(int bit) const { return (w[static_cast<size_t>(bit >> 6)] >> (bit & 63)) & 1ULL; }

  int count() const {
    int c = 0;
    for (uint64_t x : w) c += std::popcount(x);
    return c;
  }

  void and_with(const uint64_t* other) {
    for (int i = 0; i < words; ++i) w[static_cast<size_t>(i)] &= other[i];
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int i = 0; i < words; ++i) {
      uint64_t x = w[static_cast<size_t>(i)];
      while (x) {
        fn(i * 64 + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }
};

inline int and_count(const uint64_t* a, const BitVec& b) {
  int c = 0;
  for (int i = 0; i < b.words; ++i) c += std::popcount(a[i] & b.w[static_cast<size_t>(i)]);
  return c;
}

inline int and_count(const uint64_t* a, const uint64_t* b, int words) {
  int c = 0;
  for (int i = 0; i < words; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace ramsey::detail

#endif
