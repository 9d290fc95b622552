#ifndef RAMSEY_RATIONAL_HPP
#define RAMSEY_RATIONAL_HPP

#include <numeric>
#include <stdexcept>
#include <string>

namespace ramsey {

// Exact rational on 64-bit words, stored reduced with den > 0. Densities and
// thresholds in this codebase have numerators/denominators bounded by n^2,
// so cross products fit comfortably in __int128.
struct Ratio {
  long long num = 0;
  long long den = 1;

  Ratio() = default;
  Ratio(long long n, long long d) : num(n), den(d) { reduce(); }

  void reduce() {
    if (den == 0) throw std::invalid_argument("Ratio: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
  friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }
};

}  // namespace ramsey

#endif
