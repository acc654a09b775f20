#pragma once

#include <algorithm>
#include <complex>
#include <random>

namespace testing {

inline double rel_diff(std::complex<double> a, std::complex<double> b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

// Fixed-seed uniform draws independent of the library's own generator.
class Rng {
 public:
  explicit Rng(unsigned long long seed) : g_(seed) {}
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(g_() >> 11) * 0x1.0p-53);
  }
  std::complex<double> disk(double r_max) {
    return std::polar(uniform(0.0, r_max), uniform(-3.14159, 3.14159));
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace testing
