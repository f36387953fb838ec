#ifndef DEGENWAVE_UTIL_HPP
#define DEGENWAVE_UTIL_HPP

#include <cstdint>
#include <random>

namespace degenwave {

// Deterministic uniform sampling on top of mt19937_64.  The engine output
// sequence is fully specified by the standard; the [0,1) mapping below is
// fixed here so that reports are byte-identical across platforms (the
// distributions in <random> are implementation defined).
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // uniform integer in [lo, hi]
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace degenwave

#endif
