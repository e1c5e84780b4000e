#pragma once

#include <cmath>
#include <cstdint>

namespace banach {

// splitmix64 step; also used to derive decorrelated per-trial streams.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Small deterministic generator (xorshift-family via splitmix seeding).
// Every randomized routine takes an explicit seed and derives one stream per
// trial with for_trial(), so results are independent of thread scheduling and
// of how many trials run: trial k always sees the same stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    // Scramble the seed so nearby seeds give unrelated streams.
    std::uint64_t s = seed;
    s0_ = splitmix64_next(s);
    s1_ = splitmix64_next(s);
    if (s0_ == 0 && s1_ == 0) s1_ = 1;
  }

  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64_next(s);
    std::uint64_t mixed = a ^ (trial * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    return Rng(mixed);
  }

  std::uint64_t next_u64() {
    // xorshift128+
    std::uint64_t x = s0_;
    const std::uint64_t y = s1_;
    s0_ = y;
    x ^= x << 23;
    s1_ = x ^ y ^ (x >> 17) ^ (y >> 26);
    return s1_ + y;
  }

  // Uniform in [0, 1), 53-bit mantissa, identical on every platform.
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  // Standard normal via the polar method (no platform-dependent libm paths
  // beyond sqrt/log, and exact reproducibility given the stream).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    have_spare_ = true;
    return u * m;
  }

  double sign() { return (next_u64() & 1) ? 1.0 : -1.0; }

 private:
  std::uint64_t s0_, s1_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace banach
