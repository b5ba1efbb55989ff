#pragma once

#include <cmath>
#include <cstdint>

namespace conelab {

// Counter-based deterministic RNG: the stream for (seed, index) is a pure
// function of both, so parallel batches reproduce sequential results.
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index)
      : state_(mix(seed ^ 0x9E3779B97F4A7C15ULL) ^ mix(index + 0x8E9C5D1A3B7F2468ULL)) {
    if (state_ == 0) state_ = 0x106689D45497FDB5ULL;
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi] inclusive.
  long uniform_int(long lo, long hi) {
    return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double gaussian() {
    if (have_cache_) {
      have_cache_ = false;
      return cache_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cache_ = r * std::sin(a);
    have_cache_ = true;
    return r * std::cos(a);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t state_;
  double cache_ = 0.0;
  bool have_cache_ = false;
};

}  // namespace conelab
