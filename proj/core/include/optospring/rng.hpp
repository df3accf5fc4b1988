#ifndef OPTOSPRING_RNG_HPP
#define OPTOSPRING_RNG_HPP

#include <cmath>
#include <cstdint>

#include "optospring/constants.hpp"

namespace optospring {

// Counter-based generator: output i of stream s is a pure function of
// (seed, s, i), so parallel and serial runs consume identical streams and
// the ensemble is bit-identical regardless of thread schedule. The mixer
// is the splitmix64 finalizer applied in counter mode.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_(mix(seed + golden * (stream + 1))) {}

  std::uint64_t next_u64() noexcept {
    ++counter_;
    return mix(key_ + golden * counter_);
  }

  // uniform on (0, 1]
  double uniform() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  // standard normal via Box-Muller (portable, unlike std::normal_distribution)
  double normal() noexcept {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * constants::pi * uniform();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

} // namespace optospring

#endif
