#ifndef GQWEYL_RNG_HPP
#define GQWEYL_RNG_HPP

#include <cstdint>
#include <complex>
#include <string_view>

#include "gqweyl/types.hpp"

namespace gqw {

// Counter-based splitmix64 stream. All suites draw from this generator so
// results are bit-identical across platforms and thread schedules; the
// standard-library distributions are implementation-defined and unsuitable
// for frozen expected values.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in (0,1]
  double uniform_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller pair, one value cached.
  double gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double u1 = uniform_pos();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  cdouble cgaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  Vector2c gaussian2c() { return Vector2c(cgaussian(), cgaussian()); }

  Vector3d unit3() {
    const double c = uniform(-1.0, 1.0);
    const double phi = uniform(0.0, 6.283185307179586476925286766559);
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    return Vector3d(s * std::cos(phi), s * std::sin(phi), c);
  }

 private:
  std::uint64_t state_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Labeled substream: the suite runner gives every check its own stream so
// serial and parallel executions produce identical numbers.
inline RandomStream derived_stream(std::uint64_t seed, std::string_view label) {
  return RandomStream(seed ^ fnv1a64(label));
}

}  // namespace gqw

#endif
