#ifndef INVBANACH_RNG_HPP
#define INVBANACH_RNG_HPP

#include <cstdint>
#include <random>

#include "invbanach/types.hpp"

namespace invbanach {

/// Seedable random source. All randomized checks in the library and the CLI
/// draw from this wrapper around std::mt19937_64, so a 64-bit seed fully
/// determines every sampled quantity. Derived streams (per component or per
/// loop index) are obtained by mixing the seed with a stream id through
/// splitmix64, which keeps parallel loops deterministic regardless of
/// thread count.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(mix(seed, stream_id));
  }

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }

  double gaussian(double mean = 0.0, double stddev = 1.0) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }

  /// Inclusive on both ends.
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  bool coin() { return uniform_int(0, 1) == 1; }

  Vec gaussian_vec(int n, double stddev = 1.0) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = gaussian(0.0, stddev);
    return v;
  }

  Mat gaussian_mat(int rows, int cols, double stddev = 1.0) {
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = gaussian(0.0, stddev);
    return m;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace invbanach

#endif  // INVBANACH_RNG_HPP
