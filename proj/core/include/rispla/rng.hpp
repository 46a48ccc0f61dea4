#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <random>

namespace rispla::rng {

/// Tags that keep substreams for different purposes disjoint even when
/// they share a master seed and index.
enum class Domain : std::uint64_t {
  Trial = 0x7472'6961'6c00'0000ULL,
  Sample = 0x7361'6d70'6c65'0000ULL,
  Channel = 0x6368'616e'6e65'6c00ULL,
  Search = 0x7365'6172'6368'0000ULL,
};

/// xoshiro256++ generator seeded through SplitMix64.
///
/// Streams are counter-based: `Stream::substream(master, index)` derives an
/// independent generator from the pair, so trial i sees the same numbers no
/// matter which worker runs it or in which order. A Stream is not
/// thread-safe; give each worker its own.
class Stream {
 public:
  using result_type = std::uint64_t;

  explicit Stream(std::uint64_t seed);

  static Stream substream(std::uint64_t master_seed, std::uint64_t index,
                          Domain domain = Domain::Trial);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Fair coin from the top bit of one draw.
  bool coin();
  /// Standard normal.
  double normal();
  /// Circularly-symmetric complex Gaussian CN(0, variance): each of the
  /// real and imaginary parts has variance / 2.
  std::complex<double> complex_normal(double variance = 1.0);

 private:
  std::uint64_t s_[4];
  std::normal_distribution<double> gauss_{0.0, 1.0};
};

/// One SplitMix64 step; exposed for seed mixing.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace rispla::rng
