#include "rispla/rng.hpp"

#include <bit>
#include <cmath>

namespace rispla::rng {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e37'79b9'7f4a'7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58'476d'1ce4'e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d0'49bb'1331'11ebULL;
  return z ^ (z >> 31);
}

Stream::Stream(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) word = splitmix64(state);
}

Stream Stream::substream(std::uint64_t master_seed, std::uint64_t index, Domain domain) {
  // Mix the three words sequentially so (seed, index) pairs do not alias.
  std::uint64_t state = master_seed;
  std::uint64_t key = splitmix64(state);
  state = key ^ static_cast<std::uint64_t>(domain);
  key = splitmix64(state);
  state = key ^ index;
  return Stream(splitmix64(state));
}

Stream::result_type Stream::operator()() {
  const std::uint64_t result = std::rotl(s_[0] + s_[3], 23) + s_[0];
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Stream::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

bool Stream::coin() { return ((*this)() >> 63) != 0; }

double Stream::normal() { return gauss_(*this); }

std::complex<double> Stream::complex_normal(double variance) {
  const double scale = std::sqrt(0.5 * variance);
  const double re = normal();
  const double im = normal();
  return {scale * re, scale * im};
}

}  // namespace rispla::rng
