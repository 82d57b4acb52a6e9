#include "hrg/rng.hpp"

#include <cmath>

namespace hrg {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_id(std::string_view label) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                           std::uint64_t counter) {
  return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ counter);
}

double to_unit_open(std::uint64_t w) {
  // Top 53 bits, shifted into (0, 1]: (k + 1) / 2^53 with k in [0, 2^53).
  return (static_cast<double>(w >> 11) + 1.0) * 0x1p-53;
}

double normal_variate(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t idx) {
  const std::uint64_t a = counter_hash(seed, stream, 2 * idx);
  const std::uint64_t b = counter_hash(seed, stream, 2 * idx + 1);
  const double u1 = to_unit_open(a);
  const double u2 = to_unit_open(b);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t sample_index) {
  return splitmix64(seed ^ splitmix64(0x5851F42D4C957F2DULL ^ sample_index));
}

}  // namespace hrg
