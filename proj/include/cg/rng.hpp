#ifndef CG_RNG_HPP
#define CG_RNG_HPP

#include <cstdint>

namespace cg {

// Counter-based uniform stream: every draw is a pure function of
// (seed, sample, layer, slot), so parallel sampling is reproducible
// regardless of scheduling.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t sample,
                                  std::uint64_t layer, std::uint64_t slot) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ sample);
  h = mix64(h ^ layer);
  h = mix64(h ^ slot);
  return h;
}

// Uniform in [0, 1) with 53-bit resolution.
inline double counter_uniform(std::uint64_t seed, std::uint64_t sample,
                              std::uint64_t layer, std::uint64_t slot) {
  return double(counter_bits(seed, sample, layer, slot) >> 11) *
         0x1.0p-53;
}

}  // namespace cg

#endif
