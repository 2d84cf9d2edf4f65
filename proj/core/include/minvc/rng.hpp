#pragma once

#include <cstdint>
#include <initializer_list>

namespace minvc {

// SplitMix64 mixing step; used to derive independent seed streams.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Combines several values into one stream seed. Order sensitive.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t p : parts) h = splitmix64(h ^ p);
  return h;
}

// Uniform double in [0, 1) with 53 random bits. The standard library
// distributions are implementation defined; this keeps streams identical
// across platforms and toolchains.
template <class Rng>
double canonical_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace minvc
