#pragma once

#include <cstdint>
#include <string_view>

namespace gph {

// Deterministic seed derivation: a root seed is combined with a textual tag
// and an index through FNV-1a and SplitMix64. Every randomized task derives
// its engine seed this way, so parallel shards reproduce independently of
// scheduling order.

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                                    std::uint64_t index = 0) {
  return splitmix64(splitmix64(root ^ fnv1a(tag)) + index);
}

}  // namespace gph
