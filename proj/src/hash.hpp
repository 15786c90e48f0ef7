#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>

namespace hemb::detail {

inline std::size_t mix(std::size_t seed, std::size_t v) {
  // splitmix-style finalizer on the combined value
  std::uint64_t x = seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return static_cast<std::size_t>(x);
}

inline std::size_t hash_str(std::string_view s) { return std::hash<std::string_view>{}(s); }

}  // namespace hemb::detail
