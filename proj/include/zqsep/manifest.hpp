#pragma once

// Build identity and pinned census regression values.
//
// The pins record the first verified census runs; later runs must reproduce
// them byte-identically.  report_hash is the 64-bit FNV-1a hash of the
// canonical JSON census report (wall-clock time is never serialized, so the
// hash is stable across machines and thread counts).

#include <cstdint>
#include <string_view>

namespace zqsep {

inline constexpr std::string_view kVersion = "0.1.0";

inline constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

struct CensusPin {
  int q, n;
  std::uint64_t classes;           // switching classes scanned
  std::uint64_t critical_classes;  // critical classes found
  std::uint64_t report_hash;       // fnv1a64 of the canonical census JSON
};

inline constexpr CensusPin kCensusPins[] = {
    {2, 5, 64, 12, 14820224053041164477ULL},
    {2, 7, 32768, 720, 13232616607925469175ULL},
    {3, 5, 243, 0, 4208845706824378921ULL},
    {3, 6, 19683, 0, 3030874295098087119ULL},
    {4, 5, 2048, 12, 600261684134518570ULL},
    {5, 5, 3125, 0, 8440597991170387912ULL},
};

}  // namespace zqsep
