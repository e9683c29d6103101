#pragma once

#include <bit>
#include <cstdint>

namespace modelcore {

// Uses the hardware instruction when the target enables it (-mpopcnt).
inline int popcount64(std::uint64_t word) noexcept { return std::popcount(word); }

// SWAR fallback, kept so tests can check both paths agree.
constexpr int popcount64_portable(std::uint64_t word) noexcept {
  word = word - ((word >> 1) & 0x5555555555555555ULL);
  word = (word & 0x3333333333333333ULL) + ((word >> 2) & 0x3333333333333333ULL);
  word = (word + (word >> 4)) & 0x0F0F0F0F0F0F0F0FULL;
  return static_cast<int>((word * 0x0101010101010101ULL) >> 56);
}

// Number of set bits strictly below `bit_index` (0..63).
inline int popcount_below(std::uint64_t word, unsigned bit_index) noexcept {
  const std::uint64_t mask = (std::uint64_t{1} << bit_index) - 1;
  return popcount64(word & mask);
}

}  // namespace modelcore
