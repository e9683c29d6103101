#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace modelcore {

// Dense 0-based solver index, or the distinguished invalid value reported
// for deleted entities.
class InternalIndex {
 public:
  static constexpr std::uint32_t kInvalidValue =
      std::numeric_limits<std::uint32_t>::max();

  constexpr InternalIndex() = default;
  constexpr explicit InternalIndex(std::uint32_t value) : value_(value) {}

  static constexpr InternalIndex invalid() { return InternalIndex(); }

  constexpr bool valid() const { return value_ != kInvalidValue; }
  constexpr std::uint32_t value() const { return value_; }

  friend constexpr bool operator==(InternalIndex, InternalIndex) = default;

 private:
  std::uint32_t value_ = kInvalidValue;
};

inline constexpr InternalIndex kInvalidIndex = InternalIndex::invalid();

inline std::ostream& operator<<(std::ostream& os, InternalIndex index) {
  if (!index.valid()) return os << "INVALID_INDEX";
  return os << index.value();
}

}  // namespace modelcore
