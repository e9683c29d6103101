#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string_view>

namespace modelcore {

// Constraint classes that are numbered independently by a solver. Each has
// its own BipurMap in a Model. General is reserved and always unsupported.
enum class ConstraintType : std::uint8_t { Linear = 0, Quadratic = 1, SOS = 2, General = 3 };

inline constexpr std::size_t kNumMappedConstraintTypes = 3;

std::string_view to_string(ConstraintType type);

struct VariableIndex {
  std::uint64_t bit_location = 0;

  friend constexpr bool operator==(VariableIndex, VariableIndex) = default;
  friend constexpr auto operator<=>(VariableIndex, VariableIndex) = default;
};

struct ConstraintIndex {
  ConstraintType type = ConstraintType::Linear;
  std::uint64_t bit_location = 0;

  friend constexpr bool operator==(ConstraintIndex, ConstraintIndex) = default;
};

std::ostream& operator<<(std::ostream& os, VariableIndex v);
std::ostream& operator<<(std::ostream& os, ConstraintIndex c);

}  // namespace modelcore

template <>
struct std::hash<modelcore::VariableIndex> {
  std::size_t operator()(modelcore::VariableIndex v) const noexcept {
    return std::hash<std::uint64_t>{}(v.bit_location);
  }
};

template <>
struct std::hash<modelcore::ConstraintIndex> {
  std::size_t operator()(modelcore::ConstraintIndex c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bit_location * 4 + static_cast<std::uint64_t>(c.type));
  }
};
