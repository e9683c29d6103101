#include "modelcore/array_map.hpp"

#include <algorithm>
#include <string>

#include "modelcore/errors.hpp"

namespace modelcore {

std::size_t ArrayMap::add() {
  indices_.push_back(static_cast<std::int32_t>(live_count_));
  ++live_count_;
  return indices_.size() - 1;
}

InternalIndex ArrayMap::index(std::size_t position) const {
  check_position(position);
  const std::int32_t stored = indices_[position];
  if (stored == kDeleted) return kInvalidIndex;
  return InternalIndex(static_cast<std::uint32_t>(stored));
}

void ArrayMap::erase(std::size_t position) {
  check_position(position);
  if (indices_[position] == kDeleted) return;
  indices_[position] = kDeleted;
  --live_count_;
  for (std::size_t i = position + 1; i < indices_.size(); ++i) {
    if (indices_[i] != kDeleted) --indices_[i];
  }
}

void ArrayMap::erase_batch(std::span<const std::size_t> positions) {
  std::vector<std::size_t> deleted;
  deleted.reserve(positions.size());
  for (std::size_t position : positions) {
    check_position(position);
    if (indices_[position] != kDeleted) deleted.push_back(position);
  }
  if (deleted.empty()) return;
  std::sort(deleted.begin(), deleted.end());
  deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
  for (std::size_t position : deleted) indices_[position] = kDeleted;
  live_count_ -= deleted.size();

  for (std::size_t i = deleted.front() + 1; i < indices_.size(); ++i) {
    if (indices_[i] == kDeleted) continue;
    const auto before = std::lower_bound(deleted.begin(), deleted.end(), i) - deleted.begin();
    indices_[i] -= static_cast<std::int32_t>(before);
  }
}

void ArrayMap::check_position(std::size_t position) const {
  if (position >= indices_.size()) {
    throw OutOfRangeError("array position " + std::to_string(position) + " out of range (size " +
                          std::to_string(indices_.size()) + ")");
  }
}

}  // namespace modelcore
