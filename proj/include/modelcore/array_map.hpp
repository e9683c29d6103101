#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "modelcore/internal_index.hpp"

namespace modelcore {

// Baseline handle->index mapping: one stored 32-bit index per entity.
// Lookups and appends are O(1); deleting shifts every later index down.
class ArrayMap {
 public:
  static constexpr std::int32_t kDeleted = -1;

  std::size_t add();
  InternalIndex index(std::size_t position) const;

  // Single deletion, O(N): mark then decrement every later live index.
  void erase(std::size_t position);

  // Sort the batch, then subtract from every live entry the number of newly
  // deleted positions before it (binary search). O(M log M + N log M).
  // Already-deleted positions are ignored.
  void erase_batch(std::span<const std::size_t> positions);

  std::size_t size() const { return indices_.size(); }
  std::size_t live_count() const { return live_count_; }
  const std::vector<std::int32_t>& indices() const { return indices_; }

  std::uint64_t storage_bits() const { return 32 * static_cast<std::uint64_t>(indices_.size()); }

 private:
  void check_position(std::size_t position) const;

  std::vector<std::int32_t> indices_;
  std::size_t live_count_ = 0;
};

}  // namespace modelcore
