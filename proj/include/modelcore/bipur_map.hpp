#pragma once

#include <cstdint>
#include <vector>

#include "modelcore/internal_index.hpp"
#include "modelcore/popcount.hpp"

namespace modelcore {

// Bitmap with progressively updated ranks.
//
// Maps permanent bit locations (entity handles) to dense indices. Bit k of
// chunks_[j] stands for entity 64*j + k; a set bit means the entity is live.
// The dense index of a live entity is the number of live entities allocated
// before it. Prefix counts are cached per 64-bit chunk and only brought up
// to date when a query needs them:
//
//   cumulated_ranks_[i]  live bits in chunks_[0, i), valid for
//                        i <= last_correct_chunk_
//   chunk_ranks_[j]      popcount of chunks_[j], or kUncounted
//
// Not thread safe, including calculate_index(), which updates the caches.
class BipurMap {
 public:
  // Largest permitted bit location is kMaxEntities - 1, so every dense index
  // stays below InternalIndex::kInvalidValue.
  static constexpr std::uint64_t kMaxEntities = std::uint64_t{0xFFFFFFFF};
  static constexpr std::uint8_t kUncounted = 0xFF;
  static constexpr unsigned kChunkBits = 64;

  BipurMap() : BipurMap(kMaxEntities) {}
  // Lower capacity caps exist for tests of the capacity error path.
  explicit BipurMap(std::uint64_t max_entities);

  // Returns the bit location of the new live entity. Throws CapacityError.
  std::uint64_t add_entity() {
    if (next_bit_ >= max_entities_) throw_capacity();
    if (next_bit_ < chunks_.size() * kChunkBits) {
      chunks_[next_bit_ / kChunkBits] |= std::uint64_t{1} << (next_bit_ % kChunkBits);
    } else {
      chunks_.push_back(1);
      cumulated_ranks_.push_back(0);
      chunk_ranks_.push_back(kUncounted);
    }
    ++live_count_;
    return next_bit_++;
  }

  // Idempotent. Throws OutOfRangeError for never-allocated locations.
  void delete_entity(std::uint64_t bit_location);

  // Dense index of the entity, or kInvalidIndex if it was deleted.
  // Throws OutOfRangeError for never-allocated locations.
  InternalIndex calculate_index(std::uint64_t bit_location) {
    check_allocated(bit_location);
    const std::uint64_t chunk_index = bit_location / kChunkBits;
    const unsigned bit_index = bit_location % kChunkBits;
    const std::uint64_t chunk = chunks_[chunk_index];
    if (((chunk >> bit_index) & 1U) == 0) return kInvalidIndex;
    if (last_correct_chunk_ < chunk_index) precompute_chunk_rank(chunk_index);
    ++in_chunk_popcounts_;
    return InternalIndex(cumulated_ranks_[chunk_index] +
                         static_cast<std::uint32_t>(popcount_below(chunk, bit_index)));
  }

  bool is_live(std::uint64_t bit_location) const;

  // Payload storage in bits: 64 per chunk, 32 per cumulated rank and 8 per
  // chunk rank. Counters and allocator slack are excluded.
  std::uint64_t storage_bits() const {
    return chunks_.size() * (64 + 32 + 8);
  }

  std::uint64_t next_bit() const { return next_bit_; }
  std::uint64_t live_count() const { return live_count_; }
  std::size_t num_chunks() const { return chunks_.size(); }
  std::size_t last_correct_chunk() const { return last_correct_chunk_; }

  // Popcounts performed while propagating prefix caches across chunks.
  std::uint64_t scan_counter() const { return scan_counter_; }
  // Popcounts of the partial chunk below a queried bit.
  std::uint64_t in_chunk_popcounts() const { return in_chunk_popcounts_; }
  void reset_counters() {
    scan_counter_ = 0;
    in_chunk_popcounts_ = 0;
  }

  // Read-only views for tests.
  const std::vector<std::uint64_t>& chunks() const { return chunks_; }
  const std::vector<std::uint32_t>& cumulated_ranks() const { return cumulated_ranks_; }
  const std::vector<std::uint8_t>& chunk_ranks() const { return chunk_ranks_; }

 private:
  void precompute_chunk_rank(std::uint64_t chunk_index);
  void check_allocated(std::uint64_t bit_location) const {
    if (bit_location >= next_bit_) throw_out_of_range(bit_location);
  }
  [[noreturn]] void throw_out_of_range(std::uint64_t bit_location) const;
  [[noreturn]] void throw_capacity() const;

  std::vector<std::uint64_t> chunks_;
  std::vector<std::uint32_t> cumulated_ranks_;
  std::vector<std::uint8_t> chunk_ranks_;
  std::uint64_t next_bit_ = 0;
  std::size_t last_correct_chunk_ = 0;
  std::uint64_t live_count_ = 0;
  std::uint64_t max_entities_;
  std::uint64_t scan_counter_ = 0;
  std::uint64_t in_chunk_popcounts_ = 0;
};

}  // namespace modelcore
