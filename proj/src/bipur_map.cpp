#include "modelcore/bipur_map.hpp"

#include <string>

#include "modelcore/errors.hpp"

namespace modelcore {

BipurMap::BipurMap(std::uint64_t max_entities)
    : chunks_{0}, cumulated_ranks_{0}, chunk_ranks_{kUncounted}, max_entities_(max_entities) {
  if (max_entities_ > kMaxEntities) {
    throw ValidationError("BipurMap capacity above " + std::to_string(kMaxEntities));
  }
}

void BipurMap::delete_entity(std::uint64_t bit_location) {
  check_allocated(bit_location);
  const std::uint64_t chunk_index = bit_location / kChunkBits;
  const std::uint64_t bit = std::uint64_t{1} << (bit_location % kChunkBits);
  if ((chunks_[chunk_index] & bit) == 0) return;
  chunks_[chunk_index] &= ~bit;
  chunk_ranks_[chunk_index] = kUncounted;
  // cumulated_ranks_[chunk_index] only covers earlier chunks, so it stays valid.
  if (last_correct_chunk_ > chunk_index) last_correct_chunk_ = chunk_index;
  --live_count_;
}

bool BipurMap::is_live(std::uint64_t bit_location) const {
  check_allocated(bit_location);
  return ((chunks_[bit_location / kChunkBits] >> (bit_location % kChunkBits)) & 1U) != 0;
}

void BipurMap::precompute_chunk_rank(std::uint64_t chunk_index) {
  for (std::size_t j = last_correct_chunk_; j < chunk_index; ++j) {
    if (chunk_ranks_[j] == kUncounted) {
      chunk_ranks_[j] = static_cast<std::uint8_t>(popcount64(chunks_[j]));
      ++scan_counter_;
    }
    cumulated_ranks_[j + 1] = cumulated_ranks_[j] + chunk_ranks_[j];
  }
  last_correct_chunk_ = chunk_index;
}

void BipurMap::throw_out_of_range(std::uint64_t bit_location) const {
  throw OutOfRangeError("bit location " + std::to_string(bit_location) +
                        " was never allocated (next bit is " + std::to_string(next_bit_) + ")");
}

void BipurMap::throw_capacity() const {
  throw CapacityError("BipurMap is full: " + std::to_string(max_entities_) +
                      " entities allocated");
}

}  // namespace modelcore
