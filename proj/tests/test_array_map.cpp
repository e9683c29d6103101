#include "modelcore/array_map.hpp"

#include <gtest/gtest.h>

#include <random>

#include "modelcore/bipur_map.hpp"
#include "modelcore/errors.hpp"

namespace modelcore {
namespace {

ArrayMap with_entries(int n) {
  ArrayMap map;
  for (int i = 0; i < n; ++i) map.add();
  return map;
}

TEST(ArrayMapTest, AddsStoreRunningCount) {
  ArrayMap map = with_entries(3);
  EXPECT_EQ(map.indices(), (std::vector<std::int32_t>{0, 1, 2}));
  EXPECT_EQ(map.index(2), InternalIndex(2));
}

TEST(ArrayMapTest, DeletedPositionIsInvalid) {
  ArrayMap map = with_entries(3);
  const std::size_t positions[] = {1};
  map.erase_batch(positions);
  EXPECT_EQ(map.index(1), kInvalidIndex);
  EXPECT_EQ(map.index(2), InternalIndex(1));
}

TEST(ArrayMapTest, BatchDeleteSubtractsPrecedingDeletions) {
  ArrayMap map = with_entries(5);
  const std::size_t positions[] = {2};
  map.erase_batch(positions);
  EXPECT_EQ(map.indices(), (std::vector<std::int32_t>{0, 1, ArrayMap::kDeleted, 2, 3}));
  EXPECT_EQ(map.live_count(), 4u);
}

TEST(ArrayMapTest, DeleteEverything) {
  ArrayMap map = with_entries(5);
  const std::size_t positions[] = {4, 0, 2, 1, 3};
  map.erase_batch(positions);
  EXPECT_EQ(map.live_count(), 0u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(map.index(i), kInvalidIndex);
}

TEST(ArrayMapTest, EmptyBatchIsNoOp) {
  ArrayMap map = with_entries(4);
  map.erase_batch({});
  EXPECT_EQ(map.indices(), (std::vector<std::int32_t>{0, 1, 2, 3}));
}

TEST(ArrayMapTest, RepeatedAndDuplicatePositionsAreIdempotent) {
  ArrayMap map = with_entries(6);
  const std::size_t first[] = {1, 1, 4};
  map.erase_batch(first);
  const std::size_t second[] = {1, 4, 5};
  map.erase_batch(second);
  EXPECT_EQ(map.indices(),
            (std::vector<std::int32_t>{0, ArrayMap::kDeleted, 1, 2, ArrayMap::kDeleted,
                                       ArrayMap::kDeleted}));
  EXPECT_EQ(map.live_count(), 3u);
}

TEST(ArrayMapTest, OutOfRange) {
  ArrayMap map = with_entries(2);
  EXPECT_THROW(map.index(2), OutOfRangeError);
  EXPECT_THROW(map.erase(5), OutOfRangeError);
  const std::size_t positions[] = {0, 9};
  EXPECT_THROW(map.erase_batch(positions), OutOfRangeError);
  EXPECT_EQ(map.live_count(), 2u);
}

TEST(ArrayMapTest, StorageIsThirtyTwoBitsPerEntity) {
  EXPECT_EQ(with_entries(1000).storage_bits(), 32000u);
}

// Single deletions, batch deletions and BIPUR agree on every position.
TEST(ArrayMapPropertyTest, AgreesWithSingleDeletesAndBipur) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    ArrayMap batched;
    ArrayMap single;
    BipurMap bipur;
    for (int round = 0; round < 30; ++round) {
      const int adds = static_cast<int>(rng() % 200);
      for (int i = 0; i < adds; ++i) {
        ASSERT_EQ(batched.add(), single.add());
        bipur.add_entity();
      }
      if (batched.size() == 0) continue;
      std::vector<std::size_t> batch(rng() % 40);
      for (auto& position : batch) position = rng() % batched.size();
      batched.erase_batch(batch);
      for (std::size_t position : batch) {
        single.erase(position);
        bipur.delete_entity(position);
      }
      ASSERT_EQ(batched.indices(), single.indices());
      for (std::size_t position = 0; position < batched.size(); ++position) {
        ASSERT_EQ(batched.index(position), bipur.calculate_index(position));
      }
    }
  }
}

}  // namespace
}  // namespace modelcore
