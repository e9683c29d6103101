#pragma once

// Test-only reference implementations, independent of the library's
// mapping code paths.

#include <cstdint>
#include <optional>
#include <vector>

namespace modelcore::testing {

// Plain byte-per-entity liveness vector. The dense index of a live entity
// at location L is the direct sum of liveness over [0, L).
class NaiveBitmap {
 public:
  std::uint64_t add() {
    alive_.push_back(1);
    return alive_.size() - 1;
  }
  void erase(std::uint64_t location) { alive_[location] = 0; }
  bool live(std::uint64_t location) const { return alive_[location] != 0; }
  std::uint64_t size() const { return alive_.size(); }

  std::optional<std::uint32_t> index(std::uint64_t location) const {
    if (alive_[location] == 0) return std::nullopt;
    std::uint32_t sum = 0;
    const std::uint8_t* data = alive_.data();
    for (std::uint64_t k = 0; k < location; ++k) sum += data[k];
    return sum;
  }

  // All indices at once, for sweeping comparisons.
  std::vector<std::optional<std::uint32_t>> all_indices() const {
    std::vector<std::optional<std::uint32_t>> out(alive_.size());
    std::uint32_t running = 0;
    for (std::size_t k = 0; k < alive_.size(); ++k) {
      if (alive_[k] != 0) out[k] = running++;
    }
    return out;
  }

 private:
  std::vector<std::uint8_t> alive_;
};

}  // namespace modelcore::testing
