#pragma once

#include <cstdint>
#include <vector>

namespace symquot {

using Point = std::uint32_t;

// Partition of {0, ..., n-1} into nonempty blocks.
class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless the blocks are disjoint, nonempty and cover 0..n-1.
  Partition(std::size_t n, std::vector<std::vector<Point>> blocks);

  static Partition singletons(std::size_t n);
  // Blocks {0..size-1}, {size..2size-1}, ...
  static Partition consecutive(std::size_t n, std::size_t size);
  // Block index given per point, indices 0..k-1.
  static Partition from_labels(const std::vector<std::uint32_t>& block_of);

  std::size_t points() const { return block_of_.size(); }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Point>& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<std::vector<Point>>& blocks() const { return blocks_; }
  std::uint32_t block_of(Point x) const { return block_of_[x]; }
  const std::vector<std::uint32_t>& block_map() const { return block_of_; }
  // Common block size, or 0 when sizes differ.
  std::size_t uniform_size() const;

 private:
  std::vector<std::vector<Point>> blocks_;
  std::vector<std::uint32_t> block_of_;
};

}  // namespace symquot
