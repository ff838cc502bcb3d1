#pragma once

#include <string>
#include <vector>

#include "superband/errors.hpp"

namespace superband {

// Partition of {0, ..., n-1} into disjoint nonempty blocks. Blocks are
// numbered by first occurrence, so equal partitions compare equal regardless
// of input order.
class Partition {
 public:
  Partition() = default;

  static Partition from_block_of(std::vector<int> raw);
  static Partition from_keys(const std::vector<std::string>& keys);
  static Partition universal(int n);
  static Partition equality(int n);

  int size() const { return static_cast<int>(block_of_.size()); }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  int block_of(int i) const { return block_of_.at(i); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  bool same_block(int i, int j) const { return block_of(i) == block_of(j); }

  bool operator==(const Partition& rhs) const {
    return block_of_ == rhs.block_of_;
  }

  // True iff every block of *this lies inside a block of coarser.
  bool refines(const Partition& coarser) const;

 private:
  std::vector<int> block_of_;
  std::vector<std::vector<int>> blocks_;
};

// Common refinement: blocks are intersections.
Partition meet(const Partition& a, const Partition& b);

// Transitive closure of the union (join in the partition lattice).
Partition join(const Partition& a, const Partition& b);

// Induced partition on a subset of the indices (result indexed by position
// within `subset`).
Partition restrict_to(const Partition& p, const std::vector<int>& subset);

// Partition on index_map.size() elements: i ~ j iff their images are in the
// same block of p.
Partition pullback(const Partition& p, const std::vector<int>& index_map);

}  // namespace superband
