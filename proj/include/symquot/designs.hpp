#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "symquot/graphs.hpp"
#include "symquot/partition.hpp"
#include "symquot/permgroup.hpp"

namespace symquot {

// Points 0..v-1 and a fixed sequence of blocks (each kept sorted). Repeats allowed.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  // Throws DomainError on empty or out-of-range blocks.
  IncidenceStructure(std::size_t v, std::vector<std::vector<Point>> blocks);

  std::size_t points() const { return v_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<Point>& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<std::vector<Point>>& blocks() const { return blocks_; }
  bool incident(Point p, std::size_t block) const;
  // Index of the first block equal to the given sorted point list.
  std::optional<std::uint32_t> find_block(const std::vector<Point>& sorted_points) const;
  bool has_repeated_blocks() const;

 private:
  std::size_t v_ = 0;
  std::vector<std::vector<Point>> blocks_;
  std::map<std::vector<Point>, std::uint32_t> index_;
};

struct DesignParams {
  std::size_t v = 0, b = 0;
  std::optional<std::size_t> r;  // set when every point lies in equally many blocks
  std::optional<std::size_t> k;  // set when all blocks have one size
  int max_t = 0;                 // largest t with constant lambda_t (lambda_1 = r)
  std::vector<std::size_t> lambda;  // lambda[i] = lambda_{i+1}
  std::size_t rho = 1;              // largest block multiplicity
};

// Counts t-subsets exhaustively for t up to max_t, stopping at the first non-constant count.
DesignParams design_params(const IncidenceStructure& d, int max_t = 5);

IncidenceStructure derived_design(const IncidenceStructure& d, Point p);
IncidenceStructure dual_design(const IncidenceStructure& d);
IncidenceStructure complement_design(const IncidenceStructure& d);
// D(B): points are the vertices of block block_index, one block per adjacent block of the partition.
IncidenceStructure design_from_partition(const Graph& g, const Partition& p, std::size_t block_index);

// Points GF(2)^d (bit i is coordinate i), blocks all cosets of e-dimensional subspaces.
IncidenceStructure ag_design(int d, int e);
// Witt design: PG(2,4) plus a point at infinity (index 21).
IncidenceStructure steiner_3_22_6();
// Hadamard 3-design from the Paley matrix of order 12 (point 0 is infinity, 1+x is x in GF(11)).
IncidenceStructure design_3_12_6_2();

struct Flag {
  Point point;
  std::uint32_t block;
  bool operator==(const Flag&) const = default;
};
// Point-major, then block index.
std::vector<Flag> flags(const IncidenceStructure& d);

std::vector<Point> image_of_set(const Permutation& g, const std::vector<Point>& s);
bool preserves_design(const IncidenceStructure& d, const Permutation& g);
bool preserves_design(const IncidenceStructure& d, const PermutationGroup& g);
// Permutation of block indices induced by a design automorphism.
Permutation block_permutation(const IncidenceStructure& d, const Permutation& g);

}  // namespace symquot
