#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symquot/partition.hpp"

namespace symquot {

// Bijection on {0, ..., n-1}, acting on the right: (g * h)(x) = h(g(x)).
class Permutation {
 public:
  Permutation() = default;
  // Throws DomainError unless images is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t n);
  // Cycles given as point lists; points not listed are fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  // Least point not fixed, or degree() for the identity.
  Point least_moved() const;
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}
  std::vector<Point> images_;
  friend class PermutationGroup;
};

// Permutation group with a stabilizer chain from deterministic Schreier-Sims.
// Base points are the optional prefix followed by least moved points.
class PermutationGroup {
 public:
  static constexpr std::size_t kMaxDegree = 10000;

  struct Options {
    std::vector<Point> base_prefix;
    // Stop as soon as the chain reaches this order. Only sound when the value is
    // the true group order, e.g. a faithful lift of an already verified group.
    std::optional<std::uint64_t> known_order;
  };

  PermutationGroup() : PermutationGroup(0, {}) {}
  // Throws DomainError on degree mismatch or degree above kMaxDegree.
  PermutationGroup(std::size_t degree, std::vector<Permutation> generators, Options opts = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  std::uint64_t order() const { return order_; }
  const std::vector<Point>& base() const { return base_; }
  std::size_t chain_length() const { return levels_.size(); }
  const std::vector<Point>& basic_orbit(std::size_t level) const { return levels_[level].orbit; }

  bool contains(const Permutation& g) const;
  // Same group, chain rebuilt so that the base starts with prefix.
  PermutationGroup with_base_prefix(const std::vector<Point>& prefix) const;
  // Pointwise stabilizer of base()[0..level-1], read off the chain.
  PermutationGroup level_subgroup(std::size_t level) const;

 private:
  struct Level {
    Point beta = 0;
    std::vector<std::uint32_t> gens;  // indices into strong_
    std::vector<std::int32_t> label;  // -1 outside orbit, -2 at beta, else strong index
    std::vector<Point> orbit;
  };

  void schreier_sims(const std::vector<Point>& prefix, std::optional<std::uint64_t> known);
  void add_strong(const Permutation& g);
  void rebuild_orbit(std::size_t level);
  std::size_t sift(std::vector<Point>& g, std::size_t from) const;
  void coset_rep(std::size_t level, Point gamma, std::vector<Point>& out) const;
  std::uint64_t chain_order() const;

  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> strong_, strong_inv_;
  std::vector<Level> levels_;
  std::vector<Point> base_;
  std::uint64_t order_ = 1;
};

PermutationGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens);

// Breadth-first closure of {x}; points in discovery order.
std::vector<Point> orbit(const PermutationGroup& g, Point x);
std::vector<std::vector<Point>> orbits(const PermutationGroup& g);
// Orbits restricted to the listed points (which must be a union of orbits).
std::vector<std::vector<Point>> orbits_on(const PermutationGroup& g, const std::vector<Point>& pts);
PermutationGroup stabilizer(const PermutationGroup& g, const std::vector<Point>& points);
int transitivity_degree(const PermutationGroup& g);
bool is_transitive(const PermutationGroup& g);

bool is_block_system(const PermutationGroup& g, const Partition& p);
Permutation induced_permutation(const Permutation& g, const Partition& p);

struct InducedAction {
  PermutationGroup image;
  bool faithful = false;
};
// Throws DomainError when p is not a block system.
InducedAction induced_action(const PermutationGroup& g, const Partition& p);

// Action on points 0..n-1 together with the blocks of p as points n..n+b-1.
// Setwise block stabilizers are point stabilizers here.
PermutationGroup block_augmented(const PermutationGroup& g, const Partition& p);

std::vector<std::vector<Point>> suborbits(const PermutationGroup& g, Point x);

// The orbit of the ordered pair (x, y), as a dense n*n bitset plus the list of pairs.
struct PairOrbit {
  std::size_t n = 0;
  std::vector<std::uint64_t> bits;
  std::vector<std::pair<Point, Point>> pairs;
  bool contains(Point a, Point b) const {
    const std::uint64_t k = std::uint64_t(a) * n + b;
    return (bits[k >> 6] >> (k & 63)) & 1;
  }
};
inline constexpr std::uint64_t kMaxPairStates = 10'000'000;
PairOrbit pair_orbit(const PermutationGroup& g, Point x, Point y);
bool is_self_paired(const PermutationGroup& g, Point x, Point y);

// Lift of g to the ordered pairs (i, j), i != j, numbered lexicographically.
Permutation pair_lift(const Permutation& g);
inline Point pair_index(Point i, Point j, std::size_t m) {
  return static_cast<Point>(i * (m - 1) + (j < i ? j : j - 1));
}
inline std::pair<Point, Point> pair_of(Point v, std::size_t m) {
  const Point i = static_cast<Point>(v / (m - 1));
  Point j = static_cast<Point>(v % (m - 1));
  if (j >= i) ++j;
  return {i, j};
}

// Enumerate every element (for small groups and tests).
std::vector<Permutation> enumerate_elements(const PermutationGroup& g, std::size_t limit);

}  // namespace symquot
