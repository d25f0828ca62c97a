#include <set>

#include "doctest.h"
#include "symquot/errors.hpp"
#include "symquot/permgroup.hpp"

using namespace symquot;

namespace {
PermutationGroup sym(std::size_t n) {
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>(i);
  return PermutationGroup(n, {Permutation::from_cycles(n, {{0, 1}}), Permutation::from_cycles(n, {cyc})});
}
}  // namespace

TEST_CASE("permutation algebra acts on the right") {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  const auto ab = a * b;  // first a, then b
  CHECK(ab[0] == 2);
  CHECK(ab[1] == 0);
  CHECK((a * a).is_identity());
  CHECK((ab * ab.inverse()).is_identity());
  CHECK(a.least_moved() == 0);
  CHECK(Permutation::identity(4).least_moved() == 4);
  CHECK_THROWS(Permutation(std::vector<Point>{0, 0, 1}));
  CHECK(b.to_cycle_string() == "(1 2)");
}

TEST_CASE("Schreier-Sims orders") {
  CHECK(sym(4).order() == 24);
  CHECK(sym(7).order() == 5040);
  const auto c5 = PermutationGroup(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  CHECK(c5.order() == 5);
  // A5 from two 3-cycles.
  const auto a5 = PermutationGroup(5, {Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{2, 3, 4}})});
  CHECK(a5.order() == 60);
  CHECK(a5.contains(Permutation::from_cycles(5, {{0, 1}, {2, 3}})));
  CHECK_FALSE(a5.contains(Permutation::from_cycles(5, {{0, 1}})));
}

TEST_CASE("known order stops the chain early") {
  const PermutationGroup g(4, sym(4).generators(), {{}, 24});
  CHECK(g.order() == 24);
  CHECK(g.contains(Permutation::from_cycles(4, {{0, 3}})));
}

TEST_CASE("orbits, stabilizers and transitivity") {
  const auto g = sym(5);
  CHECK(orbit(g, 0).size() == 5);
  CHECK(stabilizer(g, {0}).order() == 24);
  CHECK(stabilizer(g, {0, 1}).order() == 6);
  CHECK(transitivity_degree(g) == 5);
  const auto a5 = PermutationGroup(5, {Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{2, 3, 4}})});
  CHECK(transitivity_degree(a5) == 3);
  const auto d4 = PermutationGroup(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{1, 3}})});
  CHECK(d4.order() == 8);
  CHECK(transitivity_degree(d4) == 1);
  const auto two = PermutationGroup(4, {Permutation::from_cycles(4, {{0, 1}})});
  CHECK(orbits(two).size() == 3);
  CHECK_FALSE(is_transitive(two));
}

TEST_CASE("block systems and induced actions") {
  const auto d4 = PermutationGroup(4, {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{1, 3}})});
  const Partition diag(4, {{0, 2}, {1, 3}});
  CHECK(is_block_system(d4, diag));
  CHECK_FALSE(is_block_system(d4, Partition(4, {{0, 1}, {2, 3}})));
  const auto ind = induced_action(d4, diag);
  CHECK(ind.image.degree() == 2);
  CHECK(ind.image.order() == 2);
  CHECK_FALSE(ind.faithful);
  const auto aug = block_augmented(d4, diag);
  CHECK(aug.degree() == 6);
  CHECK(stabilizer(aug, {4}).order() == 4);
}

TEST_CASE("pair lift and pair orbits") {
  const auto g = sym(4);
  const auto lifted = PermutationGroup(12, {pair_lift(g.generators()[0]), pair_lift(g.generators()[1])});
  CHECK(lifted.order() == 24);
  for (Point i = 0; i < 4; ++i)
    for (Point j = 0; j < 4; ++j)
      if (i != j) CHECK(pair_of(pair_index(i, j, 4), 4) == std::make_pair(i, j));
  // Ordered pairs of S4: the whole set of 12*11 ordered vertex pairs splits into orbits.
  const auto o = pair_orbit(lifted, pair_index(0, 1, 4), pair_index(1, 0, 4));
  CHECK(o.pairs.size() == 12);
  CHECK(is_self_paired(lifted, pair_index(0, 1, 4), pair_index(1, 0, 4)));
  // Suborbits of S4 on ordered pairs at 01: {01}, {10}, {02,03}, {20,30}, {12,13}, {21,31}, {23,32}.
  CHECK(suborbits(lifted, pair_index(0, 1, 4)).size() == 7);
}

TEST_CASE("element enumeration and base prefixes") {
  const auto g = sym(4);
  const auto els = enumerate_elements(g, 100);
  CHECK(els.size() == 24);
  CHECK(std::set<Permutation>(els.begin(), els.end()).size() == 24);
  const auto h = g.with_base_prefix({3, 2});
  CHECK(h.base()[0] == 3);
  CHECK(h.order() == 24);
  CHECK(h.level_subgroup(1).order() == 6);
}

TEST_CASE("partition validation") {
  CHECK_THROWS(Partition(3, {{0, 1}}));
  CHECK_THROWS(Partition(3, {{0, 1}, {1, 2}}));
  const auto p = Partition::consecutive(6, 2);
  CHECK(p.block_count() == 3);
  CHECK(p.block_of(5) == 2);
  CHECK(p.uniform_size() == 2);
  CHECK(Partition::from_labels({1, 0, 1}).block(1) == std::vector<Point>{0, 2});
}
