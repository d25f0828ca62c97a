#include "doctest.h"
#include "symquot/designs.hpp"
#include "symquot/errors.hpp"
#include "symquot/groups_catalog.hpp"

using namespace symquot;

namespace {
IncidenceStructure fano() {
  return IncidenceStructure(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}
}  // namespace

TEST_CASE("Fano plane parameters") {
  const auto p = design_params(fano());
  CHECK(p.v == 7);
  CHECK(p.b == 7);
  CHECK(p.r == 3u);
  CHECK(p.k == 3u);
  CHECK(p.max_t == 2);
  CHECK(p.lambda[1] == 1);
  CHECK(p.rho == 1);
  CHECK_FALSE(fano().has_repeated_blocks());
  CHECK(fano().find_block({1, 3, 5}) == 3u);
  CHECK_FALSE(fano().find_block({0, 1, 3}).has_value());
}

TEST_CASE("structure validation") {
  CHECK_THROWS_AS(IncidenceStructure(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(IncidenceStructure(3, {{}}), DomainError);
  const IncidenceStructure rep(3, {{0, 1}, {1, 0}, {2}});
  CHECK(rep.has_repeated_blocks());
  CHECK(design_params(rep).rho == 2);
  CHECK_FALSE(design_params(rep).k.has_value());
}

TEST_CASE("affine designs") {
  const auto h = design_params(ag_design(3, 2));
  CHECK(h.v == 8);
  CHECK(h.b == 14);
  CHECK(h.k == 4u);
  CHECK(h.max_t >= 3);
  CHECK(h.lambda[2] == 1);
  CHECK_THROWS_AS(ag_design(3, 1), DomainError);
  CHECK(design_params(ag_design(4, 2)).b == 140);
  CHECK(preserves_design(ag_design(4, 3), agl(4)));
}

TEST_CASE("Witt and Hadamard designs") {
  const auto w = design_params(steiner_3_22_6());
  CHECK(w.v == 22);
  CHECK(w.b == 77);
  CHECK(w.k == 6u);
  CHECK(w.r == 21u);
  CHECK(w.lambda[2] == 1);
  const auto h = design_params(design_3_12_6_2());
  CHECK(h.v == 12);
  CHECK(h.b == 22);
  CHECK(h.k == 6u);
  CHECK(h.lambda[2] == 2);
  // The derived design at a point of the Witt design is the projective plane of order 4.
  const auto pg = design_params(derived_design(steiner_3_22_6(), 21));
  CHECK(pg.v == 21);
  CHECK(pg.b == 21);
  CHECK(pg.k == 5u);
  CHECK(pg.lambda[1] == 1);
}

TEST_CASE("dual and complement") {
  const auto d = dual_design(fano());
  const auto p = design_params(d);
  CHECK(p.v == 7);
  CHECK(p.k == 3u);
  CHECK(p.lambda[1] == 1);
  const auto c = design_params(complement_design(fano()));
  CHECK(c.k == 4u);
  CHECK(c.lambda[1] == 2);
}

TEST_CASE("automorphisms and flags") {
  const auto f = fano();
  CHECK(flags(f).size() == 21);
  CHECK(flags(f)[0] == Flag{0, 0});
  CHECK_FALSE(preserves_design(f, Permutation::from_cycles(7, {{0, 1}})));
  const auto g = Permutation::from_cycles(7, {{3, 4}, {5, 6}});  // fixes 0, 1 and 2
  REQUIRE(preserves_design(f, g));
  const auto bp = block_permutation(f, g);
  CHECK(bp.degree() == 7);
  CHECK(bp[0] == 0);
  CHECK(image_of_set(g, {1, 3}) == std::vector<Point>{1, 4});
}

TEST_CASE("design from a partition") {
  // Two triangles joined by a perfect matching: each vertex sees one vertex of the other block.
  Graph g(6);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  const auto d = design_from_partition(g, Partition(6, {{0, 1, 2}, {3, 4, 5}}), 0);
  CHECK(d.points() == 3);
  CHECK(d.block_count() == 1);
  CHECK(d.block(0).size() == 3);
}
