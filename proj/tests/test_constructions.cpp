#include "doctest.h"
#include "symquot/constructions.hpp"
#include "symquot/errors.hpp"

using namespace symquot;

TEST_CASE("cross-ratio graphs") {
  const auto a = cross_ratio_graph(3, 2, 1);
  CHECK(a.graph.order() == 12);
  CHECK(recognize_structure(a.graph) == StructureTag::cycles(3, 4));
  CHECK(a.provenance.tag == "cr:q=3:d=2:s=1");
  CHECK(a.provenance.declared_case == "1.1(b)(iii)");
  CHECK(is_g_symmetric(a.graph, a.group));
  CHECK(recognize_structure(cross_ratio_graph(5, 4, 1).graph) == StructureTag::multipartite(5, 3, 2));
  CHECK(quotient_graph(cross_ratio_graph(7, 3, 1).graph, cross_ratio_graph(7, 3, 1).partition).graph ==
        complete_graph(8));
  CHECK_THROWS_AS(cross_ratio_graph(7, 1, 1), DomainError);  // d = 0 is excluded
  CHECK_THROWS_AS(cross_ratio_graph(9, 2, 2), DomainError);  // s must divide s(d)
  CHECK_THROWS_AS(cross_ratio_graph(6, 2, 1), DomainError);
}

TEST_CASE("twisted cross-ratio graphs split by square class") {
  std::size_t built = 0, rejected = 0;
  for (std::uint32_t d = 2; d < 9; ++d) {
    try {
      const auto t = twisted_cross_ratio_graph(9, d, 2);
      CHECK(t.graph.order() == 90);
      CHECK(is_g_symmetric(t.graph, t.group));
      ++built;
    } catch (const NotSelfPairedError&) {
      ++rejected;
    } catch (const DomainError&) {
      // d in the prime subfield
    }
  }
  CHECK(built > 0);
  CHECK(rejected > 0);
  CHECK_THROWS_AS(twisted_cross_ratio_graph(7, 3, 2), DomainError);
}

TEST_CASE("pair graphs") {
  const auto e = pair_graph(GroupTag{GroupFamily::Sym, 5}, PairRule::AllDistinct);
  CHECK(e.graph.order() == 20);
  CHECK(e.partition.block_count() == 5);
  CHECK(e.provenance.declared_case == "1.2(b)(i)");
  CHECK(connected_components(e.graph).size() == 1);
  const auto m = matching_graph(GroupTag{GroupFamily::Sym, 4});
  CHECK(recognize_structure(m.graph) == StructureTag::complete(6, 2));
  CHECK_THROWS_AS(matching_graph(pair_action(sym_alt(4, false))), DomainError);
  GroupTag agl3{GroupFamily::AGL};
  agl3.d = 3;
  const auto plane = pair_graph(agl3, PairRule::AffinePlane);
  CHECK(recognize_structure(plane.graph) == StructureTag::multipartite(7, 4, 2));
  CHECK(plane.provenance.declared_case == "1.1(b)(iv)");
  CHECK_THROWS_AS(pair_graph(GroupTag{GroupFamily::M22}, PairRule::DesignIn), DomainError);
}

TEST_CASE("affine rules partition the all-distinct rule") {
  for (std::size_t m : {8u, 16u}) {
    const auto all = pair_rule_graph(m, PairRule::AllDistinct);
    const auto in = pair_rule_graph(m, PairRule::AffinePlane);
    const auto out = pair_rule_graph(m, PairRule::AffineNonPlane);
    CHECK(in.edge_count() + out.edge_count() == all.edge_count());
    for (auto [u, v] : in.edges()) {
      CHECK(all.adjacent(u, v));
      CHECK_FALSE(out.adjacent(u, v));
    }
  }
}

TEST_CASE("flag graphs") {
  const DesignSpec ag3{DesignSpec::Kind::AGHyperplanes, 3};
  GroupTag agl3{GroupFamily::AGL};
  agl3.d = 3;
  const auto same = flag_graph(ag3, agl3, FlagRule::SameBlock);
  CHECK(same.graph.order() == 56);
  CHECK(recognize_structure(same.graph) == StructureTag::complete(14, 4));
  CHECK(recognize_structure(flag_graph(ag3, agl3, FlagRule::DisjointBlocks).graph) == StructureTag::bipartite(7, 4));
  CHECK(flag_rule_graph(ag3.build(), FlagRule::CommonTwoPoints) ==
        flag_graph(ag3, agl3, FlagRule::CommonTwoPoints).graph);
  CHECK_THROWS_AS(flag_graph(ag3, agl3, FlagRule::M22Disjoint), DomainError);
}

TEST_CASE("star transform") {
  const auto e = pair_graph(GroupTag{GroupFamily::Sym, 5}, PairRule::AllDistinct);
  const auto s = star_transform(e);
  CHECK(recognize_structure(s.graph) == StructureTag::complete(5, 4));
  CHECK(s.provenance.tag == "star:" + e.provenance.tag);
  CHECK(star_transform(s).graph == e.graph);
  CHECK_THROWS_AS(star_transform(matching_graph(GroupTag{GroupFamily::Sym, 4})), DomainError);
}
