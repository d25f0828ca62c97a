#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "symquot/designs.hpp"
#include "symquot/errors.hpp"
#include "symquot/groups_catalog.hpp"

using namespace symquot;

TEST_CASE("projective groups have the textbook orders") {
  CHECK(pgl2(4).order() == 60);
  CHECK(psl2(5).order() == 60);
  CHECK(psl2(9).order() == 360);
  CHECK(pgl2(9).order() == 720);
  CHECK(pgammal_subgroup(4, 1).order() == 120);
  CHECK(pgammal_subgroup(9, 1).order() == 1440);
  CHECK(m_group(1, 9).order() == 720);
  CHECK(transitivity_degree(pgammal_subgroup(4, 1)) == 5);
  CHECK(transitivity_degree(pgl2(7)) == 3);
  CHECK(transitivity_degree(m_group(1, 9)) == 3);
  CHECK_THROWS_AS(pgammal_subgroup(9, 3), DomainError);
  CHECK_THROWS_AS(m_group(1, 8), DomainError);
}

TEST_CASE("Moebius transformations") {
  const auto f = FiniteField::of_order(5);
  const MoebiusTransformation inv(f, 0, 1, 1, 0);  // z -> 1/z
  CHECK(inv.apply(ProjPoint::infinity()) == ProjPoint::finite(0));
  CHECK(inv.apply(ProjPoint::finite(0)) == ProjPoint::infinity());
  CHECK(inv.apply(ProjPoint::finite(2)) == ProjPoint::finite(3));
  CHECK(inv.as_permutation().degree() == 6);
  CHECK_THROWS_AS(MoebiusTransformation(f, 1, 1, 1, 1), DomainError);
  // Scaling normalizes the leading coefficient.
  CHECK(MoebiusTransformation(f, 2, 0, 0, 2).coefficients() == std::array<std::uint32_t, 4>{1, 0, 0, 1});
}

TEST_CASE("3-transitive subgroups of PGammaL(2,q)") {
  CHECK(three_transitive_pgammal_list(8).size() == 2);
  CHECK(three_transitive_pgammal_list(9).size() == 3);
  CHECK(three_transitive_pgammal_list(16).size() == 3);
  for (const auto& c : three_transitive_pgammal_list(9)) CHECK(transitivity_degree(c.group) >= 3);
}

TEST_CASE("affine groups") {
  CHECK(agl(2).order() == 24);
  CHECK(agl(3).order() == 1344);
  CHECK(agl(4).order() == 322560);
  CHECK(transitivity_degree(agl(3)) == 3);
  const auto z = z24_a7();
  CHECK(z.order() == 40320);
  CHECK(transitivity_degree(z) == 3);
  for (const auto& g : z.generators()) CHECK(agl(4).contains(g));
}

TEST_CASE("A7 fixture: search, embedded pair and data file agree") {
  const auto found = find_a7_in_gl42();
  CHECK(found == embedded_a7_generators());
  std::ifstream in(std::string(SYMQUOT_DATA_DIR) + "/z24_a7.json");
  REQUIRE(in);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["schema"] == "symquot/1");
  CHECK(j["order"] == 2520);
  CHECK(j["generators"][0].get<int>() == found.first);
  CHECK(j["generators"][1].get<int>() == found.second);
  PermutationGroup a7(16, {gl42_action(found.first), gl42_action(found.second)});
  CHECK(a7.order() == 2520);
}

TEST_CASE("Mathieu groups") {
  struct Row {
    GroupFamily f;
    std::size_t degree;
    std::uint64_t order;
    int trans;
  };
  for (const auto& r : {Row{GroupFamily::M11on11, 11, 7920, 4}, Row{GroupFamily::M11on12, 12, 7920, 3},
                        Row{GroupFamily::M12, 12, 95040, 5}, Row{GroupFamily::M22, 22, 443520, 3},
                        Row{GroupFamily::AutM22, 22, 887040, 3}, Row{GroupFamily::M23, 23, 10200960, 4},
                        Row{GroupFamily::M24, 24, 244823040, 5}}) {
    const auto& g = catalog_group({r.f});
    CHECK(g.degree() == r.degree);
    CHECK(g.order() == r.order);
    CHECK(transitivity_degree(g) == r.trans);
    CHECK(declared_invariants({r.f}) == std::make_pair(r.order, r.trans));
  }
  CHECK(preserves_design(steiner_3_22_6(), catalog_group({GroupFamily::M22})));
  CHECK(preserves_design(design_3_12_6_2(), catalog_group({GroupFamily::M11on12})));
}

TEST_CASE("tags and cache") {
  GroupTag t{GroupFamily::PGammaLSub};
  t.q = 9;
  t.s = 1;
  CHECK(t.to_string() == "pgl2:q=9:s=1");
  CHECK(t.degree() == 10);
  CHECK(&catalog_group(t) == &catalog_group(t));
  GroupTag s{GroupFamily::Sym, 6};
  CHECK(catalog_group(s).order() == 720);
  CHECK(GroupTag{GroupFamily::M11on12}.to_string() == "m11");
  GroupTag bad{GroupFamily::PGL2};
  bad.q = 6;
  CHECK_THROWS_AS(catalog_group(bad), DomainError);
}
