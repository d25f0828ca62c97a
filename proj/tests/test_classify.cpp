#include "doctest.h"
#include "symquot/classify.hpp"
#include "symquot/errors.hpp"
#include "symquot/tags.hpp"

using namespace symquot;

namespace {
Triple make(const std::string& tag) { return build(parse_tag(tag)); }
}  // namespace

TEST_CASE("classification of the basic families") {
  struct Row {
    const char* tag;
    const char* theorem_case;
    CorollaryCase corollary;
  };
  for (const auto& r : {Row{"cr:q=3:d=2:s=1", "1.1(b)(iii)", CorollaryCase::D},
                        Row{"pair:group=s5:rule=all_distinct", "1.2(b)(i)", CorollaryCase::D},
                        Row{"pair:group=agl:d=3:rule=affine_plane", "1.1(b)(iv)", CorollaryCase::D},
                        Row{"match:group=s5", "1.1(b)(i)", CorollaryCase::B}}) {
    CAPTURE(r.tag);
    const auto v = classify_triple(make(r.tag));
    CHECK(v.hypotheses.all());
    CHECK(v.theorem_case == r.theorem_case);
    CHECK(v.corollary_case == r.corollary);
  }
  // S5 on all-distinct pairs is also CR(4): both cases are reported.
  const auto v = classify_triple(make("pair:group=s5:rule=all_distinct"));
  CHECK(v.matching_cases.size() >= 2);
}

TEST_CASE("parameters") {
  const auto p = compute_params(make("flag:design=s22:group=m22:rule=m22_disjoint"));
  CHECK(p.t == 6);
  CHECK(p.v * p.s == p.b * p.m);
  CHECK(p.v * p.r == p.b * p.k);
  const auto c = compute_params(make("cr:q=5:d=4:s=1"));
  CHECK(c.v == 5);
  CHECK(c.k == 4);
  CHECK(c.lambda == 3u);
}

TEST_CASE("hypothesis failures") {
  // K_{3,3} with the parts as blocks: the quotient is K2 but the blocks carry no
  // 2-transitive action under Z3 wr Z2.
  Graph g(6);
  for (Point i = 0; i < 3; ++i)
    for (Point j = 3; j < 6; ++j) g.add_edge(i, j);
  const auto z3 = Permutation::from_cycles(6, {{0, 1, 2}});
  const auto swap = Permutation::from_cycles(6, {{0, 3}, {1, 4}, {2, 5}});
  Triple t{g, PermutationGroup(6, {z3, swap}), Partition(6, {{0, 1, 2}, {3, 4, 5}}), {"k33", ""}};
  auto h = verify_hypotheses(t);
  CHECK(h.g_symmetric);
  CHECK(h.block_system);
  CHECK(h.complete_quotient);
  CHECK_FALSE(h.two_transitive_on_block);
  CHECK(classify_triple(t).theorem_case.empty());

  // A cycle with singleton blocks: the quotient is not complete.
  const PermutationGroup d6(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}}),
                                 Permutation::from_cycles(6, {{1, 5}, {2, 4}})});
  std::vector<std::vector<Point>> singles;
  for (Point i = 0; i < 6; ++i) singles.push_back({i});
  Triple c{cycle_graph(6), d6, Partition(6, singles), {"c6", ""}};
  h = verify_hypotheses(c);
  CHECK(h.g_symmetric);
  CHECK_FALSE(h.complete_quotient);
  CHECK_FALSE(h.all());
}

TEST_CASE("corollary case (c): complete multipartite blocks") {
  // K_{3,3,3}: every vertex sees all of the other blocks.
  const auto g = complete_multipartite(3, 3);
  const auto s9 = Permutation::from_cycles(9, {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});
  Triple t{g,
           PermutationGroup(9, {Permutation::from_cycles(9, {{0, 1, 2}}), Permutation::from_cycles(9, {{0, 1}}), s9,
                                Permutation::from_cycles(9, {{0, 3}, {1, 4}, {2, 5}})}),
           Partition(9, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}}),
           {"k333", ""}};
  REQUIRE(verify_hypotheses(t).all());
  const auto p = compute_params(t);
  CHECK(p.k == p.v);
  CHECK(corollary_case(p, design_from_partition(t.graph, t.partition, 0)) == CorollaryCase::C);
}

TEST_CASE("known designs and orbit lengths") {
  CHECK(identify_design(DesignSpec{DesignSpec::Kind::Steiner22}.build()) == KnownDesign::Witt22);
  CHECK(identify_design(DesignSpec{DesignSpec::Kind::Hadamard12}.build()) == KnownDesign::Hadamard12);
  CHECK(identify_design(DesignSpec{DesignSpec::Kind::AGHyperplanes, 3}.build()) == KnownDesign::AffineHyperplanes);
  CHECK(identify_design(DesignSpec{DesignSpec::Kind::AGPlanes, 4}.build()) == KnownDesign::None);
  const auto rep = orbit_length_check(make("flag:design=ag:d=3:group=agl:d=3:rule=same_block"),
                                      DesignSpec{DesignSpec::Kind::AGHyperplanes, 3}.build());
  CHECK(rep.ok);
  CHECK(rep.incident == rep.expected_incident);
}

TEST_CASE("census") {
  CHECK(census(0, 0).empty());
  CHECK_THROWS_AS(census(17, 3), DomainError);
  const auto rows = census(5, 2, 2);
  CHECK_FALSE(rows.empty());
  for (const auto& r : rows) {
    CAPTURE(r.tag);
    CHECK(r.ok());
  }
  // Output order does not depend on the thread count.
  const auto one = census(5, 2, 1);
  REQUIRE(one.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(one[i].tag == rows[i].tag);
}
