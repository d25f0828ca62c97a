#include "doctest.h"
#include "symquot/errors.hpp"
#include "symquot/graphs.hpp"

using namespace symquot;

namespace {
Graph petersen() {
  Graph g(10);
  for (Point i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}
}  // namespace

TEST_CASE("basic graph operations") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.adjacent(1, 0));
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
  g.remove_edge(0, 1);
  CHECK_FALSE(g.adjacent(0, 1));
  CHECK(complete_graph(5).edge_count() == 10);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(complete_multipartite(3, 2).edge_count() == 12);
  CHECK(disjoint_copies(3, complete_graph(3)).edge_count() == 9);
  CHECK(induced_subgraph(complete_graph(5), {0, 2, 4}) == complete_graph(3));
}

TEST_CASE("structure recognition") {
  CHECK(recognize_structure(disjoint_copies(3, cycle_graph(4))) == StructureTag::cycles(3, 4));
  CHECK(recognize_structure(disjoint_copies(5, complete_multipartite(3, 2))) == StructureTag::multipartite(5, 3, 2));
  CHECK(recognize_structure(disjoint_copies(4, complete_multipartite(2, 3))) == StructureTag::bipartite(4, 3));
  CHECK(recognize_structure(disjoint_copies(7, complete_graph(4))) == StructureTag::complete(7, 4));
  CHECK(recognize_structure(petersen()) == StructureTag::other());
  CHECK(StructureTag::multipartite(7, 4, 2).to_string() == "DisjointCompleteMultipartite(7,4,2)");
  CHECK(StructureTag::bipartite(11, 6).to_string() == "DisjointCompleteBipartite(11,6)");
  for (const auto& t : {StructureTag::cycles(2, 5), StructureTag::complete(3, 3), StructureTag::bipartite(2, 3)})
    CHECK(recognize_structure(graph_from_structure(t)) == t);
}

TEST_CASE("components and bipartite counts") {
  const auto g = disjoint_copies(3, cycle_graph(4));
  CHECK(connected_components(g).size() == 3);
  CHECK(connected_components(petersen()).size() == 1);
  CHECK(bipartite_between(complete_graph(4), {0, 1}, {2, 3}) == std::set<std::size_t>{2});
  CHECK(bipartite_between(Graph(4), {0, 1}, {2, 3}).empty());
}

TEST_CASE("isomorphism") {
  Graph c(5);
  for (Point i = 0; i < 5; ++i) c.add_edge(i, (i + 2) % 5);
  CHECK(is_isomorphic(c, cycle_graph(5)));
  CHECK_FALSE(is_isomorphic(cycle_graph(6), disjoint_copies(2, cycle_graph(3))));
  CHECK(is_isomorphic(petersen(), petersen()));
  Graph relabelled(10);
  for (auto [u, v] : petersen().edges()) relabelled.add_edge((u * 3) % 10, (v * 3) % 10);
  CHECK(is_isomorphic(petersen(), relabelled));
}

TEST_CASE("orbital graphs and symmetry") {
  // C6 is the orbital graph of (0,1) under the dihedral group.
  const PermutationGroup d6(6, {Permutation::from_cycles(6, {{0, 1, 2, 3, 4, 5}}),
                                 Permutation::from_cycles(6, {{1, 5}, {2, 4}})});
  CHECK(orbital_graph(d6, 0, 1) == cycle_graph(6));
  CHECK(is_g_symmetric(cycle_graph(6), d6));
  // Z3 on a triangle: (0,1) is not paired with (1,0).
  const PermutationGroup z3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  CHECK_THROWS_AS(orbital_graph(z3, 0, 1), NotSelfPairedError);
  const auto q = quotient_graph(cycle_graph(6), Partition(6, {{0, 3}, {1, 4}, {2, 5}}));
  CHECK(q.graph == complete_graph(3));
  CHECK(q.intra_block_edges == 0);
}

TEST_CASE("graph6 and DIMACS round trips") {
  for (const auto& g : {petersen(), complete_graph(1), Graph(0), disjoint_copies(20, cycle_graph(4))}) {
    CHECK(from_graph6(to_graph6(g)) == g);
    CHECK(from_dimacs(to_dimacs(g)) == g);
  }
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(Graph(63))[0] == '~');
  CHECK(to_dimacs(complete_graph(2)).find("p edge 2 1") != std::string::npos);
  CHECK_THROWS(from_graph6("~"));
}
