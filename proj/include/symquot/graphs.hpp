#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symquot/partition.hpp"
#include "symquot/permgroup.hpp"

namespace symquot {

// Simple undirected graph with one adjacency bitset per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const;
  bool adjacent(Point u, Point v) const { return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1; }
  // Throws DomainError on loops or out-of-range vertices.
  void add_edge(Point u, Point v);
  void remove_edge(Point u, Point v);
  std::vector<Point> neighbours(Point u) const;
  std::size_t degree(Point u) const;
  std::vector<std::pair<Point, Point>> edges() const;  // u < v, lexicographic

  std::size_t words() const { return words_; }
  const std::uint64_t* row(Point u) const { return bits_.data() + u * words_; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  std::size_t n_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// a parts of size b.
Graph complete_multipartite(std::size_t a, std::size_t b);
Graph disjoint_copies(std::size_t c, const Graph& g);
Graph induced_subgraph(const Graph& g, const std::vector<Point>& vertices);

// Throws NotSelfPairedError when (y, x) is not in the orbit of (x, y).
Graph orbital_graph(const PermutationGroup& g, Point x, Point y);

struct Quotient {
  Graph graph;
  bool intra_block_edges = false;
};
Quotient quotient_graph(const Graph& g, const Partition& p);

struct StructureTag {
  enum class Kind { DisjointComplete, DisjointCompleteBipartite, DisjointCompleteMultipartite, DisjointCycles, Other };
  Kind kind = Kind::Other;
  std::size_t c = 0;  // number of components
  std::size_t a = 0;  // parts (multipartite), else component parameter m
  std::size_t b = 0;  // part size (multipartite only)

  static StructureTag complete(std::size_t c, std::size_t m) { return {Kind::DisjointComplete, c, m, 0}; }
  static StructureTag bipartite(std::size_t c, std::size_t m) { return {Kind::DisjointCompleteBipartite, c, m, 0}; }
  static StructureTag multipartite(std::size_t c, std::size_t a, std::size_t b) {
    return {Kind::DisjointCompleteMultipartite, c, a, b};
  }
  static StructureTag cycles(std::size_t c, std::size_t m) { return {Kind::DisjointCycles, c, m, 0}; }
  static StructureTag other() { return {}; }

  std::string to_string() const;
  bool operator==(const StructureTag&) const = default;
};

StructureTag recognize_structure(const Graph& g);
// Builds the graph a non-Other tag describes.
Graph graph_from_structure(const StructureTag& t);

std::vector<std::vector<Point>> connected_components(const Graph& g);
// Distinct nonzero cross-valencies from A into B and from B into A.
std::set<std::size_t> bipartite_between(const Graph& g, const std::vector<Point>& a, const std::vector<Point>& b);

inline constexpr std::size_t kMaxIsomorphismOrder = 256;
bool is_isomorphic(const Graph& g1, const Graph& g2);
bool is_g_symmetric(const Graph& g, const PermutationGroup& grp);
bool preserves_graph(const Graph& g, const Permutation& p);

// Serialization.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);
std::string to_dimacs(const Graph& g);
Graph from_dimacs(const std::string& s);

}  // namespace symquot
