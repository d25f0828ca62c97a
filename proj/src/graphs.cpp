#include "symquot/graphs.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "symquot/errors.hpp"

namespace symquot {

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

void Graph::add_edge(Point u, Point v) {
  if (u >= n_ || v >= n_) throw DomainError("edge endpoint out of range");
  if (u == v) throw DomainError("loops are not allowed");
  bits_[u * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

void Graph::remove_edge(Point u, Point v) {
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t(1) << (u & 63));
}

std::vector<Point> Graph::neighbours(Point u) const {
  std::vector<Point> r;
  const auto* w = row(u);
  for (std::size_t i = 0; i < words_; ++i)
    for (std::uint64_t x = w[i]; x; x &= x - 1)
      r.push_back(static_cast<Point>(i * 64 + static_cast<std::size_t>(std::countr_zero(x))));
  return r;
}

std::size_t Graph::degree(Point u) const {
  std::size_t d = 0;
  const auto* w = row(u);
  for (std::size_t i = 0; i < words_; ++i) d += static_cast<std::size_t>(std::popcount(w[i]));
  return d;
}

std::vector<std::pair<Point, Point>> Graph::edges() const {
  std::vector<std::pair<Point, Point>> r;
  for (Point u = 0; u < n_; ++u)
    for (Point v : neighbours(u))
      if (u < v) r.push_back({u, v});
  return r;
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (Point u = 0; u < n; ++u)
    for (Point v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (Point u = 0; u < n; ++u) g.add_edge(u, static_cast<Point>((u + 1) % n));
  return g;
}

Graph complete_multipartite(std::size_t a, std::size_t b) {
  Graph g(a * b);
  for (Point u = 0; u < a * b; ++u)
    for (Point v = u + 1; v < a * b; ++v)
      if (u / b != v / b) g.add_edge(u, v);
  return g;
}

Graph disjoint_copies(std::size_t c, const Graph& h) {
  const std::size_t m = h.order();
  Graph g(c * m);
  for (std::size_t i = 0; i < c; ++i)
    for (auto [u, v] : h.edges()) g.add_edge(static_cast<Point>(i * m + u), static_cast<Point>(i * m + v));
  return g;
}

Graph induced_subgraph(const Graph& g, const std::vector<Point>& vs) {
  Graph h(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) h.add_edge(static_cast<Point>(i), static_cast<Point>(j));
  return h;
}

Graph orbital_graph(const PermutationGroup& grp, Point x, Point y) {
  if (x == y) throw DomainError("orbital graph needs distinct points");
  auto o = pair_orbit(grp, x, y);
  if (!o.contains(y, x)) throw NotSelfPairedError("orbital is not self-paired");
  Graph g(grp.degree());
  for (auto [a, b] : o.pairs) g.add_edge(a, b);
  return g;
}

Quotient quotient_graph(const Graph& g, const Partition& p) {
  if (p.points() != g.order()) throw DomainError("partition size differs from graph order");
  Quotient q{Graph(p.block_count()), false};
  for (Point u = 0; u < g.order(); ++u)
    for (Point v : g.neighbours(u)) {
      if (v < u) continue;
      const auto bu = p.block_of(u), bv = p.block_of(v);
      if (bu == bv)
        q.intra_block_edges = true;
      else
        q.graph.add_edge(bu, bv);
    }
  return q;
}

std::string StructureTag::to_string() const {
  auto s = [](std::size_t x) { return std::to_string(x); };
  switch (kind) {
    case Kind::DisjointComplete: return "DisjointComplete(" + s(c) + "," + s(a) + ")";
    case Kind::DisjointCompleteBipartite: return "DisjointCompleteBipartite(" + s(c) + "," + s(a) + ")";
    case Kind::DisjointCompleteMultipartite:
      return "DisjointCompleteMultipartite(" + s(c) + "," + s(a) + "," + s(b) + ")";
    case Kind::DisjointCycles: return "DisjointCycles(" + s(c) + "," + s(a) + ")";
    case Kind::Other: break;
  }
  return "Other";
}

std::vector<std::vector<Point>> connected_components(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<Point>> comps;
  for (Point s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Point> c{s};
    seen[s] = 1;
    for (std::size_t h = 0; h < c.size(); ++h)
      for (Point v : g.neighbours(c[h]))
        if (!seen[v]) {
          seen[v] = 1;
          c.push_back(v);
        }
    std::sort(c.begin(), c.end());
    comps.push_back(std::move(c));
  }
  return comps;
}

namespace {

StructureTag component_shape(const Graph& g, const std::vector<Point>& comp) {
  const std::size_t size = comp.size();
  const std::size_t d0 = g.degree(comp[0]);
  for (Point u : comp)
    if (g.degree(u) != d0) return StructureTag::other();
  if (d0 == size - 1) return StructureTag::complete(1, size);
  if (d0 == 2 && size >= 4) return StructureTag::cycles(1, size);  // connected and 2-regular
  // Complete multipartite: non-adjacency within the component is an equivalence relation.
  std::vector<std::uint64_t> mask(g.words(), 0);
  for (Point u : comp) mask[u >> 6] |= std::uint64_t(1) << (u & 63);
  const std::size_t part = size - d0;
  if (size % part) return StructureTag::other();
  std::vector<std::uint64_t> cls(g.words()), other(g.words());
  for (Point u : comp) {
    const auto* r = g.row(u);
    for (std::size_t w = 0; w < g.words(); ++w) cls[w] = mask[w] & ~r[w];
    for (std::size_t w = 0; w < g.words(); ++w)
      for (std::uint64_t x = cls[w]; x; x &= x - 1) {
        const Point v = static_cast<Point>(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        const auto* rv = g.row(v);
        for (std::size_t k = 0; k < g.words(); ++k)
          if ((mask[k] & ~rv[k]) != cls[k]) return StructureTag::other();
      }
  }
  const std::size_t a = size / part;
  if (a == 2) return StructureTag::bipartite(1, part);
  return StructureTag::multipartite(1, a, part);
}

}  // namespace

StructureTag recognize_structure(const Graph& g) {
  if (g.order() == 0) return StructureTag::other();
  const auto comps = connected_components(g);
  StructureTag first = component_shape(g, comps[0]);
  if (first.kind == StructureTag::Kind::Other) return first;
  for (std::size_t i = 1; i < comps.size(); ++i)
    if (comps[i].size() != comps[0].size() || !(component_shape(g, comps[i]) == first)) return StructureTag::other();
  first.c = comps.size();
  return first;
}

Graph graph_from_structure(const StructureTag& t) {
  using K = StructureTag::Kind;
  switch (t.kind) {
    case K::DisjointComplete: return disjoint_copies(t.c, complete_graph(t.a));
    case K::DisjointCompleteBipartite: return disjoint_copies(t.c, complete_multipartite(2, t.a));
    case K::DisjointCompleteMultipartite: return disjoint_copies(t.c, complete_multipartite(t.a, t.b));
    case K::DisjointCycles: return disjoint_copies(t.c, cycle_graph(t.a));
    case K::Other: break;
  }
  throw DomainError("cannot build a graph from tag Other");
}

std::set<std::size_t> bipartite_between(const Graph& g, const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<std::uint64_t> ma(g.words(), 0), mb(g.words(), 0);
  for (Point x : a) ma[x >> 6] |= std::uint64_t(1) << (x & 63);
  for (Point x : b) mb[x >> 6] |= std::uint64_t(1) << (x & 63);
  std::set<std::size_t> r;
  auto scan = [&](const std::vector<Point>& from, const std::vector<std::uint64_t>& into) {
    for (Point x : from) {
      std::size_t c = 0;
      const auto* row = g.row(x);
      for (std::size_t w = 0; w < g.words(); ++w) c += static_cast<std::size_t>(std::popcount(row[w] & into[w]));
      if (c) r.insert(c);
    }
  };
  scan(a, mb);
  scan(b, ma);
  return r;
}

bool preserves_graph(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (Point u = 0; u < g.order(); ++u)
    for (Point v : g.neighbours(u))
      if (u < v && !g.adjacent(p[u], p[v])) return false;
  return true;
}

bool is_g_symmetric(const Graph& g, const PermutationGroup& grp) {
  if (grp.degree() != g.order()) return false;
  for (const auto& s : grp.generators())
    if (!preserves_graph(g, s)) return false;
  if (!is_transitive(grp)) return false;
  if (g.order() == 0) return true;
  const auto nb = g.neighbours(0);
  if (nb.empty()) return g.edge_count() == 0;
  return pair_orbit(grp, 0, nb[0]).pairs.size() == 2 * g.edge_count();
}

// ----------------------------------------------------------- isomorphism

namespace {

// Colour refinement on the disjoint union of two graphs of equal order n.
// Vertices 0..n-1 belong to the first graph, n..2n-1 to the second.
struct Refiner {
  const Graph* g[2];
  std::size_t n;

  std::vector<std::uint32_t> refine(std::vector<std::uint32_t> col) const {
    std::size_t classes = std::set<std::uint32_t>(col.begin(), col.end()).size();
    for (;;) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      std::vector<std::vector<std::uint32_t>> sig(2 * n);
      for (std::size_t x = 0; x < 2 * n; ++x) {
        const Graph& h = *g[x / n];
        auto& s = sig[x];
        s.push_back(col[x]);
        for (Point y : h.neighbours(static_cast<Point>(x % n))) s.push_back(col[(x / n) * n + y]);
        std::sort(s.begin() + 1, s.end());
        ids.emplace(s, 0);
      }
      std::uint32_t next = 0;
      for (auto& kv : ids) kv.second = next++;
      std::vector<std::uint32_t> nc(2 * n);
      for (std::size_t x = 0; x < 2 * n; ++x) nc[x] = ids[sig[x]];
      col.swap(nc);
      if (ids.size() == classes) return col;
      classes = ids.size();
    }
  }

  bool balanced(const std::vector<std::uint32_t>& col) const {
    std::map<std::uint32_t, long> cnt;
    for (std::size_t x = 0; x < n; ++x) ++cnt[col[x]];
    for (std::size_t x = n; x < 2 * n; ++x) --cnt[col[x]];
    for (auto& kv : cnt)
      if (kv.second) return false;
    return true;
  }

  bool search(const std::vector<std::uint32_t>& col) const {
    if (!balanced(col)) return false;
    // Pick the smallest non-singleton class in the first graph.
    std::map<std::uint32_t, std::size_t> size;
    for (std::size_t x = 0; x < n; ++x) ++size[col[x]];
    std::uint32_t target = 0;
    std::size_t best = SIZE_MAX;
    for (auto& [c, s] : size)
      if (s > 1 && s < best) {
        best = s;
        target = c;
      }
    if (best == SIZE_MAX) {
      std::vector<Point> map(n);
      std::map<std::uint32_t, Point> where;
      for (std::size_t x = n; x < 2 * n; ++x) where[col[x]] = static_cast<Point>(x - n);
      for (std::size_t x = 0; x < n; ++x) map[x] = where[col[x]];
      for (Point u = 0; u < n; ++u)
        for (Point v : g[0]->neighbours(u))
          if (!g[1]->adjacent(map[u], map[v])) return false;
      return true;
    }
    std::size_t u = 0;
    while (col[u] != target) ++u;
    const std::uint32_t fresh = static_cast<std::uint32_t>(2 * n + 1);
    for (std::size_t v = n; v < 2 * n; ++v) {
      if (col[v] != target) continue;
      auto c = col;
      c[u] = fresh;
      c[v] = fresh;
      if (search(refine(std::move(c)))) return true;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() > kMaxIsomorphismOrder || g2.order() > kMaxIsomorphismOrder)
    throw DomainError("isomorphism test is limited to 256 vertices");
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  if (g1.order() == 0) return true;
  Refiner r{{&g1, &g2}, g1.order()};
  return r.search(r.refine(std::vector<std::uint32_t>(2 * g1.order(), 0)));
}

}  // namespace symquot
