#include "symquot/classify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "symquot/errors.hpp"

namespace symquot {

std::string to_string(CorollaryCase c) {
  switch (c) {
    case CorollaryCase::A: return "a";
    case CorollaryCase::B: return "b";
    case CorollaryCase::C: return "c";
    case CorollaryCase::D: return "d";
    case CorollaryCase::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

// cnt[x * blocks + j] = number of neighbours of x in block j.
std::vector<std::uint32_t> block_counts(const Graph& g, const Partition& p) {
  const std::size_t nb = p.block_count();
  std::vector<std::uint32_t> cnt(g.order() * nb, 0);
  for (Point x = 0; x < g.order(); ++x)
    for (Point y : g.neighbours(x)) ++cnt[x * nb + p.block_of(y)];
  return cnt;
}

bool contains_all(const std::vector<Point>& orb, const std::vector<Point>& want) {
  std::vector<char> in;
  for (Point x : orb) {
    if (x >= in.size()) in.resize(x + 1, 0);
    in[x] = 1;
  }
  return std::all_of(want.begin(), want.end(), [&](Point x) { return x < in.size() && in[x]; });
}

Graph relabel(const Graph& g, const std::vector<Point>& to) {
  Graph r(g.order());
  for (auto [u, w] : g.edges()) r.add_edge(to[u], to[w]);
  return r;
}

// Given the plane operation fourth(a, b, c) on m points, decide whether x + y := fourth(0, x, y)
// (with x + 0 = x, x + x = 0) is an elementary abelian 2-group whose planes are {a, b, c, a+b+c}.
bool boolean_plane_structure(std::size_t m, const std::function<std::optional<Point>(Point, Point, Point)>& fourth,
                             const std::vector<std::vector<Point>>& closed_sets) {
  if (m < 4 || (m & (m - 1))) return false;
  std::vector<Point> add(m * m);
  for (Point a = 0; a < m; ++a)
    for (Point b = 0; b < m; ++b) {
      if (a == 0 || b == 0) {
        add[a * m + b] = a == 0 ? b : a;
      } else if (a == b) {
        add[a * m + b] = 0;
      } else {
        auto c = fourth(0, a, b);
        if (!c) return false;
        add[a * m + b] = *c;
      }
    }
  for (Point a = 0; a < m; ++a)
    for (Point b = 0; b < m; ++b)
      for (Point c = 0; c < m; ++c)
        if (add[add[a * m + b] * m + c] != add[a * m + add[b * m + c]]) return false;
  for (const auto& s : closed_sets) {
    std::vector<char> in(m, 0);
    for (Point x : s) in[x] = 1;
    for (Point x : s)
      for (Point y : s)
        for (Point z : s)
          if (!in[add[add[x * m + y] * m + z]]) return false;
  }
  return true;
}

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// H-orbits of k-subsets through {0, 1, 2} that form a 3-(m, k, lambda3) design.
std::vector<IncidenceStructure> invariant_3_designs(const PermutationGroup& h, std::size_t k, std::size_t lambda3) {
  const std::size_t m = h.degree();
  std::vector<IncidenceStructure> out;
  if (m < k || k < 4) return out;
  const std::size_t nblocks = lambda3 * binom(m, 3) / binom(k, 3);
  if (nblocks * binom(k, 3) != lambda3 * binom(m, 3)) return out;
  std::set<std::vector<Point>> seen;
  std::vector<Point> rest(k - 3);
  std::iota(rest.begin(), rest.end(), 3);
  for (;;) {
    std::vector<Point> s{0, 1, 2};
    s.insert(s.end(), rest.begin(), rest.end());
    if (!seen.count(s)) {
      std::set<std::vector<Point>> orb{s};
      std::vector<std::vector<Point>> queue{s};
      for (std::size_t i = 0; i < queue.size() && orb.size() <= nblocks; ++i)
        for (const auto& g : h.generators()) {
          auto img = image_of_set(g, queue[i]);
          if (orb.insert(img).second) queue.push_back(std::move(img));
        }
      if (orb.size() <= nblocks) seen.insert(orb.begin(), orb.end());
      if (orb.size() == nblocks) {
        IncidenceStructure d(m, std::vector<std::vector<Point>>(orb.begin(), orb.end()));
        const auto dp = design_params(d, 3);
        if (dp.max_t >= 3 && dp.lambda[2] == lambda3) out.push_back(std::move(d));
      }
    }
    // Next combination of k-3 points from 3..m-1.
    std::size_t i = rest.size();
    while (i > 0 && rest[i - 1] == m - (rest.size() - i) - 1) --i;
    if (i == 0) break;
    ++rest[i - 1];
    for (std::size_t j = i; j < rest.size(); ++j) rest[j] = rest[j - 1] + 1;
  }
  return out;
}

bool is_affine_plane_system(const IncidenceStructure& d) {
  const std::size_t m = d.points();
  std::map<std::vector<Point>, Point> fourth;
  for (const auto& b : d.blocks()) {
    if (b.size() != 4) return false;
    for (int skip = 0; skip < 4; ++skip) {
      std::vector<Point> tri;
      for (int i = 0; i < 4; ++i)
        if (i != skip) tri.push_back(b[i]);
      fourth[tri] = b[skip];
    }
  }
  return boolean_plane_structure(
      m,
      [&](Point a, Point b, Point c) -> std::optional<Point> {
        std::vector<Point> tri{a, b, c};
        std::sort(tri.begin(), tri.end());
        auto it = fourth.find(tri);
        if (it == fourth.end()) return std::nullopt;
        return it->second;
      },
      d.blocks());
}

struct Candidate {
  std::string case_id;
  Graph graph;  // on the canonical vertex order
};

std::string cr_case(std::size_t t) { return t == 1 ? "1.1(b)(iii)" : "1.2(b)(ii)"; }

// Pair-labelled graphs: labels (i, j) where i is the vertex's block and j the block it misses
// (or, for matchings, the block of its unique neighbour).
void match_pair_type(const Triple& tr, const TripleParams& p, const std::vector<std::uint32_t>& cnt,
                     const PermutationGroup& h, bool matching, std::vector<std::string>& cases) {
  const Graph& g = tr.graph;
  const std::size_t nb = tr.partition.block_count(), m = nb, n = g.order();
  if (m < 3 || n != m * (m - 1)) return;
  std::vector<Point> to(n);
  std::vector<char> used(n, 0);
  for (Point x = 0; x < n; ++x) {
    const std::size_t i = tr.partition.block_of(x);
    std::optional<std::size_t> j;
    for (std::size_t b = 0; b < nb; ++b) {
      if (b == i) continue;
      if ((cnt[x * nb + b] == 0) == matching) continue;
      if (j) return;
      j = b;
    }
    if (!j) return;
    const Point idx = pair_index(static_cast<Point>(i), static_cast<Point>(*j), m);
    if (used[idx]) return;
    used[idx] = 1;
    to[x] = idx;
  }
  if (matching) {
    // Labels are a bijection, so ij adjacent to ji is automatic; the case needs 3-transitivity.
    for (auto [u, w] : g.edges()) {
      const auto a = pair_of(to[u], m), b = pair_of(to[w], m);
      if (a.first != b.second || a.second != b.first) return;
    }
    if (transitivity_degree(h) >= 3) cases.push_back("1.1(b)(i)");
    return;
  }
  const Graph rg = relabel(g, to);
  std::vector<Candidate> cands;
  const int trans = transitivity_degree(h);
  if (p.t == 1 && trans >= 3) cands.push_back({"1.1(b)(ii)", pair_rule_graph(m, PairRule::SameSecond)});
  if (p.t >= 2 && trans >= 4) cands.push_back({"1.2(b)(i)", pair_rule_graph(m, PairRule::AllDistinct)});
  // Affine planes: a boolean 3-(2^d, 4, 1) design preserved by the label group.
  if (m >= 8 && !(m & (m - 1)))
    for (const auto& d : invariant_3_designs(h, 4, 1))
      if (is_affine_plane_system(d)) {
        cands.push_back({"1.1(b)(iv)", pair_rule_graph(m, PairRule::DesignIn, &d)});
        cands.push_back({"1.2(b)(iii.1)", pair_rule_graph(m, PairRule::DesignOut, &d)});
      }
  // The Witt design on 22 points and the Hadamard 3-design on 12.
  for (auto [pts, lam] : {std::pair<std::size_t, std::size_t>{22, 1}, {12, 2}})
    if (m == pts)
      for (const auto& d : invariant_3_designs(h, 6, lam)) {
        cands.push_back({"1.2(b)(iii.1)", pair_rule_graph(m, PairRule::DesignOut, &d)});
        cands.push_back({"1.2(b)(iii.2)", pair_rule_graph(m, PairRule::DesignIn, &d)});
      }
  for (const auto& c : cands)
    if (c.graph == rg) cases.push_back(c.case_id);

  // Cross-ratio graphs: labels must already be the canonical projective labels.
  const std::size_t q = m - 1;
  const auto pp = prime_power(static_cast<std::uint32_t>(q));
  if (!pp || q < 3) return;
  const auto f = FiniteField::of_order(static_cast<std::uint32_t>(q));
  GroupTag ptag;
  ptag.q = static_cast<std::uint32_t>(q);
  ptag.family = f.degree() == 1 ? GroupFamily::PGL2 : GroupFamily::PGammaLSub;
  ptag.s = f.degree() == 1 ? 0 : 1;
  const auto& full = catalog_group(ptag);
  for (const auto& s : h.generators())
    if (!full.contains(s)) return;
  // Neighbours of (inf, 0) among pairs starting at the point 1 give the candidate d values.
  std::vector<Point> from(n);
  for (Point x = 0; x < n; ++x) from[to[x]] = x;
  std::set<std::string> found;
  for (Point y : g.neighbours(from[pair_index(0, 1, m)])) {
    const auto [a, b] = pair_of(to[y], m);
    if (a != 2 || b < 3) continue;
    const std::uint32_t d = b - 1;
    const auto sd = subfield_degree(f.element(d));
    if (sd % p.t) continue;
    const std::uint32_t s = static_cast<std::uint32_t>(sd / p.t);
    for (int twisted = 0; twisted < 2; ++twisted) {
      try {
        const auto c = twisted ? twisted_cross_ratio_graph(static_cast<std::uint32_t>(q), d, s)
                               : cross_ratio_graph(static_cast<std::uint32_t>(q), d, s);
        if (c.graph == rg) found.insert(cr_case(p.t));
      } catch (const DomainError&) {
      }
    }
    if (!found.empty()) break;
  }
  cases.insert(cases.end(), found.begin(), found.end());
}

std::string flag_case(FlagRule r, KnownDesign d) {
  switch (r) {
    case FlagRule::SameBlock:
      return d == KnownDesign::AffineHyperplanes ? "1.1(c)(i)" : d == KnownDesign::Witt22 ? "1.1(c)(ii)" : "1.1(c)(iii)";
    case FlagRule::DisjointBlocks: return d == KnownDesign::Witt22 ? "1.2(c)(iii)" : "1.1(d)";
    case FlagRule::CommonTwoPoints: return "1.2(c)(i)";
    case FlagRule::OppositeNonComplement: return "1.2(c)(ii)";
    case FlagRule::M22Disjoint:
    case FlagRule::M22MeetTwo: return "1.2(c)(iii)";
  }
  return "";
}

// Flag-labelled graphs: vertex x in block P is the flag (P, beta), with beta recovered from the
// set R of blocks adjacent to x as either R + {P} or the complement of R.
void match_flag_type(const Triple& tr, const std::vector<std::uint32_t>& cnt, const PermutationGroup& h,
                     std::vector<std::string>& cases) {
  const Graph& g = tr.graph;
  const std::size_t nb = tr.partition.block_count(), n = g.order();
  std::set<std::vector<std::vector<Point>>> tried;
  for (int mode = 0; mode < 2; ++mode) {
    std::vector<std::vector<Point>> beta(n);
    for (Point x = 0; x < n; ++x) {
      const Point pnt = tr.partition.block_of(x);
      for (Point b = 0; b < nb; ++b) {
        const bool adj = cnt[x * nb + b] > 0;
        if (mode == 0 ? (adj || b == pnt) : !adj) beta[x].push_back(b);
      }
    }
    if (!tried.insert(beta).second) continue;
    std::set<std::vector<Point>> distinct(beta.begin(), beta.end());
    IncidenceStructure d(nb, std::vector<std::vector<Point>>(distinct.begin(), distinct.end()));
    const auto kind = identify_design(d);
    if (kind == KnownDesign::None || !preserves_design(d, h)) continue;
    const auto fl = flags(d);
    if (fl.size() != n) continue;
    std::map<std::pair<Point, std::uint32_t>, Point> index;
    for (std::size_t i = 0; i < fl.size(); ++i) index[{fl[i].point, fl[i].block}] = static_cast<Point>(i);
    std::vector<Point> to(n);
    std::vector<char> used(n, 0);
    bool ok = true;
    for (Point x = 0; x < n && ok; ++x) {
      auto it = index.find({tr.partition.block_of(x), *d.find_block(beta[x])});
      if (it == index.end() || used[it->second]) {
        ok = false;
        break;
      }
      used[it->second] = 1;
      to[x] = it->second;
    }
    if (!ok) continue;
    const Graph rg = relabel(g, to);
    std::vector<FlagRule> rules{FlagRule::SameBlock, FlagRule::DisjointBlocks, FlagRule::CommonTwoPoints};
    if (kind == KnownDesign::Witt22) {
      rules.push_back(FlagRule::M22Disjoint);
      rules.push_back(FlagRule::M22MeetTwo);
    } else {
      rules.push_back(FlagRule::OppositeNonComplement);
    }
    for (auto r : rules)
      if (flag_rule_graph(d, r) == rg) cases.push_back(flag_case(r, kind));
  }
}

}  // namespace

HypothesisReport verify_hypotheses(const Triple& t) {
  HypothesisReport h;
  const Graph& g = t.graph;
  const Partition& p = t.partition;
  const std::size_t n = g.order();
  if (t.group.degree() != n || p.points() != n) return h;
  h.g_symmetric = g.edge_count() > 0 && is_g_symmetric(g, t.group);
  h.block_system = p.uniform_size() > 0 && is_block_system(t.group, p);
  const auto q = quotient_graph(g, p);
  h.no_intra_block_edges = q.intra_block_edges == 0;
  const std::size_t nb = p.block_count();
  h.complete_quotient = nb >= 2 && q.graph.edge_count() == nb * (nb - 1) / 2;
  if (h.block_system) {
    const auto& b0 = p.block(0);
    if (b0.size() == 1) {
      h.two_transitive_on_block = true;
    } else {
      const auto aug = block_augmented(t.group, p);
      const Point blk = static_cast<Point>(n);
      const auto gb = stabilizer(aug, {blk});
      if (contains_all(orbit(gb, b0[0]), b0)) {
        const auto gbx = stabilizer(aug, {blk, b0[0]});
        std::vector<Point> rest(b0.begin() + 1, b0.end());
        h.two_transitive_on_block = contains_all(orbit(gbx, b0[1]), rest);
      }
    }
  }
  return h;
}

TripleParams compute_params(const Triple& tr) {
  const Graph& g = tr.graph;
  const Partition& p = tr.partition;
  const std::size_t n = g.order(), nb = p.block_count();
  if (n == 0 || nb < 2) throw DomainError("parameters need at least two blocks");
  TripleParams pr;
  pr.v = p.block(0).size();
  pr.s = g.degree(0);
  for (Point x = 1; x < n; ++x)
    if (g.degree(x) != pr.s) throw DomainError("graph valency is not constant");
  const auto cnt = block_counts(g, p);
  for (std::size_t i = 0; i < cnt.size(); ++i) {
    if (!cnt[i]) continue;
    if (pr.t == 0) pr.t = cnt[i];
    else if (cnt[i] != pr.t) throw DomainError("cross-valency t is not constant");
  }
  if (pr.t == 0) throw DomainError("graph has no edges");
  const auto db = design_from_partition(g, p, 0);
  pr.b = db.block_count();
  const auto dp = design_params(db, 2);
  if (!dp.k) throw DomainError("D(B) has blocks of different sizes");
  pr.k = *dp.k;
  pr.m = pr.t * pr.k;
  if (pr.s % pr.t) throw DomainError("t does not divide s");
  pr.r = pr.s / pr.t;
  if (dp.max_t >= 2) pr.lambda = dp.lambda[1];
  if (pr.k == 1 && pr.v >= 2) pr.lambda = 0;  // no block holds a pair
  pr.rho = dp.rho;
  if (pr.v * pr.s != pr.b * pr.m || pr.v * pr.r != pr.b * pr.k || (dp.r && *dp.r != pr.r))
    throw ValidationError("parameter identities vs = bm, vr = bk fail");
  return pr;
}

CorollaryCase corollary_case(const TripleParams& p, const IncidenceStructure& db) {
  if (p.t == 1 && p.k == 1 && p.m == 1 && p.r == 1) {
    if (p.v >= 2 && p.lambda != std::size_t{0}) throw ValidationError("case (b) needs lambda = 0");
    return CorollaryCase::B;
  }
  if (p.k == p.v) {
    if (p.rho != p.b || db.block_count() != p.b) throw ValidationError("case (c) needs rho = b");
    return CorollaryCase::C;
  }
  if (p.v == p.b && p.lambda && p.rho == 1 && !db.has_repeated_blocks()) return CorollaryCase::D;
  if (p.v < p.b) return CorollaryCase::A;
  throw ValidationError("no case of the corollary applies");
}

ClassificationVerdict classify_triple(const Triple& t) {
  ClassificationVerdict v;
  v.tag = t.provenance.tag;
  v.hypotheses = verify_hypotheses(t);
  v.structure = recognize_structure(t.graph);
  const auto& h = v.hypotheses;
  if (!(h.g_symmetric && h.block_system && h.no_intra_block_edges && h.complete_quotient)) return v;
  try {
    v.params = compute_params(t);
  } catch (const std::exception& e) {
    v.params_error = e.what();
    return v;
  }
  if (!h.two_transitive_on_block) return v;
  const auto db = design_from_partition(t.graph, t.partition, 0);
  try {
    v.corollary_case = corollary_case(*v.params, db);
  } catch (const ValidationError& e) {
    v.params_error = e.what();
    return v;
  }
  const auto& p = *v.params;
  if (p.v < p.b) return v;
  const auto cnt = block_counts(t.graph, t.partition);
  const auto ind = induced_action(t.group, t.partition);
  if (v.corollary_case == CorollaryCase::B && p.v == p.b) {
    match_pair_type(t, p, cnt, ind.image, true, v.matching_cases);
  } else if (v.corollary_case == CorollaryCase::D) {
    if (p.k + 1 == p.v) match_pair_type(t, p, cnt, ind.image, false, v.matching_cases);
    match_flag_type(t, cnt, ind.image, v.matching_cases);
  }
  // t decides between the two theorems at the boundary.
  std::erase_if(v.matching_cases, [&](const std::string& c) { return (c.rfind("1.1", 0) == 0) != (p.t == 1); });
  std::sort(v.matching_cases.begin(), v.matching_cases.end());
  v.matching_cases.erase(std::unique(v.matching_cases.begin(), v.matching_cases.end()), v.matching_cases.end());
  const auto& declared = t.provenance.declared_case;
  if (std::find(v.matching_cases.begin(), v.matching_cases.end(), declared) != v.matching_cases.end())
    v.theorem_case = declared;
  else if (!v.matching_cases.empty())
    v.theorem_case = v.matching_cases.front();
  else
    v.theorem_case = "Unmatched";
  return v;
}

KnownDesign identify_design(const IncidenceStructure& d) {
  const std::size_t v = d.points(), b = d.block_count();
  if (d.has_repeated_blocks() || b == 0) return KnownDesign::None;
  if (v == 22 && b == 77) {
    const auto dp = design_params(d, 3);
    if (dp.k == std::size_t{6} && dp.max_t >= 3 && dp.lambda[2] == 1) return KnownDesign::Witt22;
  }
  if (v == 12 && b == 22) {
    const auto dp = design_params(d, 3);
    if (dp.k == std::size_t{6} && dp.max_t >= 3 && dp.lambda[2] == 2) return KnownDesign::Hadamard12;
  }
  if (v >= 8 && v <= 64 && !(v & (v - 1)) && b == 2 * (v - 1)) {
    const auto dp = design_params(d, 3);
    if (dp.k != v / 2 || dp.max_t < 3 || dp.lambda[2] != v / 4 - 1) return KnownDesign::None;
    // The plane through a, b, c is the intersection of all blocks containing them.
    auto fourth = [&](Point a, Point b2, Point c) -> std::optional<Point> {
      std::vector<char> in(v, 1);
      for (const auto& blk : d.blocks()) {
        if (!std::binary_search(blk.begin(), blk.end(), a) || !std::binary_search(blk.begin(), blk.end(), b2) ||
            !std::binary_search(blk.begin(), blk.end(), c))
          continue;
        std::vector<char> cur(v, 0);
        for (Point x : blk) cur[x] = 1;
        for (std::size_t x = 0; x < v; ++x) in[x] &= cur[x];
      }
      std::optional<Point> r;
      std::size_t count = 0;
      for (Point x = 0; x < v; ++x)
        if (in[x]) {
          ++count;
          if (x != a && x != b2 && x != c) r = x;
        }
      if (count != 4) return std::nullopt;
      return r;
    };
    if (boolean_plane_structure(v, fourth, d.blocks())) return KnownDesign::AffineHyperplanes;
  }
  return KnownDesign::None;
}

OrbitLengthReport orbit_length_check(const Triple& t, const IncidenceStructure& d) {
  OrbitLengthReport rep;
  rep.design = identify_design(d);
  const auto fl = flags(d);
  if (fl.size() != t.graph.order() || t.group.degree() != fl.size()) return rep;
  const std::size_t v = d.points();
  switch (rep.design) {
    case KnownDesign::AffineHyperplanes: {
      const std::size_t h = v / 2;
      rep.expected_incident = {1, h - 2, h};
      rep.expected_non_incident = {1, h - 1, h - 1};
      break;
    }
    case KnownDesign::Witt22:
      rep.expected_incident = {1, 4, 16};
      rep.expected_non_incident = {5, 6, 10};
      break;
    case KnownDesign::Hadamard12:
      rep.expected_incident = {1, 4, 6};
      rep.expected_non_incident = {1, 5, 5};
      break;
    case KnownDesign::None: return rep;
  }
  std::sort(rep.expected_incident.begin(), rep.expected_incident.end());
  std::sort(rep.expected_non_incident.begin(), rep.expected_non_incident.end());
  const auto [p, beta] = fl[0];
  const auto& blk = d.block(beta);
  Point on = 0, off = 0;
  while (on == p || !std::binary_search(blk.begin(), blk.end(), on)) ++on;
  while (std::binary_search(blk.begin(), blk.end(), off)) ++off;
  const std::size_t n = fl.size();
  const auto aug = block_augmented(t.group, t.partition);
  auto lengths = [&](Point other) {
    // The partition block holding the flags at `other`.
    Point vx = 0;
    while (fl[vx].point != other) ++vx;
    const auto bi = t.partition.block_of(vx);
    const auto h = stabilizer(aug, {0, static_cast<Point>(n + bi)});
    std::vector<std::size_t> out;
    for (const auto& o : orbits_on(h, t.partition.block(bi))) out.push_back(o.size());
    std::sort(out.begin(), out.end());
    return out;
  };
  rep.incident = lengths(on);
  rep.non_incident = lengths(off);
  rep.ok = rep.incident == rep.expected_incident && rep.non_incident == rep.expected_non_incident;
  return rep;
}

// ------------------------------------------------------------------ census

namespace {

struct Job {
  std::function<Triple()> build;
  bool try_star = false;
};

}  // namespace

std::vector<CensusRow> census(std::uint32_t max_q, std::uint32_t max_d, unsigned threads) {
  if (max_q > 16 || max_d > 4) throw DomainError("census range is capped at max_q <= 16, max_d <= 4");
  std::vector<Job> jobs;
  const bool any = max_q >= 3 || max_d >= 2;
  auto add = [&](std::function<Triple()> f, bool star) { jobs.push_back({std::move(f), star}); };

  // Cross-ratio families.
  for (std::uint32_t q = 3; q <= max_q; ++q) {
    if (!prime_power(q)) continue;
    const auto f = FiniteField::of_order(q);
    for (std::uint32_t d = 2; d < q; ++d) {
      const auto sd = subfield_degree(f.element(d));
      for (std::uint32_t s : divisors(sd)) add([=] { return cross_ratio_graph(q, d, s); }, false);
      if (f.characteristic() != 2 && f.degree() % 2 == 0 && q >= 9)
        for (std::uint32_t s : divisors(sd))
          if (s % 2 == 0 && sd % 2 == 0) add([=] { return twisted_cross_ratio_graph(q, d, s); }, false);
    }
  }

  // 3-transitive label groups.
  std::vector<GroupTag> groups;
  for (std::uint32_t m = 4; m <= max_q + 1; ++m) groups.push_back({GroupFamily::Sym, m});
  for (std::uint32_t m = 5; m <= max_q + 1; ++m) groups.push_back({GroupFamily::Alt, m});
  for (std::uint32_t q = 3; q <= max_q; ++q)
    if (prime_power(q))
      for (const auto& c : three_transitive_pgammal_list(q)) groups.push_back(c.tag);
  for (std::uint32_t d = 2; d <= max_d; ++d) {
    GroupTag a{GroupFamily::AGL};
    a.d = d;
    groups.push_back(a);
  }
  if (max_d >= 4) groups.push_back({GroupFamily::Z24A7});
  if (any)
    for (auto fam : {GroupFamily::M11on11, GroupFamily::M11on12, GroupFamily::M12, GroupFamily::M22,
                     GroupFamily::AutM22, GroupFamily::M23, GroupFamily::M24})
      groups.push_back({fam});
  for (const auto& g : groups) {
    add([=] { return matching_graph(g); }, false);
    add([=] { return pair_graph(g, PairRule::SameSecond); }, true);
    if (declared_invariants(g).second >= 4 && g.degree() >= 5) add([=] { return pair_graph(g, PairRule::AllDistinct); }, true);
  }

  // Affine and Mathieu designs.
  for (std::uint32_t d = 3; d <= max_d; ++d) {
    GroupTag a{GroupFamily::AGL};
    a.d = d;
    std::vector<GroupTag> affine{a};
    if (d == 4) affine.push_back({GroupFamily::Z24A7});
    for (const auto& g : affine) {
      add([=] { return pair_graph(g, PairRule::AffinePlane); }, true);
      add([=] { return pair_graph(g, PairRule::AffineNonPlane); }, true);
      const DesignSpec ds{DesignSpec::Kind::AGHyperplanes, d};
      for (auto r : {FlagRule::SameBlock, FlagRule::DisjointBlocks, FlagRule::CommonTwoPoints,
                     FlagRule::OppositeNonComplement})
        add([=] { return flag_graph(ds, g, r); }, true);
    }
  }
  if (any) {
    const DesignSpec s22{DesignSpec::Kind::Steiner22}, h12{DesignSpec::Kind::Hadamard12};
    const GroupTag m22{GroupFamily::M22}, m11{GroupFamily::M11on12};
    for (auto r : {PairRule::DesignIn, PairRule::DesignOut}) {
      add([=] { return pair_graph(m22, r, s22); }, false);
      add([=] { return pair_graph(m11, r, h12); }, false);
    }
    for (auto r : {FlagRule::SameBlock, FlagRule::CommonTwoPoints, FlagRule::M22Disjoint, FlagRule::M22MeetTwo})
      add([=] { return flag_graph(s22, m22, r); }, true);
    for (auto r : {FlagRule::SameBlock, FlagRule::DisjointBlocks, FlagRule::CommonTwoPoints,
                   FlagRule::OppositeNonComplement})
      add([=] { return flag_graph(h12, m11, r); }, true);
  }

  // Each job yields its own row plus, when defined, the row of its *-transform.
  std::vector<std::vector<CensusRow>> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      try {
        const auto t = jobs[i].build();
        results[i].push_back({t.provenance.tag, t.provenance.declared_case, classify_triple(t)});
        if (jobs[i].try_star) {
          try {
            const auto st = star_transform(t);
            results[i].push_back({st.provenance.tag, st.provenance.declared_case, classify_triple(st)});
          } catch (const DomainError&) {
          }
        }
      } catch (const DomainError&) {
        // Out-of-domain parameters (for example a non-self-paired twisted orbital) are skipped.
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::vector<CensusRow> rows;
  for (auto& r : results)
    for (auto& row : r) rows.push_back(std::move(row));
  return rows;
}

}  // namespace symquot
