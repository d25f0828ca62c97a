#include "symquot/constructions.hpp"

#include <algorithm>
#include <map>

#include "symquot/errors.hpp"

namespace symquot {

std::string to_string(PairRule r) {
  switch (r) {
    case PairRule::SameSecond: return "same_second";
    case PairRule::AllDistinct: return "all_distinct";
    case PairRule::AffinePlane: return "affine_plane";
    case PairRule::AffineNonPlane: return "affine_non_plane";
    case PairRule::DesignIn: return "design_in";
    case PairRule::DesignOut: return "design_out";
  }
  return "?";
}

std::string to_string(FlagRule r) {
  switch (r) {
    case FlagRule::SameBlock: return "same_block";
    case FlagRule::DisjointBlocks: return "disjoint_blocks";
    case FlagRule::CommonTwoPoints: return "common_two_points";
    case FlagRule::OppositeNonComplement: return "opposite_non_complement";
    case FlagRule::M22Disjoint: return "m22_disjoint";
    case FlagRule::M22MeetTwo: return "m22_meet_two";
  }
  return "?";
}

std::string DesignSpec::to_string() const {
  switch (kind) {
    case Kind::AGHyperplanes: return "ag:d=" + std::to_string(d);
    case Kind::AGPlanes: return "ag2:d=" + std::to_string(d);
    case Kind::Steiner22: return "s22";
    case Kind::Hadamard12: return "h12";
  }
  return "?";
}

IncidenceStructure DesignSpec::build() const {
  switch (kind) {
    case Kind::AGHyperplanes: return ag_design(static_cast<int>(d), static_cast<int>(d) - 1);
    case Kind::AGPlanes: return ag_design(static_cast<int>(d), 2);
    case Kind::Steiner22: return steiner_3_22_6();
    case Kind::Hadamard12: return design_3_12_6_2();
  }
  throw DomainError("unknown design");
}

PermutationGroup pair_action(const PermutationGroup& g) {
  const std::size_t m = g.degree();
  if (m < 3) throw DomainError("pair action needs at least 3 points");
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(pair_lift(s));
  return PermutationGroup(m * (m - 1), std::move(gens), {{}, g.order()});
}

PermutationGroup flag_action(const PermutationGroup& g, const IncidenceStructure& d, const std::vector<Flag>& fl) {
  std::map<std::pair<Point, std::uint32_t>, Point> index;
  for (std::size_t i = 0; i < fl.size(); ++i) index[{fl[i].point, fl[i].block}] = static_cast<Point>(i);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) {
    const auto bp = block_permutation(d, s);
    std::vector<Point> im(fl.size());
    for (std::size_t i = 0; i < fl.size(); ++i) im[i] = index.at({s[fl[i].point], bp[fl[i].block]});
    gens.emplace_back(std::move(im));
  }
  return PermutationGroup(fl.size(), std::move(gens), {{}, g.order()});
}

namespace {

// t values and k for the ordered block pair (i, j): k = |{x in B_j : x has a neighbour in B_i}|.
struct CrossShape {
  std::set<std::size_t> t;
  std::size_t k = 0;
};

CrossShape cross_shape(const Graph& g, const Partition& p, std::size_t i, std::size_t j) {
  CrossShape c;
  c.t = bipartite_between(g, p.block(i), p.block(j));
  for (Point y : p.block(j))
    for (Point x : g.neighbours(y))
      if (p.block_of(x) == i) {
        ++c.k;
        break;
      }
  return c;
}

Triple projective_orbital(const PermutationGroup& label_group, std::uint32_t q, std::uint32_t d_index,
                          std::uint32_t expected_t, Provenance prov) {
  const std::size_t m = q + 1;
  auto g = pair_action(label_group);
  // Labels: 0 is infinity, 1 + x is the field element x.
  const Point x = pair_index(0, 1, m), y = pair_index(2, 1 + d_index, m);
  Triple t{orbital_graph(g, x, y), std::move(g), Partition::consecutive(m * (m - 1), m - 1), std::move(prov)};
  const auto shape = cross_shape(t.graph, t.partition, 0, 1);
  if (shape.k != q - 1 || shape.t != std::set<std::size_t>{expected_t} ||
      quotient_graph(t.graph, t.partition).graph.edge_count() != m * (m - 1) / 2)
    throw ValidationError("cross-ratio graph parameters differ from k = q-1, t = s(d)/s");
  return t;
}

std::string cr_tag(const char* kind, std::uint32_t q, std::uint32_t d, std::uint32_t s) {
  return std::string(kind) + ":q=" + std::to_string(q) + ":d=" + std::to_string(d) + ":s=" + std::to_string(s);
}

}  // namespace

Triple cross_ratio_graph(std::uint32_t q, std::uint32_t d_index, std::uint32_t s) {
  if (q < 3) throw DomainError("cross-ratio graphs need q >= 3");
  const auto f = FiniteField::of_order(q);
  if (d_index <= 1 || d_index >= q) throw DomainError("d must be a field element other than 0 and 1");
  const auto sd = subfield_degree(f.element(d_index));
  if (s == 0 || sd % s) throw DomainError("s must divide s(d) = " + std::to_string(sd));
  const auto t = sd / s;
  Provenance prov{cr_tag("cr", q, d_index, s), t == 1 ? "1.1(b)(iii)" : "1.2(b)(ii)"};
  GroupTag tag;
  tag.q = q;
  if (s == f.degree()) {
    tag.family = GroupFamily::PGL2;
  } else {
    tag.family = GroupFamily::PGammaLSub;
    tag.s = s;
  }
  return projective_orbital(catalog_group(tag), q, d_index, t, std::move(prov));
}

Triple twisted_cross_ratio_graph(std::uint32_t q, std::uint32_t d_index, std::uint32_t s) {
  const auto f = FiniteField::of_order(q);
  if (f.characteristic() == 2 || f.degree() % 2 || q < 9)
    throw DomainError("twisted cross-ratio graphs need odd p, even n and q >= 9");
  if (d_index <= 1 || d_index >= q) throw DomainError("d must be a field element other than 0 and 1");
  const auto sd = subfield_degree(f.element(d_index));
  if (s == 0 || s % 2 || sd % 2 || sd % s)
    throw DomainError("TCR needs s and s(d) even with s dividing s(d) = " + std::to_string(sd));
  const auto t = sd / s;
  Provenance prov{cr_tag("tcr", q, d_index, s), t == 1 ? "1.1(b)(iii)" : "1.2(b)(ii)"};
  GroupTag tag;
  tag.family = GroupFamily::MGroup;
  tag.q = q;
  tag.s = s / 2;
  return projective_orbital(catalog_group(tag), q, d_index, t, std::move(prov));
}

Graph pair_rule_graph(std::size_t m, PairRule rule, const IncidenceStructure* design) {
  const bool affine = rule == PairRule::AffinePlane || rule == PairRule::AffineNonPlane;
  if (affine && (m < 4 || (m & (m - 1))))
    throw DomainError("affine rules need a point count that is a power of 2");
  const bool needs_design = rule == PairRule::DesignIn || rule == PairRule::DesignOut;
  // cover[(i*m + j)*m + k]: bitmask of points on some design block through i, j, k.
  std::vector<std::uint64_t> cover;
  if (needs_design) {
    if (!design || design->points() != m) throw DomainError("design rule needs a design on the group's points");
    if (m > 64) throw DomainError("design rules support at most 64 points");
    cover.assign(m * m * m, 0);
    for (const auto& b : design->blocks()) {
      std::uint64_t mask = 0;
      for (Point x : b) mask |= std::uint64_t(1) << x;
      for (Point i : b)
        for (Point j : b)
          for (Point k : b) cover[(i * m + j) * m + k] |= mask;
    }
  }
  const std::size_t n = m * (m - 1);
  Graph gr(n);
  for (Point u = 0; u < n; ++u) {
    const auto [i, j] = pair_of(u, m);
    for (Point w = u + 1; w < n; ++w) {
      const auto [i2, j2] = pair_of(w, m);
      const bool distinct = i != i2 && i != j2 && j != i2 && j != j2;
      bool adj = false;
      switch (rule) {
        case PairRule::SameSecond: adj = j == j2 && i != i2; break;
        case PairRule::AllDistinct: adj = distinct; break;
        case PairRule::AffinePlane: adj = distinct && (i ^ j ^ i2 ^ j2) == 0; break;
        case PairRule::AffineNonPlane: adj = distinct && (i ^ j ^ i2 ^ j2) != 0; break;
        case PairRule::DesignIn: adj = distinct && ((cover[(i * m + j) * m + i2] >> j2) & 1); break;
        case PairRule::DesignOut: adj = distinct && !((cover[(i * m + j) * m + i2] >> j2) & 1); break;
      }
      if (adj) gr.add_edge(u, w);
    }
  }
  return gr;
}

Triple pair_graph(const PermutationGroup& grp, PairRule rule, const IncidenceStructure* design, Provenance prov) {
  const std::size_t m = grp.degree();
  if (m < 3 || !is_transitive(grp)) throw DomainError("pair graphs need a transitive group on at least 3 points");
  const std::size_t n = m * (m - 1);
  auto gr = pair_rule_graph(m, rule, design);
  return Triple{std::move(gr), pair_action(grp), Partition::consecutive(n, m - 1), std::move(prov)};
}

Triple pair_graph(const GroupTag& tag, PairRule rule, std::optional<DesignSpec> design) {
  const auto& g = catalog_group(tag);
  std::optional<IncidenceStructure> d;
  if (design) d = design->build();
  Provenance prov;
  prov.tag = "pair:group=" + tag.to_string() + (design ? ":design=" + design->to_string() : "") +
             ":rule=" + to_string(rule);
  const int trans = declared_invariants(tag).second;
  switch (rule) {
    case PairRule::SameSecond: prov.declared_case = trans >= 3 ? "1.1(b)(ii)" : ""; break;
    case PairRule::AllDistinct: prov.declared_case = trans >= 4 && tag.degree() >= 5 ? "1.2(b)(i)" : ""; break;
    case PairRule::AffinePlane: prov.declared_case = "1.1(b)(iv)"; break;
    case PairRule::AffineNonPlane:
    case PairRule::DesignOut: prov.declared_case = "1.2(b)(iii.1)"; break;
    case PairRule::DesignIn: prov.declared_case = "1.2(b)(iii.2)"; break;
  }
  return pair_graph(g, rule, d ? &*d : nullptr, std::move(prov));
}

Graph flag_rule_graph(const IncidenceStructure& d, FlagRule rule) {
  const std::size_t nb = d.block_count();
  std::vector<std::size_t> meet(nb * nb, 0);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = 0; b < nb; ++b) {
      std::vector<Point> c;
      std::set_intersection(d.block(a).begin(), d.block(a).end(), d.block(b).begin(), d.block(b).end(),
                            std::back_inserter(c));
      meet[a * nb + b] = c.size();
    }
  std::vector<std::uint32_t> complement(nb, UINT32_MAX);
  if (rule == FlagRule::OppositeNonComplement) {
    const auto comp = complement_design(d);
    for (std::size_t a = 0; a < nb; ++a) {
      auto c = d.find_block(comp.block(a));
      if (!c) throw DomainError("design is not closed under complements");
      complement[a] = *c;
    }
  }
  if ((rule == FlagRule::M22Disjoint || rule == FlagRule::M22MeetTwo) &&
      (d.points() != 22 || nb != 77 || d.block(0).size() != 6))
    throw DomainError("M22 rules need the 3-(22,6,1) design");
  const auto fl = flags(d);
  const std::size_t n = fl.size();
  Graph gr(n);
  for (Point u = 0; u < n; ++u)
    for (Point w = u + 1; w < n; ++w) {
      const auto [p, b] = fl[u];
      const auto [p2, b2] = fl[w];
      if (p == p2) continue;
      const bool opposite = !d.incident(p, b2) && !d.incident(p2, b);
      const std::size_t k = meet[b * nb + b2];
      bool adj = false;
      switch (rule) {
        case FlagRule::SameBlock: adj = b == b2; break;
        case FlagRule::DisjointBlocks: adj = k == 0; break;
        case FlagRule::CommonTwoPoints: adj = b != b2 && d.incident(p, b2) && d.incident(p2, b); break;
        case FlagRule::OppositeNonComplement: adj = opposite && complement[b] != b2; break;
        case FlagRule::M22Disjoint: adj = opposite && k == 0; break;
        case FlagRule::M22MeetTwo: adj = opposite && k == 2; break;
      }
      if (adj) gr.add_edge(u, w);
    }
  return gr;
}

Triple flag_graph(const IncidenceStructure& d, const PermutationGroup& g, FlagRule rule, Provenance prov) {
  if (g.degree() != d.points() || !preserves_design(d, g)) throw DomainError("group does not preserve the design");
  const auto fl = flags(d);
  const std::size_t n = fl.size();
  auto gr = flag_rule_graph(d, rule);
  std::vector<std::uint32_t> label(n);
  for (std::size_t i = 0; i < n; ++i) label[i] = fl[i].point;
  return Triple{std::move(gr), flag_action(g, d, fl), Partition::from_labels(label), std::move(prov)};
}

Triple flag_graph(const DesignSpec& ds, const GroupTag& tag, FlagRule rule) {
  const auto d = ds.build();
  Provenance prov;
  prov.tag = "flag:design=" + ds.to_string() + ":group=" + tag.to_string() + ":rule=" + to_string(rule);
  const bool affine = ds.kind == DesignSpec::Kind::AGHyperplanes;
  const bool witt = ds.kind == DesignSpec::Kind::Steiner22;
  const bool hadamard = ds.kind == DesignSpec::Kind::Hadamard12;
  switch (rule) {
    case FlagRule::SameBlock:
      prov.declared_case = affine ? "1.1(c)(i)" : witt ? "1.1(c)(ii)" : hadamard ? "1.1(c)(iii)" : "";
      break;
    case FlagRule::DisjointBlocks:
      prov.declared_case = (affine || hadamard) ? "1.1(d)" : witt ? "1.2(c)(iii)" : "";
      break;
    case FlagRule::CommonTwoPoints: prov.declared_case = (affine || witt || hadamard) ? "1.2(c)(i)" : ""; break;
    case FlagRule::OppositeNonComplement: prov.declared_case = (affine || hadamard) ? "1.2(c)(ii)" : ""; break;
    case FlagRule::M22Disjoint:
    case FlagRule::M22MeetTwo: prov.declared_case = "1.2(c)(iii)"; break;
  }
  return flag_graph(d, catalog_group(tag), rule, std::move(prov));
}

namespace {

std::string star_partner(const std::string& inner_case, const std::string& inner_tag) {
  if (inner_case == "1.1(b)(ii)") return "1.2(b)(i)";
  if (inner_case == "1.2(b)(i)") return "1.1(b)(ii)";
  if (inner_case.rfind("1.1(c)", 0) == 0) return "1.2(c)(i)";
  if (inner_case == "1.1(d)") return "1.2(c)(ii)";
  if (inner_case == "1.2(c)(ii)") return "1.1(d)";
  if (inner_case == "1.2(c)(iii)") return "1.2(c)(iii)";
  if (inner_case == "1.2(c)(i)") {
    if (inner_tag.find("design=ag:") != std::string::npos) return "1.1(c)(i)";
    if (inner_tag.find("design=s22") != std::string::npos) return "1.1(c)(ii)";
    if (inner_tag.find("design=h12") != std::string::npos) return "1.1(c)(iii)";
  }
  return "";
}

}  // namespace

Triple star_transform(const Triple& t) {
  const Graph& g = t.graph;
  const Partition& p = t.partition;
  const std::size_t n = g.order(), nb = p.block_count();
  // Neighbour count of each vertex in each block.
  std::vector<std::uint32_t> cnt(n * nb, 0);
  for (Point x = 0; x < n; ++x)
    for (Point y : g.neighbours(x)) ++cnt[x * nb + p.block_of(y)];
  auto xset = [&](std::size_t into, std::size_t from) {  // vertices of `from` with neighbours in `into`
    std::vector<Point> r;
    for (Point x : p.block(from))
      if (cnt[x * nb + into]) r.push_back(x);
    return r;
  };

  // Hypothesis check on the first adjacent block pair.
  std::size_t j0 = 1;
  while (j0 < nb && xset(j0, 0).empty()) ++j0;
  if (j0 == nb) throw DomainError("block 0 has no adjacent block");
  const auto a0 = xset(j0, 0), b0 = xset(0, j0);
  const std::size_t k = a0.size();
  if (k < 2) throw DomainError("*-transform needs k >= 2");
  std::size_t tval = cnt[a0[0] * nb + j0];
  std::vector<std::pair<Point, Point>> nonedges;
  for (Point x : a0)
    for (Point y : b0)
      if (!g.adjacent(x, y)) nonedges.push_back({x, y});
  if (nonedges.empty()) throw DomainError("*-transform needs non-edges between adjacent blocks");
  const auto aug = block_augmented(t.group, p);
  const auto h = stabilizer(aug, {static_cast<Point>(n), static_cast<Point>(n + j0)});
  const auto orb = pair_orbit(h, nonedges[0].first, nonedges[0].second);
  std::size_t inside = 0;
  for (auto [x, y] : nonedges) inside += orb.contains(x, y);
  if (inside != nonedges.size() || orb.pairs.size() != nonedges.size())
    throw DomainError("non-edges between adjacent blocks do not form a single orbit");

  Graph s(n);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = i + 1; j < nb; ++j) {
      const auto a = xset(j, i), b = xset(i, j);
      for (Point x : a)
        for (Point y : b)
          if (!g.adjacent(x, y)) s.add_edge(x, y);
    }
  Provenance prov{"star:" + t.provenance.tag, star_partner(t.provenance.declared_case, t.provenance.tag)};
  // The partner case must sit on the same side of the t = 1 boundary as t*.
  if (!prov.declared_case.empty() && (prov.declared_case.rfind("1.1", 0) == 0) != (k - tval == 1))
    prov.declared_case.clear();
  Triple r{std::move(s), t.group, t.partition, std::move(prov)};
  const auto sh = cross_shape(r.graph, p, 0, j0);
  if (sh.k != k || sh.t != std::set<std::size_t>{k - tval} ||
      quotient_graph(r.graph, p).graph.edge_count() != quotient_graph(g, p).graph.edge_count())
    throw ValidationError("*-transform parameters differ from t* = k - t, k* = k");
  return r;
}

Triple matching_graph(const PermutationGroup& grp, Provenance prov) {
  const std::size_t m = grp.degree();
  if (m < 3 || transitivity_degree(grp) < 3) throw DomainError("matching graph needs a 3-transitive group");
  const std::size_t n = m * (m - 1);
  Graph gr(n);
  for (Point i = 0; i < m; ++i)
    for (Point j = i + 1; j < m; ++j) gr.add_edge(pair_index(i, j, m), pair_index(j, i, m));
  return Triple{std::move(gr), pair_action(grp), Partition::consecutive(n, m - 1), std::move(prov)};
}

Triple matching_graph(const GroupTag& tag) {
  return matching_graph(catalog_group(tag), Provenance{"match:group=" + tag.to_string(), "1.1(b)(i)"});
}

}  // namespace symquot
