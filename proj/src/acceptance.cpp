#include "symquot/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>

#include "symquot/classify.hpp"
#include "symquot/errors.hpp"
#include "symquot/tags.hpp"

namespace symquot {

namespace {

// Records the first failed expectation.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  std::string detail(const std::string& summary) const {
    return ok() ? summary + " (" + std::to_string(count_) + " checks)" : failure_;
  }

 private:
  std::string failure_;
  std::size_t count_ = 0;
};

Triple make(const std::string& tag) { return build(parse_tag(tag)); }

std::string S(std::size_t x) { return std::to_string(x); }

const std::vector<std::uint32_t> kLawFields{3, 4, 5, 7, 8, 9, 11, 13, 16};

std::vector<std::string> cr_law_tags() {
  std::vector<std::string> out;
  for (auto q : kLawFields) {
    const auto f = FiniteField::of_order(q);
    for (std::uint32_t d = 2; d < q; ++d)
      for (auto s : divisors(subfield_degree(f.element(d))))
        out.push_back("cr:q=" + S(q) + ":d=" + S(d) + ":s=" + S(s));
  }
  return out;
}

// TCR(q; d, 2) candidates with s(d) = sd, split by whether d - 1 is a square.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> tcr_candidates(std::uint32_t q, std::uint32_t sd) {
  const auto f = FiniteField::of_order(q);
  std::vector<std::uint32_t> square, nonsquare;
  for (std::uint32_t d = 2; d < q; ++d) {
    const auto e = f.element(d);
    if (subfield_degree(e) != sd) continue;
    (square_class(e - f.one()) == SquareClass::NonSquare ? nonsquare : square).push_back(d);
  }
  return {square, nonsquare};
}

std::string tcr_tag(std::uint32_t q, std::uint32_t d) { return "tcr:q=" + S(q) + ":d=" + S(d) + ":s=2"; }

StructureTag shape_of(const std::string& tag) { return recognize_structure(make(tag).graph); }

std::string ag_flag(std::uint32_t d, const std::string& rule) {
  return "flag:design=ag:d=" + S(d) + ":group=agl:d=" + S(d) + ":rule=" + rule;
}

// ---------------------------------------------------------------- criteria

std::string c1(Check& c) {
  const auto a = shape_of("cr:q=3:d=2:s=1"), b = shape_of("cr:q=5:d=4:s=1");
  c.expect(a == StructureTag::cycles(3, 4), "CR(3;2,1) is " + a.to_string());
  c.expect(b == StructureTag::multipartite(5, 3, 2), "CR(5;4,1) is " + b.to_string());
  return "CR(3;2,1) = " + a.to_string() + ", CR(5;4,1) = " + b.to_string();
}

std::string c2(Check& c) {
  std::size_t n = 0;
  for (const auto& tag : cr_law_tags()) {
    const auto r = parse_tag(tag);
    const auto t = build(r);
    const auto p = compute_params(t);
    const auto f = FiniteField::of_order(r.q);
    const std::size_t want_t = subfield_degree(f.element(r.d)) / r.s;
    c.expect(p.v == r.q && p.b == r.q && p.k == r.q - 1 && p.t == want_t,
             tag + ": (v,b,k,t) = (" + S(p.v) + "," + S(p.b) + "," + S(p.k) + "," + S(p.t) + ")");
    const auto quo = quotient_graph(t.graph, t.partition).graph;
    c.expect(quo == complete_graph(r.q + 1), tag + ": quotient is not K_{q+1}");
    ++n;
  }
  return S(n) + " cross-ratio graphs";
}

std::string c3(Check& c) {
  const auto [sq9, nsq9] = tcr_candidates(9, 2);
  c.expect(!sq9.empty() && !nsq9.empty(), "GF(9) lacks d of both square classes");
  for (auto d : nsq9) {
    bool raised = false;
    try {
      make(tcr_tag(9, d));
    } catch (const NotSelfPairedError&) {
      raised = true;
    }
    c.expect(raised, tcr_tag(9, d) + ": no not-self-paired error");
  }
  for (auto d : sq9) {
    const auto p = compute_params(make(tcr_tag(9, d)));
    c.expect(p.k == 8 && p.t == 1, tcr_tag(9, d) + ": k=" + S(p.k) + " t=" + S(p.t));
  }
  const auto sq81 = tcr_candidates(81, 4).first;
  c.expect(!sq81.empty(), "GF(81) lacks d with s(d)=4 and d-1 square");
  if (sq81.empty()) return "";
  const auto t = make(tcr_tag(81, sq81[0]));
  const auto p = compute_params(t);
  c.expect(t.graph.order() == 6642 && p.t == 2 && p.k == 80,
           tcr_tag(81, sq81[0]) + ": n=" + S(t.graph.order()) + " t=" + S(p.t));
  return S(nsq9.size()) + " rejected, " + S(sq9.size()) + " built at q=9; " + tcr_tag(81, sq81[0]) + " has t=2";
}

bool connected(const Graph& g) { return connected_components(g).size() == 1; }

std::string c4(Check& c) {
  const auto e3 = make("pair:group=agl:d=3:rule=affine_plane");
  const auto p3 = compute_params(e3);
  c.expect(p3.v == 7 && p3.b == 7 && p3.r == 6 && p3.k == 6 && p3.t == 1, "agl3 affine_plane parameters");
  c.expect(recognize_structure(e3.graph) == StructureTag::multipartite(7, 4, 2), "agl3 affine_plane is not 7.K_{4;2}");
  const auto e4 = make("pair:group=s5:rule=all_distinct");
  const auto p4 = compute_params(e4);
  c.expect(p4.v == 4 && p4.b == 4 && p4.r == 3 && p4.k == 3 && p4.t == 2 && p4.s == 6, "s5 all_distinct parameters");
  c.expect(connected(e4.graph), "s5 all_distinct graph is disconnected");
  c.expect(quotient_graph(e4.graph, e4.partition).graph == complete_graph(5), "s5 all_distinct quotient is not K5");
  c.expect(recognize_structure(star_transform(e4).graph) == StructureTag::complete(5, 4), "s5 all_distinct star is not 5.K4");
  const auto e5 = make(ag_flag(3, "common_two_points"));
  const auto p5 = compute_params(e5);
  c.expect(p5.v == 7 && p5.k == 3 && p5.t == 2, "AG(3) common_two_points parameters");
  c.expect(quotient_graph(e5.graph, e5.partition).graph == complete_graph(8), "AG(3) common_two_points quotient is not K8");
  c.expect(recognize_structure(star_transform(e5).graph) == StructureTag::complete(14, 4),
           "AG(3) common_two_points star is not 14.K4");
  return "agl3 affine_plane, s5 all_distinct, AG(3) common_two_points and their star transforms";
}

std::string c5(Check& c) {
  for (std::uint32_t d : {3u, 4u}) {
    const std::size_t h = std::size_t(1) << (d - 1), v = std::size_t(1) << d;
    const auto a = shape_of(ag_flag(d, "same_block")), b = shape_of(ag_flag(d, "disjoint_blocks"));
    c.expect(a == StructureTag::complete(2 * v - 2, h), "AG d=" + S(d) + " same_block is " + a.to_string());
    c.expect(b == StructureTag::bipartite(v - 1, h), "AG d=" + S(d) + " disjoint_blocks is " + b.to_string());
  }
  const auto m22 = shape_of("flag:design=s22:group=m22:rule=same_block");
  const auto m11 = shape_of("flag:design=h12:group=m11:rule=same_block");
  const auto m11d = shape_of("flag:design=h12:group=m11:rule=disjoint_blocks");
  c.expect(m22 == StructureTag::complete(77, 6), "M22 same_block is " + m22.to_string());
  c.expect(m11 == StructureTag::complete(22, 6), "M11 same_block is " + m11.to_string());
  c.expect(m11d == StructureTag::bipartite(11, 6), "M11 disjoint_blocks is " + m11d.to_string());
  return "M22: " + m22.to_string() + ", M11: " + m11.to_string() + ", " + m11d.to_string();
}

std::string lengths(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + S(v[i]);
  return s + "}";
}

std::string c6(Check& c) {
  const std::vector<std::pair<std::string, DesignSpec>> cases{
      {ag_flag(3, "same_block"), {DesignSpec::Kind::AGHyperplanes, 3}},
      {ag_flag(4, "same_block"), {DesignSpec::Kind::AGHyperplanes, 4}},
      {"flag:design=s22:group=m22:rule=same_block", {DesignSpec::Kind::Steiner22, 0}},
      {"flag:design=h12:group=m11:rule=same_block", {DesignSpec::Kind::Hadamard12, 0}}};
  std::string summary;
  for (const auto& [tag, ds] : cases) {
    const auto rep = orbit_length_check(make(tag), ds.build());
    c.expect(rep.ok, tag + ": incident " + lengths(rep.incident) + " non-incident " + lengths(rep.non_incident));
    summary += (summary.empty() ? "" : "; ") + ds.to_string() + " " + lengths(rep.incident) + " " +
               lengths(rep.non_incident);
  }
  return summary;
}

std::string c7(Check& c) {
  std::vector<std::pair<std::string, std::size_t>> want{
      {"pair:group=m22:design=s22:rule=design_out", 16}, {"pair:group=m22:design=s22:rule=design_in", 3},
      {"pair:group=m11:design=h12:rule=design_out", 3},  {"pair:group=m11:design=h12:rule=design_in", 6},
      {"flag:design=s22:group=m22:rule=m22_disjoint", 6}, {"flag:design=s22:group=m22:rule=m22_meet_two", 10},
      {ag_flag(3, "common_two_points"), 2},               {ag_flag(4, "common_two_points"), 6}};
  for (const auto& [tag, t] : want) {
    const auto p = compute_params(make(tag));
    c.expect(p.t == t, tag + ": t=" + S(p.t) + ", expected " + S(t));
  }
  return S(want.size()) + " t-values";
}

std::string c8(Check& c) {
  std::size_t n = 0;
  for (const auto& tag : acceptance_fixture_tags()) {
    const auto t = make(tag);
    if (t.provenance.declared_case.empty()) continue;
    const auto v = classify_triple(t);
    c.expect(v.theorem_case == t.provenance.declared_case,
             tag + ": classified " + v.theorem_case + ", declared " + t.provenance.declared_case);
    ++n;
  }
  const auto rows = census(9, 3);
  std::size_t unmatched = 0, bad = 0;
  for (const auto& r : rows) {
    unmatched += r.verdict.theorem_case == "Unmatched";
    if (!r.ok()) {
      ++bad;
      c.expect(false, "census " + r.tag + ": " + r.verdict.theorem_case);
    }
  }
  c.expect(unmatched == 0, "census(9,3) has " + S(unmatched) + " unmatched rows");
  return S(n) + " fixtures; census(9,3): " + S(rows.size()) + " rows, " + S(unmatched) + " unmatched";
}

std::string c9(Check& c) {
  // (a) and (b) over every fixture.
  std::size_t stars = 0;
  for (const auto& tag : acceptance_fixture_tags()) {
    const auto t = make(tag);
    const auto p = compute_params(t);
    c.expect(p.v * p.s == p.b * p.m && p.v * p.r == p.b * p.k, tag + ": vs = bm or vr = bk fails");
    Triple st;
    try {
      st = star_transform(t);
    } catch (const DomainError&) {
      continue;
    }
    ++stars;
    c.expect(star_transform(st).graph == t.graph, tag + ": (G*)* differs from G");
  }
  // (c) catalog validation.
  std::vector<GroupTag> tags;
  for (std::uint32_t n = 3; n <= 10; ++n) tags.push_back({GroupFamily::Sym, n});
  for (std::uint32_t n = 4; n <= 10; ++n) tags.push_back({GroupFamily::Alt, n});
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 81u}) {
    for (const auto& g : three_transitive_pgammal_list(q)) tags.push_back(g.tag);
    GroupTag p{GroupFamily::PSL2};
    p.q = q;
    tags.push_back(p);
  }
  for (auto [q, sv] : {std::pair{9u, 1u}, {25u, 1u}, {81u, 1u}, {81u, 2u}}) {
    GroupTag m{GroupFamily::MGroup};
    m.q = q;
    m.s = sv;
    tags.push_back(m);
  }
  for (std::uint32_t d = 2; d <= 4; ++d) {
    GroupTag a{GroupFamily::AGL};
    a.d = d;
    tags.push_back(a);
  }
  for (auto fam : {GroupFamily::Z24A7, GroupFamily::M11on12, GroupFamily::M11on11, GroupFamily::M12,
                   GroupFamily::M22, GroupFamily::AutM22, GroupFamily::M23, GroupFamily::M24})
    tags.push_back({fam});
  for (const auto& tag : tags) {
    try {
      const auto& g = catalog_group(tag);
      const auto [order, trans] = declared_invariants(tag);
      c.expect(g.order() == order && transitivity_degree(g) == trans, tag.to_string() + ": invariants differ");
    } catch (const std::exception& e) {
      c.expect(false, tag.to_string() + ": " + e.what());
    }
  }
  const std::map<std::string, std::uint64_t> pinned{
      {"m22", 443520}, {"m11", 7920}, {"agl:d=4", 322560}, {"z24a7", 40320}};
  for (const auto& tag : tags)
    if (auto it = pinned.find(tag.to_string()); it != pinned.end())
      c.expect(catalog_group(tag).order() == it->second, tag.to_string() + ": order " + S(catalog_group(tag).order()));
  // (d) design counts.
  const auto w = steiner_3_22_6();
  const auto wp = design_params(w, 3);
  c.expect(w.block_count() == 77 && wp.max_t >= 3 && wp.lambda[2] == 1, "3-(22,6,1) parameters");
  auto meet = [](const std::vector<Point>& a, const std::vector<Point>& b) {
    std::size_t n = 0;
    for (Point x : a) n += std::binary_search(b.begin(), b.end(), x);
    return n;
  };
  const auto& beta = w.block(0);
  const Point p = beta[0];
  Point p2 = 0;
  while (std::binary_search(beta.begin(), beta.end(), p2)) ++p2;
  std::size_t two = 0, through_both = 0, via_p2 = 0, disjoint_p2 = 0;
  for (const auto& b : w.blocks()) {
    const bool hp = std::binary_search(b.begin(), b.end(), p), hp2 = std::binary_search(b.begin(), b.end(), p2);
    const auto k = meet(b, beta);
    two += k == 2;
    through_both += hp && hp2 && k == 2;
    via_p2 += hp2 && !hp && k == 2;
    disjoint_p2 += hp2 && k == 0;
  }
  c.expect(two == 60 && through_both == 5 && via_p2 == 10 && disjoint_p2 == 6,
           "Witt design counts " + S(two) + "/" + S(through_both) + "/" + S(via_p2) + "/" + S(disjoint_p2));
  const auto h = design_3_12_6_2();
  const auto hp = design_params(h, 3);
  const auto hc = complement_design(h);
  bool closed = true;
  for (const auto& b : hc.blocks()) closed = closed && h.find_block(b).has_value();
  c.expect(h.block_count() == 22 && closed && hp.max_t >= 3 && hp.lambda[2] == 2, "3-(12,6,2) parameters");
  return S(stars) + " star involutions, " + S(tags.size()) + " catalog groups, Witt counts 60/5/10/6";
}

struct CriterionDef {
  const char* name;
  double limit;
  std::string (*run)(Check&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"Cross-ratio identities", 1, c1},      {"Parameter law", 60, c2},
    {"TCR gate", 300, c3},                  {"Worked examples", 5, c4},
    {"Flag-graph shapes", 120, c5},         {"Orbit-length tables", 120, c6},
    {"t >= 2 constructions", 180, c7},      {"Closed-loop classification", 600, c8},
    {"Property suites", 300, c9},
};

}  // namespace

std::vector<std::string> acceptance_fixture_tags() {
  std::vector<std::string> out{"cr:q=3:d=2:s=1", "cr:q=5:d=4:s=1"};
  for (auto& t : cr_law_tags()) out.push_back(t);
  for (auto d : tcr_candidates(9, 2).first) out.push_back(tcr_tag(9, d));
  const auto sq81 = tcr_candidates(81, 4).first;
  if (!sq81.empty()) out.push_back(tcr_tag(81, sq81[0]));
  for (const char* t :
       {"pair:group=agl:d=3:rule=affine_plane", "pair:group=s5:rule=all_distinct",
        "star:pair:group=s5:rule=all_distinct", "flag:design=s22:group=m22:rule=same_block",
        "flag:design=h12:group=m11:rule=same_block", "flag:design=h12:group=m11:rule=disjoint_blocks",
        "pair:group=m22:design=s22:rule=design_out", "pair:group=m22:design=s22:rule=design_in",
        "pair:group=m11:design=h12:rule=design_out", "pair:group=m11:design=h12:rule=design_in",
        "flag:design=s22:group=m22:rule=m22_disjoint", "flag:design=s22:group=m22:rule=m22_meet_two"})
    out.push_back(t);
  for (std::uint32_t d : {3u, 4u})
    for (const char* r : {"same_block", "disjoint_blocks", "common_two_points"}) out.push_back(ag_flag(d, r));
  out.push_back("star:" + ag_flag(3, "common_two_points"));
  return out;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw DomainError("criterion id out of range");
  const auto& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = def.name;
  r.limit_seconds = def.limit;
  Check c;
  const auto start = std::chrono::steady_clock::now();
  std::string summary;
  try {
    summary = def.run(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = c.ok() && r.seconds < r.limit_seconds;
  r.detail = c.detail(summary);
  if (c.ok() && !r.passed) r.detail = "time limit exceeded: " + r.detail;
  return r;
}

std::vector<CriterionResult> run_acceptance(const std::function<void(const CriterionResult&)>& each) {
  std::vector<CriterionResult> out;
  for (int i = 1; i <= kCriterionCount; ++i) {
    out.push_back(run_criterion(i));
    if (each) each(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s [%d] %s (%.2f s / %.0f s): ", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.seconds, r.limit_seconds);
  return head + r.detail;
}

}  // namespace symquot
