#include "symquot/report.hpp"

#include <algorithm>
#include <sstream>

namespace symquot {

Json to_json(const HypothesisReport& h) {
  return Json{{"g_symmetric", h.g_symmetric},
              {"block_system", h.block_system},
              {"no_intra_block_edges", h.no_intra_block_edges},
              {"complete_quotient", h.complete_quotient},
              {"two_transitive_on_block", h.two_transitive_on_block}};
}

Json to_json(const TripleParams& p) {
  Json j{{"v", p.v}, {"b", p.b}, {"r", p.r}, {"k", p.k}, {"t", p.t}, {"m", p.m}, {"s", p.s}};
  j["lambda"] = p.lambda ? Json(*p.lambda) : Json(nullptr);
  j["rho"] = p.rho;
  return j;
}

Json to_json(const ClassificationVerdict& v) {
  Json j{{"schema", kSchema}, {"tag", v.tag}, {"hypotheses", to_json(v.hypotheses)}};
  j["params"] = v.params ? to_json(*v.params) : Json(nullptr);
  if (!v.params_error.empty()) j["params_error"] = v.params_error;
  j["corollary_case"] = to_string(v.corollary_case);
  j["theorem_case"] = v.theorem_case;
  j["matching_cases"] = v.matching_cases;
  j["structure"] = v.structure.to_string();
  return j;
}

Json to_json(const IncidenceStructure& d) { return Json{{"v", d.points()}, {"blocks", d.blocks()}}; }

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, w] : g.edges()) edges.push_back({u, w});
  return Json{{"vertices", g.order()}, {"edges", std::move(edges)}};
}

Json summary_json(const Triple& t) {
  return Json{{"schema", kSchema},
              {"tag", t.provenance.tag},
              {"declared_case", t.provenance.declared_case},
              {"vertices", t.graph.order()},
              {"edges", t.graph.edge_count()},
              {"group_degree", t.group.degree()},
              {"group_order", t.group.order()},
              {"blocks", t.partition.block_count()},
              {"block_size", t.partition.uniform_size()},
              {"structure", recognize_structure(t.graph).to_string()}};
}

Json census_json(const std::vector<CensusRow>& rows) {
  Json arr = Json::array();
  std::size_t unmatched = 0, mismatched = 0;
  for (const auto& r : rows) {
    Json v = to_json(r.verdict);
    v.erase("schema");
    arr.push_back(Json{{"tag", r.tag}, {"declared_case", r.declared_case}, {"ok", r.ok()}, {"verdict", std::move(v)}});
    unmatched += r.verdict.theorem_case == "Unmatched";
    mismatched += !r.ok();
  }
  return Json{{"schema", kSchema},
              {"rows", rows.size()},
              {"unmatched", unmatched},
              {"mismatched", mismatched},
              {"results", std::move(arr)}};
}

std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    os << line << '\n';
  }
  return os.str();
}

std::string summary_text(const Triple& t) {
  return table({{"tag", t.provenance.tag},
                {"declared_case", t.provenance.declared_case.empty() ? "-" : t.provenance.declared_case},
                {"vertices", std::to_string(t.graph.order())},
                {"edges", std::to_string(t.graph.edge_count())},
                {"group_order", std::to_string(t.group.order())},
                {"blocks", std::to_string(t.partition.block_count())},
                {"block_size", std::to_string(t.partition.uniform_size())},
                {"structure", recognize_structure(t.graph).to_string()}});
}

std::string params_text(const TripleParams& p) {
  auto S = [](std::size_t x) { return std::to_string(x); };
  return table({{"v", "b", "r", "k", "t", "m", "s", "lambda", "rho"},
                {S(p.v), S(p.b), S(p.r), S(p.k), S(p.t), S(p.m), S(p.s), p.lambda ? S(*p.lambda) : "-", S(p.rho)}});
}

std::string verdict_text(const ClassificationVerdict& v) {
  auto B = [](bool b) { return std::string(b ? "pass" : "fail"); };
  const auto& h = v.hypotheses;
  std::string cases;
  for (const auto& c : v.matching_cases) cases += (cases.empty() ? "" : " ") + c;
  std::string out = table({{"tag", v.tag},
                           {"g_symmetric", B(h.g_symmetric)},
                           {"block_system", B(h.block_system)},
                           {"no_intra_block_edges", B(h.no_intra_block_edges)},
                           {"complete_quotient", B(h.complete_quotient)},
                           {"two_transitive_on_block", B(h.two_transitive_on_block)},
                           {"corollary_case", to_string(v.corollary_case)},
                           {"theorem_case", v.theorem_case.empty() ? "-" : v.theorem_case},
                           {"matching_cases", cases.empty() ? "-" : cases},
                           {"structure", v.structure.to_string()}});
  if (v.params) out += "\n" + params_text(*v.params);
  if (!v.params_error.empty()) out += "params_error  " + v.params_error + "\n";
  return out;
}

std::string census_text(const std::vector<CensusRow>& rows) {
  std::vector<std::vector<std::string>> t{{"tag", "declared", "theorem_case", "v", "k", "t", "structure", "ok"}};
  std::size_t unmatched = 0, bad = 0;
  for (const auto& r : rows) {
    const auto& p = r.verdict.params;
    auto S = [&](std::size_t TripleParams::*f) { return p ? std::to_string((*p).*f) : std::string("-"); };
    t.push_back({r.tag, r.declared_case.empty() ? "-" : r.declared_case,
                 r.verdict.theorem_case.empty() ? "-" : r.verdict.theorem_case, S(&TripleParams::v),
                 S(&TripleParams::k), S(&TripleParams::t), r.verdict.structure.to_string(), r.ok() ? "yes" : "NO"});
    unmatched += r.verdict.theorem_case == "Unmatched";
    bad += !r.ok();
  }
  if (rows.empty()) return table(t) + "0 rows\n";
  return table(t) + std::to_string(rows.size()) + " rows, " + std::to_string(unmatched) + " unmatched, " +
         std::to_string(bad) + " disagreeing with the declared case\n";
}

}  // namespace symquot
