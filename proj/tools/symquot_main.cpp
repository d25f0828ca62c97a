// symquot command-line front end.
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "symquot/acceptance.hpp"
#include "symquot/errors.hpp"
#include "symquot/report.hpp"
#include "symquot/tags.hpp"

using namespace symquot;

namespace {

enum Exit { kOk = 0, kDomain = 1, kUsage = 2, kSelftest = 3 };

Json export_json(const Triple& t) {
  Json gens = Json::array();
  for (const auto& g : t.group.generators()) gens.push_back(g.images());
  return Json{{"schema", kSchema},
              {"tag", t.provenance.tag},
              {"graph", graph_json(t.graph)},
              {"partition", t.partition.blocks()},
              {"group", Json{{"degree", t.group.degree()}, {"order", t.group.order()}, {"generators", gens}}}};
}

int write_out(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << path << "\n";
    return kDomain;
  }
  f << text;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric graphs with complete quotients: construct, classify, export, self-test"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON instead of aligned tables");

  std::string tag;
  auto* construct = app.add_subcommand("construct", "Build a triple and summarize it");
  construct->add_option("tag", tag, "Construction tag")->required();
  auto* params = app.add_subcommand("params", "Print (v,b,r,k,t,m,s,lambda,rho)");
  params->add_option("tag", tag, "Construction tag")->required();
  bool as_table = false;
  auto* classify = app.add_subcommand("classify", "Full classification verdict (JSON unless --table)");
  classify->add_option("tag", tag, "Construction tag")->required();
  classify->add_flag("--table", as_table, "Aligned table instead of JSON");

  std::uint32_t max_q = 9, max_d = 3;
  unsigned threads = 0;
  auto* cen = app.add_subcommand("census", "Classify every in-range instance of every family");
  cen->add_option("--max-q", max_q, "Largest field order (<= 16)")->capture_default_str();
  cen->add_option("--max-d", max_d, "Largest affine dimension (<= 4)")->capture_default_str();
  cen->add_option("--threads", threads, "Worker threads (0 = automatic); output order is fixed");

  std::string format = "graph6", out_path;
  auto* exp = app.add_subcommand("export", "Write the graph as graph6, DIMACS or JSON");
  exp->add_option("--format", format, "graph6 | dimacs | json")
      ->check(CLI::IsMember({"graph6", "dimacs", "json"}))
      ->capture_default_str();
  exp->add_option("-o,--output", out_path, "Output file (default: standard output)");
  exp->add_option("tag", tag, "Construction tag")->required();

  int criterion = 0;
  auto* self = app.add_subcommand("selftest", "Run the acceptance criteria; exit 3 on any failure");
  self->add_option("--criterion", criterion, "Run only this criterion (1-9)")->check(CLI::Range(1, kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << "run 'symquot --help' for usage\n";
    return kUsage;
  }

  try {
    if (*self) {
      bool ok = true;
      auto print = [&](const CriterionResult& r) {
        std::cout << format_result(r) << std::endl;
        ok = ok && r.passed;
      };
      if (criterion) print(run_criterion(criterion));
      else run_acceptance(print);
      std::cout << (ok ? "selftest passed" : "selftest FAILED") << "\n";
      return ok ? kOk : kSelftest;
    }
    if (*cen) {
      const auto rows = census(max_q, max_d, threads);
      std::cout << (json ? census_json(rows).dump(2) + "\n" : census_text(rows));
      for (const auto& r : rows)
        if (!r.ok()) return kSelftest;
      return kOk;
    }

    const auto request = parse_tag(tag);
    const auto triple = build(request);
    if (*construct) {
      std::cout << (json ? summary_json(triple).dump(2) + "\n" : summary_text(triple));
    } else if (*params) {
      const auto p = compute_params(triple);
      if (json) {
        Json j{{"schema", kSchema}, {"tag", triple.provenance.tag}};
        j["params"] = to_json(p);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << params_text(p);
      }
    } else if (*classify) {
      const auto v = classify_triple(triple);
      std::cout << (as_table ? verdict_text(v) : to_json(v).dump(2) + "\n");
    } else if (*exp) {
      std::string text;
      if (format == "graph6") text = to_graph6(triple.graph) + "\n";
      else if (format == "dimacs") text = to_dimacs(triple.graph);
      else text = export_json(triple).dump() + "\n";
      return write_out(text, out_path);
    }
    return kOk;
  } catch (const TagParseError& e) {
    std::cerr << "usage error: bad tag '" << tag << "': " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kDomain;
  }
}
