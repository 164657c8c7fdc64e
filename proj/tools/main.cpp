#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "localds/config.hpp"
#include "localds/exact.hpp"
#include "localds/generators.hpp"
#include "localds/graph.hpp"
#include "localds/graph_io.hpp"
#include "localds/report.hpp"

using namespace localds;

namespace {

using nlohmann::ordered_json;

struct SpecFlags {
  std::string family;
  int size = 1;
  std::uint64_t seed = 0;
  int minor_t = 3;
  int base_size = 8;
  int pieces = 2;

  GeneratorSpec to_spec() const {
    GeneratorSpec spec;
    spec.family = family_from_name(family);
    spec.size = size;
    spec.seed = seed;
    spec.minor_t = minor_t;
    spec.base_size = base_size;
    spec.pieces = pieces;
    return spec;
  }
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags, bool positional) {
  if (positional) {
    cmd->add_option("family", flags.family, "instance family")->required();
    cmd->add_option("size", flags.size, "family size parameter")->required();
  } else {
    cmd->add_option("--family", flags.family, "instance family");
    cmd->add_option("--size", flags.size, "family size parameter");
  }
  cmd->add_option("--seed", flags.seed, "generator seed");
  cmd->add_option("--minor-t", flags.minor_t, "class parameter for filtered random instances");
  cmd->add_option("--base-size", flags.base_size, "host size for augmentations");
  cmd->add_option("--pieces", flags.pieces, "attachment count for augmentations");
}

std::string default_basename(const SpecFlags& flags) {
  std::string name = flags.family + std::to_string(flags.size);
  if (flags.seed != 0) name += "_s" + std::to_string(flags.seed);
  return name;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int cmd_gen(const SpecFlags& flags, std::string out_path, bool certify) {
  const GeneratorSpec spec = flags.to_spec();
  const Graph g = generate(spec);
  if (out_path.empty()) out_path = default_basename(flags) + ".txt";
  write_edge_list_file(out_path, g);

  const std::optional<int> t = certify ? try_certify(g) : std::nullopt;
  std::filesystem::path sidecar(out_path);
  sidecar.replace_extension(".json");
  std::ofstream(sidecar) << sidecar_json(spec, g, t);

  std::cout << "wrote " << out_path << " and " << sidecar.string() << " (n=" << g.vertex_count()
            << ", m=" << g.edge_count();
  if (t) std::cout << ", certified_t=" << *t;
  std::cout << ")\n";
  return 0;
}

int cmd_run(const ExperimentPlan& plan, const std::string& out_path, bool with_timestamp) {
  const std::vector<ReportRow> rows = run_plan(plan);
  if (out_path.empty()) {
    write_report(std::cout, rows, with_timestamp);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    write_report(out, rows, with_timestamp);
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
  }
  return 0;
}

int cmd_exact(const Graph& g, const std::string& problem, int cap) {
  const VertexSet best = problem == "mvc" ? mvc_exact(g, cap) : mds_exact(g, cap);
  ordered_json j;
  j["problem"] = problem;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["size"] = best.size();
  j["vertices"] = best.ids();
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_verify(const std::string& dir) {
  const VerifyOutcome outcome = verify_corpus(dir);
  for (const std::string& note : outcome.notes) std::cout << "warning: " << note << "\n";
  for (const std::string& failure : outcome.failures) std::cout << "FAIL: " << failure << "\n";
  std::cout << "checked " << outcome.files << " instance(s), " << outcome.checks << " check(s), "
            << outcome.failures.size() << " failure(s)\n";
  return outcome.ok() ? 0 : 1;
}

int cmd_report(const std::string& in_path) {
  std::ifstream in(in_path);
  if (!in) throw std::runtime_error("cannot read " + in_path);
  const ReportSummary s = summarize(read_report(in));
  ordered_json j;
  j["rows"] = s.rows;
  j["valid"] = s.valid_rows;
  j["fallback"] = s.fallback_rows;
  j["guarantee_voided"] = s.guarantee_voided;
  ordered_json ratios = ordered_json::object();
  for (const auto& [family, value] : s.max_ratio_by_family) ratios[family] = value;
  j["max_ratio"] = ratios;
  std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dominating-set and vertex-cover experiments on cut-sparse graphs"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "generate an instance and its sidecar");
  SpecFlags gen_flags;
  std::string gen_out;
  bool gen_certify = false;
  add_spec_flags(gen, gen_flags, true);
  gen->add_option("--out", gen_out, "edge-list path (default <family><size>.txt)");
  gen->add_flag("--certify", gen_certify, "record the certified class parameter");

  CLI::App* run = app.add_subcommand("run", "run algorithms and emit a JSON-lines report");
  SpecFlags run_flags;
  std::string plan_path;
  std::vector<std::string> run_algos;
  AlgorithmConfig run_cfg;
  int run_exact_cap = kDefaultExactCap;
  bool run_no_exact = false;
  bool run_certify = false;
  bool run_no_timestamp = false;
  std::string run_out;
  run->add_option("--plan", plan_path, "experiment plan (json)");
  add_spec_flags(run, run_flags, false);
  run->add_option("--algo", run_algos, "algorithm to run (repeatable)")
      ->check(CLI::IsMember(algorithm_names()));
  run->add_option("--r1", run_cfg.r1, "radius for the 1-cut stage");
  run->add_option("--r2", run_cfg.r2, "radius for the interesting stage");
  run->add_option("--diam-cap", run_cfg.diam_cap, "weak-diameter cap before fallback");
  run->add_option("--exact-cap", run_exact_cap, "largest instance solved exactly");
  run->add_flag("--no-exact", run_no_exact, "skip the exact comparison column");
  run->add_flag("--certify", run_certify, "attach the certified class parameter");
  run->add_flag("--no-timestamp", run_no_timestamp, "omit the timestamp header line");
  run->add_option("--out", run_out, "report path (default stdout)");

  CLI::App* exact = app.add_subcommand("exact", "solve one instance exactly");
  SpecFlags exact_flags;
  std::string exact_in;
  std::string exact_problem = "mds";
  int exact_cap = kDefaultExactCap;
  exact->add_option("--in", exact_in, "edge-list file to solve");
  add_spec_flags(exact, exact_flags, false);
  exact->add_option("--problem", exact_problem, "mds or mvc")
      ->check(CLI::IsMember({"mds", "mvc"}));
  exact->add_option("--exact-cap", exact_cap, "largest instance the solver accepts");

  CLI::App* verify = app.add_subcommand("verify", "re-check invariants over a corpus directory");
  std::string verify_dir;
  verify->add_option("dir", verify_dir, "directory of edge-list instances")->required();

  CLI::App* report = app.add_subcommand("report", "summarize an existing JSON-lines report");
  std::string report_in;
  report->add_option("--in", report_in, "report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_flags, gen_out, gen_certify);

    if (run->parsed()) {
      ExperimentPlan plan;
      if (!plan_path.empty()) {
        plan = plan_from_json(read_text_file(plan_path));
      } else {
        if (run->count("--family") == 0) {
          throw CLI::RequiredError("--plan or --family/--size");
        }
        if (run_algos.empty()) run_algos.push_back("algo1_mds");
        for (const std::string& algo : run_algos) {
          PlanItem item;
          item.spec = run_flags.to_spec();
          item.algorithm = algo;
          item.cfg = run_cfg;
          plan.items.push_back(std::move(item));
        }
      }
      if (run->count("--exact-cap")) plan.exact_cap = run_exact_cap;
      if (run_no_exact) plan.exact_compare = false;
      if (run_certify) plan.certify = true;
      return cmd_run(plan, run_out, !run_no_timestamp);
    }

    if (exact->parsed()) {
      const Graph g = exact_in.empty() ? generate(exact_flags.to_spec())
                                       : read_edge_list_file(exact_in);
      return cmd_exact(g, exact_problem, exact_cap);
    }

    if (verify->parsed()) return cmd_verify(verify_dir);
    if (report->parsed()) return cmd_report(report_in);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
