#include "localds/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <ctime>
#include <exception>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "localds/cuts.hpp"
#include "localds/graph_io.hpp"
#include "localds/local_sim.hpp"
#include "localds/minor.hpp"

namespace localds {

namespace {

using nlohmann::ordered_json;

VertexSet all_vertices(const Graph& g) {
  std::vector<Vertex> ids(g.vertex_count());
  std::iota(ids.begin(), ids.end(), 0);
  return VertexSet(std::move(ids));
}

ordered_json row_to_json(const ReportRow& row) {
  ordered_json j;
  j["instance"] = row.instance_id;
  j["family"] = row.family;
  j["n"] = row.n;
  j["m"] = row.m;
  j["certified_t"] = row.certified_t ? ordered_json(*row.certified_t) : ordered_json(nullptr);
  j["algorithm"] = row.algorithm;
  j["chosen"] = row.chosen_size;
  j["exact"] = row.exact_size ? ordered_json(*row.exact_size) : ordered_json(nullptr);
  if (row.ratio) {
    j["ratio"] = ordered_json{
        {"num", row.ratio->num}, {"den", row.ratio->den}, {"value", row.ratio->value()}};
  } else {
    j["ratio"] = nullptr;
  }
  j["rounds"] = row.rounds;
  j["fallback"] = row.fallback;
  j["valid"] = row.valid;
  return j;
}

ReportRow row_from_json(const ordered_json& j) {
  ReportRow row;
  row.instance_id = j.at("instance").get<int>();
  row.family = j.at("family").get<std::string>();
  row.n = j.at("n").get<int>();
  row.m = j.at("m").get<int>();
  if (!j.at("certified_t").is_null()) row.certified_t = j.at("certified_t").get<int>();
  row.algorithm = j.at("algorithm").get<std::string>();
  row.chosen_size = j.at("chosen").get<int>();
  if (!j.at("exact").is_null()) row.exact_size = j.at("exact").get<int>();
  if (!j.at("ratio").is_null()) {
    row.ratio = Ratio::of(j.at("ratio").at("num").get<long long>(),
                          j.at("ratio").at("den").get<long long>());
  }
  row.rounds = j.at("rounds").get<int>();
  row.fallback = j.at("fallback").get<bool>();
  row.valid = j.at("valid").get<bool>();
  return row;
}

GeneratorSpec spec_from_json(const ordered_json& j) {
  GeneratorSpec spec;
  spec.family = family_from_name(j.at("family").get<std::string>());
  spec.size = j.value("size", spec.size);
  spec.minor_t = j.value("minor_t", spec.minor_t);
  spec.base_size = j.value("base_size", spec.base_size);
  spec.pieces = j.value("pieces", spec.pieces);
  spec.seed = j.value("seed", spec.seed);
  return spec;
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {
      "algo1_mds",       "algo2_mds",        "algo_3round",  "algo_mvc",
      "algo_mvc_3round", "baseline_degree2", "baseline_all",
  };
  return names;
}

bool is_cover_algorithm(const std::string& name) {
  return name == "algo_mvc" || name == "algo_mvc_3round";
}

void ExperimentPlan::validate() const {
  if (exact_cap < 1) throw std::invalid_argument("plan: exact_cap must be positive");
  const auto& names = algorithm_names();
  for (const PlanItem& item : items) {
    item.cfg.validate();
    if (std::find(names.begin(), names.end(), item.algorithm) == names.end()) {
      throw std::invalid_argument("plan: unknown algorithm \"" + item.algorithm + "\"");
    }
  }
}

ReportRow run_one(const Graph& g, const std::string& algorithm, const AlgorithmConfig& cfg,
                  bool exact_compare, int exact_cap) {
  ReportRow row;
  row.family = "file";
  row.n = g.vertex_count();
  row.m = g.edge_count();
  row.algorithm = algorithm;

  VertexSet chosen;
  if (algorithm == "algo1_mds") {
    RunResult res = algo1_mds(g, cfg);
    chosen = std::move(res.chosen);
    row.rounds = res.rounds.rounds_used;
    row.fallback = res.fallback_used;
  } else if (algorithm == "algo2_mds") {
    // The control surface only exposes the distance cap; radii come from the
    // fixed dimension-1 levels.
    ControlConfig control;
    control.diam_cap = cfg.diam_cap;
    RunResult res = algo2_mds(g, control);
    chosen = std::move(res.chosen);
    row.rounds = res.rounds.rounds_used;
    row.fallback = res.fallback_used;
  } else if (algorithm == "algo_3round") {
    RunResult res = algo_3round(g);
    chosen = std::move(res.chosen);
    row.rounds = res.rounds.rounds_used;
    row.fallback = res.fallback_used;
  } else if (algorithm == "algo_mvc") {
    RunResult res = algo_mvc(g, cfg);
    chosen = std::move(res.chosen);
    row.rounds = res.rounds.rounds_used;
    row.fallback = res.fallback_used;
  } else if (algorithm == "algo_mvc_3round") {
    RunResult res = algo_mvc_3round(g);
    chosen = std::move(res.chosen);
    row.rounds = res.rounds.rounds_used;
    row.fallback = res.fallback_used;
  } else if (algorithm == "baseline_degree2") {
    chosen = baseline_degree2(g);
    row.rounds = 2;
  } else if (algorithm == "baseline_all") {
    chosen = baseline_all(g);
    row.rounds = 0;
  } else {
    throw std::invalid_argument("report: unknown algorithm \"" + algorithm + "\"");
  }

  row.chosen_size = chosen.size();
  row.valid = is_cover_algorithm(algorithm) ? verify_vertex_cover(g, chosen)
                                            : verify_dominating(g, chosen, all_vertices(g));

  if (exact_compare && g.vertex_count() <= exact_cap) {
    try {
      const VertexSet best =
          is_cover_algorithm(algorithm) ? mvc_exact(g, exact_cap) : mds_exact(g, exact_cap);
      row.exact_size = best.size();
      if (best.size() > 0) row.ratio = Ratio::of(row.chosen_size, best.size());
    } catch (const SizeCapExceeded&) {
      // leave the exact column empty
    }
  }
  return row;
}

std::optional<int> try_certify(const Graph& g) {
  if (g.vertex_count() > kDefaultMinorCap) return std::nullopt;
  try {
    return certify_class(g);
  } catch (const SizeCapExceeded&) {
    return std::nullopt;
  }
}

std::vector<ReportRow> run_plan(const ExperimentPlan& plan) {
  plan.validate();
  const int count = static_cast<int>(plan.items.size());
  std::vector<ReportRow> rows(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<int> next{0};

  auto work = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        const PlanItem& item = plan.items[i];
        const Graph g = generate(item.spec);
        ReportRow row = run_one(g, item.algorithm, item.cfg, plan.exact_compare, plan.exact_cap);
        row.instance_id = i;
        row.family = family_name(item.spec.family);
        if (plan.certify) row.certified_t = try_certify(g);
        rows[i] = std::move(row);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const int workers = std::max(1, std::min({static_cast<int>(hw), 8, std::max(count, 1)}));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (std::thread& th : pool) th.join();

  for (int i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
  for (const ReportRow& row : rows) {
    if (!row.valid) {
      throw InvariantViolation("report: " + row.algorithm + " produced an invalid output on instance #" +
                               std::to_string(row.instance_id) + " (" + row.family +
                               ", n=" + std::to_string(row.n) + ")");
    }
  }
  return rows;
}

ReportSummary summarize(const std::vector<ReportRow>& rows) {
  ReportSummary s;
  s.rows = static_cast<int>(rows.size());
  for (const ReportRow& row : rows) {
    if (row.valid) ++s.valid_rows;
    if (row.fallback) {
      ++s.fallback_rows;
      s.guarantee_voided = true;
    }
    if (row.ratio) {
      double& slot = s.max_ratio_by_family[row.family];
      slot = std::max(slot, row.ratio->value());
    }
  }
  return s;
}

void write_report(std::ostream& out, const std::vector<ReportRow>& rows, bool with_timestamp) {
  if (with_timestamp) {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    ordered_json header;
    header["generated_at"] = buf;
    out << header.dump() << '\n';
  }
  for (const ReportRow& row : rows) out << row_to_json(row).dump() << '\n';

  const ReportSummary s = summarize(rows);
  ordered_json body;
  body["rows"] = s.rows;
  body["valid"] = s.valid_rows;
  body["fallback"] = s.fallback_rows;
  body["guarantee_voided"] = s.guarantee_voided;
  ordered_json ratios = ordered_json::object();
  for (const auto& [family, value] : s.max_ratio_by_family) ratios[family] = value;
  body["max_ratio"] = ratios;
  ordered_json summary;
  summary["summary"] = body;
  out << summary.dump() << '\n';
}

std::vector<ReportRow> read_report(std::istream& in) {
  std::vector<ReportRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const ordered_json j = ordered_json::parse(line);
    if (!j.contains("instance")) continue;  // timestamp and summary lines
    rows.push_back(row_from_json(j));
  }
  return rows;
}

ExperimentPlan plan_from_json(const std::string& text) {
  const ordered_json j = ordered_json::parse(text);
  ExperimentPlan plan;
  plan.exact_compare = j.value("exact_compare", true);
  plan.exact_cap = j.value("exact_cap", kDefaultExactCap);
  plan.certify = j.value("certify", false);
  for (const ordered_json& it : j.at("items")) {
    PlanItem item;
    item.spec = spec_from_json(it);
    item.algorithm = it.at("algorithm").get<std::string>();
    item.cfg.r1 = it.value("r1", item.cfg.r1);
    item.cfg.r2 = it.value("r2", item.cfg.r2);
    item.cfg.diam_cap = it.value("diam_cap", item.cfg.diam_cap);
    plan.items.push_back(std::move(item));
  }
  plan.validate();
  return plan;
}

std::string plan_to_json(const ExperimentPlan& plan) {
  ordered_json j;
  j["exact_compare"] = plan.exact_compare;
  j["exact_cap"] = plan.exact_cap;
  j["certify"] = plan.certify;
  ordered_json items = ordered_json::array();
  for (const PlanItem& item : plan.items) {
    ordered_json it;
    it["family"] = family_name(item.spec.family);
    it["size"] = item.spec.size;
    it["minor_t"] = item.spec.minor_t;
    it["base_size"] = item.spec.base_size;
    it["pieces"] = item.spec.pieces;
    it["seed"] = item.spec.seed;
    it["algorithm"] = item.algorithm;
    it["r1"] = item.cfg.r1;
    it["r2"] = item.cfg.r2;
    it["diam_cap"] = item.cfg.diam_cap;
    items.push_back(std::move(it));
  }
  j["items"] = items;
  return j.dump(2);
}

std::string sidecar_json(const GeneratorSpec& spec, const Graph& g, std::optional<int> certified_t) {
  ordered_json j;
  j["family"] = family_name(spec.family);
  j["size"] = spec.size;
  j["minor_t"] = spec.minor_t;
  j["base_size"] = spec.base_size;
  j["pieces"] = spec.pieces;
  j["seed"] = spec.seed;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["certified_t"] = certified_t ? ordered_json(*certified_t) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

namespace {

// One instance's worth of invariant checks; failures are appended, never thrown.
void verify_instance(const Graph& g, const std::string& name, std::optional<int> sidecar_t,
                     VerifyOutcome& out) {
  auto check = [&](bool ok, const std::string& what) {
    ++out.checks;
    if (!ok) out.failures.push_back(name + ": " + what);
  };

  const AlgorithmConfig defaults;
  const RunResult ds = algo1_mds(g, defaults);
  const RunResult d3 = algo_3round(g);
  const RunResult vc = algo_mvc(g, defaults);
  const RunResult v3 = algo_mvc_3round(g);
  const VertexSet everyone = all_vertices(g);

  check(verify_dominating(g, ds.chosen, everyone), "pipeline output is not dominating");
  check(verify_dominating(g, d3.chosen, everyone), "3-round output is not dominating");
  check(verify_vertex_cover(g, vc.chosen), "cover pipeline output is not a vertex cover");
  check(verify_vertex_cover(g, v3.chosen), "3-round cover output is not a vertex cover");
  if (g.vertex_count() > 0) {
    check(ds.rounds.rounds_used == defaults.round_budget(), "pipeline round count is off budget");
    check(d3.rounds.rounds_used == 3, "3-round run did not take 3 rounds");
    check(v3.rounds.rounds_used == 3, "3-round cover run did not take 3 rounds");
  }

  std::optional<int> ds_opt;
  std::optional<int> vc_opt;
  if (g.vertex_count() <= kDefaultExactCap) {
    ds_opt = mds_exact(g).size();
    vc_opt = mvc_exact(g).size();
    check(ds.chosen.size() >= *ds_opt, "pipeline beat the exact optimum");
    check(vc.chosen.size() >= *vc_opt, "cover pipeline beat the exact optimum");
  }

  // the two solver routes must agree exactly
  if (g.vertex_count() <= kDefaultEnumerationCap) {
    check(mds_exact(g) == mds_exact_by_enumeration(g), "domination solvers disagree");
    check(mvc_exact(g) == mvc_exact_by_enumeration(g), "cover solvers disagree");
  }

  // structural bounds on the exact optimum
  if (ds_opt) {
    bool isolated = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (g.degree(v) == 0) isolated = true;
    }
    if (!isolated && g.vertex_count() > 0) {
      check(*ds_opt * 2 <= g.vertex_count(), "domination number exceeds half the vertices");
    }

    std::mt19937 rng(static_cast<unsigned>(g.vertex_count() * 1000003 + g.edge_count()));
    for (int trial = 0; trial < 3 && g.vertex_count() > 0; ++trial) {
      std::vector<Vertex> b1;
      std::vector<Vertex> b2;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (rng() % 2 == 0) b1.push_back(v);
        if (rng() % 2 == 0) b2.push_back(v);
      }
      DominationInstance left{g, VertexSet(b1), everyone};
      DominationInstance right{g, VertexSet(b2), everyone};
      DominationInstance both{g, set_union(left.targets, right.targets), everyone};
      const int split = mds_subset_exact(left).size() + mds_subset_exact(right).size();
      check(mds_subset_exact(both).size() <= split, "union of target sets broke subadditivity");
    }
  }

  // locality of the per-vertex programs: equal views force equal outputs
  const NodeProgram one_cut = one_cut_program(2);
  const NodeProgram interesting = interesting_program(2);
  const int n = g.vertex_count();
  const int stride = std::max(1, n / 6);
  for (Vertex u = 0; u < n; u += stride) {
    for (Vertex w = u + stride; w < n; w += stride) {
      check(verify_locality(one_cut, g, u, g, w), "1-cut program output depends on more than its view");
      check(verify_locality(interesting, g, u, g, w),
            "interesting program output depends on more than its view");
    }
  }

  if (sidecar_t) {
    const int t = *sidecar_t;
    if (g.vertex_count() <= kDefaultMinorCap) {
      check(certify_class(g) == t, "sidecar class parameter does not match the checker");
    }
    if (t >= 2 && ds_opt && vc_opt) {
      check(d3.chosen.size() <= (2 * t - 1) * *ds_opt, "3-round output broke the (2t-1) bound");
      check(v3.chosen.size() <= t * *vc_opt, "3-round cover output broke the t bound");
      if (!ds.fallback_used && *ds_opt > 0) {
        check(ds.chosen.size() <= approximation_bound(1) * *ds_opt,
              "pipeline output broke the guaranteed bound");
      }
    }
  }
}

}  // namespace

VerifyOutcome verify_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::exists(dir) || !std::filesystem::is_directory(dir)) {
    throw std::invalid_argument("verify: not a directory: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  VerifyOutcome out;
  if (files.empty()) {
    out.notes.push_back("no instances found in " + dir.string());
    return out;
  }
  for (const std::filesystem::path& path : files) {
    ++out.files;
    Graph g;
    try {
      g = read_edge_list_file(path);
    } catch (const std::exception& e) {
      out.failures.push_back(path.filename().string() + ": " + e.what());
      continue;
    }

    std::optional<int> sidecar_t;
    std::filesystem::path sidecar = path;
    sidecar.replace_extension(".json");
    if (std::filesystem::exists(sidecar)) {
      try {
        std::ifstream in(sidecar);
        const ordered_json j = ordered_json::parse(in);
        if (j.contains("certified_t") && !j.at("certified_t").is_null()) {
          sidecar_t = j.at("certified_t").get<int>();
        }
      } catch (const std::exception& e) {
        out.failures.push_back(sidecar.filename().string() + ": " + e.what());
        continue;
      }
    }
    verify_instance(g, path.filename().string(), sidecar_t, out);
  }
  return out;
}

}  // namespace localds
