#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "localds/algorithms.hpp"
#include "localds/config.hpp"
#include "localds/exact.hpp"
#include "localds/generators.hpp"
#include "localds/graph.hpp"

namespace localds {

// An algorithm emitted something that fails its own validity check.  Kept
// apart from plain runtime errors so callers can exit differently for a
// correctness bug than for bad input.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Names the experiment harness accepts.  Cover algorithms are judged by
// vertex-cover validity and compared against the exact cover size; all
// others are dominating-set algorithms.
const std::vector<std::string>& algorithm_names();
bool is_cover_algorithm(const std::string& name);

struct PlanItem {
  GeneratorSpec spec;
  std::string algorithm;
  AlgorithmConfig cfg;
};

struct ExperimentPlan {
  std::vector<PlanItem> items;
  bool exact_compare = true;   // exact solves only run at n <= exact_cap
  int exact_cap = kDefaultExactCap;
  bool certify = false;        // attach certified t where the checker fits
  void validate() const;
};

struct ReportRow {
  int instance_id = 0;
  std::string family;
  int n = 0;
  int m = 0;
  std::optional<int> certified_t;
  std::string algorithm;
  int chosen_size = 0;
  std::optional<int> exact_size;
  std::optional<Ratio> ratio;
  int rounds = 0;
  bool fallback = false;
  bool valid = false;
};

// Runs one named algorithm.  Never throws for oversized exact comparisons
// (the exact column is simply absent); unknown names throw.
ReportRow run_one(const Graph& g, const std::string& algorithm, const AlgorithmConfig& cfg,
                  bool exact_compare, int exact_cap);

// Certified class parameter, when the checker can afford the instance.
std::optional<int> try_certify(const Graph& g);

// One row per plan item, in plan order.  Items are independent and run on a
// small worker pool; an invalid output aborts with std::runtime_error
// because it is a correctness bug, not data.
std::vector<ReportRow> run_plan(const ExperimentPlan& plan);

struct ReportSummary {
  int rows = 0;
  int valid_rows = 0;
  int fallback_rows = 0;
  bool guarantee_voided = false;               // any fallback voids ratio claims
  std::map<std::string, double> max_ratio_by_family;
};
ReportSummary summarize(const std::vector<ReportRow>& rows);

// JSON-lines: optional timestamp line, one object per row, summary line.
void write_report(std::ostream& out, const std::vector<ReportRow>& rows, bool with_timestamp);
std::vector<ReportRow> read_report(std::istream& in);

ExperimentPlan plan_from_json(const std::string& text);
std::string plan_to_json(const ExperimentPlan& plan);

// Instance sidecar written next to generated edge lists.
std::string sidecar_json(const GeneratorSpec& spec, const Graph& g, std::optional<int> certified_t);

// Re-checks a directory of edge-list instances (*.txt with optional .json
// sidecars): algorithm validity, exact-oracle agreement between the two
// solver routes, structural bounds, locality of the cut programs, and the
// certified ratio bounds.  Failures are collected, not thrown.
struct VerifyOutcome {
  int files = 0;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  bool ok() const { return failures.empty(); }
};
VerifyOutcome verify_corpus(const std::filesystem::path& dir);

}  // namespace localds
