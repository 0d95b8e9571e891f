#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "alg/graph.hpp"
#include "alg/invariants.hpp"
#include "alg/optimization.hpp"
#include "alg/spectral.hpp"

namespace alg {

/// Stages that `analyze` can run; any of them may be skipped.
inline const std::vector<std::string> kReportStages = {
    "census", "spectral", "maxcut", "frustration", "energy", "oct", "vf"};

struct ReportConfig {
  std::set<std::string> skip;
  /// Budget for each stage separately; unset means no cutoff.
  std::optional<std::chrono::milliseconds> stage_cutoff;
  SearchLimits limits;
  int threads = 1;
  bool record_timings = false;
};

struct ReportBounds {
  std::optional<double> lower_def;
  std::optional<double> lower_spectral;
  std::optional<double> lower_combined;
  std::optional<std::string> active;
  std::optional<std::int64_t> upper_amplified;
  std::optional<double> cubic_oct_spectral;
};

struct InvariantReport {
  std::string graph6;
  int n = 0;
  int m = 0;
  std::vector<int> degrees;
  std::int64_t degree_square_sum = 0;
  bool bipartite = false;
  bool connected = false;

  std::optional<TriangleCensus> census;
  std::optional<Inertia> inertia;
  std::optional<Spectrum> signed_spectrum;     // of S
  std::optional<Spectrum> laplacian_spectrum;  // of L(G)
  std::optional<double> lambda_max;
  std::optional<std::string> spanning_trees;

  std::optional<CutResult> cut;
  std::optional<OrientationSearchResult> frustration;
  std::optional<std::int64_t> m_energy;
  std::optional<OctResult> oct;
  std::optional<int> vf;
  ReportBounds bounds;

  std::vector<std::pair<std::string, double>> timings;  // milliseconds
  std::vector<std::string> timeouts;
  std::vector<std::string> limited;  // stages refused by a size limit
  std::vector<std::string> skipped;

  bool timeout_flag() const { return !timeouts.empty(); }
};

/// Runs every stage not listed in config.skip. A stage that times out or
/// exceeds a size limit is recorded and left empty.
InvariantReport analyze_graph(const SimpleGraph& g, const ReportConfig& config = {});

/// Inequalities and identities checked between the populated fields:
/// def <= l, spectral <= l, l <= amplified, vf == def, 4l + M == sum d^2,
/// and on cubic graphs l == 2 oct and the spectral OCT bound.
std::vector<std::string> report_violations(const InvariantReport& r);

/// Rounds to 12 significant digits so serialized floats are stable.
double round12(double x);
std::string format_real(double x);

nlohmann::ordered_json report_to_json(const InvariantReport& r);
std::string report_to_table(const InvariantReport& r);

struct PairRecord {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string graph6_first;
  std::string graph6_second;
  bool delta3_separated = false;
  bool inertia_separated = false;
  bool inertia_uncertain = false;
};

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t completed = 0;  // both l and def available
  std::size_t timeouts = 0;
  std::size_t resource_limited = 0;
  std::size_t malformed = 0;
  std::optional<double> pearson_r;
  std::vector<PairRecord> pairs;
  std::size_t delta3_separated = 0;
  std::size_t inertia_separated = 0;
};

/// Sample Pearson correlation; empty when either side has zero variance or
/// fewer than two points are given.
std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);

/// Groups graphs by vertex count, edge count, degree sequence and line-graph
/// adjacency spectrum (compared exactly through the power traces
/// tr A(L(G))^k, k = 1..m) and lists every pair inside a group.
std::vector<std::pair<std::size_t, std::size_t>> line_cospectral_pairs(
    const std::vector<SimpleGraph>& graphs);

/// Fills the correlation, timeout counts and pair statistics from finished
/// reports (reports[i] belongs to graphs[i]).
SweepSummary summarize(const std::vector<SimpleGraph>& graphs,
                       const std::vector<InvariantReport>& reports);

nlohmann::ordered_json summary_to_json(const SweepSummary& s);

}  // namespace alg
