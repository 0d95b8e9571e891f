#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "alg/graph.hpp"
#include "alg/report.hpp"

namespace alg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitViolation = 1,
  kExitParse = 2,
  kExitResourceLimit = 3,
  kExitNumeric = 4,
};

inline constexpr std::chrono::milliseconds kDefaultStageCutoff{10000};

/// Worker count: ALG_THREADS if set and positive, else `fallback`, else the
/// hardware concurrency.
int worker_count(int fallback = 0);

/// Parses a single graph given as graph6 (optionally with the >>graph6<<
/// header) or as an edge list.
SimpleGraph read_graph(const std::string& text);

struct Graph6Batch {
  std::vector<SimpleGraph> graphs;
  std::vector<std::size_t> line_numbers;  // 1-based, per graph
  std::size_t malformed = 0;
};

/// One graph6 string per line; blank lines and '#' comments are ignored.
/// Malformed lines are counted and reported to `log` when given.
Graph6Batch read_graph6_lines(const std::string& text, std::ostream* log = nullptr);

std::string read_input(const std::string& path);

struct AnalyzeOptions {
  std::string input = "-";
  std::string format = "json";
  std::set<std::string> skip;
  std::optional<std::chrono::milliseconds> cutoff;
  bool timings = false;
  int threads = 1;
};
int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);

/// Identity names accepted by `verify`, in display order.
const std::vector<std::string>& identity_names();

struct VerifyOptions {
  std::string identity;
  std::optional<int> n_max;
  std::optional<std::string> graphs_file;
  int random_count = 200;
  std::uint64_t seed = 1;
};

struct VerifyOutcome {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> violations;  // "<graph6> <detail>"
};

/// Runs one identity over its default instance set (or `graphs_file`).
/// Throws std::invalid_argument for an unknown identity.
VerifyOutcome run_verify(const VerifyOptions& opts);
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct SweepOptions {
  std::string input;
  std::optional<std::chrono::milliseconds> cutoff = kDefaultStageCutoff;
  std::optional<std::string> out_path;
  int threads = 0;
  bool timings = false;
};

struct SweepResult {
  std::vector<InvariantReport> reports;
  SweepSummary summary;
};

/// Analyzes every graph on a worker pool. `on_report` receives the reports
/// in input order.
SweepResult run_sweep(const std::vector<SimpleGraph>& graphs, const SweepOptions& opts,
                      const std::function<void(std::size_t, const InvariantReport&)>& on_report = {});
int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);

struct FamilyOptions {
  std::string family;
  std::optional<std::pair<int, int>> range;
  std::string format = "markdown";
};

inline const std::vector<std::string> kFamilies = {"odd-cycle", "multipartite", "cubic-catalog"};

/// Parses "a..b" (or a single integer).
std::pair<int, int> parse_range(const std::string& text);
int cmd_family(const FamilyOptions& opts, std::ostream& out, std::ostream& err);

struct EnumerateOptions {
  std::optional<int> n_max;
  std::optional<int> m_max;
  bool connected = true;
  bool non_bipartite = false;
};
/// Writes canonical graph6 lines: connected graphs with n <= n_max, and/or
/// m <= m_max when only m_max is given.
int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace alg::cli
