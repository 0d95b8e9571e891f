#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "alg/catalog.hpp"
#include "alg/commands.hpp"
#include "alg/errors.hpp"
#include "alg/generators.hpp"
#include "alg/graph6.hpp"
#include "alg/report.hpp"

using namespace alg;
using namespace alg::cli;

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("alg_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt");
    std::ofstream(path_, std::ios::binary) << contents;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  std::filesystem::path path_;
};

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run analyze(const std::string& input, std::set<std::string> skip = {}) {
  TempFile f(input);
  AnalyzeOptions o;
  o.input = f.path();
  o.skip = std::move(skip);
  std::ostringstream out, err;
  const int code = cmd_analyze(o, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze output") {
  const Run k4 = analyze("C~\n");
  CHECK(k4.code == kExitOk);
  const auto j = nlohmann::json::parse(k4.out);
  CHECK(j["graph6"] == "C~");
  CHECK(j["l_alg"] == 4);
  CHECK(j["defect"] == 2);
  CHECK(j["oct"] == 2);
  CHECK(j["vf"] == 2);
  CHECK(j["m_energy"] == 20);
  CHECK(j["spanning_trees"] == "16");
  CHECK(j["spectra"]["laplacian"]["eigenvalues"] == nlohmann::json::array({0.0, 4.0, 4.0, 4.0}));
  CHECK(j["spectra"]["signed"]["eigenvalues"] == nlohmann::json::array({-2.0, -2.0, -2.0, 2.0, 2.0, 2.0}));
  CHECK(j["bounds"]["upper_amplified"] == 4);
  CHECK(j["timings"].is_null());
  CHECK(j["timeout_flag"] == false);
  CHECK(j["violations"].empty());

  // Edge-list input gives the same report.
  CHECK(analyze("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").out == k4.out);
}

TEST_CASE("analyze is deterministic") {
  const std::string pair = to_graph6(catalog::inertia_separated_pair().first);
  const Run a = analyze(pair + "\n");
  const Run b = analyze(pair + "\n");
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
}

TEST_CASE("analyze skips stages and rejects bad input") {
  const Run skipped = analyze("C~", {"frustration", "energy"});
  const auto j = nlohmann::json::parse(skipped.out);
  CHECK(j["l_alg"].is_null());
  CHECK(j["m_energy"].is_null());
  CHECK(j["skipped"] == nlohmann::json::array({"frustration", "energy"}));
  CHECK(skipped.code == kExitOk);

  CHECK_THROWS_AS(analyze("C~", {"nonsense"}), std::invalid_argument);
  CHECK_THROWS_AS(analyze("B0"), ParseError);
  CHECK_THROWS_AS(analyze("0 1\n1 z\n"), ParseError);
}

TEST_CASE("analyze reports resource limits with exit 3") {
  // K9 has 36 edges, above the orientation search limit.
  const Run k9 = analyze(to_graph6(gen::complete(9)), {"oct", "maxcut", "vf"});
  CHECK(k9.code == kExitResourceLimit);
  const auto j = nlohmann::json::parse(k9.out);
  CHECK(j["limited"] == nlohmann::json::array({"frustration", "energy"}));
  CHECK(j["l_alg"].is_null());
}

TEST_CASE("analyze table format") {
  TempFile f("Bw");
  AnalyzeOptions o;
  o.input = f.path();
  o.format = "table";
  std::ostringstream out, err;
  CHECK(cmd_analyze(o, out, err) == kExitOk);
  CHECK(out.str().find("| l_alg | 1 |") != std::string::npos);
}

TEST_CASE("verify") {
  std::ostringstream out, err;
  VerifyOptions bad;
  bad.identity = "no-such-identity";
  CHECK(cmd_verify(bad, out, err) == kExitParse);
  CHECK(err.str().find("cubic-oct") != std::string::npos);
  CHECK_THROWS_AS(run_verify(bad), std::invalid_argument);

  CHECK(identity_names().size() == 13);
  for (const auto& name : identity_names()) {
    VerifyOptions o;
    o.identity = name;
    o.n_max = 5;
    o.random_count = 10;
    const VerifyOutcome r = run_verify(o);
    CAPTURE(name);
    CHECK(r.checked > 0);
    CHECK(r.violations.empty());
  }

  TempFile graphs("Bw\nC~\nC]\n");
  VerifyOptions from_file;
  from_file.identity = "imbalance";
  from_file.graphs_file = graphs.path();
  const VerifyOutcome r = run_verify(from_file);
  CHECK(r.checked == 3);
  CHECK(r.violations.empty());
}

TEST_CASE("family tables") {
  std::ostringstream out, err;
  FamilyOptions o;
  o.family = "odd-cycle";
  o.range = std::pair{1, 3};
  o.format = "csv";
  CHECK(cmd_family(o, out, err) == kExitOk);
  CHECK(out.str().find("2,5,1,1,1,0.477457514063") != std::string::npos);
  o.family = "nope";
  CHECK(cmd_family(o, out, err) == kExitParse);
  o.family = "multipartite";
  o.format = "html";
  CHECK(cmd_family(o, out, err) == kExitParse);
}

TEST_CASE("range parsing") {
  CHECK(parse_range("3..9") == std::pair{3, 9});
  CHECK(parse_range("4") == std::pair{4, 4});
  CHECK_THROWS_AS(parse_range("9..3"), ParseError);
  CHECK_THROWS_AS(parse_range("x..3"), ParseError);
  CHECK_THROWS_AS(parse_range("3.."), ParseError);
}

TEST_CASE("pearson correlation") {
  CHECK(*pearson({1, 2, 3}, {2, 4, 6}) == doctest::Approx(1.0));
  CHECK(*pearson({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-1.0));
  CHECK_FALSE(pearson({1, 1, 1}, {1, 2, 3}).has_value());
  CHECK_FALSE(pearson({1}, {1}).has_value());
  // Hand computed: x = 1..4, y = 1,3,2,4.
  CHECK(*pearson({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(0.8));
}

TEST_CASE("graph6 batches") {
  std::ostringstream log;
  const Graph6Batch b = read_graph6_lines("# header\nBw\n\nB0\nC~\n", &log);
  CHECK(b.graphs.size() == 2);
  CHECK(b.line_numbers == std::vector<std::size_t>{2, 5});
  CHECK(b.malformed == 1);
  CHECK(log.str().find("line 4") != std::string::npos);
}

TEST_CASE("sweep") {
  SweepOptions o;
  o.threads = 2;
  const SweepResult empty = run_sweep({}, o);
  CHECK(empty.summary.instances == 0);
  CHECK_FALSE(empty.summary.pearson_r.has_value());
  CHECK(empty.summary.pairs.empty());

  const auto [g1, g2] = catalog::inertia_separated_pair();
  const auto [h1, h2] = catalog::inertia_matched_pair();
  const std::vector<SimpleGraph> graphs = {g1, g2, h1, h2};
  std::vector<std::size_t> order;
  const SweepResult r = run_sweep(graphs, o, [&](std::size_t i, const InvariantReport&) { order.push_back(i); });
  CHECK(order == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(r.summary.instances == 4);
  CHECK(r.summary.completed == 4);
  CHECK(r.summary.pairs.size() == 2);
  CHECK(r.summary.inertia_separated == 1);
  CHECK(r.summary.delta3_separated == 0);

  o.threads = 1;
  const SweepResult serial = run_sweep(graphs, o);
  CHECK(summary_to_json(serial.summary).dump() == summary_to_json(r.summary).dump());
  for (std::size_t i = 0; i < graphs.size(); ++i)
    CHECK(report_to_json(serial.reports[i]).dump() == report_to_json(r.reports[i]).dump());
}

TEST_CASE("sweep command writes JSON lines") {
  TempFile input("Bw\nC~\nnot-a-graph\n");
  TempFile jsonl("");
  SweepOptions o;
  o.input = input.path();
  o.out_path = jsonl.path();
  std::ostringstream out, err;
  CHECK(cmd_sweep(o, out, err) == kExitOk);
  const auto summary = nlohmann::json::parse(out.str());
  CHECK(summary["instances"] == 2);
  CHECK(summary["malformed"] == 1);
  std::ifstream in(jsonl.path());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    CHECK(nlohmann::json::parse(line).contains("l_alg"));
    ++lines;
  }
  CHECK(lines == 2);
}

TEST_CASE("enumerate") {
  std::ostringstream out, err;
  EnumerateOptions o;
  o.n_max = 4;
  CHECK(cmd_enumerate(o, out, err) == kExitOk);
  std::istringstream lines(out.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  CHECK(count == 1 + 1 + 2 + 6);
}

TEST_CASE("reports for disconnected and edgeless graphs") {
  const InvariantReport r = analyze_graph(SimpleGraph::from_edge_list(std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {3, 4}, {2, 4}}));
  CHECK_FALSE(r.connected);
  CHECK(r.frustration->best_value == 1);
  CHECK(report_violations(r).empty());
  const InvariantReport e = analyze_graph(SimpleGraph::from_edge_list(std::vector<std::pair<int, int>>{}, 3));
  CHECK(e.m == 0);
  CHECK(report_violations(e).empty());
  CHECK(format_real(3.99e-15) == "0");
  CHECK(format_real(0.1 + 0.2) == "0.3");
}
