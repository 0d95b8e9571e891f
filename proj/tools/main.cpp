#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "alg/commands.hpp"
#include "alg/errors.hpp"

namespace {

std::set<std::string> split_list(const std::string& s) {
  std::set<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace alg::cli;
  CLI::App app{"Antisymmetric line graph invariants: analysis, identity checks and sweeps"};
  app.require_subcommand(1);

  AnalyzeOptions analyze;
  std::string skip;
  std::int64_t analyze_cutoff = 0;
  auto* a = app.add_subcommand("analyze", "Full invariant report for one graph (graph6 or edge list)");
  a->add_option("input", analyze.input, "Input file, or - for stdin")->required();
  a->add_option("--format", analyze.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  a->add_option("--skip", skip, "Comma-separated stages to skip (census,spectral,maxcut,frustration,energy,oct,vf)");
  a->add_option("--cutoff-ms", analyze_cutoff, "Per-stage cutoff in milliseconds (0: none)");
  a->add_flag("--timings", analyze.timings, "Record per-stage timings");

  VerifyOptions verify;
  int verify_n_max = 0;
  std::string graphs_file;
  auto* v = app.add_subcommand("verify", "Check one identity over an instance set");
  v->add_option("identity", verify.identity, "Identity name")->required();
  v->add_option("--n-max", verify_n_max, "Largest vertex count (or parameter) of the default set");
  v->add_option("--graphs", graphs_file, "graph6 file replacing the default set");
  v->add_option("--random", verify.random_count, "Random instances where the identity uses them");
  v->add_option("--seed", verify.seed, "Seed for random instances and orientations");

  SweepOptions sweep;
  std::int64_t sweep_cutoff = kDefaultStageCutoff.count();
  std::string sweep_out;
  auto* s = app.add_subcommand("sweep", "Analyze every graph of a graph6 file and summarize");
  s->add_option("input", sweep.input, "graph6 file, or - for stdin")->required();
  s->add_option("--cutoff-ms", sweep_cutoff, "Per-stage cutoff in milliseconds (0: none)");
  s->add_option("--out", sweep_out, "Write per-instance JSON lines here");
  s->add_flag("--timings", sweep.timings, "Record per-stage timings");

  FamilyOptions family;
  std::string range;
  auto* f = app.add_subcommand("family", "Tabulate a graph family");
  f->add_option("name", family.family, "odd-cycle, multipartite or cubic-catalog")->required();
  f->add_option("--range", range, "Parameter range a..b");
  f->add_option("--format", family.format, "markdown or csv");

  EnumerateOptions enumerate;
  int en_n = 0, en_m = -1;
  bool all_graphs = false;
  auto* e = app.add_subcommand("enumerate", "Write canonical graph6 lines for small graphs");
  e->add_option("--n-max", en_n, "Largest vertex count");
  e->add_option("--m-max", en_m, "Largest edge count");
  e->add_flag("--all", all_graphs, "Include disconnected graphs (needs --n-max)");
  e->add_flag("--non-bipartite", enumerate.non_bipartite, "Drop bipartite graphs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*a) {
      analyze.skip = split_list(skip);
      if (analyze_cutoff > 0) analyze.cutoff = std::chrono::milliseconds(analyze_cutoff);
      return cmd_analyze(analyze, std::cout, std::cerr);
    }
    if (*v) {
      if (verify_n_max > 0) verify.n_max = verify_n_max;
      if (!graphs_file.empty()) verify.graphs_file = graphs_file;
      return cmd_verify(verify, std::cout, std::cerr);
    }
    if (*s) {
      sweep.cutoff = sweep_cutoff > 0 ? std::optional(std::chrono::milliseconds(sweep_cutoff)) : std::nullopt;
      if (!sweep_out.empty()) sweep.out_path = sweep_out;
      return cmd_sweep(sweep, std::cout, std::cerr);
    }
    if (*f) {
      if (!range.empty()) family.range = parse_range(range);
      return cmd_family(family, std::cout, std::cerr);
    }
    if (*e) {
      if (en_n > 0) enumerate.n_max = en_n;
      if (en_m >= 0) enumerate.m_max = en_m;
      enumerate.connected = !all_graphs;
      return cmd_enumerate(enumerate, std::cout, std::cerr);
    }
  } catch (const alg::ParseError& err) {
    std::cerr << "parse error at byte " << err.offset() << ": " << err.what() << '\n';
    return kExitParse;
  } catch (const alg::ResourceLimitError& err) {
    std::cerr << "resource limit in stage " << err.stage() << ": " << err.what() << '\n';
    return kExitResourceLimit;
  } catch (const alg::NumericError& err) {
    std::cerr << "numeric error: " << err.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid input: " << err.what() << '\n';
    return kExitParse;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitParse;
  }
  return kExitOk;
}
