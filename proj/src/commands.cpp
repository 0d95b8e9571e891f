#include "alg/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "alg/catalog.hpp"
#include "alg/errors.hpp"
#include "alg/generators.hpp"
#include "alg/graph6.hpp"
#include "alg/invariants.hpp"
#include "alg/optimization.hpp"
#include "alg/signed.hpp"
#include "alg/spectral.hpp"

namespace alg::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Orientation random_orientation(int m, std::mt19937_64& rng) {
  std::vector<int8_t> signs(m);
  for (auto& s : signs) s = (rng() & 1U) ? 1 : -1;
  return Orientation(std::move(signs));
}

std::string g6(const SimpleGraph& g) { return to_graph6(g); }

bool is_cubic(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

// Part sizes when g is complete multipartite (the complement is a disjoint
// union of cliques), in increasing order.
std::optional<std::vector<int>> multipartite_parts(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return std::nullopt;
  std::vector<int> part(n, -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (int w = v; w < n; ++w) {
      if (w == v || (part[w] < 0 && !g.has_edge(v, w))) {
        part[w] = id;
        ++sizes[id];
      }
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((part[u] != part[v]) != g.has_edge(u, v)) return std::nullopt;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool is_odd_cycle(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n < 3 || n % 2 == 0 || g.edge_count() != n || !is_connected(g)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::string parts_label(const std::vector<int>& parts) {
  std::string s = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s + "]";
}

std::vector<SimpleGraph> random_connected_sample(int count, int max_edges, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SimpleGraph> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    const int lo = n - 1;
    const int hi = std::min(max_edges, n * (n - 1) / 2);
    if (lo > hi) continue;
    const int m = std::uniform_int_distribution<int>(lo, hi)(rng);
    SimpleGraph g = gen::random_gnm(n, m, rng);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

const std::vector<std::vector<int>> kMultipartiteParts = {{1, 1, 1}, {2, 2, 2}, {1, 2, 3}, {3, 3, 3}, {2, 3, 4}};

struct Identity {
  std::string name;
  std::string description;
};

const std::vector<Identity>& identities() {
  static const std::vector<Identity> list = {
      {"cubic-oct", "l(A(G)) = 2 oct(G) on cubic graphs, with the spectral OCT bound"},
      {"imbalance", "4 l(A(G)) + M(G) = sum of squared degrees"},
      {"parity", "lifted cycles have sign (-1)^k; induced-cycle audit of A(G)"},
      {"vf-def", "edge bipartization number equals the Max-Cut defect"},
      {"sandwich", "def <= l <= amplified bound <= (Delta-1) def"},
      {"dual-census", "trace and combinatorial triangle census agree"},
      {"multipartite", "l(A(K_{n1..nr})) = e3 and spectral bound / l = 3/4"},
      {"odd-cycle", "l(A(C_{2k+1})) = 1 and the closed-form spectral bound"},
      {"matrix-tree", "eigenvalue product / n equals the Laplacian cofactor"},
      {"edge-space", "S + 2I and L share nonzero spectra; transported modes"},
      {"spectral-lower", "spectral lower bound <= l(A(G))"},
      {"switching", "reorienting F equals switching A(G) at F"},
      {"bipartite-collapse", "A(G) is balanced with delta3 = sum C(d,3) for bipartite G"},
  };
  return list;
}

}  // namespace

int worker_count(int fallback) {
  if (const char* env = std::getenv("ALG_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  if (fallback > 0) return fallback;
  return std::max(1U, std::thread::hardware_concurrency());
}

SimpleGraph read_graph(const std::string& text) {
  const std::string t = trim(text);
  std::string body = t;
  if (body.rfind(">>graph6<<", 0) == 0) body = body.substr(10);
  if (body.find_first_of(" \t\n") == std::string::npos && looks_like_graph6(body)) return from_graph6(t);
  return parse_edge_list(text);
}

Graph6Batch read_graph6_lines(const std::string& text, std::ostream* log) {
  Graph6Batch batch;
  std::istringstream is(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(is, line)) {
    ++number;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    try {
      batch.graphs.push_back(from_graph6(t));
      batch.line_numbers.push_back(number);
    } catch (const ParseError& e) {
      ++batch.malformed;
      if (log) *log << "line " << number << ": " << e.what() << '\n';
    }
  }
  return batch;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  const SimpleGraph g = read_graph(read_input(opts.input));
  ReportConfig config;
  config.skip = opts.skip;
  config.stage_cutoff = opts.cutoff;
  config.threads = worker_count(opts.threads);
  config.record_timings = opts.timings;
  const InvariantReport r = analyze_graph(g, config);
  if (opts.format == "table") {
    out << report_to_table(r);
  } else {
    out << report_to_json(r).dump(2) << '\n';
  }
  for (const auto& stage : r.limited) err << "resource limit exceeded in stage " << stage << '\n';
  const auto violations = report_violations(r);
  for (const auto& v : violations) err << "violation: " << v << '\n';
  if (!violations.empty()) return kExitViolation;
  if (!r.limited.empty()) return kExitResourceLimit;
  return kExitOk;
}

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& id : identities()) v.push_back(id.name);
    return v;
  }();
  return names;
}

VerifyOutcome run_verify(const VerifyOptions& opts) {
  const auto& names = identity_names();
  if (std::find(names.begin(), names.end(), opts.identity) == names.end()) {
    throw std::invalid_argument("unknown identity '" + opts.identity + "'");
  }
  const std::string& id = opts.identity;
  VerifyOutcome outcome;
  auto fail = [&](const SimpleGraph& g, const std::string& detail) {
    outcome.violations.push_back(g6(g) + " " + detail);
  };

  std::vector<SimpleGraph> graphs;
  const bool from_file = opts.graphs_file.has_value();
  if (from_file) {
    graphs = read_graph6_lines(read_input(*opts.graphs_file)).graphs;
  } else if (id == "cubic-oct") {
    const int n_max = opts.n_max.value_or(12);
    for (int n = 4; n <= std::min(n_max, 12); n += 2)
      for (auto& g : catalog::connected_cubic_graphs(n)) graphs.push_back(std::move(g));
    for (auto& ng : catalog::cubic_catalog(n_max))
      if (ng.graph.vertex_count() > 12) graphs.push_back(std::move(ng.graph));
  } else if (id == "imbalance") {
    if (opts.n_max) {
      graphs = catalog::connected_graphs_up_to(*opts.n_max);
    } else {
      graphs = catalog::connected_graphs_by_edges(12);
    }
    auto extra = random_connected_sample(opts.random_count, 16, opts.seed);
    graphs.insert(graphs.end(), extra.begin(), extra.end());
  } else if (id == "dual-census") {
    for (int n = 1; n <= opts.n_max.value_or(7); ++n) {
      auto part = catalog::enumerate_graphs(n, false);
      graphs.insert(graphs.end(), part.begin(), part.end());
    }
  } else if (id == "multipartite") {
    for (const auto& p : kMultipartiteParts) graphs.push_back(gen::complete_multipartite(p));
  } else if (id == "odd-cycle") {
    for (int k = 1; k <= opts.n_max.value_or(10); ++k) graphs.push_back(gen::cycle(2 * k + 1));
  } else if (id == "matrix-tree" || id == "edge-space") {
    graphs = {gen::complete(3), gen::cycle(5), gen::complete(4)};
    std::mt19937_64 rng(opts.seed);
    for (int i = 0; i < 100; ++i) {
      const int n = std::uniform_int_distribution<int>(2, 12)(rng);
      graphs.push_back(gen::random_connected(n, 0.35, rng));
    }
  } else {
    graphs = catalog::connected_graphs_up_to(opts.n_max.value_or(7));
  }

  std::mt19937_64 rng(opts.seed);
  for (const SimpleGraph& g : graphs) {
    const int m = g.edge_count();
    const Orientation o = random_orientation(m, rng);
    if (id == "cubic-oct") {
      if (!is_cubic(g)) {
        ++outcome.skipped;
        continue;
      }
      const CubicExactness c = cubic_exactness(g);
      if (!c.holds) {
        fail(g, "l=" + std::to_string(c.frustration) + " oct=" + std::to_string(c.oct) +
                    " mixed=" + std::to_string(c.witness_mixed));
      }
      if (!c.mixed_is_transversal) fail(g, "mixed set of the witness is not a transversal");
      const double bound = cubic_oct_spectral_bound(g);
      if (bound > c.oct + 1e-9) fail(g, "spectral OCT bound " + format_real(bound) + " > oct");
    } else if (id == "imbalance") {
      const auto l = frustration_index_exact(g).best_value;
      const auto energy = max_imbalance_energy(g);
      std::int64_t sq = 0;
      for (int d : g.degrees()) sq += static_cast<std::int64_t>(d) * d;
      if (4 * l + energy != sq) {
        fail(g, "4*" + std::to_string(l) + " + " + std::to_string(energy) + " != " + std::to_string(sq));
      }
    } else if (id == "parity") {
      if (!lifted_cycle_parity_check(g, o, 7)) fail(g, "lifted cycle with wrong sign");
      const auto bad = audit_induced_cycle_signs(build_alg(g, o), 7);
      if (!bad.empty()) fail(g, std::to_string(bad.size()) + " induced cycles with wrong sign");
    } else if (id == "vf-def") {
      const int vf = min_bipartizing_edge_deletion(g);
      const int def = maxcut_exact(g).defect;
      if (vf != def) fail(g, "vf=" + std::to_string(vf) + " def=" + std::to_string(def));
    } else if (id == "sandwich") {
      if (is_bipartite(g) || !is_connected(g)) {
        ++outcome.skipped;
        continue;
      }
      const CutResult cut = maxcut_exact(g);
      const auto l = frustration_index_exact(g).best_value;
      const auto upper = defect_amplification_upper(g, cut);
      const auto built = directed_two_path_count(g, amplification_orientation(g, cut));
      const auto coarse = static_cast<std::int64_t>(g.max_degree() - 1) * cut.defect;
      if (!(cut.defect <= l && l <= built && built <= upper && upper <= coarse)) {
        fail(g, "def=" + std::to_string(cut.defect) + " l=" + std::to_string(l) + " built=" +
                    std::to_string(built) + " upper=" + std::to_string(upper) + " coarse=" + std::to_string(coarse));
      }
    } else if (id == "dual-census") {
      const TriangleCensus comb = triangle_census_combinatorial(g);
      const TriangleCensus trace = triangle_census_trace(build_alg(g, o));
      if (!(comb == trace)) {
        fail(g, "combinatorial (" + std::to_string(comb.t_plus) + "," + std::to_string(comb.t_minus) +
                    ") trace (" + std::to_string(trace.t_plus) + "," + std::to_string(trace.t_minus) + ")");
      }
    } else if (id == "multipartite") {
      const auto parts = multipartite_parts(g);
      if (!parts || parts->size() < 3) {
        ++outcome.skipped;
        continue;
      }
      const auto closed = complete_multipartite_closed_form(*parts);
      const auto l = frustration_index_exact(g).best_value;
      const double ratio = spectral_lower_bound(g) / static_cast<double>(l);
      if (l != closed) fail(g, parts_label(*parts) + " l=" + std::to_string(l) + " e3=" + std::to_string(closed));
      if (std::fabs(ratio - 0.75) > 1e-9) fail(g, parts_label(*parts) + " ratio " + format_real(ratio));
    } else if (id == "odd-cycle") {
      if (!is_odd_cycle(g)) {
        ++outcome.skipped;
        continue;
      }
      const int n = g.vertex_count();
      const auto l = frustration_index_exact(g).best_value;
      const double closed = n / 2.0 * (1.0 - std::cos(std::numbers::pi / n));
      const double bound = spectral_lower_bound(g);
      if (l != 1) fail(g, "l=" + std::to_string(l));
      if (std::fabs(bound - closed) > 1e-9) fail(g, "bound " + format_real(bound) + " closed " + format_real(closed));
    } else if (id == "matrix-tree") {
      if (!is_connected(g)) {
        ++outcome.skipped;
        continue;
      }
      try {
        spanning_tree_count_detailed(g);
      } catch (const NumericError& e) {
        fail(g, e.what());
      }
    } else if (id == "edge-space") {
      if (!is_connected(g)) {
        ++outcome.skipped;
        continue;
      }
      if (!edge_space_identity_check(g, o)) fail(g, "edge-space spectra differ");
      if (!transported_modes_check(g, o)) fail(g, "transported mode residual too large");
    } else if (id == "spectral-lower") {
      const auto l = frustration_index_exact(g).best_value;
      const double bound = spectral_lower_bound(g);
      if (bound > l + 1e-9) fail(g, "bound " + format_real(bound) + " > l=" + std::to_string(l));
    } else if (id == "switching") {
      std::vector<int> f;
      for (int e = 0; e < m; ++e)
        if (rng() & 1U) f.push_back(e);
      if (!orientation_switch_consistency(g, o, f)) fail(g, "reorientation differs from switching");
      const SignedGraph a = build_alg(g, o);
      const SignedGraph b = build_alg(g, Orientation::reference(m));
      if (!switching_equivalent(a, b)) fail(g, "orientations not switching equivalent");
    } else if (id == "bipartite-collapse") {
      if (!is_bipartite(g)) {
        ++outcome.skipped;
        continue;
      }
      if (!bipartite_collapse_check(g)) fail(g, "bipartite collapse fails");
    }
    ++outcome.checked;
  }
  return outcome;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err) {
  const auto& names = identity_names();
  if (std::find(names.begin(), names.end(), opts.identity) == names.end()) {
    err << "unknown identity '" << opts.identity << "'; valid names:\n";
    for (const auto& id : identities()) err << "  " << id.name << "  " << id.description << '\n';
    return kExitParse;
  }
  const VerifyOutcome r = run_verify(opts);
  for (const auto& v : r.violations) out << "FAIL " << opts.identity << ' ' << v << '\n';
  out << opts.identity << ": " << r.checked << " checked, " << r.skipped << " skipped, "
      << r.violations.size() << " violations\n";
  return r.violations.empty() ? kExitOk : kExitViolation;
}

SweepResult run_sweep(const std::vector<SimpleGraph>& graphs, const SweepOptions& opts,
                      const std::function<void(std::size_t, const InvariantReport&)>& on_report) {
  ReportConfig config;
  config.stage_cutoff = opts.cutoff;
  config.record_timings = opts.timings;
  const std::size_t count = graphs.size();
  std::vector<std::optional<InvariantReport>> slots(count);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  std::exception_ptr failure;

  const int workers = static_cast<int>(std::min<std::size_t>(worker_count(opts.threads), std::max<std::size_t>(count, 1)));
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        InvariantReport r;
        try {
          r = analyze_graph(graphs[i], config);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          next = count;
        }
        {
          std::lock_guard lock(mu);
          slots[i] = std::move(r);
        }
        ready.notify_all();
      }
    });
  }

  // Reorder buffer: hand reports out in input order as they complete.
  SweepResult result;
  result.reports.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return slots[i].has_value() || failure; });
    if (failure) break;
    InvariantReport r = std::move(*slots[i]);
    slots[i].reset();
    lock.unlock();
    if (on_report) on_report(i, r);
    result.reports.push_back(std::move(r));
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  result.summary = summarize(graphs, result.reports);
  return result;
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  Graph6Batch batch = read_graph6_lines(read_input(opts.input), &err);
  std::ofstream jsonl;
  if (opts.out_path) {
    jsonl.open(*opts.out_path, std::ios::binary);
    if (!jsonl) throw std::runtime_error("cannot write '" + *opts.out_path + "'");
  }
  SweepResult r = run_sweep(batch.graphs, opts, [&](std::size_t, const InvariantReport& rep) {
    if (jsonl.is_open()) jsonl << report_to_json(rep).dump() << '\n';
  });
  r.summary.malformed = batch.malformed;
  out << summary_to_json(r.summary).dump(2) << '\n';
  std::size_t violations = 0;
  for (std::size_t i = 0; i < r.reports.size(); ++i) {
    for (const auto& v : report_violations(r.reports[i])) {
      err << "violation: " << r.reports[i].graph6 << " " << v << '\n';
      ++violations;
    }
  }
  return violations ? kExitViolation : kExitOk;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots);
    const std::string b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (lo > hi) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw ParseError("bad range '" + text + "', expected a..b", 0);
  }
}

namespace {

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print(std::ostream& out, const std::string& format) const {
    if (format == "csv") {
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << (r[i].find(',') != std::string::npos ? "\"" + r[i] + "\"" : r[i]);
        out << '\n';
      };
      line(header_);
      for (const auto& r : rows_) line(r);
      return;
    }
    auto line = [&](const std::vector<std::string>& r) {
      out << '|';
      for (const auto& c : r) out << ' ' << c << " |";
      out << '\n';
    };
    line(header_);
    out << '|';
    for (std::size_t i = 0; i < header_.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& r : rows_) line(r);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace

int cmd_family(const FamilyOptions& opts, std::ostream& out, std::ostream& err) {
  if (std::find(kFamilies.begin(), kFamilies.end(), opts.family) == kFamilies.end()) {
    err << "unknown family '" << opts.family << "'; valid names:";
    for (const auto& f : kFamilies) err << ' ' << f;
    err << '\n';
    return kExitParse;
  }
  if (opts.format != "markdown" && opts.format != "csv") {
    err << "unknown format '" << opts.format << "'; use markdown or csv\n";
    return kExitParse;
  }
  bool ok = true;
  if (opts.family == "odd-cycle") {
    const auto [lo, hi] = opts.range.value_or(std::pair{1, 10});
    Table t({"k", "n", "l_closed", "l_search", "def", "spectral", "spectral_closed", "ratio"});
    double previous = INFINITY;
    for (int k = std::max(lo, 1); k <= hi; ++k) {
      const SimpleGraph g = gen::cycle(2 * k + 1);
      const int n = 2 * k + 1;
      const auto l = frustration_index_exact(g).best_value;
      const int def = maxcut_exact(g).defect;
      const double bound = spectral_lower_bound(g);
      const double closed = n / 2.0 * (1.0 - std::cos(std::numbers::pi / n));
      ok = ok && l == 1 && def == 1 && std::fabs(bound - closed) <= 1e-9 && bound < previous;
      previous = bound;
      t.add({std::to_string(k), std::to_string(n), "1", std::to_string(l), std::to_string(def), format_real(bound),
             format_real(closed), format_real(bound / static_cast<double>(l))});
    }
    t.print(out, opts.format);
  } else if (opts.family == "multipartite") {
    std::vector<std::vector<int>> list = kMultipartiteParts;
    if (opts.range) {
      list.clear();
      for (int s = std::max(opts.range->first, 1); s <= opts.range->second; ++s) list.push_back({s, s, s});
    }
    Table t({"parts", "n", "m", "l_closed", "l_search", "def", "spectral", "ratio"});
    for (const auto& parts : list) {
      const SimpleGraph g = gen::complete_multipartite(parts);
      const auto closed = complete_multipartite_closed_form(parts);
      const auto l = frustration_index_exact(g).best_value;
      const int def = maxcut_exact(g).defect;
      const double bound = spectral_lower_bound(g);
      const double ratio = l > 0 ? bound / static_cast<double>(l) : 0.0;
      ok = ok && l == closed && std::fabs(ratio - 0.75) <= 1e-9;
      t.add({parts_label(parts), std::to_string(g.vertex_count()), std::to_string(g.edge_count()),
             std::to_string(closed), std::to_string(l), std::to_string(def), format_real(bound), format_real(ratio)});
    }
    t.print(out, opts.format);
  } else {
    const auto [lo, hi] = opts.range.value_or(std::pair{4, 16});
    Table t({"name", "n", "l_search", "oct", "2*oct", "holds", "def", "oct_spectral"});
    for (const auto& ng : catalog::cubic_catalog(hi)) {
      if (ng.graph.vertex_count() < lo) continue;
      const CubicExactness c = cubic_exactness(ng.graph);
      const int def = maxcut_exact(ng.graph).defect;
      ok = ok && c.holds;
      t.add({ng.name, std::to_string(ng.graph.vertex_count()), std::to_string(c.frustration), std::to_string(c.oct),
             std::to_string(2 * c.oct), c.holds ? "yes" : "no", std::to_string(def),
             format_real(cubic_oct_spectral_bound(ng.graph))});
    }
    t.print(out, opts.format);
  }
  return ok ? kExitOk : kExitViolation;
}

int cmd_enumerate(const EnumerateOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<SimpleGraph> graphs;
  if (opts.n_max) {
    for (int n = 1; n <= *opts.n_max; ++n) {
      auto part = catalog::enumerate_graphs(n, opts.connected);
      graphs.insert(graphs.end(), part.begin(), part.end());
    }
  } else if (opts.m_max) {
    if (!opts.connected) {
      err << "--m-max without --n-max enumerates connected graphs only\n";
      return kExitParse;
    }
    graphs = catalog::connected_graphs_by_edges(*opts.m_max);
  } else {
    err << "give --n-max and/or --m-max\n";
    return kExitParse;
  }
  for (const auto& g : graphs) {
    if (opts.m_max && g.edge_count() > *opts.m_max) continue;
    if (opts.non_bipartite && is_bipartite(g)) continue;
    out << to_graph6(g) << '\n';
  }
  return kExitOk;
}

}  // namespace alg::cli
