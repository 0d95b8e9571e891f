#include "alg/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "alg/errors.hpp"
#include "alg/graph6.hpp"
#include "alg/signed.hpp"

namespace alg {

using nlohmann::ordered_json;

// Magnitudes below this print as 0; they only arise as rounding residue.
constexpr double kPrintZero = 1e-12;

double round12(double x) {
  if (std::fabs(x) < kPrintZero) return 0.0;
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", std::fabs(x) < kPrintZero ? 0.0 : x);
  return buf;
}

namespace {

class StageRunner {
 public:
  StageRunner(InvariantReport& r, const ReportConfig& c) : report_(r), config_(c) {}

  template <class F>
  void run(const std::string& stage, F&& body) {
    if (config_.skip.count(stage)) {
      report_.skipped.push_back(stage);
      return;
    }
    SearchOptions opts;
    opts.limits = config_.limits;
    opts.threads = config_.threads;
    if (config_.stage_cutoff) opts.deadline = Deadline::after(*config_.stage_cutoff);
    const auto start = std::chrono::steady_clock::now();
    try {
      body(opts);
    } catch (const TimeoutError&) {
      report_.timeouts.push_back(stage);
    } catch (const ResourceLimitError&) {
      report_.limited.push_back(stage);
    }
    if (config_.record_timings) {
      const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
      report_.timings.emplace_back(stage, took.count());
    }
  }

 private:
  InvariantReport& report_;
  const ReportConfig& config_;
};

bool is_cubic(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return false;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) return false;
  return true;
}

template <class T>
ordered_json opt_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

ordered_json spectrum_json(const std::optional<Spectrum>& s) {
  if (!s) return nullptr;
  ordered_json values = ordered_json::array();
  for (double x : s->eigenvalues) values.push_back(round12(x));
  return {{"eigenvalues", values}, {"zero_threshold", round12(s->tolerance)}};
}

ordered_json real_json(const std::optional<double>& v) {
  return v ? ordered_json(round12(*v)) : ordered_json(nullptr);
}

ordered_json bit_positions(const Bitset& b) {
  ordered_json out = ordered_json::array();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b.test(i)) out.push_back(i);
  return out;
}

}  // namespace

InvariantReport analyze_graph(const SimpleGraph& g, const ReportConfig& config) {
  for (const auto& s : config.skip)
    if (std::find(kReportStages.begin(), kReportStages.end(), s) == kReportStages.end())
      throw std::invalid_argument("unknown stage '" + s + "'");

  InvariantReport r;
  r.n = g.vertex_count();
  r.m = g.edge_count();
  if (r.n <= kGraph6MaxVertices) r.graph6 = to_graph6(g);
  r.degrees = g.degrees();
  for (int d : r.degrees) r.degree_square_sum += static_cast<std::int64_t>(d) * d;
  r.bipartite = is_bipartite(g);
  r.connected = is_connected(g);
  const bool cubic = is_cubic(g);

  StageRunner stages(r, config);
  stages.run("census", [&](const SearchOptions&) {
    const TriangleCensus comb = triangle_census_combinatorial(g);
    const TriangleCensus trace = triangle_census_trace(build_alg(g, Orientation::reference(r.m)));
    if (!(comb == trace)) throw NumericError("trace census disagrees with the combinatorial census");
    r.census = comb;
  });
  stages.run("spectral", [&](const SearchOptions&) {
    r.signed_spectrum = symmetric_eigenvalues(signed_adjacency_matrix(build_alg(g, Orientation::reference(r.m))));
    r.inertia = inertia_of(*r.signed_spectrum);
    r.laplacian_spectrum = symmetric_eigenvalues(laplacian(g));
    r.lambda_max = r.m ? r.laplacian_spectrum->eigenvalues.back() : 0.0;
    r.bounds.lower_spectral = spectral_lower_bound(g);
    if (cubic) r.bounds.cubic_oct_spectral = cubic_oct_spectral_bound(g);
    if (r.connected) r.spanning_trees = spanning_tree_count(g).str();
  });
  stages.run("maxcut", [&](const SearchOptions& opts) {
    CutResult cut = maxcut_exact(g, opts);
    r.bounds.lower_def = cut.defect;
    r.bounds.upper_amplified = defect_amplification_upper(g, cut, opts);
    r.cut = std::move(cut);
  });
  stages.run("frustration", [&](const SearchOptions& opts) { r.frustration = frustration_index_exact(g, opts); });
  stages.run("energy", [&](const SearchOptions& opts) { r.m_energy = max_imbalance_energy(g, opts); });
  stages.run("oct", [&](const SearchOptions& opts) { r.oct = oct_exact(g, opts); });
  stages.run("vf", [&](const SearchOptions& opts) { r.vf = min_bipartizing_edge_deletion(g, opts); });

  if (r.bounds.lower_def && r.bounds.lower_spectral) {
    const double d = *r.bounds.lower_def;
    const double s = *r.bounds.lower_spectral;
    r.bounds.lower_combined = std::max(d, s);
    r.bounds.active = std::fabs(d - s) <= 1e-9 ? "tie" : (d > s ? "defect" : "spectral");
  }
  return r;
}

std::vector<std::string> report_violations(const InvariantReport& r) {
  std::vector<std::string> out;
  constexpr double kEps = 1e-9;
  const bool have_l = r.frustration.has_value();
  const std::int64_t l = have_l ? r.frustration->best_value : 0;
  if (have_l && r.cut && r.cut->defect > l) out.push_back("def > l");
  if (have_l && r.bounds.lower_spectral && *r.bounds.lower_spectral > l + kEps) out.push_back("spectral bound > l");
  if (have_l && r.bounds.upper_amplified && l > *r.bounds.upper_amplified) out.push_back("l > amplified upper bound");
  if (r.cut && r.bounds.upper_amplified && r.degrees.size() > 0) {
    const int delta = *std::max_element(r.degrees.begin(), r.degrees.end());
    if (*r.bounds.upper_amplified > static_cast<std::int64_t>(std::max(delta - 1, 0)) * r.cut->defect)
      out.push_back("amplified upper bound > (Delta-1) def");
  }
  if (r.vf && r.cut && *r.vf != r.cut->defect) out.push_back("vf != def");
  if (have_l && r.m_energy && 4 * l + *r.m_energy != r.degree_square_sum) out.push_back("4l + M != sum d^2");
  if (r.bounds.cubic_oct_spectral && r.oct && *r.bounds.cubic_oct_spectral > r.oct->oct_value + kEps)
    out.push_back("cubic spectral bound > oct");
  if (r.bounds.cubic_oct_spectral && r.oct && have_l && l != 2 * r.oct->oct_value) out.push_back("l != 2 oct on a cubic graph");
  return out;
}

ordered_json report_to_json(const InvariantReport& r) {
  ordered_json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["degrees"] = r.degrees;
  j["bipartite"] = r.bipartite;
  j["connected"] = r.connected;
  if (r.census) {
    j["census"] = ordered_json::parse(census_to_json(*r.census));
  } else {
    j["census"] = nullptr;
  }
  if (r.inertia) {
    j["inertia"] = {{"positive", r.inertia->positive},
                    {"negative", r.inertia->negative},
                    {"zero", r.inertia->zero},
                    {"uncertain", r.inertia->uncertain}};
  } else {
    j["inertia"] = nullptr;
  }
  j["lambda_max"] = real_json(r.lambda_max);
  j["spectra"] = {{"signed", spectrum_json(r.signed_spectrum)}, {"laplacian", spectrum_json(r.laplacian_spectrum)}};
  j["spanning_trees"] = opt_json(r.spanning_trees);
  j["l_alg"] = r.frustration ? ordered_json(r.frustration->best_value) : ordered_json(nullptr);
  j["m_energy"] = opt_json(r.m_energy);
  j["maxcut"] = r.cut ? ordered_json(r.cut->maxcut_value) : ordered_json(nullptr);
  j["defect"] = r.cut ? ordered_json(r.cut->defect) : ordered_json(nullptr);
  j["oct"] = r.oct ? ordered_json(r.oct->oct_value) : ordered_json(nullptr);
  j["vf"] = opt_json(r.vf);
  j["bounds"] = {{"lower_def", real_json(r.bounds.lower_def)},
                 {"lower_spectral", real_json(r.bounds.lower_spectral)},
                 {"lower_combined", real_json(r.bounds.lower_combined)},
                 {"active", opt_json(r.bounds.active)},
                 {"upper_amplified", opt_json(r.bounds.upper_amplified)},
                 {"cubic_oct_spectral", real_json(r.bounds.cubic_oct_spectral)}};
  ordered_json w;
  if (r.frustration) {
    ordered_json rev = ordered_json::array();
    for (int e = 0; e < r.m; ++e)
      if (r.frustration->witness.sign(e) < 0) rev.push_back(e);
    w["reversed_edges"] = rev;
  } else {
    w["reversed_edges"] = nullptr;
  }
  w["cut_side"] = r.cut ? bit_positions(r.cut->partition) : ordered_json(nullptr);
  w["defect_edges"] = r.cut ? bit_positions(r.cut->defect_edges) : ordered_json(nullptr);
  w["oct_set"] = r.oct ? bit_positions(r.oct->transversal) : ordered_json(nullptr);
  j["witnesses"] = w;
  if (r.timings.empty()) {
    j["timings"] = nullptr;
  } else {
    ordered_json t;
    for (const auto& [stage, ms] : r.timings) t[stage] = round12(ms);
    j["timings"] = t;
  }
  j["timeout_flag"] = r.timeout_flag();
  j["timeouts"] = r.timeouts;
  j["limited"] = r.limited;
  j["skipped"] = r.skipped;
  j["violations"] = report_violations(r);
  return j;
}

std::string report_to_table(const InvariantReport& r) {
  std::ostringstream os;
  auto row = [&](const std::string& k, const std::string& v) { os << "| " << k << " | " << v << " |\n"; };
  auto opt_int = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
  auto opt_real = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string("-"); };
  os << "| quantity | value |\n|---|---|\n";
  row("graph6", r.graph6);
  row("n", std::to_string(r.n));
  row("m", std::to_string(r.m));
  if (r.census) {
    row("t_plus", std::to_string(r.census->t_plus));
    row("t_minus", std::to_string(r.census->t_minus));
    row("T", std::to_string(r.census->total));
    row("delta3", std::to_string(r.census->delta3));
    row("tau3", r.census->tau3 ? std::to_string(r.census->tau3->numerator()) + "/" +
                                     std::to_string(r.census->tau3->denominator())
                               : "undefined");
  }
  if (r.inertia) {
    row("inertia", "(" + std::to_string(r.inertia->positive) + "," + std::to_string(r.inertia->negative) +
                       "," + std::to_string(r.inertia->zero) + ")" + (r.inertia->uncertain ? " uncertain" : ""));
  }
  row("lambda_max", opt_real(r.lambda_max));
  row("l_alg", r.frustration ? std::to_string(r.frustration->best_value) : "-");
  row("m_energy", opt_int(r.m_energy));
  row("maxcut", r.cut ? std::to_string(r.cut->maxcut_value) : "-");
  row("defect", r.cut ? std::to_string(r.cut->defect) : "-");
  row("oct", r.oct ? std::to_string(r.oct->oct_value) : "-");
  row("vf", opt_int(r.vf));
  row("lower_spectral", opt_real(r.bounds.lower_spectral));
  row("lower_combined", opt_real(r.bounds.lower_combined) + (r.bounds.active ? " (" + *r.bounds.active + ")" : ""));
  row("upper_amplified", opt_int(r.bounds.upper_amplified));
  if (r.bounds.cubic_oct_spectral) row("cubic_oct_spectral", opt_real(r.bounds.cubic_oct_spectral));
  if (!r.timeouts.empty()) {
    std::string s;
    for (const auto& t : r.timeouts) s += (s.empty() ? "" : ",") + t;
    row("timeouts", s);
  }
  return os.str();
}

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

std::vector<std::pair<std::size_t, std::size_t>> line_cospectral_pairs(
    const std::vector<SimpleGraph>& graphs) {
  std::map<std::tuple<int, int, std::vector<int>>, std::vector<std::size_t>> coarse;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto deg = graphs[i].degrees();
    std::sort(deg.begin(), deg.end(), std::greater<>());
    coarse[{graphs[i].vertex_count(), graphs[i].edge_count(), deg}].push_back(i);
  }
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [key, members] : coarse) {
    if (members.size() < 2) continue;
    std::map<std::vector<std::string>, std::vector<std::size_t>> fine;
    for (std::size_t i : members) {
      const int m = graphs[i].edge_count();
      fine[m == 0 ? std::vector<std::string>{} : power_traces(line_graph(graphs[i]), m)].push_back(i);
    }
    for (const auto& [traces, group] : fine)
      for (std::size_t a = 0; a < group.size(); ++a)
        for (std::size_t b = a + 1; b < group.size(); ++b) out.emplace_back(group[a], group[b]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SweepSummary summarize(const std::vector<SimpleGraph>& graphs,
                       const std::vector<InvariantReport>& reports) {
  SweepSummary s;
  s.instances = reports.size();
  std::vector<double> ls, defs;
  for (const auto& r : reports) {
    if (r.timeout_flag()) ++s.timeouts;
    if (!r.limited.empty()) ++s.resource_limited;
    if (r.frustration && r.cut) {
      ++s.completed;
      ls.push_back(static_cast<double>(r.frustration->best_value));
      defs.push_back(r.cut->defect);
    }
  }
  s.pearson_r = pearson(ls, defs);
  for (const auto& [a, b] : line_cospectral_pairs(graphs)) {
    PairRecord p;
    p.first = a;
    p.second = b;
    p.graph6_first = reports[a].graph6;
    p.graph6_second = reports[b].graph6;
    const auto& ra = reports[a];
    const auto& rb = reports[b];
    p.delta3_separated = ra.census && rb.census && ra.census->delta3 != rb.census->delta3;
    p.inertia_separated = ra.inertia && rb.inertia && !(*ra.inertia == *rb.inertia);
    p.inertia_uncertain = (ra.inertia && ra.inertia->uncertain) || (rb.inertia && rb.inertia->uncertain);
    if (p.delta3_separated) ++s.delta3_separated;
    if (p.inertia_separated) ++s.inertia_separated;
    s.pairs.push_back(std::move(p));
  }
  return s;
}

ordered_json summary_to_json(const SweepSummary& s) {
  ordered_json j;
  j["instances"] = s.instances;
  j["completed"] = s.completed;
  j["timeouts"] = s.timeouts;
  j["resource_limited"] = s.resource_limited;
  j["malformed"] = s.malformed;
  j["pearson_r"] = s.pearson_r ? ordered_json(round12(*s.pearson_r)) : ordered_json(nullptr);
  j["pair_count"] = s.pairs.size();
  j["delta3_separated"] = s.delta3_separated;
  j["inertia_separated"] = s.inertia_separated;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : s.pairs) {
    pairs.push_back({{"first", p.graph6_first},
                     {"second", p.graph6_second},
                     {"delta3_separated", p.delta3_separated},
                     {"inertia_separated", p.inertia_separated},
                     {"inertia_uncertain", p.inertia_uncertain}});
  }
  j["pairs"] = pairs;
  return j;
}

}  // namespace alg
