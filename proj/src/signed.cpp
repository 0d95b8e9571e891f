#include "alg/signed.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "alg/errors.hpp"

namespace alg {

SignedGraph::SignedGraph(SimpleGraph underlying, std::vector<int8_t> signs)
    : underlying_(std::move(underlying)), signs_(std::move(signs)) {
  if (static_cast<int>(signs_.size()) != underlying_.edge_count()) {
    throw std::invalid_argument("sign vector length does not match edge count");
  }
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("edge sign must be +1 or -1");
  }
}

SignedGraph SignedGraph::all_positive(SimpleGraph underlying) {
  const int m = underlying.edge_count();
  return SignedGraph(std::move(underlying), std::vector<int8_t>(m, 1));
}

int SignedGraph::sign_between(int x, int y) const {
  auto e = underlying_.edge_index(x, y);
  if (!e) {
    throw std::invalid_argument("no edge between " + std::to_string(x) + " and " +
                                std::to_string(y));
  }
  return signs_[*e];
}

int SignedGraph::negative_edge_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

SwitchingSet make_switching_set(int vertex_count, const std::vector<int>& members) {
  SwitchingSet f(vertex_count);
  for (int v : members) f.set(v);
  return f;
}

namespace {

// +1 if v is the head of edge e, -1 if the tail.
int incidence(const SimpleGraph& g, const Orientation& o, int v, int e) {
  return o.arc(g, e).second == v ? 1 : -1;
}

int shared_vertex(const SimpleGraph& g, int e, int f) {
  const Edge a = g.edge(e);
  const Edge b = g.edge(f);
  if (a.u == b.u || a.u == b.v) return a.u;
  return a.v;
}

}  // namespace

SignedGraph build_alg(const SimpleGraph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw std::invalid_argument("orientation length does not match edge count");
  }
  SimpleGraph lg = line_graph(g);
  std::vector<int8_t> signs(lg.edge_count());
  for (int k = 0; k < lg.edge_count(); ++k) {
    const auto [e, f] = lg.edge(k);
    const int v = shared_vertex(g, e, f);
    signs[k] = static_cast<int8_t>(incidence(g, o, v, e) * incidence(g, o, v, f));
  }
  return SignedGraph(std::move(lg), std::move(signs));
}

DenseSymmetricMatrix signed_adjacency_matrix(const SignedGraph& s) {
  const SimpleGraph& g = s.underlying();
  DenseSymmetricMatrix m(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) m.set(g.edge(e).u, g.edge(e).v, s.sign(e));
  return m;
}

SignedGraph switched(const SignedGraph& s, const SwitchingSet& f) {
  const SimpleGraph& g = s.underlying();
  if (static_cast<int>(f.size()) != g.vertex_count()) {
    throw std::invalid_argument("switching set size does not match vertex count");
  }
  std::vector<int8_t> signs = s.signs();
  for (int e = 0; e < g.edge_count(); ++e) {
    if (f.test(g.edge(e).u) != f.test(g.edge(e).v)) signs[e] = static_cast<int8_t>(-signs[e]);
  }
  return SignedGraph(g, std::move(signs));
}

bool orientation_switch_consistency(const SimpleGraph& g, const Orientation& o,
                                    const std::vector<int>& f_edges) {
  for (int e : f_edges) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("edge index out of range");
  }
  const SignedGraph reoriented = build_alg(g, o.reversed_on(f_edges));
  const SignedGraph switched_alg = switched(build_alg(g, o), make_switching_set(g.edge_count(), f_edges));
  return reoriented == switched_alg;
}

boost::multiprecision::cpp_int switching_class_size(const SimpleGraph& g) {
  const int exponent = g.edge_count() - component_count(line_graph(g));
  boost::multiprecision::cpp_int size = 1;
  size <<= exponent;
  return size;
}

int cycle_sign(const SignedGraph& s, const std::vector<int>& cycle) {
  const SimpleGraph& g = s.underlying();
  const std::size_t k = cycle.size();
  if (k < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<int> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("cycle repeats a vertex");
  }
  int sign = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const int x = cycle[i];
    const int y = cycle[(i + 1) % k];
    auto e = g.edge_index(x, y);
    if (!e) {
      throw std::invalid_argument("consecutive cycle vertices " + std::to_string(x) + "," +
                                  std::to_string(y) + " are not adjacent");
    }
    sign *= s.sign(*e);
  }
  return sign;
}

namespace {

class CycleEnumerator {
 public:
  CycleEnumerator(const SimpleGraph& g, int min_len, int max_len, bool induced)
      : g_(g), min_len_(min_len), max_len_(max_len), induced_(induced),
        on_path_(g.vertex_count(), false) {}

  std::vector<std::vector<int>> run() {
    for (int s = 0; s < g_.vertex_count(); ++s) {
      anchor_ = s;
      path_ = {s};
      on_path_[s] = true;
      extend();
      on_path_[s] = false;
    }
    return std::move(out_);
  }

 private:
  void record() {
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && len >= min_len_ && path_[1] < path_.back()) out_.push_back(path_);
  }

  // True if w touches an interior path vertex (anything but the anchor and
  // the current tail), which would be a chord.
  bool makes_chord(int w) const {
    for (std::size_t i = 1; i + 1 < path_.size(); ++i) {
      if (g_.has_edge(w, path_[i])) return true;
    }
    return false;
  }

  void extend() {
    const int tail = path_.back();
    const int len = static_cast<int>(path_.size());
    for (int w : g_.neighbors(tail)) {
      if (w == anchor_) {
        if (!induced_ && len >= 3) record();
        continue;
      }
      if (w < anchor_ || on_path_[w]) continue;
      if (induced_) {
        if (makes_chord(w)) continue;
        if (len >= 2 && g_.has_edge(w, anchor_)) {
          if (len + 1 > max_len_) continue;
          path_.push_back(w);
          record();
          path_.pop_back();
          continue;
        }
      }
      if (len >= max_len_) continue;
      path_.push_back(w);
      on_path_[w] = true;
      extend();
      on_path_[w] = false;
      path_.pop_back();
    }
  }

  const SimpleGraph& g_;
  int min_len_;
  int max_len_;
  bool induced_;
  int anchor_ = 0;
  std::vector<int> path_;
  std::vector<bool> on_path_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

std::vector<std::vector<int>> simple_cycles(const SimpleGraph& g, int max_len) {
  return CycleEnumerator(g, 3, max_len, false).run();
}

std::vector<std::vector<int>> induced_cycles(const SimpleGraph& g, int min_len, int max_len) {
  return CycleEnumerator(g, min_len, max_len, true).run();
}

bool lifted_cycle_parity_check(const SimpleGraph& g, int max_len) {
  return lifted_cycle_parity_check(g, Orientation::reference(g.edge_count()), max_len);
}

bool lifted_cycle_parity_check(const SimpleGraph& g, const Orientation& o, int max_len) {
  const SignedGraph alg = build_alg(g, o);
  for (const auto& cycle : simple_cycles(g, max_len)) {
    const std::size_t k = cycle.size();
    std::vector<int> lifted(k);
    for (std::size_t i = 0; i < k; ++i) lifted[i] = *g.edge_index(cycle[i], cycle[(i + 1) % k]);
    const int expected = k % 2 == 0 ? 1 : -1;
    if (cycle_sign(alg, lifted) != expected) return false;
  }
  return true;
}

NormalForm switching_normal_form(const SignedGraph& s) {
  const SimpleGraph& g = s.underlying();
  const int n = g.vertex_count();
  std::vector<int> potential(n, 0);
  std::queue<int> q;
  for (int root = 0; root < n; ++root) {
    if (potential[root] != 0) continue;
    potential[root] = 1;
    q.push(root);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (potential[y] != 0) continue;
        potential[y] = potential[x] * s.sign(*g.edge_index(x, y));
        q.push(y);
      }
    }
  }
  SwitchingSet f(n);
  for (int v = 0; v < n; ++v)
    if (potential[v] < 0) f.set(v);
  return {switched(s, f), f};
}

bool is_balanced(const SignedGraph& s) {
  return switching_normal_form(s).graph.negative_edge_count() == 0;
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!(a.underlying() == b.underlying())) {
    throw std::invalid_argument("switching equivalence needs the same labeled underlying graph");
  }
  return switching_normal_form(a).graph.signs() == switching_normal_form(b).graph.signs();
}

WhitneyRoot whitney_disambiguate(const SignedGraph& s) {
  const SimpleGraph& g = s.underlying();
  if (g.vertex_count() != 3 || g.edge_count() != 3) {
    throw std::invalid_argument("Whitney disambiguation needs an underlying K3");
  }
  return cycle_sign(s, {0, 1, 2}) < 0 ? WhitneyRoot::kTriangle : WhitneyRoot::kStar;
}

const char* to_string(WhitneyRoot r) {
  return r == WhitneyRoot::kTriangle ? "TRIANGLE_ROOT" : "STAR_ROOT";
}

std::vector<CycleViolation> audit_induced_cycle_signs(const SignedGraph& s, int max_len) {
  if (max_len < 4) throw std::invalid_argument("audit needs max_len >= 4");
  std::vector<CycleViolation> out;
  for (auto& cycle : induced_cycles(s.underlying(), 4, max_len)) {
    const int sign = cycle_sign(s, cycle);
    const int expected = cycle.size() % 2 == 0 ? 1 : -1;
    if (sign != expected) out.push_back({std::move(cycle), sign});
  }
  return out;
}

SignedGraph parse_signed_edge_list(const std::string& text) {
  std::optional<int> n;
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> signs;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!seen_content && tok.size() == 1 && tok[0].rfind("n=", 0) == 0) {
      try {
        n = std::stoi(tok[0].substr(2));
      } catch (const std::exception&) {
        throw ParseError("bad vertex count header", line_start);
      }
      seen_content = true;
      continue;
    }
    seen_content = true;
    if (tok.size() != 3) throw ParseError("expected \"u v s\"", line_start);
    int u = 0, v = 0;
    try {
      std::size_t pu = 0, pv = 0;
      u = std::stoi(tok[0], &pu);
      v = std::stoi(tok[1], &pv);
      if (pu != tok[0].size() || pv != tok[1].size()) throw std::invalid_argument("junk");
    } catch (const std::exception&) {
      throw ParseError("bad vertex index", line_start);
    }
    int sgn = 0;
    if (tok[2] == "+1" || tok[2] == "1" || tok[2] == "+") {
      sgn = 1;
    } else if (tok[2] == "-1" || tok[2] == "-") {
      sgn = -1;
    } else {
      throw ParseError("sign must be +1 or -1", line_start);
    }
    if (u == v || u < 0 || v < 0) throw ParseError("bad edge", line_start);
    pairs.emplace_back(u, v);
    signs.push_back(sgn);
  }
  SimpleGraph g = SimpleGraph::from_edge_list(pairs, n);
  if (g.edge_count() != static_cast<int>(pairs.size())) {
    throw ParseError("duplicate edge in signed edge list", 0);
  }
  std::vector<int8_t> by_index(g.edge_count());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    by_index[*g.edge_index(pairs[i].first, pairs[i].second)] = static_cast<int8_t>(signs[i]);
  }
  return SignedGraph(std::move(g), std::move(by_index));
}

std::string to_signed_edge_list(const SignedGraph& s) {
  std::ostringstream os;
  os << "n=" << s.underlying().vertex_count() << '\n';
  for (int e = 0; e < s.underlying().edge_count(); ++e) {
    const Edge& ed = s.underlying().edge(e);
    os << ed.u << ' ' << ed.v << ' ' << (s.sign(e) > 0 ? "+1" : "-1") << '\n';
  }
  return os.str();
}

std::string signs_to_json(const SignedGraph& s) {
  nlohmann::ordered_json j;
  j["vertex_count"] = s.underlying().vertex_count();
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  nlohmann::ordered_json signs = nlohmann::ordered_json::object();
  for (int e = 0; e < s.underlying().edge_count(); ++e) {
    edges.push_back({s.underlying().edge(e).u, s.underlying().edge(e).v});
    signs[std::to_string(e)] = static_cast<int>(s.sign(e));
  }
  j["edges"] = std::move(edges);
  j["signs"] = std::move(signs);
  return j.dump();
}

}  // namespace alg
