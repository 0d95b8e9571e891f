#include "alg/invariants.hpp"

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "alg/errors.hpp"

namespace alg {

namespace {

using boost::multiprecision::cpp_int;

// Dense integer matrix, only what the trace formulas need.
struct IntMatrix {
  int dim;
  std::vector<std::int64_t> a;

  explicit IntMatrix(int d) : dim(d), a(static_cast<std::size_t>(d) * d, 0) {}
  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * dim + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * dim + j]; }
};

IntMatrix signed_matrix(const SignedGraph& s, bool absolute) {
  const SimpleGraph& g = s.underlying();
  IntMatrix m(g.vertex_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const int v = absolute ? 1 : s.sign(e);
    m.at(g.edge(e).u, g.edge(e).v) = v;
    m.at(g.edge(e).v, g.edge(e).u) = v;
  }
  return m;
}

IntMatrix square(const IntMatrix& m) {
  IntMatrix out(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int k = 0; k < m.dim; ++k) {
      const std::int64_t x = m.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < m.dim; ++j) out.at(i, j) += x * m.at(k, j);
    }
  return out;
}

// tr(M^3) = sum_{i,j} (M^2)_{ij} M_{ji}.
std::int64_t trace_cube(const IntMatrix& m) {
  const IntMatrix sq = square(m);
  std::int64_t t = 0;
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) t += sq.at(i, j) * m.at(j, i);
  return t;
}

std::int64_t choose3(std::int64_t d) { return d < 3 ? 0 : d * (d - 1) * (d - 2) / 6; }

std::vector<std::string> traces_of_powers(const std::vector<std::vector<int>>& m, int k_max) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<cpp_int>> power(n, std::vector<cpp_int>(n));
  for (int i = 0; i < n; ++i) power[i][i] = 1;
  std::vector<std::string> out;
  for (int k = 1; k <= k_max; ++k) {
    std::vector<std::vector<cpp_int>> next(n, std::vector<cpp_int>(n));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        const cpp_int& x = power[i][l];
        if (x == 0) continue;
        for (int j = 0; j < n; ++j)
          if (m[l][j] != 0) next[i][j] += x * m[l][j];
      }
    power = std::move(next);
    cpp_int t = 0;
    for (int i = 0; i < n; ++i) t += power[i][i];
    out.push_back(t.str());
  }
  return out;
}

}  // namespace

TriangleCensus make_census(std::int64_t t_plus, std::int64_t t_minus) {
  TriangleCensus c;
  c.t_plus = t_plus;
  c.t_minus = t_minus;
  c.total = t_plus + t_minus;
  c.delta3 = t_plus - t_minus;
  if (c.total > 0) c.tau3 = Rational(c.delta3, c.total);
  return c;
}

TriangleCensus triangle_census_combinatorial(const SimpleGraph& g) {
  std::int64_t tripods = 0;
  for (int v = 0; v < g.vertex_count(); ++v) tripods += choose3(g.degree(v));
  return make_census(tripods, triangle_count(g));
}

TriangleCensus triangle_census_trace(const SignedGraph& s) {
  const std::int64_t tr_s3 = trace_cube(signed_matrix(s, false));
  const std::int64_t tr_u3 = trace_cube(signed_matrix(s, true));
  if (tr_s3 % 6 != 0 || tr_u3 % 6 != 0) {
    throw NumericError("cubic trace not divisible by 6; adjacency matrix is corrupt");
  }
  const std::int64_t delta = tr_s3 / 6;
  const std::int64_t total = tr_u3 / 6;
  if ((total + delta) % 2 != 0) throw NumericError("triangle counts have inconsistent parity");
  return make_census((total + delta) / 2, (total - delta) / 2);
}

Rational fourth_trace_invariant(const SignedGraph& s, int m) {
  if (m <= 0) throw std::invalid_argument("fourth trace invariant needs at least one edge");
  const IntMatrix sq = square(signed_matrix(s, false));
  // S^2 is symmetric, so tr(S^4) = sum of squares of its entries.
  std::int64_t t = 0;
  for (std::int64_t x : sq.a) t += x * x;
  return Rational(t, static_cast<std::int64_t>(m) * m);
}

std::vector<std::string> signed_power_traces(const SignedGraph& s, int k_max) {
  const SimpleGraph& g = s.underlying();
  std::vector<std::vector<int>> m(g.vertex_count(), std::vector<int>(g.vertex_count(), 0));
  for (int e = 0; e < g.edge_count(); ++e) {
    m[g.edge(e).u][g.edge(e).v] = s.sign(e);
    m[g.edge(e).v][g.edge(e).u] = s.sign(e);
  }
  return traces_of_powers(m, k_max);
}

std::vector<std::string> power_traces(const SimpleGraph& g, int k_max) {
  return signed_power_traces(SignedGraph::all_positive(g), k_max);
}

bool bipartite_collapse_check(const SimpleGraph& g) {
  if (!is_bipartite(g)) throw std::invalid_argument("bipartite collapse needs a bipartite graph");
  const SignedGraph alg = build_alg(g, Orientation::reference(g.edge_count()));
  if (!switching_equivalent(alg, SignedGraph::all_positive(alg.underlying()))) return false;
  std::int64_t tripods = 0;
  for (int v = 0; v < g.vertex_count(); ++v) tripods += choose3(g.degree(v));
  return triangle_census_trace(alg).delta3 == tripods;
}

std::string census_to_json(const TriangleCensus& c) {
  nlohmann::ordered_json j;
  j["t_plus"] = c.t_plus;
  j["t_minus"] = c.t_minus;
  j["total"] = c.total;
  j["delta3"] = c.delta3;
  if (c.tau3) {
    j["tau3_num"] = c.tau3->numerator();
    j["tau3_den"] = c.tau3->denominator();
  } else {
    j["tau3_num"] = nullptr;
    j["tau3_den"] = nullptr;
  }
  return j.dump();
}

}  // namespace alg
