#include "alg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "alg/errors.hpp"

namespace alg {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), neighbors_(n), incident_(n) {
  for (int e = 0; e < edge_count(); ++e) {
    const auto [u, v] = edges_[e];
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    incident_[u].push_back(e);
    incident_[v].push_back(e);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

SimpleGraph SimpleGraph::from_edge_list(std::span<const std::pair<int, int>> pairs,
                                        std::optional<int> n) {
  int max_endpoint = -1;
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a == b) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    if (a < 0 || b < 0) {
      throw std::invalid_argument("negative vertex index");
    }
    edges.push_back({std::min(a, b), std::max(a, b)});
    max_endpoint = std::max({max_endpoint, a, b});
  }
  if (n && max_endpoint >= *n) {
    throw std::invalid_argument("endpoint " + std::to_string(max_endpoint) +
                                " outside vertex range [0, " + std::to_string(*n) + ")");
  }
  if (n && *n < 0) throw std::invalid_argument("negative vertex count");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return SimpleGraph(n.value_or(max_endpoint + 1), std::move(edges));
}

int SimpleGraph::max_degree() const noexcept {
  int best = 0;
  for (const auto& nb : neighbors_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  const auto& nb = neighbors_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> SimpleGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

bool SimpleGraph::is_regular() const noexcept {
  for (int v = 1; v < n_; ++v) {
    if (neighbors_[v].size() != neighbors_[0].size()) return false;
  }
  return true;
}

Orientation::Orientation(std::vector<int8_t> signs) : signs_(std::move(signs)) {
  for (auto s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("orientation sign must be +1 or -1");
  }
}

Orientation Orientation::reference(int edge_count) {
  return Orientation(std::vector<int8_t>(edge_count, 1));
}

Orientation Orientation::from_reversed_mask(int edge_count, std::uint64_t reversed) {
  std::vector<int8_t> s(edge_count, 1);
  for (int e = 0; e < edge_count && e < 64; ++e) {
    if ((reversed >> e) & 1U) s[e] = -1;
  }
  return Orientation(std::move(s));
}

Orientation Orientation::from_arcs(const SimpleGraph& g,
                                   std::span<const std::pair<int, int>> arcs) {
  std::vector<int8_t> s(g.edge_count(), 0);
  for (const auto& [tail, head] : arcs) {
    auto e = g.edge_index(tail, head);
    if (!e) throw std::invalid_argument("arc is not an edge of the graph");
    s[*e] = tail < head ? 1 : -1;
  }
  if (std::find(s.begin(), s.end(), 0) != s.end()) {
    throw std::invalid_argument("arcs do not cover every edge");
  }
  return Orientation(std::move(s));
}

std::pair<int, int> Orientation::arc(const SimpleGraph& g, int e) const {
  const Edge& ed = g.edge(e);
  return sign(e) > 0 ? std::pair{ed.u, ed.v} : std::pair{ed.v, ed.u};
}

Orientation Orientation::reversed_on(std::span<const int> edges) const {
  Orientation out = *this;
  for (int e : edges) out.signs_.at(e) = static_cast<int8_t>(-out.signs_.at(e));
  return out;
}

IncidenceMatrix::IncidenceMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

int IncidenceMatrix::rank() const {
  // Fraction-free elimination over the integers; entries stay small because
  // each column has two nonzeros.
  std::vector<std::vector<long long>> a(rows_, std::vector<long long>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) a[r][c] = at(r, c);
  int rank = 0;
  for (int c = 0; c < cols_ && rank < rows_; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows_; ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < rows_; ++r) {
      if (a[r][c] == 0) continue;
      const long long f = a[r][c];
      const long long p = a[rank][c];
      long long g = 0;
      for (int k = c; k < cols_; ++k) {
        a[r][k] = a[r][k] * p - a[rank][k] * f;
        g = std::gcd(g, a[r][k]);
      }
      if (g > 1)
        for (int k = c; k < cols_; ++k) a[r][k] /= g;
    }
    ++rank;
  }
  return rank;
}

DenseSymmetricMatrix::DenseSymmetricMatrix(int dim)
    : dim_(dim), data_(static_cast<std::size_t>(dim) * dim, 0.0) {}

DenseSymmetricMatrix DenseSymmetricMatrix::identity(int dim) {
  DenseSymmetricMatrix m(dim);
  m.add_diagonal(1.0);
  return m;
}

void DenseSymmetricMatrix::set(int i, int j, double value) {
  data_[static_cast<std::size_t>(i) * dim_ + j] = value;
  data_[static_cast<std::size_t>(j) * dim_ + i] = value;
}

void DenseSymmetricMatrix::add_diagonal(double value) {
  for (int i = 0; i < dim_; ++i) data_[static_cast<std::size_t>(i) * dim_ + i] += value;
}

double DenseSymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : data_) s += x * x;
  return std::sqrt(s);
}

IncidenceMatrix incidence_matrix(const SimpleGraph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw std::invalid_argument("orientation length " + std::to_string(o.size()) +
                                " does not match edge count " +
                                std::to_string(g.edge_count()));
  }
  IncidenceMatrix d(g.vertex_count(), g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [tail, head] = o.arc(g, e);
    d.set(head, e, 1);
    d.set(tail, e, -1);
  }
  return d;
}

DenseSymmetricMatrix laplacian(const SimpleGraph& g) {
  DenseSymmetricMatrix l(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) l.set(v, v, g.degree(v));
  for (const auto& [u, v] : g.edges()) l.set(u, v, -1.0);
  return l;
}

DenseSymmetricMatrix adjacency_matrix(const SimpleGraph& g) {
  DenseSymmetricMatrix a(g.vertex_count());
  for (const auto& [u, v] : g.edges()) a.set(u, v, 1.0);
  return a;
}

DenseSymmetricMatrix gram_of_columns(const IncidenceMatrix& d) {
  DenseSymmetricMatrix out(d.cols());
  for (int i = 0; i < d.cols(); ++i) {
    for (int j = i; j < d.cols(); ++j) {
      long long s = 0;
      for (int r = 0; r < d.rows(); ++r) s += d.at(r, i) * d.at(r, j);
      out.set(i, j, static_cast<double>(s));
    }
  }
  return out;
}

DenseSymmetricMatrix gram_of_rows(const IncidenceMatrix& d) {
  DenseSymmetricMatrix out(d.rows());
  for (int i = 0; i < d.rows(); ++i) {
    for (int j = i; j < d.rows(); ++j) {
      long long s = 0;
      for (int c = 0; c < d.cols(); ++c) s += d.at(i, c) * d.at(j, c);
      out.set(i, j, static_cast<double>(s));
    }
  }
  return out;
}

SimpleGraph line_graph(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) pairs.emplace_back(inc[i], inc[j]);
  }
  return SimpleGraph::from_edge_list(pairs, g.edge_count());
}

std::vector<int> connected_components(const SimpleGraph& g, int* count) {
  std::vector<int> label(g.vertex_count(), -1);
  int next = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (label[s] >= 0) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : g.neighbors(x)) {
        if (label[y] < 0) {
          label[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

int component_count(const SimpleGraph& g) {
  int c = 0;
  connected_components(g, &c);
  return c;
}

bool is_connected(const SimpleGraph& g) { return component_count(g) <= 1; }

std::optional<std::vector<int>> two_coloring(const SimpleGraph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  std::queue<int> q;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          q.push(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const SimpleGraph& g) { return two_coloring(g).has_value(); }

std::vector<int> find_odd_cycle(const SimpleGraph& g, const std::vector<bool>& removed) {
  const int n = g.vertex_count();
  auto gone = [&](int v) { return !removed.empty() && removed[v]; };
  std::vector<int> depth(n, -1), parent(n, -1);
  std::queue<int> q;
  for (int s = 0; s < n; ++s) {
    if (gone(s) || depth[s] >= 0) continue;
    depth[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : g.neighbors(x)) {
        if (gone(y)) continue;
        if (depth[y] < 0) {
          depth[y] = depth[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (depth[y] == depth[x]) {
          // Same BFS layer: walk both sides up to the common ancestor.
          std::vector<int> left{x}, right{y};
          int a = x, b = y;
          while (a != b) {
            a = parent[a];
            b = parent[b];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          return left;
        }
      }
    }
  }
  return {};
}

std::int64_t triangle_count(const SimpleGraph& g) {
  std::int64_t count = 0;
  for (const auto& [u, v] : g.edges()) {
    const auto& a = g.neighbors(u);
    const auto& b = g.neighbors(v);
    // Only count w > v so each triangle u<v<w is seen once.
    auto ia = std::upper_bound(a.begin(), a.end(), v);
    auto ib = std::upper_bound(b.begin(), b.end(), v);
    while (ia != a.end() && ib != b.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        ++count;
        ++ia;
        ++ib;
      }
    }
  }
  return count;
}

BasicStats basic_stats(const SimpleGraph& g) {
  BasicStats s;
  s.degrees = g.degrees();
  s.triangles = triangle_count(g);
  s.bipartite = is_bipartite(g);
  s.components = component_count(g);
  s.line_graph_components = component_count(line_graph(g));
  return s;
}

SimpleGraph without_edges(const SimpleGraph& g, const std::vector<bool>& drop) {
  std::vector<std::pair<int, int>> pairs;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!drop[e]) pairs.emplace_back(g.edge(e).u, g.edge(e).v);
  }
  return SimpleGraph::from_edge_list(pairs, g.vertex_count());
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<bool>& keep) {
  std::vector<int> index(g.vertex_count(), -1);
  int k = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (keep[v]) index[v] = k++;
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [u, v] : g.edges()) {
    if (keep[u] && keep[v]) pairs.emplace_back(index[u], index[v]);
  }
  return SimpleGraph::from_edge_list(pairs, k);
}

SimpleGraph relabeled(const SimpleGraph& g, std::span<const int> perm) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.edge_count());
  for (const auto& [u, v] : g.edges()) pairs.emplace_back(perm[u], perm[v]);
  return SimpleGraph::from_edge_list(pairs, g.vertex_count());
}

namespace {

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

SimpleGraph parse_edge_list(const std::string& text) {
  std::optional<int> n;
  bool seen_content = false;
  std::vector<std::pair<int, int>> pairs;
  std::size_t offset = 0;
  std::string_view all(text);
  while (offset <= all.size()) {
    std::size_t end = all.find('\n', offset);
    if (end == std::string_view::npos) end = all.size();
    std::string_view line = all.substr(offset, end - offset);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_ws(line);
    if (!tokens.empty()) {
      if (!seen_content && tokens.size() == 1 && tokens[0].starts_with("n=")) {
        int count = 0;
        if (!parse_int(tokens[0].substr(2), count) || count < 0) {
          throw ParseError("bad vertex count header", offset);
        }
        n = count;
      } else {
        int a = 0, b = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
          throw ParseError("expected \"u v\" pair", offset);
        }
        if (a < 0 || b < 0) throw ParseError("negative vertex index", offset);
        if (a == b) throw ParseError("self-loop", offset);
        if (n && (a >= *n || b >= *n)) throw ParseError("endpoint outside declared range", offset);
        pairs.emplace_back(a, b);
      }
      seen_content = true;
    }
    offset = end + 1;
  }
  return SimpleGraph::from_edge_list(pairs, n);
}

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream os;
  os << "n=" << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

}  // namespace alg
