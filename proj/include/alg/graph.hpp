#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace alg {

struct Edge {
  int u;
  int v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Edges are stored once as (u,v) with u<v in strictly increasing
/// lexicographic order; the position of an edge in that order is its
/// canonical index and is used everywhere an edge-indexed vector appears
/// (orientations, signings, vertices of the line graph). Isolated vertices
/// are kept.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  /// Normalizes endpoints, drops duplicates, and sorts. Throws
  /// std::invalid_argument on loops or endpoints outside [0, n).
  static SimpleGraph from_edge_list(std::span<const std::pair<int, int>> pairs,
                                    std::optional<int> n = std::nullopt);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(int e) const { return edges_.at(e); }

  int degree(int v) const { return static_cast<int>(neighbors_.at(v).size()); }
  int max_degree() const noexcept;
  std::vector<int> degrees() const;

  /// Sorted neighbor list.
  const std::vector<int>& neighbors(int v) const { return neighbors_.at(v); }
  /// Canonical indices of edges incident to v, ascending.
  const std::vector<int>& incident_edges(int v) const { return incident_.at(v); }

  bool has_edge(int u, int v) const;
  std::optional<int> edge_index(int u, int v) const;

  bool is_regular() const noexcept;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  SimpleGraph(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> incident_;
};

/// ±1 per edge relative to the reference orientation u->v (u<v).
/// -1 means the edge is reversed to v->u.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<int8_t> signs);

  static Orientation reference(int edge_count);
  /// Bit e of `reversed` set means edge e points v->u.
  static Orientation from_reversed_mask(int edge_count, std::uint64_t reversed);
  /// Orientation giving every edge the direction tail->head.
  static Orientation from_arcs(const SimpleGraph& g,
                               std::span<const std::pair<int, int>> arcs);

  int size() const noexcept { return static_cast<int>(signs_.size()); }
  int sign(int e) const { return signs_.at(e); }
  const std::vector<int8_t>& signs() const noexcept { return signs_; }

  /// Tail and head of edge e in g under this orientation.
  std::pair<int, int> arc(const SimpleGraph& g, int e) const;

  /// Copy with the listed edges reversed.
  Orientation reversed_on(std::span<const int> edges) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<int8_t> signs_;
};

/// Oriented incidence matrix D (n x m): +1 at the head, -1 at the tail.
class IncidenceMatrix {
 public:
  IncidenceMatrix(int rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, int value) { data_[static_cast<std::size_t>(r) * cols_ + c] = value; }

  /// Rank over the rationals.
  int rank() const;

 private:
  int rows_;
  int cols_;
  std::vector<int> data_;
};

/// Real symmetric matrix, row-major. Writes go through set(), which keeps
/// both triangles identical.
class DenseSymmetricMatrix {
 public:
  DenseSymmetricMatrix() = default;
  explicit DenseSymmetricMatrix(int dim);

  static DenseSymmetricMatrix identity(int dim);

  int dim() const noexcept { return dim_; }
  double at(int i, int j) const { return data_[static_cast<std::size_t>(i) * dim_ + j]; }
  void set(int i, int j, double value);
  void add_diagonal(double value);

  std::span<const double> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * dim_, static_cast<std::size_t>(dim_)};
  }
  const std::vector<double>& data() const noexcept { return data_; }

  double frobenius_norm() const;

  friend bool operator==(const DenseSymmetricMatrix&, const DenseSymmetricMatrix&) = default;

 private:
  int dim_ = 0;
  std::vector<double> data_;
};

IncidenceMatrix incidence_matrix(const SimpleGraph& g, const Orientation& o);

/// L = diag(d) - A.
DenseSymmetricMatrix laplacian(const SimpleGraph& g);
DenseSymmetricMatrix adjacency_matrix(const SimpleGraph& g);

/// D^T D as a dense matrix (m x m).
DenseSymmetricMatrix gram_of_columns(const IncidenceMatrix& d);
/// D D^T as a dense matrix (n x n).
DenseSymmetricMatrix gram_of_rows(const IncidenceMatrix& d);

/// Vertex i of the result is canonical edge i of g.
SimpleGraph line_graph(const SimpleGraph& g);

/// Component label per vertex, labels numbered by smallest member.
std::vector<int> connected_components(const SimpleGraph& g, int* count = nullptr);
int component_count(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

/// Proper 2-coloring (0/1 per vertex) if one exists. Each component's
/// smallest vertex gets color 0.
std::optional<std::vector<int>> two_coloring(const SimpleGraph& g);
bool is_bipartite(const SimpleGraph& g);

/// Vertices of some odd cycle in g, in cycle order, or empty if bipartite.
/// `removed` marks vertices to ignore.
std::vector<int> find_odd_cycle(const SimpleGraph& g, const std::vector<bool>& removed = {});

/// Number of triangles via sorted adjacency intersection.
std::int64_t triangle_count(const SimpleGraph& g);

struct BasicStats {
  std::vector<int> degrees;
  std::int64_t triangles = 0;
  bool bipartite = false;
  int components = 0;
  int line_graph_components = 0;
};

BasicStats basic_stats(const SimpleGraph& g);

/// Subgraph keeping all vertices, minus the edges flagged in `drop`.
SimpleGraph without_edges(const SimpleGraph& g, const std::vector<bool>& drop);
/// Induced subgraph on kept vertices, relabeled in increasing order.
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<bool>& keep);

/// Relabels vertex v to perm[v].
SimpleGraph relabeled(const SimpleGraph& g, std::span<const int> perm);

/// Parses the plain edge-list text format: one "u v" per line, '#'
/// comments, optional first line "n=<count>".
SimpleGraph parse_edge_list(const std::string& text);
std::string to_edge_list(const SimpleGraph& g);

}  // namespace alg
