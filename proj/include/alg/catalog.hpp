#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "alg/graph.hpp"

namespace alg::catalog {

/// Largest n accepted by canonical_code.
inline constexpr int kMaxCanonicalVertices = 11;
inline constexpr int kMaxEnumerationVertices = 8;
inline constexpr int kMaxEnumerationEdges = 14;

/// Vertex order (position -> vertex) of the canonical labeling: the
/// individualization-refinement leaf with the largest upper-triangle
/// adjacency code.
std::vector<int> canonical_order(const SimpleGraph& g);
/// The graph relabeled into its canonical order.
SimpleGraph canonical_form(const SimpleGraph& g);
/// graph6 string of canonical_form; equal iff the graphs are isomorphic.
std::string canonical_key(const SimpleGraph& g);
/// Canonical upper-triangle adjacency word, first pair most significant.
std::uint64_t canonical_code(const SimpleGraph& g);

/// One representative per isomorphism class on exactly n vertices, sorted by
/// (edge count, canonical key), each in canonical labeling. Isolated
/// vertices allowed unless connected_only.
std::vector<SimpleGraph> enumerate_graphs(int n, bool connected_only);

/// One representative per isomorphism class of connected graphs with at
/// most m_max edges (any vertex count), sorted by (edge count, vertex count,
/// canonical key).
std::vector<SimpleGraph> connected_graphs_by_edges(int m_max);

/// Union of enumerate_graphs(k, true) for k in [1, n_max].
std::vector<SimpleGraph> connected_graphs_up_to(int n_max);

/// One representative per isomorphism class of connected 3-regular graphs on
/// exactly n vertices (n even, 4 <= n <= kMaxCubicVertices), sorted by
/// canonical key, each in canonical labeling.
std::vector<SimpleGraph> connected_cubic_graphs(int n);
inline constexpr int kMaxCubicVertices = 14;

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

/// Cubic graphs on at most `n_max` vertices with fixed constructions
/// (K4, K3,3, prisms, Mobius ladders, Petersen, Franklin, Frucht,
/// truncated tetrahedron, ...).
std::vector<NamedGraph> cubic_catalog(int n_max);

// Explicit graphs used in the worked examples.

/// Same degree sequence and line-graph spectrum; signed inertias differ.
std::pair<SimpleGraph, SimpleGraph> inertia_separated_pair();
/// Same degree sequence and line-graph spectrum; signed inertias agree.
std::pair<SimpleGraph, SimpleGraph> inertia_matched_pair();
/// Equal Max-Cut defect (2) but different frustration index (2 vs 4).
std::pair<SimpleGraph, SimpleGraph> defect_witness_pair();

}  // namespace alg::catalog
