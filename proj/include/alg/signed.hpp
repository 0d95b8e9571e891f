#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "alg/graph.hpp"

namespace alg {

/// Underlying simple graph plus a ±1 sign per canonical edge.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(SimpleGraph underlying, std::vector<int8_t> signs);

  static SignedGraph all_positive(SimpleGraph underlying);

  const SimpleGraph& underlying() const noexcept { return underlying_; }
  const std::vector<int8_t>& signs() const noexcept { return signs_; }
  int sign(int e) const { return signs_.at(e); }
  /// Sign of the edge xy; throws std::invalid_argument if xy is not an edge.
  int sign_between(int x, int y) const;
  int negative_edge_count() const;

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  SimpleGraph underlying_;
  std::vector<int8_t> signs_;
};

/// Subset of the vertices of a signed graph.
using SwitchingSet = boost::dynamic_bitset<>;

SwitchingSet make_switching_set(int vertex_count, const std::vector<int>& members);

/// The antisymmetric line graph: underlying L(g), and adjacent edges e,f
/// meeting at v get sign D[v][e]*D[v][f], i.e. +1 when both enter or both
/// leave v and -1 for a directed 2-path through v.
SignedGraph build_alg(const SimpleGraph& g, const Orientation& o);

/// Zero diagonal, ±1 at signed adjacencies.
DenseSymmetricMatrix signed_adjacency_matrix(const SignedGraph& s);

/// Negates every edge with exactly one endpoint in F.
SignedGraph switched(const SignedGraph& s, const SwitchingSet& f);

/// Reorienting the edges F of g and building A(g) gives the same signed graph
/// as switching A(g) at the vertex set F.
bool orientation_switch_consistency(const SimpleGraph& g, const Orientation& o,
                                    const std::vector<int>& f_edges);

/// 2^(m - c(L(g))), the number of signings reachable by orientations.
boost::multiprecision::cpp_int switching_class_size(const SimpleGraph& g);

/// Product of edge signs along a cycle given as a vertex sequence (closing
/// edge implied). Throws std::invalid_argument if the sequence is not a
/// cycle with distinct vertices.
int cycle_sign(const SignedGraph& s, const std::vector<int>& cycle);

/// Simple cycles of length 3..max_len, each once: anchored at its smallest
/// vertex, with second vertex smaller than the last.
std::vector<std::vector<int>> simple_cycles(const SimpleGraph& g, int max_len);
/// Chordless cycles of length min_len..max_len, same conventions.
std::vector<std::vector<int>> induced_cycles(const SimpleGraph& g, int min_len, int max_len);

/// Every simple cycle of g (length <= max_len) lifts to a cycle of sign
/// (-1)^k in A(g, o).
bool lifted_cycle_parity_check(const SimpleGraph& g, int max_len = 8);
bool lifted_cycle_parity_check(const SimpleGraph& g, const Orientation& o, int max_len);

struct NormalForm {
  SignedGraph graph;
  SwitchingSet switching;
};

/// Switches so the BFS spanning forest (rooted at each component's smallest
/// vertex, neighbors in index order) is all positive.
NormalForm switching_normal_form(const SignedGraph& s);

bool is_balanced(const SignedGraph& s);

/// Labeled switching equivalence. Throws std::invalid_argument if the
/// underlying graphs differ.
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

enum class WhitneyRoot { kTriangle, kStar };

/// For a signing of K3: a negative triangle comes from the root K3, a
/// positive one from K1,3. Throws std::invalid_argument otherwise.
WhitneyRoot whitney_disambiguate(const SignedGraph& s);
const char* to_string(WhitneyRoot r);

struct CycleViolation {
  std::vector<int> cycle;
  int sign;
};

/// Induced cycles of length 4..max_len whose sign is not (-1)^k.
std::vector<CycleViolation> audit_induced_cycle_signs(const SignedGraph& s, int max_len);

/// "u v s" lines with s in {+1,-1}; '#' comments; optional "n=<count>".
SignedGraph parse_signed_edge_list(const std::string& text);
std::string to_signed_edge_list(const SignedGraph& s);
/// {"vertex_count", "edges": [[u,v],...], "signs": {"<edge index>": ±1}}.
std::string signs_to_json(const SignedGraph& s);

}  // namespace alg
