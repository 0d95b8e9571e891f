#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "alg/graph.hpp"

namespace alg {

using Bitset = boost::dynamic_bitset<>;

/// Hard size limits for the exact searches. Exceeding one raises
/// ResourceLimitError; nothing is silently truncated.
struct SearchLimits {
  int max_edges_orientation = 32;  // frustration index, imbalance energy
  int max_vertices_maxcut = 28;
  int max_vertices_oct = 24;
  int max_vertices_packing = 10;
};

/// Optional wall-clock cutoff, polled by the searches.
class Deadline {
 public:
  Deadline() = default;
  static Deadline after(std::chrono::milliseconds budget);

  bool expired() const;
  /// Throws TimeoutError naming `stage` once expired.
  void check(const char* stage) const;

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

struct SearchOptions {
  SearchLimits limits;
  Deadline deadline;
  /// Workers for the frustration branch and bound. Results do not depend on it.
  int threads = 1;
};

/// Minimum of sum_v d+(v) d-(v) over orientations, with a witness.
struct OrientationSearchResult {
  std::int64_t best_value = 0;
  Orientation witness;
  std::uint64_t nodes_explored = 0;
};

struct CutResult {
  int maxcut_value = 0;
  int defect = 0;
  Bitset partition;     // bit v set: v on side 1; vertex 0 always on side 0
  Bitset defect_edges;  // by canonical edge index
};

struct OctResult {
  int oct_value = 0;
  Bitset transversal;
};

/// Strict lexicographic order on equal-length bitsets, index 0 first.
bool lex_less(const Bitset& a, const Bitset& b);

/// sum_v d+(v) d-(v): the number of directed 2-paths, which is the number of
/// negative edges of build_alg(g, o).
std::int64_t directed_two_path_count(const SimpleGraph& g, const Orientation& o);

/// Exact frustration index of A(g) by branch and bound over orientations.
/// The smallest edge of every component is held at the reference direction.
/// Partial orientations are bounded by sum_v min((in+r)out, in(out+r)) where
/// r counts undecided edges at v. The witness is the lexicographically
/// smallest optimal reversal mask.
OrientationSearchResult frustration_index_exact(const SimpleGraph& g,
                                                const SearchOptions& opts = {});

/// max over x in {±1}^E of ||Dx||^2, by Gray-code enumeration of the same
/// orientation quotient with O(1) incremental updates.
std::int64_t max_imbalance_energy(const SimpleGraph& g, const SearchOptions& opts = {});

/// 4*l + M == sum_v d(v)^2, each side from its own search.
bool imbalance_identity_check(const SimpleGraph& g, const SearchOptions& opts = {});

/// Exact Max-Cut over the 2^(n-1) bipartitions with vertex 0 on side 0,
/// enumerated in Gray-code order. Ties go to the lexicographically smallest
/// partition.
CutResult maxcut_exact(const SimpleGraph& g, const SearchOptions& opts = {});

/// Minimum odd cycle transversal: iterative deepening that branches on the
/// vertices of an odd cycle, followed by a greedy pass that fixes the
/// lexicographically smallest transversal of that size.
OctResult oct_exact(const SimpleGraph& g, const SearchOptions& opts = {});

/// Smallest number of edges whose deletion leaves g bipartite, found by
/// branching on the edges of odd cycles. This is vf(A(g)) computed on the
/// edge side; throws std::logic_error if it disagrees with the Max-Cut
/// defect.
int vertex_frustration(const SimpleGraph& g, const SearchOptions& opts = {});
/// Same search without the cross-check against Max-Cut.
int min_bipartizing_edge_deletion(const SimpleGraph& g, const SearchOptions& opts = {});

/// sum over defect edges uv of min(d(u)-1, d(v)-1). Throws
/// std::invalid_argument if `cut` is not a maximum cut of g.
std::int64_t defect_amplification_upper(const SimpleGraph& g, const CutResult& cut,
                                        const SearchOptions& opts = {});

/// Orientation attaining at most the amplification bound: cut edges from
/// side 0 to side 1, defect edges on side 0 toward their lower-degree end,
/// on side 1 away from it.
Orientation amplification_orientation(const SimpleGraph& g, const CutResult& cut);

/// Maximum number of pairwise edge-disjoint odd cycles.
int odd_cycle_packing(const SimpleGraph& g, const SearchOptions& opts = {});
/// Maximum number of pairwise edge-disjoint triangles.
int triangle_packing(const SimpleGraph& g);

struct CubicExactness {
  std::int64_t frustration = 0;
  int oct = 0;
  int witness_mixed = 0;          // |Mix| of the optimal orientation
  bool mixed_is_transversal = false;
  bool holds = false;             // frustration == 2*oct and |Mix| == oct
};

/// Both sides of l(A(g)) = 2 oct(g) from independent searches, plus the
/// mixed-vertex certificate. Throws std::invalid_argument unless g is
/// 3-regular.
CubicExactness cubic_exactness(const SimpleGraph& g, const SearchOptions& opts = {});
bool cubic_exactness_check(const SimpleGraph& g, const SearchOptions& opts = {});

/// Elementary symmetric sum e3 of the part sizes.
std::int64_t complete_multipartite_closed_form(std::span<const int> parts);

}  // namespace alg
