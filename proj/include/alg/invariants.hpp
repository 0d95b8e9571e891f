#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "alg/graph.hpp"
#include "alg/signed.hpp"

namespace alg {

using Rational = boost::rational<std::int64_t>;

/// Positive/negative triangle counts of A(G) and the derived imbalance.
struct TriangleCensus {
  std::int64_t t_plus = 0;
  std::int64_t t_minus = 0;
  std::int64_t total = 0;
  std::int64_t delta3 = 0;
  std::optional<Rational> tau3;  // delta3 / total, only when total > 0

  friend bool operator==(const TriangleCensus&, const TriangleCensus&) = default;
};

/// Builds a census from (t_plus, t_minus), filling the derived fields.
TriangleCensus make_census(std::int64_t t_plus, std::int64_t t_minus);

/// Tripods give positive triangles, triangles of G negative ones:
/// t+ = sum_v C(d(v),3), t- = #triangles(G).
TriangleCensus triangle_census_combinatorial(const SimpleGraph& g);

/// From traces of S and U = |S|: delta3 = tr(S^3)/6, T = tr(U^3)/6.
/// Exact integer arithmetic; throws NumericError if a trace is not
/// divisible by 6.
TriangleCensus triangle_census_trace(const SignedGraph& s);

/// tr(S^4) / m^2. Throws std::invalid_argument for m == 0.
Rational fourth_trace_invariant(const SignedGraph& s, int m);

/// Exact traces tr(S^k) for k = 1..k_max; used as a switching-invariant
/// spectral fingerprint. Values are returned as decimal strings because
/// they overflow 64 bits for moderate k.
std::vector<std::string> signed_power_traces(const SignedGraph& s, int k_max);
std::vector<std::string> power_traces(const SimpleGraph& g, int k_max);

/// For bipartite g: A(g) switches to the all-positive L(g) and
/// delta3 == sum_v C(d(v),3). Throws std::invalid_argument if g is not
/// bipartite.
bool bipartite_collapse_check(const SimpleGraph& g);

/// {t_plus, t_minus, total, delta3, tau3_num, tau3_den}; tau3 fields are
/// null when undefined.
std::string census_to_json(const TriangleCensus& c);

}  // namespace alg
