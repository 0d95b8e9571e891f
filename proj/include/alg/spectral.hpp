#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "alg/graph.hpp"
#include "alg/optimization.hpp"
#include "alg/signed.hpp"

namespace alg {

/// Ascending eigenvalues plus the zero threshold (1e-8 scaled by the
/// Frobenius norm of the source matrix).
struct Spectrum {
  std::vector<double> eigenvalues;
  double tolerance = 0.0;
};

/// Eigenvalues with orthonormal eigenvectors; vectors[i] pairs with
/// spectrum.eigenvalues[i].
struct EigenDecomposition {
  Spectrum spectrum;
  std::vector<std::vector<double>> vectors;
};

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  /// Some eigenvalue sits within a factor 10 of the zero threshold.
  bool uncertain = false;

  friend bool operator==(const Inertia& a, const Inertia& b) {
    return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
  }
};

inline constexpr double kZeroThreshold = 1e-8;
inline constexpr int kDefaultJacobiSweeps = 100;

/// Cyclic Jacobi, row-major sweep over the upper triangle. Converges when
/// the off-diagonal Frobenius norm drops below 1e-13 of the matrix norm;
/// throws NumericError after max_sweeps.
EigenDecomposition symmetric_eigen(const DenseSymmetricMatrix& m,
                                   int max_sweeps = kDefaultJacobiSweeps);
Spectrum symmetric_eigenvalues(const DenseSymmetricMatrix& m,
                               int max_sweeps = kDefaultJacobiSweeps);

/// Largest Laplacian eigenvalue (0 for an edgeless graph).
double laplacian_spectral_radius(const SimpleGraph& g);

/// S + 2I and L share their nonzero spectrum, and the kernel of S + 2I has
/// dimension m - n + 1. g must be connected.
bool edge_space_identity_check(const SimpleGraph& g, const Orientation& o);

/// Each Laplacian eigenpair (lambda, v) with lambda > 0 maps to w = D^T v
/// with S w = (lambda - 2) w and <w_i, w_j> = lambda_i delta_ij. Residuals
/// are taken over whole eigenspaces. g must be connected.
bool transported_modes_check(const SimpleGraph& g, const Orientation& o);

struct SpanningTreeCount {
  boost::multiprecision::cpp_int exact;  // Laplacian cofactor, fraction-free
  double spectral = 0.0;                 // product of nonzero eigenvalues / n
};

/// Both routes; throws NumericError if they differ by more than
/// 1e-6 relative. g must be connected.
SpanningTreeCount spanning_tree_count_detailed(const SimpleGraph& g);
boost::multiprecision::cpp_int spanning_tree_count(const SimpleGraph& g);

/// Exact cofactor of the Laplacian (row and column 0 removed).
boost::multiprecision::cpp_int laplacian_cofactor(const SimpleGraph& g);

Inertia inertia_of(const Spectrum& spectrum);
Inertia signed_inertia(const SignedGraph& s);

/// (sum_v d(v)^2 - m * lambda_max(L)) / 4; may be negative.
double spectral_lower_bound(const SimpleGraph& g);

enum class ActiveBound { kDefect, kSpectral, kTie };

struct CombinedBound {
  double defect = 0.0;
  double spectral = 0.0;
  double value = 0.0;
  ActiveBound active = ActiveBound::kTie;
};

CombinedBound combined_lower_bound(const SimpleGraph& g, const SearchOptions& opts = {});
const char* to_string(ActiveBound a);

/// 3n(6 - lambda_max)/16. Throws std::invalid_argument unless 3-regular.
double cubic_oct_spectral_bound(const SimpleGraph& g);

/// (n Delta / 4)(Delta - lambda_max / 2). Throws std::invalid_argument
/// unless regular.
double regular_bound(const SimpleGraph& g);

}  // namespace alg
