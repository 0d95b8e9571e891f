#include "alg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "alg/errors.hpp"

namespace alg {

using boost::multiprecision::cpp_int;

EigenDecomposition symmetric_eigen(const DenseSymmetricMatrix& m, int max_sweeps) {
  const int n = m.dim();
  std::vector<double> a = m.data();
  std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  auto V = [&](int i, int j) -> double& { return v[static_cast<std::size_t>(i) * n + j]; };

  const double norm = m.frobenius_norm();
  const double target = 1e-13 * norm;
  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += 2.0 * A(i, j) * A(i, j);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_norm() > target) {
    if (sweep++ >= max_sweeps) {
      throw NumericError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) +
                         " sweeps");
    }
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = A(p, q);
        if (apq == 0.0) continue;
        const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        A(p, p) -= t * apq;
        A(q, q) += t * apq;
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = A(r, p);
          const double arq = A(r, q);
          A(r, p) = A(p, r) = c * arp - s * arq;
          A(r, q) = A(q, r) = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          const double vrp = V(r, p);
          const double vrq = V(r, q);
          V(r, p) = c * vrp - s * vrq;
          V(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return A(i, i) < A(j, j); });
  EigenDecomposition out;
  out.spectrum.tolerance = kZeroThreshold * norm;
  for (int k : order) {
    out.spectrum.eigenvalues.push_back(A(k, k));
    std::vector<double> col(n);
    for (int r = 0; r < n; ++r) col[r] = V(r, k);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

Spectrum symmetric_eigenvalues(const DenseSymmetricMatrix& m, int max_sweeps) {
  return symmetric_eigen(m, max_sweeps).spectrum;
}

double laplacian_spectral_radius(const SimpleGraph& g) {
  if (g.edge_count() == 0) return 0.0;
  return symmetric_eigenvalues(laplacian(g)).eigenvalues.back();
}

namespace {

void require_connected(const SimpleGraph& g, const char* what) {
  if (!is_connected(g)) throw std::invalid_argument(std::string(what) + " needs a connected graph");
}

DenseSymmetricMatrix shifted_signed_matrix(const SignedGraph& s) {
  DenseSymmetricMatrix m = signed_adjacency_matrix(s);
  m.add_diagonal(2.0);
  return m;
}

std::vector<double> nonzero(const Spectrum& s, double tol) {
  std::vector<double> out;
  for (double x : s.eigenvalues)
    if (std::fabs(x) > tol) out.push_back(x);
  return out;
}

// Clusters of (numerically) equal eigenvalues as [begin, end) index ranges.
std::vector<std::pair<int, int>> clusters(const std::vector<double>& ev, double tol) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(ev.size());
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && ev[j] - ev[j - 1] <= tol) ++j;
    out.emplace_back(i, j);
    i = j;
  }
  return out;
}

}  // namespace

bool edge_space_identity_check(const SimpleGraph& g, const Orientation& o) {
  require_connected(g, "edge_space_identity_check");
  const SignedGraph s = build_alg(g, o);
  const Spectrum shifted = symmetric_eigenvalues(shifted_signed_matrix(s));
  const Spectrum lap = symmetric_eigenvalues(laplacian(g));
  const double tol = 1e-8 * std::max(1.0, static_cast<double>(g.max_degree()));
  const auto a = nonzero(shifted, tol);
  const auto b = nonzero(lap, tol);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a[i] - b[i]) > tol) return false;
  const int kernel = static_cast<int>(shifted.eigenvalues.size() - a.size());
  return kernel == g.edge_count() - g.vertex_count() + 1;
}

bool transported_modes_check(const SimpleGraph& g, const Orientation& o) {
  require_connected(g, "transported_modes_check");
  constexpr double kTol = 1e-7;
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const IncidenceMatrix d = incidence_matrix(g, o);
  const DenseSymmetricMatrix s = signed_adjacency_matrix(build_alg(g, o));
  const EigenDecomposition lap = symmetric_eigen(laplacian(g));
  const auto& ev = lap.spectrum.eigenvalues;

  // w_i = D^T v_i for the nonzero modes (all but the first on a connected graph).
  std::vector<std::vector<double>> w(n, std::vector<double>(m, 0.0));
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < m; ++e) {
      double x = 0.0;
      for (int r = 0; r < n; ++r) x += d.at(r, e) * lap.vectors[i][r];
      w[i][e] = x;
    }

  for (const auto& [lo, hi] : clusters(ev, 1e-9 * std::max(1.0, ev.empty() ? 0.0 : ev.back()))) {
    if (lo == 0) continue;  // the constant mode, w = 0
    double mean = 0.0;
    for (int i = lo; i < hi; ++i) mean += ev[i];
    mean /= hi - lo;
    double resid = 0.0, scale = 0.0;
    for (int i = lo; i < hi; ++i) {
      for (int e = 0; e < m; ++e) {
        double sw = 0.0;
        for (int f = 0; f < m; ++f) sw += s.at(e, f) * w[i][f];
        const double r = sw - (mean - 2.0) * w[i][e];
        resid += r * r;
        scale += w[i][e] * w[i][e];
      }
    }
    if (std::sqrt(resid) > kTol * std::sqrt(scale)) return false;
  }

  // Gram residuals: <w_i, w_j> = lambda_i delta_ij.
  for (int i = 1; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double dot = std::inner_product(w[i].begin(), w[i].end(), w[j].begin(), 0.0);
      const double want = i == j ? ev[i] : 0.0;
      if (std::fabs(dot - want) > kTol) return false;
    }
  }
  return true;
}

cpp_int laplacian_cofactor(const SimpleGraph& g) {
  const int n = g.vertex_count() - 1;
  if (n <= 0) return 1;
  std::vector<std::vector<cpp_int>> a(n, std::vector<cpp_int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = g.degree(i + 1);
  for (const auto& [u, v] : g.edges()) {
    if (u == 0 || v == 0) continue;
    a[u - 1][v - 1] = -1;
    a[v - 1][u - 1] = -1;
  }
  // Bareiss fraction-free elimination; every division is exact.
  cpp_int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (a[r][k] != 0) {
          swap_row = r;
          break;
        }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

SpanningTreeCount spanning_tree_count_detailed(const SimpleGraph& g) {
  require_connected(g, "spanning_tree_count");
  SpanningTreeCount out;
  out.exact = laplacian_cofactor(g);
  const auto& ev = symmetric_eigenvalues(laplacian(g)).eigenvalues;
  double product = 1.0;
  for (std::size_t i = 1; i < ev.size(); ++i) product *= ev[i];
  out.spectral = ev.empty() ? 0.0 : product / static_cast<double>(g.vertex_count());
  if (g.vertex_count() == 1) out.spectral = 1.0;
  const double exact = out.exact.convert_to<double>();
  if (std::fabs(out.spectral - exact) > 1e-6 * std::max(1.0, exact)) {
    throw NumericError("spectral spanning tree count " + std::to_string(out.spectral) +
                       " disagrees with cofactor " + out.exact.str());
  }
  return out;
}

cpp_int spanning_tree_count(const SimpleGraph& g) { return spanning_tree_count_detailed(g).exact; }

Inertia inertia_of(const Spectrum& spectrum) {
  Inertia in;
  const double thr = spectrum.tolerance;
  for (double x : spectrum.eigenvalues) {
    if (x > thr) {
      ++in.positive;
    } else if (x < -thr) {
      ++in.negative;
    } else {
      ++in.zero;
    }
    const double ax = std::fabs(x);
    if (ax > thr / 10.0 && ax < thr * 10.0) in.uncertain = true;
  }
  return in;
}

Inertia signed_inertia(const SignedGraph& s) {
  return inertia_of(symmetric_eigenvalues(signed_adjacency_matrix(s)));
}

double spectral_lower_bound(const SimpleGraph& g) {
  double sum_sq = 0.0;
  for (int v = 0; v < g.vertex_count(); ++v) sum_sq += static_cast<double>(g.degree(v)) * g.degree(v);
  return (sum_sq - g.edge_count() * laplacian_spectral_radius(g)) / 4.0;
}

CombinedBound combined_lower_bound(const SimpleGraph& g, const SearchOptions& opts) {
  CombinedBound b;
  b.defect = maxcut_exact(g, opts).defect;
  b.spectral = spectral_lower_bound(g);
  b.value = std::max(b.defect, b.spectral);
  if (std::fabs(b.defect - b.spectral) <= 1e-9) {
    b.active = ActiveBound::kTie;
  } else {
    b.active = b.defect > b.spectral ? ActiveBound::kDefect : ActiveBound::kSpectral;
  }
  return b;
}

const char* to_string(ActiveBound a) {
  switch (a) {
    case ActiveBound::kDefect:
      return "defect";
    case ActiveBound::kSpectral:
      return "spectral";
    case ActiveBound::kTie:
      return "tie";
  }
  return "tie";
}

double cubic_oct_spectral_bound(const SimpleGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != 3) throw std::invalid_argument("cubic OCT bound needs a 3-regular graph");
  const double n = g.vertex_count();
  return 3.0 * n * (6.0 - laplacian_spectral_radius(g)) / 16.0;
}

double regular_bound(const SimpleGraph& g) {
  if (!g.is_regular()) throw std::invalid_argument("regular bound needs a regular graph");
  const double n = g.vertex_count();
  const double delta = g.vertex_count() > 0 ? g.degree(0) : 0;
  return n * delta / 4.0 * (delta - laplacian_spectral_radius(g) / 2.0);
}

}  // namespace alg
