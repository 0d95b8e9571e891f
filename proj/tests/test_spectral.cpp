#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "alg/catalog.hpp"
#include "alg/errors.hpp"
#include "alg/generators.hpp"
#include "alg/optimization.hpp"
#include "alg/signed.hpp"
#include "alg/spectral.hpp"
#include "oracles.hpp"

using namespace alg;

namespace {

Orientation random_orientation(int m, std::mt19937_64& rng) {
  std::vector<int8_t> s(m);
  for (auto& x : s) x = (rng() & 1U) ? 1 : -1;
  return Orientation(s);
}

DenseSymmetricMatrix from_rows(const std::vector<std::vector<double>>& rows) {
  DenseSymmetricMatrix m(static_cast<int>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j) m.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("Jacobi on small matrices") {
  const Spectrum id = symmetric_eigenvalues(DenseSymmetricMatrix::identity(3));
  CHECK(id.eigenvalues == std::vector<double>{1.0, 1.0, 1.0});

  const Spectrum two = symmetric_eigenvalues(from_rows({{2, 1}, {1, 2}}));
  CHECK(std::fabs(two.eigenvalues[0] - 1.0) < 1e-12);
  CHECK(std::fabs(two.eigenvalues[1] - 3.0) < 1e-12);

  CHECK(symmetric_eigenvalues(DenseSymmetricMatrix(0)).eigenvalues.empty());
}

TEST_CASE("Jacobi residuals and orthonormality") {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    DenseSymmetricMatrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, unit(rng));
    const EigenDecomposition d = symmetric_eigen(m);
    const double scale = std::max(1.0, m.frobenius_norm());
    for (int k = 0; k < n; ++k) {
      const auto& v = d.vectors[k];
      const double lambda = d.spectrum.eigenvalues[k];
      for (int i = 0; i < n; ++i) {
        double mv = 0.0;
        for (int j = 0; j < n; ++j) mv += m.at(i, j) * v[j];
        CHECK(std::fabs(mv - lambda * v[i]) < 1e-10 * scale);
      }
      for (int l = 0; l < n; ++l) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += v[i] * d.vectors[l][i];
        CHECK(std::fabs(dot - (k == l ? 1.0 : 0.0)) < 1e-10);
      }
    }
    CHECK(std::is_sorted(d.spectrum.eigenvalues.begin(), d.spectrum.eigenvalues.end()));
  }
}

TEST_CASE("edge-space identity") {
  CHECK(edge_space_identity_check(gen::complete(3), Orientation::reference(3)));
  CHECK(edge_space_identity_check(gen::path(5), Orientation::reference(4)));
  CHECK(edge_space_identity_check(gen::star(5), Orientation::reference(5)));
  CHECK(edge_space_identity_check(gen::cycle(4), Orientation::reference(4)));
  CHECK_THROWS_AS(edge_space_identity_check(SimpleGraph::from_edge_list(
                      std::vector<std::pair<int, int>>{{0, 1}, {2, 3}}), Orientation::reference(2)),
                  std::invalid_argument);

  std::mt19937_64 rng(52);
  for (int i = 0; i < 40; ++i) {
    const SimpleGraph g = gen::random_connected(2 + static_cast<int>(rng() % 10), 0.4, rng);
    CHECK(edge_space_identity_check(g, random_orientation(g.edge_count(), rng)));
  }
}

TEST_CASE("spectrum of S + 2I against an independent product") {
  // S + 2I = D^T D and D D^T = L computed with integer matrices.
  std::mt19937_64 rng(53);
  for (int i = 0; i < 30; ++i) {
    const SimpleGraph g = gen::random_connected(3 + static_cast<int>(rng() % 6), 0.5, rng);
    const int m = g.edge_count();
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << m) - 1);
    const auto d = oracle::incidence(g, mask);
    const auto dtd = oracle::multiply(oracle::transpose(d), d);
    const auto s = oracle::signed_matrix(g, mask);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) CHECK(dtd[a][b] == s[a][b] + (a == b ? 2 : 0));
    double trace = 0.0;
    for (double x : symmetric_eigenvalues(signed_adjacency_matrix(build_alg(g, Orientation::from_reversed_mask(m, mask)))).eigenvalues) {
      CHECK(x >= -2.0 - 1e-9);
      trace += x;
    }
    CHECK(std::fabs(trace) < 1e-9);
    double lap = 0.0;
    for (double x : symmetric_eigenvalues(laplacian(g)).eigenvalues) lap += x;
    CHECK(std::fabs(lap - 2.0 * m) < 1e-9);
  }
}

TEST_CASE("transported Laplacian modes") {
  CHECK(transported_modes_check(gen::path(3), Orientation::reference(2)));
  CHECK(transported_modes_check(gen::complete(4), Orientation::reference(6)));
  CHECK(transported_modes_check(gen::cycle(5), Orientation::reference(5)));
  std::mt19937_64 rng(54);
  for (int i = 0; i < 30; ++i) {
    const SimpleGraph g = gen::random_connected(2 + static_cast<int>(rng() % 10), 0.4, rng);
    CHECK(transported_modes_check(g, random_orientation(g.edge_count(), rng)));
  }
}

TEST_CASE("spanning trees") {
  CHECK(spanning_tree_count(gen::complete(3)) == 3);
  CHECK(spanning_tree_count(gen::cycle(5)) == 5);
  CHECK(spanning_tree_count(gen::complete(4)) == 16);
  CHECK(spanning_tree_count(gen::petersen()) == 2000);
  CHECK(spanning_tree_count(gen::complete(10)) == 100000000);
  std::mt19937_64 rng(55);
  for (int i = 0; i < 60; ++i) {
    const SimpleGraph g = gen::random_connected(2 + static_cast<int>(rng() % 7), 0.5, rng);
    if (g.edge_count() > 16) continue;
    const SpanningTreeCount c = spanning_tree_count_detailed(g);
    CHECK(c.exact == oracle::spanning_trees(g));
    const double want = static_cast<double>(oracle::spanning_trees(g));
    CHECK(std::fabs(c.spectral - want) <= 1e-6 * want);
  }
  CHECK(laplacian_cofactor(SimpleGraph::from_edge_list(std::vector<std::pair<int, int>>{{0, 1}, {2, 3}})) == 0);
}

TEST_CASE("signed inertia against exact congruence") {
  const auto [g1, g2] = catalog::inertia_separated_pair();
  const Inertia i1 = signed_inertia(build_alg(g1, Orientation::reference(g1.edge_count())));
  const Inertia i2 = signed_inertia(build_alg(g2, Orientation::reference(g2.edge_count())));
  CHECK(i1 == Inertia{4, 6, 0});
  CHECK(i2 == Inertia{4, 5, 1});
  CHECK_FALSE(i1.uncertain);
  CHECK_FALSE(i2.uncertain);
  const auto [h1, h2] = catalog::inertia_matched_pair();
  CHECK(signed_inertia(build_alg(h1, Orientation::reference(7))) == Inertia{3, 3, 1});
  CHECK(signed_inertia(build_alg(h2, Orientation::reference(7))) == Inertia{3, 3, 1});

  for (const auto& g : {g1, g2, h1, h2}) {
    const auto exact = oracle::inertia(oracle::signed_matrix(g, 0));
    const Inertia got = signed_inertia(build_alg(g, Orientation::reference(g.edge_count())));
    CHECK(got.positive == exact.positive);
    CHECK(got.negative == exact.negative);
    CHECK(got.zero == exact.zero);
  }

  std::mt19937_64 rng(56);
  for (int i = 0; i < 60; ++i) {
    const SimpleGraph g = gen::random_gnp(3 + static_cast<int>(rng() % 6), 0.5, rng);
    const int m = g.edge_count();
    if (m == 0) continue;
    const std::uint64_t mask = rng() & ((std::uint64_t{1} << m) - 1);
    const auto exact = oracle::inertia(oracle::signed_matrix(g, mask));
    const Inertia a = signed_inertia(build_alg(g, Orientation::from_reversed_mask(m, mask)));
    const Inertia b = signed_inertia(build_alg(g, Orientation::reference(m)));
    CHECK(a == Inertia{exact.positive, exact.negative, exact.zero});
    CHECK(a == b);
  }
}

TEST_CASE("spectral lower bound") {
  CHECK(spectral_lower_bound(gen::cycle(5)) == doctest::Approx(0.4774575140).epsilon(1e-9));
  CHECK(spectral_lower_bound(gen::complete_multipartite(std::vector<int>{2, 2, 2})) == doctest::Approx(6.0));
  CHECK(spectral_lower_bound(gen::complete(4)) == doctest::Approx(3.0));
  CHECK(spectral_lower_bound(SimpleGraph::from_edge_list(std::vector<std::pair<int, int>>{{0, 1}, {2, 3}})) ==
        doctest::Approx(0.0));

  std::mt19937_64 rng(57);
  for (int i = 0; i < 60; ++i) {
    const SimpleGraph g = gen::random_connected(2 + static_cast<int>(rng() % 7), 0.5, rng);
    if (g.edge_count() > 14) continue;
    CHECK(spectral_lower_bound(g) <= static_cast<double>(oracle::frustration(g)) + 1e-9);
  }
}

TEST_CASE("combined lower bound") {
  const CombinedBound k4 = combined_lower_bound(gen::complete(4));
  CHECK(k4.defect == 2.0);
  CHECK(k4.spectral == doctest::Approx(3.0));
  CHECK(k4.value == doctest::Approx(3.0));
  CHECK(k4.active == ActiveBound::kSpectral);
  const CombinedBound c5 = combined_lower_bound(gen::cycle(5));
  CHECK(c5.active == ActiveBound::kDefect);
  CHECK(c5.value == 1.0);
  const CombinedBound c4 = combined_lower_bound(gen::cycle(4));
  CHECK(c4.active == ActiveBound::kTie);
  CHECK(std::string(to_string(ActiveBound::kTie)) == "tie");
}

TEST_CASE("cubic and regular bounds") {
  CHECK(cubic_oct_spectral_bound(gen::complete(4)) == doctest::Approx(1.5));
  CHECK(cubic_oct_spectral_bound(gen::complete_bipartite(3, 3)) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(cubic_oct_spectral_bound(gen::petersen()) == doctest::Approx(1.875));
  CHECK_THROWS_AS(cubic_oct_spectral_bound(gen::cycle(5)), std::invalid_argument);

  for (const auto& named : catalog::cubic_catalog(12)) {
    CAPTURE(named.name);
    CHECK(cubic_oct_spectral_bound(named.graph) <= oct_exact(named.graph).oct_value + 1e-9);
  }
  for (const auto& g : {gen::cycle(5), gen::complete(5), gen::petersen(), gen::hypercube(3), gen::prism(5)})
    CHECK(regular_bound(g) == doctest::Approx(spectral_lower_bound(g)));
  CHECK(std::fabs(regular_bound(gen::hypercube(3))) < 1e-9);
  CHECK_THROWS_AS(regular_bound(gen::path(4)), std::invalid_argument);
}

TEST_CASE("odd cycle bound decreases") {
  double previous = spectral_lower_bound(gen::cycle(3));
  for (int k = 5; k <= 21; k += 2) {
    const double b = spectral_lower_bound(gen::cycle(k));
    const double closed = k * (1.0 - std::cos(std::numbers::pi / k)) / 2.0;
    CHECK(b == doctest::Approx(closed).epsilon(1e-9));
    CHECK(b < previous);
    CHECK(b > 0.0);
    previous = b;
  }
  CHECK(previous < 0.2);
}
