#include <doctest.h>

#include <random>

#include "alg/catalog.hpp"
#include "alg/errors.hpp"
#include "alg/generators.hpp"
#include "alg/invariants.hpp"
#include "alg/signed.hpp"
#include "oracles.hpp"

using namespace alg;

namespace {

SimpleGraph make(std::initializer_list<std::pair<int, int>> edges) {
  std::vector<std::pair<int, int>> v(edges);
  return SimpleGraph::from_edge_list(v);
}

Orientation random_orientation(int m, std::mt19937_64& rng) {
  std::vector<int8_t> s(m);
  for (auto& x : s) x = (rng() & 1U) ? 1 : -1;
  return Orientation(s);
}

}  // namespace

TEST_CASE("census of the smallest cases") {
  const TriangleCensus k3 = triangle_census_combinatorial(gen::complete(3));
  CHECK(k3.t_plus == 0);
  CHECK(k3.t_minus == 1);
  CHECK(k3.delta3 == -1);
  CHECK(k3.tau3 == Rational(-1));

  const TriangleCensus star = triangle_census_combinatorial(gen::star(3));
  CHECK(star.t_plus == 1);
  CHECK(star.t_minus == 0);
  CHECK(star.delta3 == 1);

  const TriangleCensus path = triangle_census_combinatorial(gen::path(4));
  CHECK(path.total == 0);
  CHECK_FALSE(path.tau3.has_value());
  CHECK(census_to_json(path) ==
        R"({"t_plus":0,"t_minus":0,"total":0,"delta3":0,"tau3_num":null,"tau3_den":null})");
}

TEST_CASE("worked census examples") {
  const auto [g1, g2] = catalog::inertia_separated_pair();
  CHECK(g1 == make({{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}}));
  CHECK(g2 == make({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 6}}));
  for (const auto& g : {g1, g2}) {
    const TriangleCensus c = triangle_census_combinatorial(g);
    CHECK(c.total == 20);
    CHECK(c.delta3 == 12);
    CHECK(c.tau3 == Rational(3, 5));
  }
  const auto [h1, h2] = catalog::inertia_matched_pair();
  CHECK(h1 == make({{0, 1}, {0, 2}, {0, 5}, {1, 4}, {2, 3}, {3, 5}, {3, 6}}));
  CHECK(h2 == make({{0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}));
  for (const auto& g : {h1, h2}) {
    const TriangleCensus c = triangle_census_combinatorial(g);
    CHECK(c.total == 2);
    CHECK(c.delta3 == 2);
    CHECK(c.tau3 == Rational(1));
  }
}

TEST_CASE("census routes agree with direct triangle counting") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 150; ++i) {
    const SimpleGraph g = gen::random_gnp(2 + static_cast<int>(rng() % 8), 0.5, rng);
    const int m = g.edge_count();
    std::uint64_t mask = 0;
    for (int e = 0; e < m; ++e)
      if (rng() & 1U) mask |= std::uint64_t{1} << e;
    const auto [pos, neg] = oracle::signed_triangles(oracle::signed_matrix(g, mask));
    const TriangleCensus comb = triangle_census_combinatorial(g);
    const TriangleCensus trace = triangle_census_trace(build_alg(g, Orientation::from_reversed_mask(m, mask)));
    CHECK(comb.t_plus == pos);
    CHECK(comb.t_minus == neg);
    CHECK(trace == comb);
  }
}

TEST_CASE("total triangle count") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const SimpleGraph g = gen::random_gnp(2 + static_cast<int>(rng() % 9), 0.45, rng);
    std::int64_t tripods = 0;
    for (int d : g.degrees()) tripods += static_cast<std::int64_t>(d) * (d - 1) * (d - 2) / 6;
    const SimpleGraph l = line_graph(g);
    CHECK(triangle_census_combinatorial(g).total == tripods + oracle::triangles(g));
    CHECK(triangle_census_combinatorial(g).total == oracle::triangles(l));
  }
}

TEST_CASE("fourth trace invariant") {
  const SignedGraph p3 = build_alg(gen::path(3), Orientation::reference(2));
  CHECK(fourth_trace_invariant(p3, 2) == Rational(1, 2));
  const SignedGraph k3 = build_alg(gen::complete(3), Orientation::reference(3));
  CHECK(fourth_trace_invariant(k3, 3) == Rational(2));
  const SignedGraph k2 = build_alg(gen::complete(2), Orientation::reference(1));
  CHECK(fourth_trace_invariant(k2, 1) == Rational(0));
  CHECK_THROWS_AS(fourth_trace_invariant(SignedGraph(), 0), std::invalid_argument);

  std::mt19937_64 rng(33);
  for (int i = 0; i < 40; ++i) {
    const SimpleGraph g = gen::random_gnp(3 + static_cast<int>(rng() % 5), 0.5, rng);
    const int m = g.edge_count();
    if (m == 0) continue;
    const auto s = oracle::signed_matrix(g, 0);
    const auto s2 = oracle::multiply(s, s);
    const auto s4 = oracle::multiply(s2, s2);
    long long tr = 0;
    for (int a = 0; a < m; ++a) tr += s4[a][a];
    CHECK(fourth_trace_invariant(build_alg(g, Orientation::reference(m)), m) == Rational(tr, static_cast<long long>(m) * m));
  }
}

TEST_CASE("bipartite collapse") {
  CHECK(bipartite_collapse_check(gen::cycle(6)));
  CHECK(bipartite_collapse_check(gen::complete_bipartite(3, 3)));
  CHECK(triangle_census_combinatorial(gen::complete_bipartite(3, 3)).delta3 == 6);
  CHECK(bipartite_collapse_check(gen::star(4)));
  CHECK(triangle_census_combinatorial(gen::star(4)).delta3 == 4);
  CHECK(bipartite_collapse_check(gen::hypercube(3)));
  CHECK_THROWS_AS(bipartite_collapse_check(gen::cycle(5)), std::invalid_argument);
}

TEST_CASE("census and traces are switching invariant") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 60; ++i) {
    const SimpleGraph g = gen::random_gnp(3 + static_cast<int>(rng() % 5), 0.55, rng);
    const int m = g.edge_count();
    if (m == 0) continue;
    const SignedGraph a = build_alg(g, random_orientation(m, rng));
    const SignedGraph b = build_alg(g, random_orientation(m, rng));
    CHECK(triangle_census_trace(a) == triangle_census_trace(b));
    CHECK(fourth_trace_invariant(a, m) == fourth_trace_invariant(b, m));
    CHECK(signed_power_traces(a, 6) == signed_power_traces(b, 6));
  }
}

TEST_CASE("power traces") {
  // Closed walks in K3: tr A^k = 2^k + 2(-1)^k.
  CHECK(power_traces(gen::complete(3), 4) == std::vector<std::string>{"0", "6", "6", "18"});
  const auto big = power_traces(gen::complete(12), 30);
  CHECK(big.back() == "17449402268886407318558803753812");  // 11^30 + 11
}
