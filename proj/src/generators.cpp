#include "alg/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace alg::gen {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

SimpleGraph cycle(int k) {
  require(k >= 3, "cycle needs at least 3 vertices");
  Pairs p;
  for (int i = 0; i < k; ++i) p.emplace_back(i, (i + 1) % k);
  return SimpleGraph::from_edge_list(p, k);
}

SimpleGraph path(int k) {
  require(k >= 1, "path needs at least 1 vertex");
  Pairs p;
  for (int i = 0; i + 1 < k; ++i) p.emplace_back(i, i + 1);
  return SimpleGraph::from_edge_list(p, k);
}

SimpleGraph star(int k) {
  require(k >= 1, "star needs at least 1 leaf");
  Pairs p;
  for (int i = 1; i <= k; ++i) p.emplace_back(0, i);
  return SimpleGraph::from_edge_list(p, k + 1);
}

SimpleGraph complete(int k) {
  require(k >= 1, "complete graph needs at least 1 vertex");
  Pairs p;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) p.emplace_back(i, j);
  return SimpleGraph::from_edge_list(p, k);
}

SimpleGraph complete_bipartite(int a, int b) {
  const int parts[] = {a, b};
  return complete_multipartite(parts);
}

SimpleGraph complete_multipartite(std::span<const int> parts) {
  require(!parts.empty(), "complete_multipartite needs at least one part");
  for (int s : parts) require(s >= 1, "part sizes must be positive");
  std::vector<int> start(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i) start[i + 1] = start[i] + parts[i];
  Pairs p;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j)
      for (int a = start[i]; a < start[i + 1]; ++a)
        for (int b = start[j]; b < start[j + 1]; ++b) p.emplace_back(a, b);
  return SimpleGraph::from_edge_list(p, start.back());
}

SimpleGraph petersen() {
  Pairs p;
  for (int i = 0; i < 5; ++i) {
    p.emplace_back(i, (i + 1) % 5);
    p.emplace_back(i, i + 5);
    p.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return SimpleGraph::from_edge_list(p, 10);
}

SimpleGraph prism(int k) {
  require(k >= 3, "prism needs k >= 3");
  Pairs p;
  for (int i = 0; i < k; ++i) {
    p.emplace_back(i, (i + 1) % k);
    p.emplace_back(k + i, k + (i + 1) % k);
    p.emplace_back(i, i + k);
  }
  return SimpleGraph::from_edge_list(p, 2 * k);
}

SimpleGraph mobius_ladder(int k) {
  require(k >= 2, "mobius ladder needs k >= 2");
  const int n = 2 * k;
  Pairs p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < k; ++i) p.emplace_back(i, i + k);
  return SimpleGraph::from_edge_list(p, n);
}

SimpleGraph hypercube(int dim) {
  require(dim >= 0 && dim <= 10, "hypercube dimension out of range");
  const int n = 1 << dim;
  Pairs p;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (!((v >> b) & 1)) p.emplace_back(v, v | (1 << b));
  return SimpleGraph::from_edge_list(p, n);
}

SimpleGraph lcf(std::span<const int> pattern, int repeats) {
  require(!pattern.empty() && repeats >= 1, "empty LCF pattern");
  const int n = static_cast<int>(pattern.size()) * repeats;
  Pairs p;
  for (int i = 0; i < n; ++i) {
    p.emplace_back(i, (i + 1) % n);
    const int j = ((i + pattern[i % pattern.size()]) % n + n) % n;
    p.emplace_back(i, j);
  }
  return SimpleGraph::from_edge_list(p, n);
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  Pairs p;
  for (const auto& [u, v] : a.edges()) p.emplace_back(u, v);
  const int shift = a.vertex_count();
  for (const auto& [u, v] : b.edges()) p.emplace_back(u + shift, v + shift);
  return SimpleGraph::from_edge_list(p, a.vertex_count() + b.vertex_count());
}

SimpleGraph random_gnp(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Pairs pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return SimpleGraph::from_edge_list(pairs, n);
}

SimpleGraph random_connected(int n, double p, std::mt19937_64& rng) {
  require(n >= 1, "random_connected needs n >= 1");
  for (;;) {
    SimpleGraph g = random_gnp(n, p, rng);
    if (is_connected(g)) return g;
  }
}

SimpleGraph random_gnm(int n, int m, std::mt19937_64& rng) {
  Pairs all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  require(m >= 0 && m <= static_cast<int>(all.size()), "edge count out of range");
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(m);
  return SimpleGraph::from_edge_list(all, n);
}

SimpleGraph random_cubic(int n, std::mt19937_64& rng) {
  require(n >= 4 && n % 2 == 0, "cubic graphs need an even n >= 4");
  std::vector<int> points(3 * n);
  for (int i = 0; i < 3 * n; ++i) points[i] = i / 3;
  for (;;) {
    std::shuffle(points.begin(), points.end(), rng);
    Pairs p;
    bool ok = true;
    for (int i = 0; i < 3 * n && ok; i += 2) {
      const int a = points[i], b = points[i + 1];
      if (a == b) ok = false;
      p.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (!ok) continue;
    std::sort(p.begin(), p.end());
    if (std::adjacent_find(p.begin(), p.end()) != p.end()) continue;
    return SimpleGraph::from_edge_list(p, n);
  }
}

}  // namespace alg::gen
