#include "alg/catalog.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "alg/generators.hpp"
#include "alg/graph6.hpp"

namespace alg::catalog {

namespace {

using Pairs = std::vector<std::pair<int, int>>;
using Code = std::vector<std::uint64_t>;
using Perm = std::vector<int>;

// Canonical labeling by individualization and refinement. The search tree
// of equitable partitions is label-invariant; the canonical order is the
// leaf with the largest adjacency code, and automorphisms found between
// leaves with equal codes prune sibling subtrees.
class Canonizer {
 public:
  explicit Canonizer(const SimpleGraph& g) : g_(g), n_(g.vertex_count()), adj_(n_ * n_, 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u * n_ + v] = 1;
      adj_[v * n_ + u] = 1;
    }
  }

  std::vector<int> run() {
    if (n_ == 0) return {};
    std::vector<std::vector<int>> cells{std::vector<int>(n_)};
    std::iota(cells[0].begin(), cells[0].end(), 0);
    refine(cells);
    std::vector<int> prefix;
    search(cells, prefix);
    return best_order_;
  }

 private:
  void refine(std::vector<std::vector<int>>& cells) const {
    std::vector<int> cell_of(n_);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
      std::vector<std::vector<int>> next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, int>> sig;
        sig.reserve(cell.size());
        for (int v : cell) {
          std::vector<int> count(cells.size(), 0);
          for (int w : g_.neighbors(v)) ++count[cell_of[w]];
          sig.emplace_back(std::move(count), v);
        }
        std::sort(sig.begin(), sig.end());
        std::size_t i = 0;
        while (i < sig.size()) {
          std::size_t j = i + 1;
          while (j < sig.size() && sig[j].first == sig[i].first) ++j;
          std::vector<int> part;
          for (std::size_t k = i; k < j; ++k) part.push_back(sig[k].second);
          next.push_back(std::move(part));
          i = j;
        }
      }
      changed = next.size() != cells.size();
      cells = std::move(next);
    }
  }

  Code code_for(const std::vector<int>& order) const {
    Code code;
    std::uint64_t word = 0;
    int used = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        word = (word << 1) | adj_[order[i] * n_ + order[j]];
        if (++used == 64) {
          code.push_back(word);
          word = 0;
          used = 0;
        }
      }
    }
    if (used > 0) code.push_back(word << (64 - used));
    return code;
  }

  // Orbit representative of v under the stored automorphisms that fix
  // every vertex of `prefix`.
  std::vector<int> orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int p : prefix)
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(const std::vector<std::vector<int>>& cells, std::vector<int>& prefix) {
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;
    for (int v : candidates) {
      if (!explored.empty()) {
        const auto orbit = orbits(prefix);
        bool seen = false;
        for (int w : explored)
          if (orbit[w] == orbit[v]) {
            seen = true;
            break;
          }
        if (seen) continue;
      }
      std::vector<std::vector<int>> child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[c])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      refine(child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
      explored.push_back(v);
    }
  }

  void leaf(const std::vector<std::vector<int>>& cells) {
    std::vector<int> order;
    order.reserve(n_);
    for (const auto& c : cells) order.push_back(c[0]);
    Code code = code_for(order);
    if (best_order_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    } else if (code == best_code_ && automorphisms_.size() < kMaxStored) {
      Perm gamma(n_);
      for (int i = 0; i < n_; ++i) gamma[order[i]] = best_order_[i];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  static constexpr std::size_t kMaxStored = 256;
  const SimpleGraph& g_;
  int n_;
  std::vector<std::uint8_t> adj_;
  Code best_code_;
  std::vector<int> best_order_;
  std::vector<Perm> automorphisms_;
};


// Builds cubic graphs in breadth-first order from vertex 0: when vertex i is
// processed, its missing neighbors are a set of already discovered vertices
// after i plus freshly numbered ones. Every connected cubic graph has such a
// labeling.
class CubicBuilder {
 public:
  explicit CubicBuilder(int n) : n_(n), adj_(n) {}

  std::set<std::string> run() {
    created_ = 4;
    for (int v = 1; v <= 3; ++v) link(0, v);
    extend(1);
    return keys_;
  }

 private:
  void link(int a, int b) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  void unlink(int a, int b) {
    adj_[a].pop_back();
    adj_[b].pop_back();
  }
  bool adjacent(int a, int b) const { return std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end(); }

  void extend(int i) {
    if (i == created_) {
      if (created_ != n_) return;
      std::vector<std::pair<int, int>> edges;
      for (int a = 0; a < n_; ++a)
        for (int b : adj_[a])
          if (a < b) edges.emplace_back(a, b);
      keys_.insert(canonical_key(SimpleGraph::from_edge_list(edges, n_)));
      return;
    }
    const int need = 3 - static_cast<int>(adj_[i].size());
    std::vector<int> open;
    for (int j = i + 1; j < created_; ++j)
      if (adj_[j].size() < 3 && !adjacent(i, j)) open.push_back(j);
    choose(i, need, open, 0);
  }

  // Picks existing neighbors from open[from..] in increasing order, then fills
  // the rest with new vertices.
  void choose(int i, int need, const std::vector<int>& open, std::size_t from) {
    if (created_ + need <= n_) {
      const int first = created_;
      for (int k = 0; k < need; ++k) link(i, created_++);
      extend(i + 1);
      for (int k = need - 1; k >= 0; --k) unlink(i, first + k);
      created_ = first;
    }
    if (need == 0) return;
    for (std::size_t t = from; t < open.size(); ++t) {
      const int j = open[t];
      if (adj_[j].size() >= 3) continue;
      link(i, j);
      choose(i, need - 1, open, t + 1);
      unlink(i, j);
    }
  }

  int n_;
  int created_ = 0;
  std::vector<std::vector<int>> adj_;
  std::set<std::string> keys_;
};

}  // namespace

std::vector<int> canonical_order(const SimpleGraph& g) { return Canonizer(g).run(); }

SimpleGraph canonical_form(const SimpleGraph& g) {
  const std::vector<int> order = canonical_order(g);
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  return relabeled(g, pos);
}

std::string canonical_key(const SimpleGraph& g) { return to_graph6(canonical_form(g)); }

std::uint64_t canonical_code(const SimpleGraph& g) {
  if (g.vertex_count() > kMaxCanonicalVertices) {
    throw std::invalid_argument("canonical_code limited to n <= " + std::to_string(kMaxCanonicalVertices));
  }
  const SimpleGraph c = canonical_form(g);
  std::uint64_t code = 0;
  for (int j = 1; j < c.vertex_count(); ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (c.has_edge(i, j) ? 1U : 0U);
  return code;
}

std::vector<SimpleGraph> enumerate_graphs(int n, bool connected_only) {
  if (n < 1 || n > kMaxEnumerationVertices) {
    throw std::invalid_argument("enumerate_graphs supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationVertices));
  }
  const int max_edges = n * (n - 1) / 2;
  std::vector<SimpleGraph> out;
  std::set<std::string> level{canonical_key(SimpleGraph::from_edge_list({}, n))};
  for (int m = 0; m <= max_edges; ++m) {
    std::set<std::string> next;
    for (const std::string& key : level) {
      SimpleGraph g = from_graph6(key);
      if (!connected_only || is_connected(g)) out.push_back(g);
      if (m == max_edges) continue;
      Pairs pairs;
      for (const auto& [u, v] : g.edges()) pairs.emplace_back(u, v);
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (g.has_edge(i, j)) continue;
          pairs.emplace_back(i, j);
          next.insert(canonical_key(SimpleGraph::from_edge_list(pairs, n)));
          pairs.pop_back();
        }
      }
    }
    level = std::move(next);
  }
  return out;
}

std::vector<SimpleGraph> connected_graphs_by_edges(int m_max) {
  if (m_max < 0 || m_max > kMaxEnumerationEdges) {
    throw std::invalid_argument("connected_graphs_by_edges supports 0 <= m <= " +
                                std::to_string(kMaxEnumerationEdges));
  }
  // Every connected graph with m >= 1 edges arises from one with m - 1 edges
  // by adding a pendant edge or an edge between existing vertices.
  std::vector<SimpleGraph> out;
  std::set<std::string> level{canonical_key(SimpleGraph::from_edge_list({}, 1))};
  for (int m = 0; m <= m_max; ++m) {
    std::vector<SimpleGraph> batch;
    for (const std::string& key : level) batch.push_back(from_graph6(key));
    std::stable_sort(batch.begin(), batch.end(), [](const SimpleGraph& a, const SimpleGraph& b) {
      return a.vertex_count() < b.vertex_count();
    });
    if (m == m_max) {
      out.insert(out.end(), batch.begin(), batch.end());
      break;
    }
    std::set<std::string> next;
    for (const SimpleGraph& g : batch) {
      const int n = g.vertex_count();
      Pairs pairs;
      for (const auto& [u, v] : g.edges()) pairs.emplace_back(u, v);
      for (int v = 0; v < n && n < kGraph6MaxVertices; ++v) {
        pairs.emplace_back(v, n);
        next.insert(canonical_key(SimpleGraph::from_edge_list(pairs, n + 1)));
        pairs.pop_back();
      }
      for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
          if (g.has_edge(i, j)) continue;
          pairs.emplace_back(i, j);
          next.insert(canonical_key(SimpleGraph::from_edge_list(pairs, n)));
          pairs.pop_back();
        }
      }
    }
    out.insert(out.end(), batch.begin(), batch.end());
    level = std::move(next);
  }
  return out;
}

std::vector<SimpleGraph> connected_graphs_up_to(int n_max) {
  std::vector<SimpleGraph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto part = enumerate_graphs(n, true);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<SimpleGraph> connected_cubic_graphs(int n) {
  if (n < 4 || n % 2 != 0 || n > kMaxCubicVertices)
    throw std::invalid_argument("cubic graphs need an even vertex count in [4, " +
                                std::to_string(kMaxCubicVertices) + "]");
  std::vector<SimpleGraph> out;
  for (const auto& key : CubicBuilder(n).run()) out.push_back(from_graph6(key));
  return out;
}

std::vector<NamedGraph> cubic_catalog(int n_max) {
  std::vector<NamedGraph> all;
  all.push_back({"K4", gen::complete(4)});
  all.push_back({"K3,3", gen::complete_bipartite(3, 3)});
  all.push_back({"prism3", gen::prism(3)});
  all.push_back({"cube", gen::prism(4)});
  all.push_back({"wagner", gen::mobius_ladder(4)});
  all.push_back({"prism5", gen::prism(5)});
  all.push_back({"mobius10", gen::mobius_ladder(5)});
  all.push_back({"petersen", gen::petersen()});
  all.push_back({"prism6", gen::prism(6)});
  all.push_back({"mobius12", gen::mobius_ladder(6)});
  {
    const int franklin[] = {5, -5};
    all.push_back({"franklin", gen::lcf(franklin, 6)});
  }
  {
    const int frucht[] = {-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2};
    all.push_back({"frucht", gen::lcf(frucht, 1)});
  }
  {
    const int truncated_tetrahedron[] = {2, 6, -2};
    all.push_back({"truncated-tetrahedron", gen::lcf(truncated_tetrahedron, 4)});
  }
  {
    const int mobius_kantor[] = {5, -5};
    all.push_back({"mobius-kantor", gen::lcf(mobius_kantor, 8)});
  }
  std::vector<NamedGraph> out;
  for (auto& ng : all)
    if (ng.graph.vertex_count() <= n_max) out.push_back(std::move(ng));
  return out;
}

std::pair<SimpleGraph, SimpleGraph> inertia_separated_pair() {
  const Pairs a = {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 5}, {2, 6}, {3, 4}};
  const Pairs b = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 6}};
  return {SimpleGraph::from_edge_list(a, 7), SimpleGraph::from_edge_list(b, 7)};
}

std::pair<SimpleGraph, SimpleGraph> inertia_matched_pair() {
  const Pairs a = {{0, 1}, {0, 2}, {0, 5}, {1, 4}, {2, 3}, {3, 5}, {3, 6}};
  const Pairs b = {{0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}};
  return {SimpleGraph::from_edge_list(a, 7), SimpleGraph::from_edge_list(b, 7)};
}

std::pair<SimpleGraph, SimpleGraph> defect_witness_pair() {
  const Pairs a = {{0, 1}, {0, 2}, {1, 2}, {1, 4}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {5, 6}};
  const Pairs b = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {2, 3}, {5, 6}};
  return {SimpleGraph::from_edge_list(a, 7), SimpleGraph::from_edge_list(b, 7)};
}

}  // namespace alg::catalog
