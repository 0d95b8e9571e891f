#include "alg/optimization.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "alg/errors.hpp"

namespace alg {

Deadline Deadline::after(std::chrono::milliseconds budget) {
  Deadline d;
  d.at_ = std::chrono::steady_clock::now() + budget;
  return d;
}

bool Deadline::expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

void Deadline::check(const char* stage) const {
  if (expired()) throw TimeoutError(std::string(stage) + ": cutoff exceeded");
}

bool lex_less(const Bitset& a, const Bitset& b) {
  if (a.size() != b.size()) throw std::invalid_argument("lex_less on bitsets of different size");
  const Bitset diff = a ^ b;
  const auto first = diff.find_first();
  if (first == Bitset::npos) return false;
  return !a.test(first);
}

namespace {

bool lex_less_mask(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t x = a ^ b;
  if (x == 0) return false;
  return (a & (x & (~x + 1))) == 0;
}

Bitset to_bitset(std::uint64_t mask, int size) {
  Bitset b(size);
  for (int i = 0; i < size; ++i)
    if ((mask >> i) & 1U) b.set(i);
  return b;
}

void require_edges(const SimpleGraph& g, const SearchOptions& opts, const char* stage) {
  if (g.edge_count() > opts.limits.max_edges_orientation) {
    throw ResourceLimitError(stage, g.edge_count(), opts.limits.max_edges_orientation);
  }
}

void require_vertices(const SimpleGraph& g, int limit, const char* stage) {
  if (g.vertex_count() > limit) throw ResourceLimitError(stage, g.vertex_count(), limit);
}

// The smallest edge index of each component with edges. Reversing every edge
// of a component of L(g) leaves A(g) unchanged, so these can stay fixed.
std::vector<bool> anchor_edges(const SimpleGraph& g) {
  const std::vector<int> comp = connected_components(g);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<bool> anchor(g.edge_count(), false);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int c = comp[g.edge(e).u];
    if (!seen[c]) {
      seen[c] = true;
      anchor[e] = true;
    }
  }
  return anchor;
}

std::int64_t product_bound(int in, int out, int rem) {
  return std::min(static_cast<std::int64_t>(in + rem) * out,
                  static_cast<std::int64_t>(in) * (out + rem));
}

class FrustrationSearch {
 public:
  FrustrationSearch(const SimpleGraph& g, const std::vector<bool>& anchor, const Deadline& deadline,
                    std::atomic<std::int64_t>& global_best, std::int64_t start_best)
      : g_(g), anchor_(anchor), deadline_(deadline), global_best_(global_best),
        in_(g.vertex_count(), 0), out_(g.vertex_count(), 0), rem_(g.vertex_count(), 0),
        reversed_(g.edge_count(), false), best_(start_best) {
    for (int v = 0; v < g.vertex_count(); ++v) rem_[v] = g.degree(v);
  }

  void apply(int e, bool reversed) { assign(e, reversed); }

  void run(int first_edge) { dfs(first_edge); }

  std::int64_t best() const { return best_; }
  bool found() const { return found_; }
  const std::vector<bool>& best_reversed() const { return best_reversed_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void touch(int v, int din, int dout) {
    lb_ -= product_bound(in_[v], out_[v], rem_[v]);
    in_[v] += din;
    out_[v] += dout;
    rem_[v] -= din + dout;
    lb_ += product_bound(in_[v], out_[v], rem_[v]);
  }

  void assign(int e, bool reversed) {
    const auto [u, v] = g_.edge(e);
    const int tail = reversed ? v : u;
    const int head = reversed ? u : v;
    touch(tail, 0, 1);
    touch(head, 1, 0);
    reversed_[e] = reversed;
  }

  void unassign(int e) {
    const auto [u, v] = g_.edge(e);
    const int tail = reversed_[e] ? v : u;
    const int head = reversed_[e] ? u : v;
    touch(tail, 0, -1);
    touch(head, -1, 0);
    reversed_[e] = false;
  }

  void dfs(int e) {
    ++nodes_;
    if ((nodes_ & 0xFFFU) == 0) deadline_.check("frustration");
    if (lb_ >= best_ || lb_ > global_best_.load(std::memory_order_relaxed)) return;
    if (e == g_.edge_count()) {
      best_ = lb_;
      best_reversed_ = reversed_;
      found_ = true;
      std::int64_t cur = global_best_.load(std::memory_order_relaxed);
      while (lb_ < cur && !global_best_.compare_exchange_weak(cur, lb_)) {
      }
      return;
    }
    assign(e, false);
    dfs(e + 1);
    unassign(e);
    if (anchor_[e]) return;
    assign(e, true);
    dfs(e + 1);
    unassign(e);
  }

  const SimpleGraph& g_;
  const std::vector<bool>& anchor_;
  const Deadline& deadline_;
  std::atomic<std::int64_t>& global_best_;
  std::vector<int> in_, out_, rem_;
  std::vector<bool> reversed_;
  std::int64_t lb_ = 0;
  std::int64_t best_;
  bool found_ = false;
  std::vector<bool> best_reversed_;
  std::uint64_t nodes_ = 0;
};

template <class Task>
void run_parallel(int tasks, int threads, Task&& task) {
  threads = std::max(1, std::min(threads, tasks));
  if (threads == 1) {
    for (int i = 0; i < tasks; ++i) task(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < tasks && !failed; i = next++) {
        try {
          task(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::int64_t directed_two_path_count(const SimpleGraph& g, const Orientation& o) {
  if (o.size() != g.edge_count()) {
    throw std::invalid_argument("orientation length does not match edge count");
  }
  std::vector<std::int64_t> in(g.vertex_count(), 0), out(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [tail, head] = o.arc(g, e);
    ++out[tail];
    ++in[head];
  }
  std::int64_t total = 0;
  for (int v = 0; v < g.vertex_count(); ++v) total += in[v] * out[v];
  return total;
}

OrientationSearchResult frustration_index_exact(const SimpleGraph& g, const SearchOptions& opts) {
  require_edges(g, opts, "frustration");
  const int m = g.edge_count();
  const std::vector<bool> anchor = anchor_edges(g);
  const std::int64_t start = directed_two_path_count(g, Orientation::reference(m)) + 1;
  std::atomic<std::int64_t> global_best{start};

  // Split the tree on a prefix of edge decisions, enumerated in DFS order so
  // that the earliest optimal prefix holds the lexicographically first optimum.
  int prefix_len = 0;
  if (opts.threads > 1) {
    int branching = 0;
    while (prefix_len < m && branching < 4 + static_cast<int>(std::bit_width(static_cast<unsigned>(opts.threads)))) {
      if (!anchor[prefix_len]) ++branching;
      ++prefix_len;
    }
  }
  std::vector<std::vector<bool>> prefixes{{}};
  for (int e = 0; e < prefix_len; ++e) {
    std::vector<std::vector<bool>> next;
    for (const auto& p : prefixes) {
      auto a = p;
      a.push_back(false);
      next.push_back(std::move(a));
      if (!anchor[e]) {
        auto b = p;
        b.push_back(true);
        next.push_back(std::move(b));
      }
    }
    prefixes = std::move(next);
  }

  struct TaskResult {
    bool found = false;
    std::int64_t value = 0;
    std::vector<bool> reversed;
    std::uint64_t nodes = 0;
  };
  std::vector<TaskResult> results(prefixes.size());
  run_parallel(static_cast<int>(prefixes.size()), opts.threads, [&](int i) {
    FrustrationSearch search(g, anchor, opts.deadline, global_best, start);
    for (int e = 0; e < prefix_len; ++e) search.apply(e, prefixes[i][e]);
    search.run(prefix_len);
    results[i] = {search.found(), search.best(), search.best_reversed(), search.nodes()};
  });

  OrientationSearchResult out;
  const TaskResult* best = nullptr;
  for (const auto& r : results) {
    out.nodes_explored += r.nodes;
    if (r.found && (!best || r.value < best->value)) best = &r;
  }
  if (!best) throw std::logic_error("frustration search found no orientation");
  out.best_value = best->value;
  std::vector<int8_t> signs(m);
  for (int e = 0; e < m; ++e) signs[e] = best->reversed[e] ? -1 : 1;
  out.witness = Orientation(std::move(signs));
  return out;
}

std::int64_t max_imbalance_energy(const SimpleGraph& g, const SearchOptions& opts) {
  require_edges(g, opts, "imbalance-energy");
  const int m = g.edge_count();
  const std::vector<bool> anchor = anchor_edges(g);
  std::vector<int> free_edges;
  for (int e = 0; e < m; ++e)
    if (!anchor[e]) free_edges.push_back(e);

  // b[v] = d+(v) - d-(v) is (Dx)_v up to a global sign.
  std::vector<std::int64_t> b(g.vertex_count(), 0);
  std::vector<bool> reversed(m, false);
  for (const auto& [u, v] : g.edges()) {
    --b[u];
    ++b[v];
  }
  std::int64_t energy = 0;
  for (auto x : b) energy += x * x;
  std::int64_t best = energy;

  const std::uint64_t steps = std::uint64_t{1} << free_edges.size();
  for (std::uint64_t i = 1; i < steps; ++i) {
    if ((i & 0xFFFFU) == 0) opts.deadline.check("imbalance-energy");
    const int e = free_edges[std::countr_zero(i)];
    const auto [u, v] = g.edge(e);
    const int head = reversed[e] ? u : v;
    const int tail = reversed[e] ? v : u;
    energy += -4 * b[head] + 4 + 4 * b[tail] + 4;
    b[head] -= 2;
    b[tail] += 2;
    reversed[e] = !reversed[e];
    best = std::max(best, energy);
  }
  return best;
}

bool imbalance_identity_check(const SimpleGraph& g, const SearchOptions& opts) {
  std::int64_t sum_sq = 0;
  for (int v = 0; v < g.vertex_count(); ++v) sum_sq += static_cast<std::int64_t>(g.degree(v)) * g.degree(v);
  const std::int64_t frustration = frustration_index_exact(g, opts).best_value;
  const std::int64_t energy = max_imbalance_energy(g, opts);
  return 4 * frustration + energy == sum_sq;
}

CutResult maxcut_exact(const SimpleGraph& g, const SearchOptions& opts) {
  require_vertices(g, opts.limits.max_vertices_maxcut, "maxcut");
  const int n = g.vertex_count();
  const int m = g.edge_count();
  CutResult result;
  result.partition = Bitset(n);
  result.defect_edges = Bitset(m);
  if (n == 0) return result;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }

  std::uint32_t side = 0;  // bit v: v on side 1
  int cut = 0;
  int best = 0;
  std::uint32_t best_side = 0;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    if ((i & 0xFFFFU) == 0) opts.deadline.check("maxcut");
    const int v = std::countr_zero(i) + 1;
    const int on_one = std::popcount(adj[v] & side);
    const int deg = std::popcount(adj[v]);
    const bool v_on_one = (side >> v) & 1U;
    const int same = v_on_one ? on_one : deg - on_one;
    cut += same - (deg - same);
    side ^= 1U << v;
    if (cut > best || (cut == best && lex_less_mask(side, best_side))) {
      best = cut;
      best_side = side;
    }
  }
  result.maxcut_value = best;
  result.defect = m - best;
  result.partition = to_bitset(best_side, n);
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = g.edge(e);
    if (((best_side >> u) & 1U) == ((best_side >> v) & 1U)) result.defect_edges.set(e);
  }
  return result;
}

namespace {

class OctSearch {
 public:
  OctSearch(const SimpleGraph& g, const Deadline& deadline)
      : g_(g), deadline_(deadline), removed_(g.vertex_count(), false), kept_(g.vertex_count(), false) {}

  // Can at most k more vertices (never a kept one) be removed to reach a
  // bipartite remainder?
  bool feasible(int k) {
    if ((++nodes_ & 0x3FFU) == 0) deadline_.check("oct");
    const std::vector<int> cycle = find_odd_cycle(g_, removed_);
    if (cycle.empty()) return true;
    if (k == 0) return false;
    for (int v : cycle) {
      if (kept_[v]) continue;
      removed_[v] = true;
      const bool ok = feasible(k - 1);
      removed_[v] = false;
      if (ok) return true;
    }
    return false;
  }

  std::vector<bool>& removed() { return removed_; }
  std::vector<bool>& kept() { return kept_; }

 private:
  const SimpleGraph& g_;
  const Deadline& deadline_;
  std::vector<bool> removed_;
  std::vector<bool> kept_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OctResult oct_exact(const SimpleGraph& g, const SearchOptions& opts) {
  require_vertices(g, opts.limits.max_vertices_oct, "oct");
  const int n = g.vertex_count();
  OctSearch search(g, opts.deadline);
  int k = 0;
  while (!search.feasible(k)) ++k;

  // Fix vertices in index order: keep each one if a size-k transversal still
  // exists around it, otherwise it must be in the transversal.
  int budget = k;
  for (int v = 0; v < n && budget > 0; ++v) {
    search.kept()[v] = true;
    if (!search.feasible(budget)) {
      search.kept()[v] = false;
      search.removed()[v] = true;
      --budget;
    }
  }
  OctResult out;
  out.transversal = Bitset(n);
  for (int v = 0; v < n; ++v)
    if (search.removed()[v]) out.transversal.set(v);
  out.oct_value = static_cast<int>(out.transversal.count());

  std::vector<bool> keep(n);
  for (int v = 0; v < n; ++v) keep[v] = !out.transversal.test(v);
  if (out.oct_value != k || !is_bipartite(induced_subgraph(g, keep))) {
    throw std::logic_error("odd cycle transversal certificate failed");
  }
  return out;
}

namespace {

bool edge_deletion_feasible(const SimpleGraph& g, std::vector<bool>& deleted, int k,
                            const Deadline& deadline, std::uint64_t& nodes) {
  if ((++nodes & 0x3FFU) == 0) deadline.check("vertex-frustration");
  const SimpleGraph rest = without_edges(g, deleted);
  const std::vector<int> cycle = find_odd_cycle(rest);
  if (cycle.empty()) return true;
  if (k == 0) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int e = *g.edge_index(cycle[i], cycle[(i + 1) % cycle.size()]);
    deleted[e] = true;
    const bool ok = edge_deletion_feasible(g, deleted, k - 1, deadline, nodes);
    deleted[e] = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

int min_bipartizing_edge_deletion(const SimpleGraph& g, const SearchOptions& opts) {
  require_vertices(g, opts.limits.max_vertices_maxcut, "vertex-frustration");
  std::vector<bool> deleted(g.edge_count(), false);
  std::uint64_t nodes = 0;
  int k = 0;
  while (!edge_deletion_feasible(g, deleted, k, opts.deadline, nodes)) ++k;
  return k;
}

int vertex_frustration(const SimpleGraph& g, const SearchOptions& opts) {
  const int vf = min_bipartizing_edge_deletion(g, opts);
  const int def = maxcut_exact(g, opts).defect;
  if (vf != def) {
    throw std::logic_error("vertex frustration " + std::to_string(vf) +
                           " differs from Max-Cut defect " + std::to_string(def));
  }
  return vf;
}

std::int64_t defect_amplification_upper(const SimpleGraph& g, const CutResult& cut,
                                        const SearchOptions& opts) {
  const int n = g.vertex_count();
  if (static_cast<int>(cut.partition.size()) != n) {
    throw std::invalid_argument("cut partition size does not match vertex count");
  }
  int value = 0;
  for (const auto& [u, v] : g.edges())
    if (cut.partition.test(u) != cut.partition.test(v)) ++value;
  if (value != cut.maxcut_value || value != maxcut_exact(g, opts).maxcut_value) {
    throw std::invalid_argument("cut is not a maximum cut");
  }
  std::int64_t bound = 0;
  for (const auto& [u, v] : g.edges()) {
    if (cut.partition.test(u) == cut.partition.test(v)) {
      bound += std::min(g.degree(u) - 1, g.degree(v) - 1);
    }
  }
  return bound;
}

Orientation amplification_orientation(const SimpleGraph& g, const CutResult& cut) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& [u, v] : g.edges()) {
    const bool su = cut.partition.test(u);
    const bool sv = cut.partition.test(v);
    if (su != sv) {
      arcs.emplace_back(su ? v : u, su ? u : v);
      continue;
    }
    // Lower-degree endpoint; ties go to the larger index.
    const int low = g.degree(u) < g.degree(v) ? u : v;
    const int high = low == u ? v : u;
    if (!su) {
      arcs.emplace_back(high, low);
    } else {
      arcs.emplace_back(low, high);
    }
  }
  return Orientation::from_arcs(g, arcs);
}

namespace {

int max_packing(const std::vector<std::uint64_t>& sets, std::uint64_t all, std::size_t from,
                std::uint64_t used, int count, int best, const Deadline& deadline,
                std::uint64_t& nodes) {
  if ((++nodes & 0x3FFU) == 0) deadline.check("odd-cycle-packing");
  // Each remaining set needs at least three unused edges.
  std::size_t remaining = 0;
  for (std::size_t i = from; i < sets.size(); ++i)
    if ((sets[i] & used) == 0) ++remaining;
  const int free_edges = std::popcount(all & ~used);
  const int bound = count + static_cast<int>(std::min<std::size_t>(remaining, free_edges / 3));
  if (bound <= best) return best;
  best = std::max(best, count);
  for (std::size_t i = from; i < sets.size(); ++i) {
    if (sets[i] & used) continue;
    best = max_packing(sets, all, i + 1, used | sets[i], count + 1, best, deadline, nodes);
  }
  return best;
}

std::vector<int> simple_cycle_lengths_masks(const SimpleGraph& g, int max_len, bool odd_only,
                                            std::vector<std::uint64_t>& masks) {
  // Enumerate cycles anchored at their smallest vertex, second < last.
  std::vector<int> lengths;
  const int n = g.vertex_count();
  std::vector<int> path;
  std::vector<bool> on(n, false);
  auto emit = [&]() {
    const int k = static_cast<int>(path.size());
    if (odd_only && k % 2 == 0) return;
    if (path[1] > path.back()) return;
    std::uint64_t mask = 0;
    for (int i = 0; i < k; ++i) mask |= std::uint64_t{1} << *g.edge_index(path[i], path[(i + 1) % k]);
    masks.push_back(mask);
    lengths.push_back(k);
  };
  auto dfs = [&](auto&& self, int s) -> void {
    const int tail = path.back();
    for (int w : g.neighbors(tail)) {
      if (w == s && path.size() >= 3) emit();
      if (w <= s || on[w] || static_cast<int>(path.size()) >= max_len) continue;
      on[w] = true;
      path.push_back(w);
      self(self, s);
      path.pop_back();
      on[w] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on[s] = true;
    dfs(dfs, s);
    on[s] = false;
  }
  return lengths;
}

}  // namespace

int odd_cycle_packing(const SimpleGraph& g, const SearchOptions& opts) {
  require_vertices(g, opts.limits.max_vertices_packing, "odd-cycle-packing");
  if (g.edge_count() > 64) throw ResourceLimitError("odd-cycle-packing", g.edge_count(), 64);
  std::vector<std::uint64_t> masks;
  const std::vector<int> lengths = simple_cycle_lengths_masks(g, g.vertex_count(), true, masks);
  // Short cycles first: they leave more room for the rest.
  std::vector<std::size_t> order(masks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return lengths[a] < lengths[b]; });
  std::vector<std::uint64_t> sorted;
  for (auto i : order) sorted.push_back(masks[i]);
  std::uint64_t nodes = 0;
  std::uint64_t all = 0;
  for (auto mask : sorted) all |= mask;
  return max_packing(sorted, all, 0, 0, 0, 0, opts.deadline, nodes);
}

int triangle_packing(const SimpleGraph& g) {
  if (g.edge_count() > 64) throw ResourceLimitError("triangle-packing", g.edge_count(), 64);
  std::vector<std::uint64_t> masks;
  for (const auto& [u, v] : g.edges())
    for (int w : g.neighbors(v))
      if (w > v && g.has_edge(u, w)) {
        masks.push_back((std::uint64_t{1} << *g.edge_index(u, v)) |
                        (std::uint64_t{1} << *g.edge_index(v, w)) |
                        (std::uint64_t{1} << *g.edge_index(u, w)));
      }
  std::uint64_t all = 0;
  for (auto mask : masks) all |= mask;
  std::uint64_t nodes = 0;
  return max_packing(masks, all, 0, 0, 0, 0, Deadline{}, nodes);
}

CubicExactness cubic_exactness(const SimpleGraph& g, const SearchOptions& opts) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) throw std::invalid_argument("cubic exactness needs a 3-regular graph");
  }
  CubicExactness r;
  const OrientationSearchResult frustration = frustration_index_exact(g, opts);
  r.frustration = frustration.best_value;
  r.oct = oct_exact(g, opts).oct_value;

  std::vector<int> out_deg(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) ++out_deg[frustration.witness.arc(g, e).first];
  std::vector<bool> keep(g.vertex_count(), true);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (out_deg[v] > 0 && out_deg[v] < 3) {
      keep[v] = false;
      ++r.witness_mixed;
    }
  }
  r.mixed_is_transversal = is_bipartite(induced_subgraph(g, keep));
  r.holds = r.frustration == 2 * static_cast<std::int64_t>(r.oct) && r.witness_mixed == r.oct &&
            2 * r.witness_mixed == r.frustration && r.mixed_is_transversal;
  return r;
}

bool cubic_exactness_check(const SimpleGraph& g, const SearchOptions& opts) {
  return cubic_exactness(g, opts).holds;
}

std::int64_t complete_multipartite_closed_form(std::span<const int> parts) {
  if (parts.empty()) throw std::invalid_argument("complete multipartite needs at least one part");
  // e[k] after processing a prefix holds the k-th elementary symmetric sum.
  std::int64_t e1 = 0, e2 = 0, e3 = 0;
  for (int p : parts) {
    e3 += e2 * p;
    e2 += e1 * p;
    e1 += p;
  }
  return e3;
}

}  // namespace alg
