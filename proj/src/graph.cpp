#include "semigraph/graph.hpp"

#include <algorithm>
#include <queue>

#include "semigraph/solvers.hpp"

namespace semigraph {

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
      out.emplace_back(u, v);
  return out;
}

namespace {

/// Generator search for a set already known to be closed.
bool closed_set_is_monogenic(const FiniteSemigroup& s,
                             const std::vector<int>& members) {
  const int target = static_cast<int>(members.size());
  for (int z : members)
    if (s.order_of(z) == target) return true;
  return false;
}

}  // namespace

bool adjacent(const FiniteSemigroup& s, int x, int y) {
  if (x == y) throw SameVertex(x);
  return closed_set_is_monogenic(s, closure(s, {x, y}));
}

SimpleGraph build_cyclic_graph_serial(const FiniteSemigroup& s) {
  const int n = s.size();
  SimpleGraph g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (adjacent(s, x, y)) g.add_edge(x, y);
  return g;
}

SimpleGraph build_cyclic_graph(const FiniteSemigroup& s) {
#ifdef _OPENMP
  const int n = s.size();
  std::vector<unsigned char> hit(static_cast<std::size_t>(n) * n, 0);
#pragma omp parallel for schedule(dynamic)
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (adjacent(s, x, y)) hit[static_cast<std::size_t>(x) * n + y] = 1;
  SimpleGraph g(n);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (hit[static_cast<std::size_t>(x) * n + y]) g.add_edge(x, y);
  return g;
#else
  return build_cyclic_graph_serial(s);
#endif
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
  const int n = g.size();
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    std::queue<int> bfs;
    bfs.push(start);
    seen[start] = 1;
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      comp.push_back(v);
      g.neighbors(v).for_each([&](int w) {
        if (!seen[w]) {
          seen[w] = 1;
          bfs.push(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace {

/// Two-coloring; on failure fills an odd cycle built from the BFS forest.
bool two_color(const SimpleGraph& g, std::optional<std::vector<int>>& cycle) {
  const int n = g.size();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int start = 0; start < n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> bfs;
    bfs.push(start);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w = g.neighbors(v).next(); w >= 0; w = g.neighbors(v).next(w + 1)) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          parent[w] = v;
          depth[w] = depth[v] + 1;
          bfs.push(w);
        } else if (color[w] == color[v]) {
          // Splice the two tree paths at their lowest common ancestor.
          std::vector<int> up_v, up_w;
          int a = v, b = w;
          while (depth[a] > depth[b]) {
            up_v.push_back(a);
            a = parent[a];
          }
          while (depth[b] > depth[a]) {
            up_w.push_back(b);
            b = parent[b];
          }
          while (a != b) {
            up_v.push_back(a);
            up_w.push_back(b);
            a = parent[a];
            b = parent[b];
          }
          up_v.push_back(a);  // the common ancestor
          std::reverse(up_w.begin(), up_w.end());
          up_v.insert(up_v.end(), up_w.begin(), up_w.end());
          cycle = std::move(up_v);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Classification classify(const SimpleGraph& g) {
  const int n = g.size();
  Classification c;
  const long long m = g.edge_count();
  c.is_null = m == 0;
  c.is_complete = m == static_cast<long long>(n) * (n - 1) / 2;
  c.component_count = static_cast<int>(connected_components(g).size());
  c.is_bipartite = two_color(g, c.odd_cycle);
  c.is_acyclic = m == n - c.component_count;  // forest check
  c.is_tree = c.is_acyclic && c.component_count == 1;

  c.degree_sequence.reserve(n);
  for (int v = 0; v < n; ++v) c.degree_sequence.push_back(g.degree(v));
  std::sort(c.degree_sequence.rbegin(), c.degree_sequence.rend());
  c.is_regular =
      n == 0 || c.degree_sequence.front() == c.degree_sequence.back();

  // Star: some center adjacent to everything else, all others of degree 1.
  c.is_star = false;
  if (n >= 2 && m == n - 1) {
    int center = 0;
    for (int v = 1; v < n; ++v)
      if (g.degree(v) > g.degree(center)) center = v;
    bool ok = g.degree(center) == n - 1;
    for (int v = 0; v < n && ok; ++v)
      if (v != center) ok = g.degree(v) == 1;
    c.is_star = ok;
  }
  return c;
}

std::vector<int> isolated_vertices(const SimpleGraph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

bool isolated_characterization(const FiniteSemigroup& s, const SimpleGraph& g,
                               const GreenClasses& green, int a) {
  if (!s.is_idempotent(a)) return false;
  if (green.h.block_containing(a).size() != 1) return false;
  // Walk a's component and demand index 1 throughout.
  const int n = s.size();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{a};
  seen[a] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (s.profile(v).index != 1) return false;
    g.neighbors(v).for_each([&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    });
  }
  return true;
}

bool isolated_characterization(const FiniteSemigroup& s, int a) {
  return isolated_characterization(s, build_cyclic_graph(s), green_classes(s), a);
}

bool regular_shape_rhs(const FiniteSemigroup& s) {
  const auto blocks = s_f_partition(s);
  std::size_t size0 = blocks.begin()->second.size();
  for (const auto& [f, block] : blocks)
    if (block.size() != size0) return false;
  for (const auto& [f, block] : blocks) {
    std::optional<int> gen;
    try {
      gen = is_monogenic_subset(s, block);
    } catch (const NotASubsemigroup&) {
      return false;
    }
    if (!gen) return false;
    const auto& p = s.profile(*gen);
    const bool admissible =
        p.index == 1 || p.index == 2 || (p.index == 3 && p.period % 2 == 1);
    if (!admissible) return false;
  }
  return true;
}

bool dominance_equals_idempotents(const FiniteSemigroup& s, const SimpleGraph& g,
                                  int cap) {
  return min_dominating_set(g, cap).size() == s.idempotents().size();
}

bool dominance_equals_idempotents(const FiniteSemigroup& s, int cap) {
  return dominance_equals_idempotents(s, build_cyclic_graph(s), cap);
}

}  // namespace semigraph
