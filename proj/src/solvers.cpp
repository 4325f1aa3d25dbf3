#include "semigraph/solvers.hpp"

#include <algorithm>

namespace semigraph {

namespace {

/// A component re-indexed to local ids 0..k-1 with bitset adjacency.
struct LocalGraph {
  std::vector<int> verts;  // local id -> global id
  std::vector<Bitset> adj;

  int size() const { return static_cast<int>(verts.size()); }
};

LocalGraph induce(const SimpleGraph& g, const std::vector<int>& comp) {
  LocalGraph lg;
  lg.verts = comp;
  const int k = lg.size();
  lg.adj.assign(k, Bitset(k));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(comp[a], comp[b])) {
        lg.adj[a].set(b);
        lg.adj[b].set(a);
      }
  return lg;
}

LocalGraph complement(const LocalGraph& lg) {
  LocalGraph c;
  c.verts = lg.verts;
  const int k = lg.size();
  c.adj.assign(k, Bitset(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      if (a != b && !lg.adj[a].test(b)) c.adj[a].set(b);
  return c;
}

int pick_pivot(const LocalGraph& lg, const Bitset& p, const Bitset& x) {
  int pivot = -1, best = -1;
  auto consider = [&](int u) {
    int score = (p & lg.adj[u]).count();
    if (score > best) {
      best = score;
      pivot = u;
    }
  };
  p.for_each(consider);
  x.for_each(consider);
  return pivot;
}

struct CliqueSearch {
  const LocalGraph& lg;
  std::vector<int> current, best;

  void expand(Bitset p) {
    if (static_cast<int>(current.size()) + p.count() <=
        static_cast<int>(best.size()))
      return;
    if (p.none()) {
      best = current;  // strictly larger by the bound above
      return;
    }
    const int pivot = pick_pivot(lg, p, Bitset(lg.size()));
    Bitset ext = p;
    ext.and_not(lg.adj[pivot]);
    ext.for_each([&](int v) {
      if (!p.test(v)) return;  // already branched away
      current.push_back(v);
      expand(p & lg.adj[v]);
      current.pop_back();
      p.reset(v);
    });
  }
};

std::vector<int> component_max_clique(const LocalGraph& lg) {
  CliqueSearch cs{lg, {}, {}};
  Bitset all(lg.size());
  for (int v = 0; v < lg.size(); ++v) all.set(v);
  cs.expand(all);
  std::vector<int> out;
  out.reserve(cs.best.size());
  for (int v : cs.best) out.push_back(lg.verts[v]);
  std::sort(out.begin(), out.end());
  return out;
}

struct EnumSearch {
  const LocalGraph& lg;
  std::vector<int> current;
  std::vector<std::vector<int>>& out;

  void bk(Bitset p, Bitset x) {
    if (p.none() && x.none()) {
      std::vector<int> clique;
      clique.reserve(current.size());
      for (int v : current) clique.push_back(lg.verts[v]);
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    const int pivot = pick_pivot(lg, p, x);
    Bitset ext = p;
    ext.and_not(lg.adj[pivot]);
    ext.for_each([&](int v) {
      if (!p.test(v)) return;
      current.push_back(v);
      bk(p & lg.adj[v], x & lg.adj[v]);
      current.pop_back();
      p.reset(v);
      x.set(v);
    });
  }
};

struct DominationSearch {
  const LocalGraph& lg;
  std::vector<Bitset> closed;  // N[v]
  Bitset full;
  std::vector<int> current, best;

  explicit DominationSearch(const LocalGraph& g) : lg(g), full(g.size()) {
    closed.reserve(lg.size());
    for (int v = 0; v < lg.size(); ++v) {
      Bitset nb = lg.adj[v];
      nb.set(v);
      closed.push_back(std::move(nb));
      full.set(v);
    }
  }

  void search(const Bitset& dominated) {
    if (static_cast<int>(current.size()) >= static_cast<int>(best.size()))
      return;
    if (dominated == full) {
      best = current;
      return;
    }
    Bitset undom = full;
    undom.and_not(dominated);
    // Cheap lower bound: each chosen vertex covers at most max |N[u]| new ones.
    int max_cover = 0;
    undom.for_each([&](int v) {
      max_cover = std::max(max_cover, closed[v].count());
    });
    const int remaining = undom.count();
    const int lb = (remaining + max_cover - 1) / max_cover;
    if (static_cast<int>(current.size()) + lb >= static_cast<int>(best.size()))
      return;
    // Branch on the undominated vertex with the fewest possible dominators.
    int target = -1, options = lg.size() + 1;
    undom.for_each([&](int v) {
      int deg = closed[v].count();
      if (deg < options) {
        options = deg;
        target = v;
      }
    });
    closed[target].for_each([&](int u) {
      current.push_back(u);
      search(dominated | closed[u]);
      current.pop_back();
    });
  }
};

std::vector<int> component_min_dominating(const LocalGraph& lg) {
  DominationSearch ds(lg);
  for (int v = 0; v < lg.size(); ++v) ds.best.push_back(v);  // trivial cover
  if (lg.size() > 1) ds.search(Bitset(lg.size()));
  std::vector<int> out;
  out.reserve(ds.best.size());
  for (int v : ds.best) out.push_back(lg.verts[v]);
  std::sort(out.begin(), out.end());
  return out;
}

void check_cap(const std::vector<int>& comp, int cap) {
  if (static_cast<int>(comp.size()) > cap)
    throw SizeCapExceeded(static_cast<int>(comp.size()), cap);
}

}  // namespace

std::vector<int> max_clique(const SimpleGraph& g, int cap) {
  std::vector<int> best;
  for (const auto& comp : connected_components(g)) {
    check_cap(comp, cap);
    auto found = component_max_clique(induce(g, comp));
    if (found.size() > best.size()) best = std::move(found);
  }
  return best;
}

std::vector<int> max_independent_set(const SimpleGraph& g, int cap) {
  std::vector<int> out;
  for (const auto& comp : connected_components(g)) {
    check_cap(comp, cap);
    auto part = component_max_clique(complement(induce(g, comp)));
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> min_dominating_set(const SimpleGraph& g, int cap) {
  std::vector<int> out;
  for (const auto& comp : connected_components(g)) {
    check_cap(comp, cap);
    auto part = component_min_dominating(induce(g, comp));
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g, int cap) {
  std::vector<std::vector<int>> out;
  for (const auto& comp : connected_components(g)) {
    check_cap(comp, cap);
    LocalGraph lg = induce(g, comp);
    Bitset all(lg.size());
    for (int v = 0; v < lg.size(); ++v) all.set(v);
    EnumSearch es{lg, {}, out};
    es.bk(all, Bitset(lg.size()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace semigraph
