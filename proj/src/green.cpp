#include "semigraph/green.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace semigraph {

namespace {

Partition partition_from_keys(int n, const std::vector<Bitset>& key) {
  Partition p;
  p.block_of.resize(n);
  std::map<Bitset, int> seen;
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] = seen.try_emplace(key[x], static_cast<int>(p.blocks.size()));
    if (inserted) p.blocks.emplace_back();
    p.block_of[x] = it->second;
    p.blocks[it->second].push_back(x);
  }
  return p;
}

Partition partition_from_ids(int n, const std::vector<std::pair<int, int>>& key) {
  Partition p;
  p.block_of.resize(n);
  std::map<std::pair<int, int>, int> seen;
  for (int x = 0; x < n; ++x) {
    auto [it, inserted] = seen.try_emplace(key[x], static_cast<int>(p.blocks.size()));
    if (inserted) p.blocks.emplace_back();
    p.block_of[x] = it->second;
    p.blocks[it->second].push_back(x);
  }
  return p;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GreenClasses green_classes(const FiniteSemigroup& s) {
  const int n = s.size();
  // Principal ideals over S^1: the {x} terms below play the role of the
  // adjoined identity, so monoids need no special casing.
  std::vector<Bitset> lset(n, Bitset(n)), rset(n, Bitset(n)), jset(n, Bitset(n));
  for (int x = 0; x < n; ++x) {
    lset[x].set(x);
    rset[x].set(x);
    for (int t = 0; t < n; ++t) {
      lset[x].set(s.product(t, x));
      rset[x].set(s.product(x, t));
    }
    jset[x] = lset[x] | rset[x];
    for (int t = 0; t < n; ++t)
      for (int u = 0; u < n; ++u) jset[x].set(s.product(s.product(t, x), u));
  }

  GreenClasses g;
  g.l = partition_from_keys(n, lset);
  g.r = partition_from_keys(n, rset);
  g.j = partition_from_keys(n, jset);

  std::vector<std::pair<int, int>> hkey(n);
  for (int x = 0; x < n; ++x) hkey[x] = {g.l.block_of[x], g.r.block_of[x]};
  g.h = partition_from_ids(n, hkey);

  // D as the join of L and R, then checked against both compositions.
  UnionFind uf(n);
  for (const auto& b : g.l.blocks)
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0], b[i]);
  for (const auto& b : g.r.blocks)
    for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0], b[i]);
  std::vector<std::pair<int, int>> dkey(n);
  for (int x = 0; x < n; ++x) dkey[x] = {uf.find(x), 0};
  g.d = partition_from_ids(n, dkey);

  std::set<std::pair<int, int>> lr_pairs;  // (L-block, R-block) combinations
  for (int x = 0; x < n; ++x) lr_pairs.insert(hkey[x]);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const bool joined = g.d.block_of[x] == g.d.block_of[y];
      const bool l_then_r =
          lr_pairs.count({g.l.block_of[x], g.r.block_of[y]}) != 0;
      const bool r_then_l =
          lr_pairs.count({g.l.block_of[y], g.r.block_of[x]}) != 0;
      if (joined != l_then_r || joined != r_then_l)
        throw Error("D-relation compositions disagree (internal invariant)");
    }
  return g;
}

bool h_class_is_group(const FiniteSemigroup& s, const GreenClasses& g, int f) {
  if (!s.is_idempotent(f)) throw NotIdempotent(f);
  return is_group_subset(s, g.h.block_containing(f));
}

bool h_class_is_group(const FiniteSemigroup& s, int f) {
  return h_class_is_group(s, green_classes(s), f);
}

bool is_completely_regular(const FiniteSemigroup& s, const GreenClasses& g) {
  for (const auto& block : g.h.blocks)
    if (!is_group_subset(s, block)) return false;
  return true;
}

bool is_completely_regular(const FiniteSemigroup& s) {
  return is_completely_regular(s, green_classes(s));
}

}  // namespace semigraph
