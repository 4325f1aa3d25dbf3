#ifndef SEMIGRAPH_GRAPH_HPP
#define SEMIGRAPH_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "semigraph/green.hpp"
#include "semigraph/semigroup.hpp"

namespace semigraph {

/// Undirected simple graph with bitset adjacency rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), adj_(n, Bitset(n)) {}

  int size() const { return n_; }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u].set(v);
    adj_[v].set(u);
  }

  bool has_edge(int u, int v) const {
    check_pair(u, v);
    return adj_[u].test(v);
  }

  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  long long edge_count() const {
    long long twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  /// All edges {u,v} with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  void check_pair(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw OutOfRange("vertex id out of range");
    if (u == v) throw SameVertex(u);
  }

  int n_ = 0;
  std::vector<Bitset> adj_;
};

/// Edge test of the cyclic graph: x and y (distinct) are adjacent iff the
/// subsemigroup they generate together is monogenic.
bool adjacent(const FiniteSemigroup& s, int x, int y);

/// Graph on all elements with adjacent() edges. The plain version uses OpenMP
/// over vertex pairs when available; both produce identical graphs.
SimpleGraph build_cyclic_graph_serial(const FiniteSemigroup& s);
SimpleGraph build_cyclic_graph(const FiniteSemigroup& s);

/// Vertex sets of connected components, each sorted, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

struct Classification {
  bool is_null = false;      // no edges
  bool is_complete = false;  // all pairs adjacent
  bool is_bipartite = false;
  bool is_acyclic = false;
  bool is_tree = false;      // connected and acyclic
  bool is_regular = false;   // constant degree
  bool is_star = false;      // one center adjacent to all leaves, n >= 2
  int component_count = 0;
  std::vector<int> degree_sequence;        // non-increasing
  std::optional<std::vector<int>> odd_cycle;  // witness when not bipartite
};

Classification classify(const SimpleGraph& g);

/// Degree-0 vertices.
std::vector<int> isolated_vertices(const SimpleGraph& g);

/// Element-side isolation predicate: a idempotent, H-class of a trivial, and
/// every member of a's component has index 1. Matches the degree-0 test on
/// every semigroup this library has been run against; divergences would be
/// surfaced by the verification harness as diagnostics.
bool isolated_characterization(const FiniteSemigroup& s, const SimpleGraph& g,
                               const GreenClasses& green, int a);
bool isolated_characterization(const FiniteSemigroup& s, int a);

/// Structure side of the regular-graph equivalence: all idempotent-indexed
/// blocks S_f have equal size and each is a monogenic subsemigroup whose
/// (index, period) shape is (1,r), (2,r), or (3,r) with r odd.
bool regular_shape_rhs(const FiniteSemigroup& s);

/// |min dominating set of the cyclic graph| == |E(S)|.
bool dominance_equals_idempotents(const FiniteSemigroup& s, const SimpleGraph& g,
                                  int cap);
bool dominance_equals_idempotents(const FiniteSemigroup& s, int cap);

}  // namespace semigraph

#endif
