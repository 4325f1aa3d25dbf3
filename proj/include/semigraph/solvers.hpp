#ifndef SEMIGRAPH_SOLVERS_HPP
#define SEMIGRAPH_SOLVERS_HPP

#include <vector>

#include "semigraph/graph.hpp"

namespace semigraph {

/// Largest component size the exact solvers will search. Overridable per call
/// (CLI: --cap / MONOGENIC_CAP).
inline constexpr int kDefaultSolverCap = 64;

/// Certified maximum clique, branch and bound with pivoting. Components are
/// searched independently; a component larger than cap throws SizeCapExceeded.
std::vector<int> max_clique(const SimpleGraph& g, int cap = kDefaultSolverCap);

/// Certified maximum independent set (clique on the per-component complement;
/// component solutions concatenate).
std::vector<int> max_independent_set(const SimpleGraph& g,
                                     int cap = kDefaultSolverCap);

/// Certified minimum dominating set (per-component set-cover branch and bound).
std::vector<int> min_dominating_set(const SimpleGraph& g,
                                    int cap = kDefaultSolverCap);

/// All maximal cliques (Bron–Kerbosch with pivoting), each sorted, the list
/// sorted lexicographically.
std::vector<std::vector<int>> maximal_cliques(const SimpleGraph& g,
                                              int cap = kDefaultSolverCap);

}  // namespace semigraph

#endif
