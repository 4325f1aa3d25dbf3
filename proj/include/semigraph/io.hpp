#ifndef SEMIGRAPH_IO_HPP
#define SEMIGRAPH_IO_HPP

#include <string>
#include <vector>

#include "semigraph/graph.hpp"
#include "semigraph/rees.hpp"
#include "semigraph/semigroup.hpp"

namespace semigraph {

/// Cayley table file: first line n, then n lines of n space-separated 0-based
/// ids. Validation errors from table construction propagate unchanged.
FiniteSemigroup read_table_file(const std::string& path);

/// Sandwich-matrix spec file:
///   group <n>
///   <n table rows>
///   I <p>
///   L <q>
///   <q rows of p tokens, each a group element id or "-" for zero>
ReesSpec read_rees_spec_file(const std::string& path);

/// Undirected DOT rendering with vertex labels; deterministic ordering.
std::string to_dot(const SimpleGraph& g, const std::vector<std::string>& labels);

/// {"edges": [[u,v]...], "labels": [...], "n": n} with sorted keys and edges.
std::string graph_to_json(const SimpleGraph& g,
                          const std::vector<std::string>& labels,
                          int indent = 2);

}  // namespace semigraph

#endif
