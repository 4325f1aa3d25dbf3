#ifndef SEMIGRAPH_INVARIANTS_HPP
#define SEMIGRAPH_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semigraph/graph.hpp"
#include "semigraph/green.hpp"
#include "semigraph/rees.hpp"
#include "semigraph/semigroup.hpp"

namespace semigraph {

/// Number of prime factors of k counted with multiplicity (so 12 -> 3).
int nu(int k);

/// Clique built from the divisor chain through k inside M(m,r):
/// mu_1 = 1 + r, and for k >= 2, 1 + nu(k) + r/gcd(r,k).
int mu_k(int k, int r);

/// Clique number of the cyclic graph of M(m,r): r when m = 1 (complete graph
/// on a cyclic group), otherwise max of mu_k over 1 <= k < m.
int clique_number_monogenic(int m, int r);

/// Independence number of the cyclic graph of M(m,r): 1 when m = 1;
/// otherwise floor(m/2) + 1 when gcd(i,r) > 1 for every i in
/// [ceil(m/2), m-1], else floor(m/2).
int independence_number_monogenic(int m, int r);

/// For s built as M(m,r) and 1 <= i <= m+r-1, checks the kernel-size formula
/// |K_{a^i}| = r/gcd(i,r), the intersection form K_{a^i} = <a^i> ∩ K_a, and
/// the generator form K_{a^i} = <a^{m+g+i}>.
bool kernel_size_formula_check(const FiniteSemigroup& s, int i);

/// For s built as M(m,r) with m > 1 and 1 <= i < j < m: the equivalence
/// (a^i adjacent a^j) <=> a^j in <a^i> <=> i | j. Returns the common value;
/// throws Error if the three tests ever disagree.
bool divisibility_adjacency_check(const FiniteSemigroup& s, int i, int j);

/// Returns the index of a^i in s = M(m,r) and asserts the biconditionals
/// index 1 <=> i >= m and index 2 <=> ceil(m/2) <= i <= m-1.
int index_lemma_check(const FiniteSemigroup& s, int i);

/// Elements a whose <a> is not properly contained in any <b>.
std::vector<int> maximal_monogenic_elements(const FiniteSemigroup& s);

/// Elements a with index 1 whose cyclic subgroup <a> is maximal among all
/// cyclic subgroups.
std::vector<int> maximal_cyclic_elements(const FiniteSemigroup& s);

/// Representative choice for tau-classes (x tau y iff <x> = <y>).
enum class RepTieBreak { least_id, greatest_id };

/// One representative per tau-class, sorted.
std::vector<int> tau_representatives(const FiniteSemigroup& s,
                                     RepTieBreak tb = RepTieBreak::least_id);

/// I_k = {x : index of x is k}, for k >= 2 (throws InvalidK below that).
std::vector<int> index_class(const FiniteSemigroup& s, int k);

/// J2 = {a in Mbar ∩ X : a lies in <x> for no x in I_2}, where X is the given
/// representative set.
std::vector<int> j2_set(const FiniteSemigroup& s, const std::vector<int>& reps);

/// The maximal-subsemigroup machinery bundled for reports.
struct MaximalSets {
  std::vector<int> m;                              // maximal monogenic generators
  std::vector<int> mbar;                           // maximal cyclic generators
  std::vector<int> tau_reps;                       // X
  std::map<int, std::vector<int>> index_classes;   // k >= 2, nonempty only
  std::vector<int> j2;
};

MaximalSets maximal_sets(const FiniteSemigroup& s,
                         RepTieBreak tb = RepTieBreak::least_id);

/// Clique number by the global formula: max over maximal monogenic generators
/// a of r_a (when index 1) or mu_k(k, r_a) for 1 <= k < m_a.
int clique_number_formula(const FiniteSemigroup& s);

struct IndependenceBounds {
  int lower = 0;  // |I_2| + |J_2|
  int upper = 0;  // |J_2| + sum of floor(m_a/2) over distinct maximal <a>
};

IndependenceBounds independence_bounds(const FiniteSemigroup& s);

/// For sandwich-matrix semigroups the upper bound is exact; this evaluates it
/// and asserts the per-element index dichotomy (index 1 iff the matching
/// sandwich entry is nonzero, with square-zero elements landing in M).
int rees_independence_formula(const ReesSemigroup& rs);

/// Everything the CLI reports for one semigroup.
struct InvariantReport {
  int n = 0;
  int idempotent_count = 0;
  Classification classification;
  int omega_formula = 0;
  int omega_oracle = 0;
  std::optional<int> alpha_formula;       // only for monogenic inputs
  std::optional<int> alpha_rees_formula;  // only for sandwich-matrix inputs
  int alpha_lower = 0;
  int alpha_upper = 0;
  int alpha_oracle = 0;
  int gamma_oracle = 0;
  MaximalSets sets;
  GreenClasses green;
  bool formulas_match_oracles = true;
};

InvariantReport build_report(const FiniteSemigroup& s, int cap,
                             const std::optional<MonogenicParams>& mono = {},
                             const ReesSemigroup* rees = nullptr);

/// Stable JSON rendering (alphabetical keys, sorted edge/block lists).
std::string report_to_json(const InvariantReport& r, int indent = 2);

}  // namespace semigraph

#endif
