#ifndef SEMIGRAPH_SEMIGROUP_HPP
#define SEMIGRAPH_SEMIGROUP_HPP

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semigraph/bitset.hpp"
#include "semigraph/errors.hpp"

namespace semigraph {

/// Index/period parameters of a finite monogenic semigroup M(m, r).
/// The realized semigroup has exactly m + r - 1 elements.
struct MonogenicParams {
  int index = 1;   // m >= 1
  int period = 1;  // r >= 1
};

/// Power structure of one element x: the powers x, x^2, ..., x^order are
/// pairwise distinct and x^(index+period) = x^index. The kernel is the cyclic
/// group {x^index, ..., x^(index+period-1)}; its identity is idempotent_power
/// and kernel_generator generates it.
struct ElementProfile {
  int element = 0;
  int index = 0;             // least m with x^m recurring among later powers
  int period = 0;            // least r with x^(m+r) = x^m
  int order = 0;             // index + period - 1 = |<x>|
  std::vector<int> kernel;   // sorted element ids
  int idempotent_power = 0;  // id of x^(m+g), m+g ≡ 0 (mod r)
  int kernel_generator = 0;  // id of x^(m+g'), m+g' ≡ 1 (mod r)
};

/// When false, table-by-formula constructors skip the O(n^3) associativity
/// re-verification. Debug switch; defaults to true.
void set_validate_constructions(bool on);
bool validate_constructions();

/// Scan for the lexicographically first triple with (xy)z != x(yz).
std::optional<std::array<int, 3>> find_nonassociative_triple_serial(
    int n, const std::vector<int>& table);
/// OpenMP version; returns the same triple as the serial scan.
std::optional<std::array<int, 3>> find_nonassociative_triple(
    int n, const std::vector<int>& table);

/// A finite semigroup as a validated Cayley table over elements 0..n-1.
/// Immutable after construction; all queries are const and thread-safe.
class FiniteSemigroup {
 public:
  /// Validates closure and associativity of a raw row-major table.
  static FiniteSemigroup from_table(int n, std::vector<int> table,
                                    std::vector<std::string> labels = {});

  /// For tables produced by construction rules elsewhere in this library:
  /// associativity holds by construction, so the O(n^3) scan runs only while
  /// validate_constructions() is on.
  static FiniteSemigroup from_construction(int n, std::vector<int> table,
                                           std::vector<std::string> labels);

  /// M(m, r): elements a^1..a^(m+r-1), a^i a^j = a^red(i+j) with
  /// red(s) = s for s <= m+r-1 and m + ((s-m) mod r) otherwise.
  static FiniteSemigroup monogenic(int index, int period);
  static FiniteSemigroup monogenic(MonogenicParams p) {
    return monogenic(p.index, p.period);
  }

  /// Cyclic group of order n on the standard additive table, identity 0.
  static FiniteSemigroup cyclic_group(int n);

  /// x * y = x for all x, y; every element idempotent.
  static FiniteSemigroup left_zero_band(int n);

  /// Componentwise product on pairs (s, t), size |S| * |T|.
  static FiniteSemigroup direct_product(const FiniteSemigroup& s,
                                        const FiniteSemigroup& t);

  int size() const { return n_; }

  int product(int x, int y) const {
    check_element(x);
    check_element(y);
    return table_[x * n_ + y];
  }

  /// x^k for k >= 1, by repeated squaring.
  int power(int x, long long k) const;

  const std::string& label(int x) const {
    check_element(x);
    return labels_[x];
  }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }

  const ElementProfile& profile(int x) const {
    check_element(x);
    return profiles_[x];
  }
  int order_of(int x) const { return profile(x).order; }

  /// <x> = {x, x^2, ..., x^order}, sorted.
  std::vector<int> generated_by(int x) const;
  /// Same set as a bitset over element ids.
  Bitset generated_by_bits(int x) const;

  std::vector<int> idempotents() const;
  bool is_idempotent(int x) const { return product(x, x) == x; }
  bool is_band() const;

  /// Two-sided identity element, if any.
  std::optional<int> identity() const;

  /// {o(x) : x in S}.
  std::set<int> pi_set() const;

  /// Least n >= 1 such that x^n is idempotent for every x.
  int exponent() const;

 private:
  FiniteSemigroup(int n, std::vector<int> table, std::vector<std::string> labels,
                  bool verify);

  void check_element(int x) const {
    if (x < 0 || x >= n_)
      throw OutOfRange("element id " + std::to_string(x) + " not in [0," +
                       std::to_string(n_) + ")");
  }
  void compute_profiles();

  int n_ = 0;
  std::vector<int> table_;  // row-major, table_[x*n+y] = x*y
  std::vector<std::string> labels_;
  std::vector<ElementProfile> profiles_;
};

/// Smallest subsemigroup containing the generators (worklist fixed point).
std::vector<int> closure(const FiniteSemigroup& s, const std::vector<int>& gens);

/// If the subset (verified closed) is generated by one of its elements,
/// returns such a generator; otherwise nullopt. Throws NotASubsemigroup.
std::optional<int> is_monogenic_subset(const FiniteSemigroup& s,
                                       const std::vector<int>& subset);

/// True iff the subset is closed, has an identity, and every element has an
/// inverse within the subset.
bool is_group_subset(const FiniteSemigroup& s, const std::vector<int>& subset);

/// Whole-semigroup group test.
bool is_group(const FiniteSemigroup& s);

/// Partition of S into blocks S_f = {x : some power of x equals f}, keyed by
/// the idempotent f. Blocks are disjoint and cover S.
std::map<int, std::vector<int>> s_f_partition(const FiniteSemigroup& s);

}  // namespace semigraph

#endif
