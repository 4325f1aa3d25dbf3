#ifndef SEMIGRAPH_REES_HPP
#define SEMIGRAPH_REES_HPP

#include <vector>

#include "semigraph/semigroup.hpp"

namespace semigraph {

/// Ingredients of a sandwich-matrix semigroup over a group G: row index set I
/// of size p, column index set Lambda of size q, and a q x p matrix P whose
/// entries are group-element ids or kZeroEntry.
struct ReesSpec {
  static constexpr int kZeroEntry = -1;

  FiniteSemigroup group;
  int i_size = 1;               // p = |I|
  int lambda_size = 1;          // q = |Lambda|
  std::vector<int> sandwich;    // row-major q x p

  /// P entry p_{lambda,i}; kZeroEntry encodes the zero of the matrix.
  int entry(int lambda, int i) const { return sandwich[lambda * i_size + i]; }
};

/// The semigroup (I x G x Lambda) ∪ {0} with
///   (i,a,l)(j,b,u) = (i, a p_{l,j} b, u) if p_{l,j} != 0, else 0,
/// together with the construction data needed to map ids back to triples.
struct ReesSemigroup {
  FiniteSemigroup semigroup;
  ReesSpec spec;

  struct Triple {
    int i, g, lambda;  // 0-based coordinates
  };

  int zero() const { return semigroup.size() - 1; }

  int element_id(int i, int g, int lambda) const {
    return (i * spec.group.size() + g) * spec.lambda_size + lambda;
  }

  /// Inverse of element_id; id must not be the zero element.
  Triple coords(int id) const {
    if (id < 0 || id >= zero()) throw OutOfRange("not a nonzero triple id");
    const int q = spec.lambda_size, gn = spec.group.size();
    return Triple{id / (gn * q), (id / q) % gn, id % q};
  }
};

/// Validates the spec (group check, matrix regularity) and multiplies out the
/// full table. The zero element gets the last id.
ReesSemigroup rees_matrix(ReesSpec spec);

}  // namespace semigraph

#endif
