#ifndef SEMIGRAPH_GREEN_HPP
#define SEMIGRAPH_GREEN_HPP

#include <vector>

#include "semigraph/semigroup.hpp"

namespace semigraph {

/// A partition of the element set into disjoint blocks. Blocks are sorted
/// internally and ordered by their least element.
struct Partition {
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;  // element id -> index into blocks

  const std::vector<int>& block_containing(int x) const {
    return blocks[block_of[x]];
  }
};

/// The five Green's relations. H refines L and R; D is the join of L and R
/// (equal to both compositions in the finite case); J comes from two-sided
/// principal ideals.
struct GreenClasses {
  Partition l, r, j, h, d;
};

GreenClasses green_classes(const FiniteSemigroup& s);

/// For idempotent f, the H-class of f is a subgroup; this checks and returns
/// that fact. Throws NotIdempotent for other elements.
bool h_class_is_group(const FiniteSemigroup& s, const GreenClasses& g, int f);
bool h_class_is_group(const FiniteSemigroup& s, int f);

/// True iff every H-class is a group.
bool is_completely_regular(const FiniteSemigroup& s, const GreenClasses& g);
bool is_completely_regular(const FiniteSemigroup& s);

}  // namespace semigraph

#endif
