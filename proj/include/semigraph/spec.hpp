#ifndef SEMIGRAPH_SPEC_HPP
#define SEMIGRAPH_SPEC_HPP

#include <memory>
#include <optional>
#include <string>

#include "semigraph/rees.hpp"
#include "semigraph/semigroup.hpp"

namespace semigraph {

/// A construction expression:
///   monogenic:m,r | cyclic:n | leftzero:n | table:PATH | rees:PATH
///   | product:(SPEC)x(SPEC)
struct SemigroupSpec {
  enum class Kind { monogenic, cyclic, leftzero, table, rees, product };

  Kind kind = Kind::cyclic;
  int m = 0, r = 0;   // monogenic
  int n = 0;          // cyclic / leftzero
  std::string path;   // table / rees
  std::shared_ptr<SemigroupSpec> left, right;  // product factors

  friend bool operator==(const SemigroupSpec& a, const SemigroupSpec& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
      case Kind::monogenic: return a.m == b.m && a.r == b.r;
      case Kind::cyclic:
      case Kind::leftzero: return a.n == b.n;
      case Kind::table:
      case Kind::rees: return a.path == b.path;
      case Kind::product: return *a.left == *b.left && *a.right == *b.right;
    }
    return false;
  }
};

/// Parses the grammar above; throws ParseError with the offending text.
/// Round-trips with render_spec: parse_spec(render_spec(s)) == s.
SemigroupSpec parse_spec(const std::string& text);
std::string render_spec(const SemigroupSpec& spec);

/// A realized spec. The provenance fields are set only for top-level
/// monogenic: and rees: expressions, where formula shortcuts apply.
struct Realized {
  FiniteSemigroup semigroup;
  std::optional<MonogenicParams> monogenic;
  std::optional<ReesSemigroup> rees;
};

/// Builds the semigroup (reading files for table:/rees: specs).
Realized realize(const SemigroupSpec& spec);

}  // namespace semigraph

#endif
