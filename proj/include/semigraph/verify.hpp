#ifndef SEMIGRAPH_VERIFY_HPP
#define SEMIGRAPH_VERIFY_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "semigraph/rees.hpp"
#include "semigraph/semigroup.hpp"
#include "semigraph/solvers.hpp"

namespace semigraph {

/// One theorem checked on one instance. Failing outcomes always carry a
/// witness; passing ones may carry a diagnostic note.
struct VerifyOutcome {
  std::string theorem;
  std::string instance;
  bool pass = true;
  std::string witness;
};

struct VerifyOptions {
  int cap = kDefaultSolverCap;
  int max_order = 12;   // monogenic/cyclic/band ranges
  int count = 25;       // randomized instances
  unsigned seed = 1;
};

/// A named test subject; provenance fields are set where formula shortcuts
/// apply (sandwich-matrix builds, monogenic parameter sweeps).
struct CorpusItem {
  std::string name;
  FiniteSemigroup s;
  std::optional<ReesSemigroup> rees;
  std::optional<MonogenicParams> mono;
};

/// The structural-theorem battery run on every instance: bipartite/acyclic/
/// order equivalences, band/tree/dominance/regular/completely-regular
/// characterizations, component-partition match, clique formula, independence
/// bounds, J2 invariance, isolated-vertex coincidence, and (with provenance)
/// the sandwich-matrix lemma and exact independence value.
std::vector<VerifyOutcome> check_instance(const CorpusItem& item, int cap);

/// Reproducible sandwich-matrix instance: group from {trivial, Z2, Z3},
/// p,q in 1..3, entries zero with probability 1/3, matrix resampled until
/// regular.
ReesSemigroup random_rees(std::mt19937& rng);

/// The fixed cross-family corpus: all associative tables of order <= 3, all
/// M(m,r) with m+r-1 <= 12, left-zero bands to size 6, Z2^k for k <= 3, and
/// rees_count seeded random sandwich-matrix instances.
std::vector<CorpusItem> standard_corpus(unsigned seed, int rees_count);

/// Family sweep driving cmd_verify; families: monogenic, cyclic, band,
/// rees-random, product, table-enum3. Throws InvalidParams on other names.
std::vector<VerifyOutcome> verify_family(const std::string& family,
                                         const VerifyOptions& opt);

}  // namespace semigraph

#endif
