#include "semigraph/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "json.hpp"
#include "semigraph/solvers.hpp"

namespace semigraph {

int nu(int k) {
  if (k < 2) throw InvalidK(k);
  int count = 0;
  for (int p = 2; p * p <= k; ++p)
    while (k % p == 0) {
      k /= p;
      ++count;
    }
  if (k > 1) ++count;
  return count;
}

int mu_k(int k, int r) {
  if (k < 1 || r < 1) throw InvalidParams("mu_k requires k >= 1 and r >= 1");
  if (k == 1) return 1 + r;
  return 1 + nu(k) + r / std::gcd(r, k);
}

int clique_number_monogenic(int m, int r) {
  if (m < 1 || r < 1) throw InvalidParams("monogenic parameters must be >= 1");
  if (m == 1) return r;
  int best = 0;
  for (int k = 1; k < m; ++k) best = std::max(best, mu_k(k, r));
  return best;
}

int independence_number_monogenic(int m, int r) {
  if (m < 1 || r < 1) throw InvalidParams("monogenic parameters must be >= 1");
  if (m == 1) return 1;
  for (int i = (m + 1) / 2; i <= m - 1; ++i)
    if (std::gcd(i, r) == 1) return m / 2;
  return m / 2 + 1;
}

namespace {

/// The generator element of a monogenic-constructed semigroup is id 0 (a^1).
const ElementProfile& generator_profile(const FiniteSemigroup& s) {
  return s.profile(0);
}

}  // namespace

bool kernel_size_formula_check(const FiniteSemigroup& s, int i) {
  const auto& gen = generator_profile(s);
  const int m = gen.index, r = gen.period, n = m + r - 1;
  if (i < 1 || i > n) throw OutOfRange("power index outside 1..m+r-1");
  const auto& pi = s.profile(i - 1);  // a^i has id i-1

  const bool size_ok =
      static_cast<int>(pi.kernel.size()) == r / std::gcd(i, r);

  Bitset kernel_a(s.size());
  for (int e : gen.kernel) kernel_a.set(e);
  Bitset meet = s.generated_by_bits(i - 1);
  meet &= kernel_a;
  const bool intersection_ok = meet.to_vector() == pi.kernel;

  const int g = (r - m % r) % r;
  const int shifted = s.power(0, static_cast<long long>(m) + g + i);
  const bool generator_ok = s.generated_by(shifted) == pi.kernel;

  return size_ok && intersection_ok && generator_ok;
}

bool divisibility_adjacency_check(const FiniteSemigroup& s, int i, int j) {
  const auto& gen = generator_profile(s);
  const int m = gen.index;
  if (m <= 1) throw OutOfRange("divisibility test needs index > 1");
  if (i < 1 || i >= j || j >= m) throw OutOfRange("need 1 <= i < j < m");
  const bool adj = adjacent(s, i - 1, j - 1);
  const bool member = s.generated_by_bits(i - 1).test(j - 1);
  const bool divides = j % i == 0;
  if (adj != member || member != divides)
    throw Error("divisibility equivalence broken at (" + std::to_string(i) +
                "," + std::to_string(j) + ")");
  return adj;
}

int index_lemma_check(const FiniteSemigroup& s, int i) {
  const auto& gen = generator_profile(s);
  const int m = gen.index, n = m + gen.period - 1;
  if (i < 1 || i > n) throw OutOfRange("power index outside 1..m+r-1");
  const int mi = s.profile(i - 1).index;
  const bool one_ok = (mi == 1) == (i >= m);
  const bool two_ok = (mi == 2) == ((m + 1) / 2 <= i && i <= m - 1);
  if (!one_ok || !two_ok)
    throw Error("index lemma broken at i=" + std::to_string(i));
  return mi;
}

namespace {

std::vector<Bitset> all_generated(const FiniteSemigroup& s) {
  std::vector<Bitset> gen;
  gen.reserve(s.size());
  for (int x = 0; x < s.size(); ++x) gen.push_back(s.generated_by_bits(x));
  return gen;
}

std::vector<int> maximal_among(const std::vector<int>& candidates,
                               const std::vector<Bitset>& gen) {
  std::vector<int> out;
  for (int a : candidates) {
    bool maximal = true;
    for (int b : candidates)
      if (gen[a].is_subset_of(gen[b]) && gen[a] != gen[b]) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<int> maximal_monogenic_elements(const FiniteSemigroup& s) {
  const auto gen = all_generated(s);
  std::vector<int> all(s.size());
  std::iota(all.begin(), all.end(), 0);
  return maximal_among(all, gen);
}

std::vector<int> maximal_cyclic_elements(const FiniteSemigroup& s) {
  const auto gen = all_generated(s);
  std::vector<int> candidates;
  for (int x = 0; x < s.size(); ++x)
    if (s.profile(x).index == 1) candidates.push_back(x);
  return maximal_among(candidates, gen);
}

std::vector<int> tau_representatives(const FiniteSemigroup& s, RepTieBreak tb) {
  std::map<Bitset, int> rep;
  for (int x = 0; x < s.size(); ++x) {
    auto [it, inserted] = rep.try_emplace(s.generated_by_bits(x), x);
    if (!inserted && tb == RepTieBreak::greatest_id) it->second = x;
  }
  std::vector<int> out;
  out.reserve(rep.size());
  for (const auto& [bits, x] : rep) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> index_class(const FiniteSemigroup& s, int k) {
  if (k < 2) throw InvalidK(k);
  std::vector<int> out;
  for (int x = 0; x < s.size(); ++x)
    if (s.profile(x).index == k) out.push_back(x);
  return out;
}

std::vector<int> j2_set(const FiniteSemigroup& s, const std::vector<int>& reps) {
  const auto mbar = maximal_cyclic_elements(s);
  Bitset in_reps(s.size());
  for (int x : reps) in_reps.set(x);
  Bitset covered(s.size());  // union of <x> over x in I_2
  for (int x : index_class(s, 2)) covered |= s.generated_by_bits(x);
  std::vector<int> out;
  for (int a : mbar)
    if (in_reps.test(a) && !covered.test(a)) out.push_back(a);
  return out;
}

MaximalSets maximal_sets(const FiniteSemigroup& s, RepTieBreak tb) {
  MaximalSets ms;
  ms.m = maximal_monogenic_elements(s);
  ms.mbar = maximal_cyclic_elements(s);
  ms.tau_reps = tau_representatives(s, tb);
  for (int x = 0; x < s.size(); ++x) {
    const int k = s.profile(x).index;
    if (k >= 2) ms.index_classes[k].push_back(x);
  }
  ms.j2 = j2_set(s, ms.tau_reps);
  return ms;
}

int clique_number_formula(const FiniteSemigroup& s) {
  int best = 0;
  for (int a : maximal_monogenic_elements(s)) {
    const auto& p = s.profile(a);
    if (p.index == 1) {
      best = std::max(best, p.period);
    } else {
      for (int k = 1; k < p.index; ++k) best = std::max(best, mu_k(k, p.period));
    }
  }
  return best;
}

namespace {

/// Sum of floor(m_a/2) with one term per distinct maximal subsemigroup <a>.
int half_index_sum(const FiniteSemigroup& s, const std::vector<int>& m_elems) {
  std::set<Bitset> seen;
  int sum = 0;
  for (int a : m_elems)
    if (seen.insert(s.generated_by_bits(a)).second)
      sum += s.profile(a).index / 2;
  return sum;
}

}  // namespace

IndependenceBounds independence_bounds(const FiniteSemigroup& s) {
  const auto ms = maximal_sets(s);
  const auto it = ms.index_classes.find(2);
  const int i2 = it == ms.index_classes.end() ? 0
                                              : static_cast<int>(it->second.size());
  IndependenceBounds b;
  b.lower = i2 + static_cast<int>(ms.j2.size());
  b.upper = static_cast<int>(ms.j2.size()) + half_index_sum(s, ms.m);
  return b;
}

int rees_independence_formula(const ReesSemigroup& rs) {
  const FiniteSemigroup& s = rs.semigroup;
  const int zero = rs.zero();
  Bitset in_m(s.size());
  for (int a : maximal_monogenic_elements(s)) in_m.set(a);
  for (int x = 0; x < zero; ++x) {
    const auto t = rs.coords(x);
    const bool entry_nonzero =
        rs.spec.entry(t.lambda, t.i) != ReesSpec::kZeroEntry;
    const int mx = s.profile(x).index;
    if (entry_nonzero != (mx == 1) || (!entry_nonzero && mx != 2))
      throw Error("sandwich index dichotomy broken at element " +
                  std::to_string(x));
    if (!entry_nonzero) {
      if (s.product(x, x) != zero)
        throw Error("square of zero-entry element is not zero");
      if (!in_m.test(x))
        throw Error("zero-entry element is not a maximal generator");
    }
  }
  return independence_bounds(s).upper;
}

InvariantReport build_report(const FiniteSemigroup& s, int cap,
                             const std::optional<MonogenicParams>& mono,
                             const ReesSemigroup* rees) {
  InvariantReport r;
  r.n = s.size();
  r.idempotent_count = static_cast<int>(s.idempotents().size());
  const SimpleGraph g = build_cyclic_graph(s);
  r.classification = classify(g);
  r.omega_formula = clique_number_formula(s);
  r.omega_oracle = static_cast<int>(max_clique(g, cap).size());
  if (mono) r.alpha_formula = independence_number_monogenic(mono->index, mono->period);
  if (rees) r.alpha_rees_formula = rees_independence_formula(*rees);
  const auto bounds = independence_bounds(s);
  r.alpha_lower = bounds.lower;
  r.alpha_upper = bounds.upper;
  r.alpha_oracle = static_cast<int>(max_independent_set(g, cap).size());
  r.gamma_oracle = static_cast<int>(min_dominating_set(g, cap).size());
  r.sets = maximal_sets(s);
  r.green = green_classes(s);
  r.formulas_match_oracles =
      r.omega_formula == r.omega_oracle &&
      (!r.alpha_formula || *r.alpha_formula == r.alpha_oracle) &&
      (!r.alpha_rees_formula || *r.alpha_rees_formula == r.alpha_oracle) &&
      r.alpha_lower <= r.alpha_oracle && r.alpha_oracle <= r.alpha_upper &&
      r.gamma_oracle == r.idempotent_count;
  return r;
}

std::string report_to_json(const InvariantReport& r, int indent) {
  using nlohmann::json;
  json j;
  j["n"] = r.n;
  j["idempotent_count"] = r.idempotent_count;
  j["omega_formula"] = r.omega_formula;
  j["omega_oracle"] = r.omega_oracle;
  j["alpha_formula"] =
      r.alpha_formula ? json(*r.alpha_formula) : json(nullptr);
  j["alpha_rees_formula"] =
      r.alpha_rees_formula ? json(*r.alpha_rees_formula) : json(nullptr);
  j["alpha_lower"] = r.alpha_lower;
  j["alpha_upper"] = r.alpha_upper;
  j["alpha_oracle"] = r.alpha_oracle;
  j["gamma_oracle"] = r.gamma_oracle;
  j["formulas_match_oracles"] = r.formulas_match_oracles;

  const Classification& c = r.classification;
  j["classification"] = {{"is_null", c.is_null},
                         {"is_complete", c.is_complete},
                         {"is_bipartite", c.is_bipartite},
                         {"is_acyclic", c.is_acyclic},
                         {"is_tree", c.is_tree},
                         {"is_regular", c.is_regular},
                         {"is_star", c.is_star},
                         {"component_count", c.component_count},
                         {"degree_sequence", c.degree_sequence}};

  json sizes;
  sizes["m_size"] = r.sets.m.size();
  sizes["mbar_size"] = r.sets.mbar.size();
  sizes["tau_class_count"] = r.sets.tau_reps.size();
  sizes["j2_size"] = r.sets.j2.size();
  json per_k = json::object();
  for (const auto& [k, cls] : r.sets.index_classes)
    per_k[std::to_string(k)] = cls.size();
  sizes["index_class_sizes"] = per_k;
  j["maximal_sets"] = sizes;

  auto blocks_json = [](const Partition& p) {
    json arr = json::array();
    for (const auto& b : p.blocks) arr.push_back(b);
    return arr;
  };
  j["green"] = {{"L", blocks_json(r.green.l)},
                {"R", blocks_json(r.green.r)},
                {"J", blocks_json(r.green.j)},
                {"H", blocks_json(r.green.h)},
                {"D", blocks_json(r.green.d)}};

  return j.dump(indent);
}

}  // namespace semigraph
