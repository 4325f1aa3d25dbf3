#include "semigraph/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semigraph {

namespace {
std::atomic<bool> g_validate{true};
}

void set_validate_constructions(bool on) { g_validate.store(on); }
bool validate_constructions() { return g_validate.load(); }

std::optional<std::array<int, 3>> find_nonassociative_triple_serial(
    int n, const std::vector<int>& table) {
  auto at = [&](int x, int y) { return table[x * n + y]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          return std::array<int, 3>{x, y, z};
  return std::nullopt;
}

std::optional<std::array<int, 3>> find_nonassociative_triple(
    int n, const std::vector<int>& table) {
  auto at = [&](int x, int y) { return table[x * n + y]; };
  std::array<int, 3> best{n, n, n};  // lexicographic min across threads
  bool found = false;
#ifdef _OPENMP
#pragma omp parallel
  {
    std::array<int, 3> local{n, n, n};
    bool local_found = false;
#pragma omp for schedule(static) nowait
    for (int x = 0; x < n; ++x) {
      if (local_found) continue;  // earlier x in this thread's chunk already hit
      for (int y = 0; y < n && !local_found; ++y)
        for (int z = 0; z < n; ++z)
          if (at(at(x, y), z) != at(x, at(y, z))) {
            local = {x, y, z};
            local_found = true;
            break;
          }
    }
#pragma omp critical
    if (local_found && (!found || local < best)) {
      best = local;
      found = true;
    }
  }
  if (found) return best;
  return std::nullopt;
#else
  (void)best;
  (void)found;
  return find_nonassociative_triple_serial(n, table);
#endif
}

FiniteSemigroup::FiniteSemigroup(int n, std::vector<int> table,
                                 std::vector<std::string> labels, bool verify)
    : n_(n), table_(std::move(table)), labels_(std::move(labels)) {
  if (n_ < 1) throw InvalidParams("semigroup must have at least one element");
  if (static_cast<int>(table_.size()) != n_ * n_)
    throw InvalidParams("table must be n x n");
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      int v = table_[x * n_ + y];
      if (v < 0 || v >= n_) throw EntryOutOfRange(x, y);
    }
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (int i = 0; i < n_; ++i) labels_.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n_)
    throw InvalidParams("labels must have one entry per element");
  if (verify) {
    if (auto w = find_nonassociative_triple(n_, table_))
      throw NotAssociative((*w)[0], (*w)[1], (*w)[2]);
  }
  compute_profiles();
}

FiniteSemigroup FiniteSemigroup::from_table(int n, std::vector<int> table,
                                            std::vector<std::string> labels) {
  return FiniteSemigroup(n, std::move(table), std::move(labels), true);
}

FiniteSemigroup FiniteSemigroup::from_construction(int n, std::vector<int> table,
                                                   std::vector<std::string> labels) {
  return FiniteSemigroup(n, std::move(table), std::move(labels),
                         validate_constructions());
}

FiniteSemigroup FiniteSemigroup::monogenic(int index, int period) {
  if (index < 1 || period < 1)
    throw InvalidParams("monogenic parameters require index >= 1 and period >= 1");
  const int m = index, r = period, n = m + r - 1;
  auto red = [&](int s) { return s <= n ? s : m + (s - m) % r; };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = red(i + j + 2) - 1;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 1; i <= n; ++i) labels.push_back("a^" + std::to_string(i));
  return FiniteSemigroup(n, std::move(table), std::move(labels),
                         validate_constructions());
}

FiniteSemigroup FiniteSemigroup::cyclic_group(int n) {
  if (n < 1) throw InvalidParams("cyclic group order must be >= 1");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.push_back("g^" + std::to_string(i));
  return FiniteSemigroup(n, std::move(table), std::move(labels),
                         validate_constructions());
}

FiniteSemigroup FiniteSemigroup::left_zero_band(int n) {
  if (n < 1) throw InvalidParams("band size must be >= 1");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i * n + j] = i;
  return FiniteSemigroup(n, std::move(table), {}, validate_constructions());
}

FiniteSemigroup FiniteSemigroup::direct_product(const FiniteSemigroup& s,
                                                const FiniteSemigroup& t) {
  const int ns = s.size(), nt = t.size(), n = ns * nt;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  auto id = [&](int a, int b) { return a * nt + b; };
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < nt; ++b)
      for (int c = 0; c < ns; ++c)
        for (int d = 0; d < nt; ++d)
          table[id(a, b) * n + id(c, d)] =
              id(s.table_[a * ns + c], t.table_[b * nt + d]);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int a = 0; a < ns; ++a)
    for (int b = 0; b < nt; ++b)
      labels.push_back("(" + s.label(a) + "," + t.label(b) + ")");
  return FiniteSemigroup(n, std::move(table), std::move(labels),
                         validate_constructions());
}

int FiniteSemigroup::power(int x, long long k) const {
  check_element(x);
  if (k < 1) throw OutOfRange("power exponent must be >= 1");
  int base = x;
  int acc = -1;
  while (k > 0) {
    if (k & 1) acc = acc < 0 ? base : table_[acc * n_ + base];
    k >>= 1;
    if (k > 0) base = table_[base * n_ + base];
  }
  return acc;
}

void FiniteSemigroup::compute_profiles() {
  profiles_.resize(n_);
  std::vector<int> seen_at(n_);
  for (int x = 0; x < n_; ++x) {
    std::fill(seen_at.begin(), seen_at.end(), 0);
    std::vector<int> chain;  // chain[t-1] = x^t
    int cur = x, step = 1;
    while (true) {
      if (seen_at[cur] != 0) break;
      seen_at[cur] = step;
      chain.push_back(cur);
      cur = table_[cur * n_ + x];
      ++step;
    }
    ElementProfile& p = profiles_[x];
    p.element = x;
    p.index = seen_at[cur];            // x^step == x^seen_at[cur]
    p.period = step - seen_at[cur];
    p.order = static_cast<int>(chain.size());
    const int m = p.index, r = p.period;
    p.kernel.assign(chain.begin() + (m - 1), chain.end());
    std::sort(p.kernel.begin(), p.kernel.end());
    const int g = (r - m % r) % r;
    p.idempotent_power = chain[m + g - 1];
    const int gp = ((1 - m) % r + r) % r;
    p.kernel_generator = chain[m + gp - 1];
  }
}

std::vector<int> FiniteSemigroup::generated_by(int x) const {
  auto v = generated_by_bits(x).to_vector();
  return v;
}

Bitset FiniteSemigroup::generated_by_bits(int x) const {
  check_element(x);
  Bitset b(n_);
  int cur = x;
  for (int t = 0; t < profiles_[x].order; ++t) {
    b.set(cur);
    cur = table_[cur * n_ + x];
  }
  return b;
}

std::vector<int> FiniteSemigroup::idempotents() const {
  std::vector<int> e;
  for (int x = 0; x < n_; ++x)
    if (table_[x * n_ + x] == x) e.push_back(x);
  return e;
}

bool FiniteSemigroup::is_band() const {
  for (int x = 0; x < n_; ++x)
    if (table_[x * n_ + x] != x) return false;
  return true;
}

std::optional<int> FiniteSemigroup::identity() const {
  for (int e = 0; e < n_; ++e) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x)
      ok = table_[e * n_ + x] == x && table_[x * n_ + e] == x;
    if (ok) return e;
  }
  return std::nullopt;
}

std::set<int> FiniteSemigroup::pi_set() const {
  std::set<int> out;
  for (const auto& p : profiles_) out.insert(p.order);
  return out;
}

int FiniteSemigroup::exponent() const {
  long long l = 1;
  int max_index = 1;
  for (const auto& p : profiles_) {
    l = std::lcm(l, static_cast<long long>(p.period));
    max_index = std::max(max_index, p.index);
  }
  const long long bound = l * ((max_index + l - 1) / l);
  for (long long k = 1; k <= bound; ++k) {
    bool all = true;
    for (int x = 0; x < n_ && all; ++x) {
      int p = power(x, k);
      all = table_[p * n_ + p] == p;
    }
    if (all) return static_cast<int>(k);
  }
  return static_cast<int>(bound);  // unreachable: bound itself always passes
}

std::vector<int> closure(const FiniteSemigroup& s, const std::vector<int>& gens) {
  if (gens.empty()) throw EmptyGeneratingSet();
  const int n = s.size();
  Bitset in(n);
  std::vector<int> members;
  for (int g : gens) {
    if (g < 0 || g >= n) throw OutOfRange("generator id out of range");
    if (!in.test(g)) {
      in.set(g);
      members.push_back(g);
    }
  }
  const auto& tab = s.table();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const int u = members[i];
    for (std::size_t j = 0; j < members.size(); ++j) {
      const int v = members[j];
      for (int p : {tab[u * n + v], tab[v * n + u]})
        if (!in.test(p)) {
          in.set(p);
          members.push_back(p);
        }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::optional<int> is_monogenic_subset(const FiniteSemigroup& s,
                                       const std::vector<int>& subset) {
  if (subset.empty()) throw EmptyGeneratingSet();
  const int n = s.size();
  Bitset in(n);
  for (int x : subset) {
    if (x < 0 || x >= n) throw OutOfRange("subset element out of range");
    in.set(x);
  }
  for (int u : subset)
    for (int v : subset)
      if (!in.test(s.product(u, v))) throw NotASubsemigroup(u, v);
  // <z> is inside the subset for every member z, so equality is a size check.
  const int target = static_cast<int>(subset.size());
  for (int z : subset)
    if (s.order_of(z) == target) return z;
  return std::nullopt;
}

bool is_group_subset(const FiniteSemigroup& s, const std::vector<int>& subset) {
  if (subset.empty()) return false;
  const int n = s.size();
  Bitset in(n);
  for (int x : subset) {
    if (x < 0 || x >= n) throw OutOfRange("subset element out of range");
    in.set(x);
  }
  for (int u : subset)
    for (int v : subset)
      if (!in.test(s.product(u, v))) return false;
  int identity = -1;
  for (int e : subset) {
    bool ok = true;
    for (int t : subset)
      if (s.product(e, t) != t || s.product(t, e) != t) {
        ok = false;
        break;
      }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) return false;
  for (int t : subset) {
    bool has_inverse = false;
    for (int u : subset)
      if (s.product(t, u) == identity && s.product(u, t) == identity) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return false;
  }
  return true;
}

bool is_group(const FiniteSemigroup& s) {
  std::vector<int> all(s.size());
  std::iota(all.begin(), all.end(), 0);
  return is_group_subset(s, all);
}

std::map<int, std::vector<int>> s_f_partition(const FiniteSemigroup& s) {
  std::map<int, std::vector<int>> blocks;
  for (int x = 0; x < s.size(); ++x)
    blocks[s.profile(x).idempotent_power].push_back(x);
  return blocks;
}

}  // namespace semigraph
