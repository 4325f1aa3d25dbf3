#include "semigraph/rees.hpp"

namespace semigraph {

ReesSemigroup rees_matrix(ReesSpec spec) {
  const int gn = spec.group.size();
  const int p = spec.i_size, q = spec.lambda_size;
  if (p < 1 || q < 1) throw InvalidParams("index sets must be nonempty");
  if (static_cast<int>(spec.sandwich.size()) != p * q)
    throw InvalidParams("sandwich matrix must be q x p");
  for (int e : spec.sandwich)
    if (e != ReesSpec::kZeroEntry && (e < 0 || e >= gn))
      throw InvalidParams("sandwich entry is not a group element id");
  if (!is_group(spec.group)) throw NotAGroup("the group field fails the group check");
  for (int l = 0; l < q; ++l) {
    bool nonzero = false;
    for (int i = 0; i < p && !nonzero; ++i)
      nonzero = spec.entry(l, i) != ReesSpec::kZeroEntry;
    if (!nonzero) throw IrregularMatrix(true, l);
  }
  for (int i = 0; i < p; ++i) {
    bool nonzero = false;
    for (int l = 0; l < q && !nonzero; ++l)
      nonzero = spec.entry(l, i) != ReesSpec::kZeroEntry;
    if (!nonzero) throw IrregularMatrix(false, i);
  }

  const int n = p * gn * q + 1;
  const int zero = n - 1;
  auto id = [&](int i, int g, int l) { return (i * gn + g) * q + l; };
  std::vector<int> table(static_cast<std::size_t>(n) * n, zero);
  for (int i = 0; i < p; ++i)
    for (int a = 0; a < gn; ++a)
      for (int l = 0; l < q; ++l)
        for (int j = 0; j < p; ++j)
          for (int b = 0; b < gn; ++b)
            for (int u = 0; u < q; ++u) {
              const int pe = spec.entry(l, j);
              if (pe == ReesSpec::kZeroEntry) continue;  // product stays zero
              const int prod = spec.group.product(spec.group.product(a, pe), b);
              table[id(i, a, l) * n + id(j, b, u)] = id(i, prod, u);
            }

  std::vector<std::string> labels(n);
  for (int i = 0; i < p; ++i)
    for (int a = 0; a < gn; ++a)
      for (int l = 0; l < q; ++l)
        labels[id(i, a, l)] = "(" + std::to_string(i + 1) + "," +
                              spec.group.label(a) + "," + std::to_string(l + 1) +
                              ")";
  labels[zero] = "0";

  FiniteSemigroup s =
      FiniteSemigroup::from_construction(n, std::move(table), std::move(labels));
  return ReesSemigroup{std::move(s), std::move(spec)};
}

}  // namespace semigraph
