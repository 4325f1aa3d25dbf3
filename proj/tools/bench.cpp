// Compares the serial reference kernels against the OpenMP ones: the
// associativity scan and the cyclic-graph build. Both pairs must agree
// exactly; timings show the parallel speedup.

#include <chrono>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "semigraph/graph.hpp"
#include "semigraph/semigroup.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double best_ms(int trials, F&& f) {
  double best = 1e300;
  for (int t = 0; t < trials; ++t) {
    const auto start = Clock::now();
    f();
    const std::chrono::duration<double, std::milli> took = Clock::now() - start;
    if (took.count() < best) best = took.count();
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs parallel kernel benchmark"};
  int assoc_n = 600;
  int graph_order = 120;
  int trials = 3;
  app.add_option("--assoc-n", assoc_n, "table size for the associativity scan");
  app.add_option("--graph-order", graph_order,
                 "semigroup order for the graph build");
  app.add_option("--trials", trials, "trials per kernel (best time reported)");
  CLI11_PARSE(app, argc, argv);

  using namespace semigraph;

  // Build a known-associative table of the requested size without the O(n^3)
  // construction check getting in the way of the measurement.
  set_validate_constructions(false);
  const int m = assoc_n / 2, r = assoc_n - assoc_n / 2 + 1;
  const FiniteSemigroup big = FiniteSemigroup::monogenic(m, r);
  set_validate_constructions(true);

  std::printf("%-24s %10s %10s %8s %s\n", "kernel", "serial ms", "openmp ms",
              "speedup", "agree");

  {
    const auto& table = big.table();
    const int n = big.size();
    std::optional<std::array<int, 3>> serial_out, parallel_out;
    const double serial =
        best_ms(trials, [&] { serial_out = find_nonassociative_triple_serial(n, table); });
    const double parallel =
        best_ms(trials, [&] { parallel_out = find_nonassociative_triple(n, table); });
    std::printf("%-24s %10.1f %10.1f %7.2fx %s\n", "associativity-scan", serial,
                parallel, serial / parallel,
                serial_out == parallel_out ? "yes" : "NO");
  }

  {
    const int gm = graph_order / 2, gr = graph_order - graph_order / 2 + 1;
    set_validate_constructions(false);
    const FiniteSemigroup s = FiniteSemigroup::monogenic(gm, gr);
    set_validate_constructions(true);
    std::vector<std::pair<int, int>> serial_edges, parallel_edges;
    const double serial = best_ms(
        trials, [&] { serial_edges = build_cyclic_graph_serial(s).edges(); });
    const double parallel =
        best_ms(trials, [&] { parallel_edges = build_cyclic_graph(s).edges(); });
    std::printf("%-24s %10.1f %10.1f %7.2fx %s\n", "cyclic-graph-build", serial,
                parallel, serial / parallel,
                serial_edges == parallel_edges ? "yes" : "NO");
  }
  return 0;
}
