#include <chrono>
#include <cstdio>
#include <vector>

#include "CLI11.hpp"
#include "treespan/cnf.hpp"
#include "treespan/oracles.hpp"
#include "treespan/reduction.hpp"
#include "treespan/rng.hpp"
#include "treespan/stretch.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace treespan;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// All eight sign patterns over three variables; unsatisfiable.
Formula all_sign_patterns() {
  std::vector<Clause> clauses;
  for (int s = 0; s < 8; ++s) {
    Clause c;
    for (int k = 0; k < 3; ++k)
      c.literals[k] = Literal{k + 1, (s & (1 << k)) == 0};
    clauses.push_back(c);
  }
  return Formula(3, std::move(clauses));
}

Formula random_formula(int n, int m, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Clause> clauses;
  clauses.reserve(m);
  for (int i = 0; i < m; ++i) {
    int a = 1 + static_cast<int>(rng.below(n));
    int b, c;
    do { b = 1 + static_cast<int>(rng.below(n)); } while (b == a);
    do { c = 1 + static_cast<int>(rng.below(n)); } while (c == a || c == b);
    clauses.push_back(Clause{{Literal{a, rng.coin()}, Literal{b, rng.coin()},
                              Literal{c, rng.coin()}}});
  }
  return Formula(n, std::move(clauses));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-vs-parallel benchmark"};
  app.set_help_flag("--help", "print help");
  int height = 2;
  int trees = 20;
  int sat_vars = 20;
  uint64_t seed = 1;
  app.add_option("--h", height, "reduction height");
  app.add_option("--trees", trees, "BFS trees to measure stretch on");
  app.add_option("--sat-n", sat_vars, "variables for the exhaustive-solve case");
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (compiled without OpenMP)\n");
#endif

  Formula f = all_sign_patterns();
  ReductionGraph rg = build_reduction(f, height);
  std::printf("instance: %d vertices, %d edges, %d blocks\n",
              rg.graph.vertex_count(), rg.graph.edge_count(), rg.block_count());

  std::vector<SpanningTree> samples;
  samples.reserve(trees);
  for (int i = 0; i < trees; ++i)
    samples.push_back(sample_bfs_tree(rg.graph, rg.center, seed + i));

  auto start = Clock::now();
  long long checksum_kernel = 0;
  for (const auto& t : samples) checksum_kernel += max_stretch(t).max_stretch;
  double t_kernel = seconds_since(start);

  start = Clock::now();
  long long checksum_serial = 0;
  for (const auto& t : samples)
    checksum_serial += max_stretch_serial(t).max_stretch;
  double t_serial = seconds_since(start);

  if (checksum_kernel != checksum_serial) {
    std::printf("MISMATCH between stretch kernel and serial reference\n");
    return 1;
  }
  std::printf("max_stretch   x%-4d kernel %8.3fs   serial %8.3fs   speedup %.2fx\n",
              trees, t_kernel, t_serial, t_serial / t_kernel);

  Formula hard = random_formula(sat_vars, 3 * sat_vars, seed);
  start = Clock::now();
  auto a_par = exhaustive_solve(hard, kMaxExhaustiveThreshold);
  double t_solve_par = seconds_since(start);
  start = Clock::now();
  auto a_ser = exhaustive_solve_serial(hard, kMaxExhaustiveThreshold);
  double t_solve_ser = seconds_since(start);
  if (a_par != a_ser) {
    std::printf("MISMATCH between exhaustive solvers\n");
    return 1;
  }
  std::printf("solve n=%-5d       kernel %8.3fs   serial %8.3fs   speedup %.2fx\n",
              sat_vars, t_solve_par, t_solve_ser, t_solve_ser / t_solve_par);
  return 0;
}
