#include <conewright/report.hpp>

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace conewright;

// Normal-form multiplication in the largest catalog ring.
void bench_ring_multiply(benchmark::State& state) {
  const auto& g = spaces::get("gr25");
  const ring::PolyClass a = chern::chern_class(g.tangent, 2);
  const ring::PolyClass b = chern::chern_class(g.tangent, 3);
  for (auto _ : state) {
    ring::PolyClass p = a * b;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(bench_ring_multiply);

// Full invariant row (triple products, c2 pairings, double-point count) of
// one family; the argument selects the family.
void bench_invariant_row(benchmark::State& state) {
  const auto id = static_cast<detcy::CaseId>(state.range(0));
  for (auto _ : state) {
    detcy::InvariantRow row = detcy::invariant_row(detcy::case_config(id));
    benchmark::DoNotOptimize(row);
  }
}
BENCHMARK(bench_invariant_row)->Arg(0)->Arg(1)->Arg(2);

// Movable-cone chamber assembly, including both pushforward solves.
void bench_assemble_chambers(benchmark::State& state) {
  const auto id = static_cast<detcy::CaseId>(state.range(0));
  for (auto _ : state) {
    birat::ChamberDecomposition d = birat::assemble_chambers(id);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bench_assemble_chambers)->Arg(0)->Arg(1)->Arg(2);

// All pairwise products of the cycle-class basis of the rank-2 subspace
// Grassmannian of a 5-space.
void bench_schubert_products(benchmark::State& state) {
  const auto& g = spaces::get("gr25");
  const chern::Bundle& q = g.bundle("Q");
  std::vector<ring::PolyClass> sigma;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= a; ++b) {
      const ring::PolyClass high = chern::chern_class(q, a) * chern::chern_class(q, b);
      const ring::PolyClass low =
          b == 0 ? g.ring->zero()
                 : chern::chern_class(q, a + 1) * chern::chern_class(q, b - 1);
      sigma.push_back(high - low);
    }
  }
  for (auto _ : state) {
    Rat total = 0;
    for (const auto& x : sigma) {
      for (const auto& y : sigma) {
        total += g.ring->integrate(x * y);
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(bench_schubert_products);

// The complete self-verification sweep across all three families.
void bench_full_check(benchmark::State& state) {
  for (auto _ : state) {
    report::CheckReport rep = report::run_checks();
    benchmark::DoNotOptimize(rep.all_pass());
  }
}
BENCHMARK(bench_full_check);

}  // namespace

BENCHMARK_MAIN();
