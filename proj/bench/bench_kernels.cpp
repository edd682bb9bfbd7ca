#include <benchmark/benchmark.h>

#include "bilpair/classify/classify.hpp"
#include "bilpair/pair/bp_format.hpp"

using namespace bilpair;

namespace {

ExecMode mode_of(const benchmark::State& state) { return state.range(0) ? ExecMode::parallel : ExecMode::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

// Same invariants, no witness: both searches run to exhaustion.
const BilinearPair& left() {
    static const BilinearPair p = parse_bp("field p=3\ndim 4\ne1*e1 = e3\ne2*e2 = e4\ne1*e2 = e4\n");
    return p;
}
const BilinearPair& right() {
    static const BilinearPair p = parse_bp("field p=3\ndim 4\ne1*e1 = e3\ne2*e2 = e4\ne2*e1 = e4\n");
    return p;
}

void BM_EquivalenceSweep(benchmark::State& state) {
    BilinearPair a = parse_bp("field p=5\ndim 3\ne1*e1 = e2\ne2*e2 = e3\n");
    BilinearPair b = parse_bp("field p=5\ndim 3\ne1*e1 = e2\ne2*e1 = e3\n");
    for (auto _ : state) benchmark::DoNotOptimize(equivalence_sweep(a, b, mode_of(state)));
    label(state);
}

void BM_PrunedSearch(benchmark::State& state) {
    SearchOptions o;
    o.mode = mode_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(are_equivalent_bruteforce(left(), right(), o));
    label(state);
}

void BM_AutomorphismSweep(benchmark::State& state) {
    BilinearPair a = parse_bp("field p=5\ndim 3\ne1*e1 = e2\n");
    for (auto _ : state) benchmark::DoNotOptimize(automorphism_group_sweep(a, mode_of(state)));
    label(state);
}

void BM_OrbitPartition(benchmark::State& state) {
    BilinearPair n2(2, Field::prime(3));
    AutomorphismGroup aut = automorphism_group(n2);
    ClassifyOptions o;
    o.mode = mode_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(orbit_partition(n2, 2, aut, o));
    label(state);
}

}  // namespace

BENCHMARK(BM_EquivalenceSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PrunedSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutomorphismSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitPartition)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
