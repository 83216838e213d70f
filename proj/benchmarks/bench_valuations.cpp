// Microbenchmarks for the geometry kernel and the valuations, exact versus
// float scalars. Polytopes are drawn from the harness generator so the sizes
// match what the check suite exercises.

#include <benchmark/benchmark.h>

#include "lyzval/harness.hpp"

using namespace lyzval;
using namespace lyzval::harness;

namespace {

template <typename S>
std::vector<Polytope<S>> sample_polytopes(int dim, int count, OriginConstraint oc) {
    Stream rng(2026, "bench", static_cast<std::uint64_t>(dim));
    std::vector<Polytope<S>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(gen_polytope<S>(rng, dim, 10, 4, oc));
    return out;
}

template <typename S>
void bm_construction(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    Stream rng(2026, "bench-construct", static_cast<std::uint64_t>(dim));
    std::vector<std::vector<Vec<S>>> pointsets;
    for (int i = 0; i < 32; ++i)
        pointsets.push_back(gen_polytope<S>(rng, dim, 10, 4, OriginConstraint::Any).vertices());
    std::size_t i = 0;
    for (auto _ : state) {
        Polytope<S> p(dim, pointsets[i++ % pointsets.size()]);
        benchmark::DoNotOptimize(p.facets().size());
    }
}

template <typename S>
void bm_triangulate_at_origin(benchmark::State& state) {
    auto ps = sample_polytopes<S>(3, 16, OriginConstraint::Interior);
    std::size_t i = 0;
    for (auto _ : state) {
        auto tris = triangulate_at_origin(ps[i++ % ps.size()]);
        benchmark::DoNotOptimize(tris.size());
    }
}

template <typename S>
void bm_moment(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    auto ps = sample_polytopes<S>(dim, 16, OriginConstraint::Any);
    std::size_t i = 0;
    for (auto _ : state) {
        Mat<S> m = moment_matrix(ps[i++ % ps.size()]);
        benchmark::DoNotOptimize(m.at(0, 0));
    }
}

template <typename S>
void bm_general_lyz(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    auto ps = sample_polytopes<S>(dim, 16, OriginConstraint::Interior);
    CauchyWitness<S> xi = CauchyWitness<S>::linear(S(2));
    std::size_t i = 0;
    for (auto _ : state) {
        Mat<S> m = general_lyz(ps[i++ % ps.size()], xi);
        benchmark::DoNotOptimize(m.at(0, 0));
    }
}

template <typename S>
void bm_evaluate_extended(benchmark::State& state) {
    auto ps = sample_polytopes<S>(3, 16, OriginConstraint::Outside);
    ValuationSpec<S> spec = Theorem5Params<S>{S(1), S(-1), CauchyWitness<S>::linear(S(2)),
                                              CauchyWitness<S>::linear(S(1) / 2)};
    std::size_t i = 0;
    for (auto _ : state) {
        Mat<S> m = evaluate(spec, ps[i++ % ps.size()]);
        benchmark::DoNotOptimize(m.at(0, 0));
    }
}

}  // namespace

BENCHMARK(bm_construction<Rat>)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_construction<double>)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_triangulate_at_origin<Rat>)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_triangulate_at_origin<double>)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_moment<Rat>)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_moment<double>)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_general_lyz<Rat>)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_general_lyz<double>)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_evaluate_extended<Rat>)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_evaluate_extended<double>)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
