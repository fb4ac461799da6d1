#include <benchmark/benchmark.h>

#include "cycledual/construct.hpp"
#include "cycledual/distance.hpp"

using namespace cycledual;

namespace {

void BM_FieldMul(benchmark::State& state) {
    const Field f = Field::create(static_cast<unsigned>(state.range(0)));
    const auto mask = static_cast<Elem>(f.size() - 1);
    Elem a = 1, b = 3;
    for (auto _ : state) {
        a = f.mul(a, b) | 1u;
        b = (b * 2654435761u + 1u) & mask;
        benchmark::DoNotOptimize(a);
    }
}
BENCHMARK(BM_FieldMul)->Arg(2)->Arg(8)->Arg(16)->Arg(24);

void BM_PolyMul(benchmark::State& state) {
    const Field f = Field::create(2);
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<Elem> ca(n), cb(n);
    for (std::size_t i = 0; i < n; ++i) {
        ca[i] = static_cast<Elem>(i % 4);
        cb[i] = static_cast<Elem>((3 * i + 1) % 4);
    }
    const Poly a(f, ca), b(f, cb);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Arg(21)->Arg(63)->Arg(255);

void BM_ExactDistance(benchmark::State& state) {
    const SelfDualCertificate c = build_family({DualKind::euclidean, 2, 3, 9, std::nullopt});
    const Matrix basis = uuv_basis(c.alphabet, c.plan.n_inner, c.inner_generator, c.dual_generator);
    ExhaustiveOptions opt;
    opt.workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(exact_min_distance(c.alphabet, basis, opt));
}
BENCHMARK(BM_ExactDistance)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SampledDistance(benchmark::State& state) {
    const SelfDualCertificate c = build_family({DualKind::euclidean, 2, 3, 3, std::nullopt});
    const Matrix basis = uuv_basis(c.alphabet, c.plan.n_inner, c.inner_generator, c.dual_generator);
    for (auto _ : state) benchmark::DoNotOptimize(sampled_weight_upper_bound(c.alphabet, basis, 10000, 1));
}
BENCHMARK(BM_SampledDistance)->Unit(benchmark::kMillisecond);

void BM_BuildFamily(benchmark::State& state) {
    const FamilyParams p{DualKind::euclidean, 1, static_cast<unsigned>(state.range(0)), 1, std::nullopt};
    for (auto _ : state) benchmark::DoNotOptimize(build_family(p));
}
BENCHMARK(BM_BuildFamily)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
