#include <benchmark/benchmark.h>

#include <random>

#include "coeffective/builder.hpp"
#include "coeffective/homology.hpp"
#include "coeffective/model.hpp"
#include "coeffective/strands.hpp"

using namespace coeffective;

namespace {

Form covector(std::mt19937_64& rng, int m) {
    while (true) {
        Form xi(m);
        for (int i = 1; i <= m; ++i) {
            int c = static_cast<int>(rng() % 19) - 9;
            if (c != 0) xi.add_term(Blade(m, {i}), Rational(c));
        }
        if (!xi.is_zero()) return xi;
    }
}

}  // namespace

static void BM_RankPhiWedgeL3(benchmark::State& state) {
    auto cal = standard_g2();
    Matrix w = wedge_map(cal.F, 3);
    for (auto _ : state) benchmark::DoNotOptimize(rank(w));
}
BENCHMARK(BM_RankPhiWedgeL3);

static void BM_BuildExtendedTorus7(benchmark::State& state) {
    auto s = StructureData::from_model_data(builtin("torus7_g2").model());
    for (auto _ : state) {
        auto built = build_extended_complex(s);
        benchmark::DoNotOptimize(built.positions.size());
    }
}
BENCHMARK(BM_BuildExtendedTorus7);

static void BM_SymbolComplexSymplectic(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    auto cal = standard_symplectic(n);
    std::mt19937_64 rng(7);
    for (auto _ : state) {
        auto cx = symbol_complex(cal, covector(rng, 2 * n));
        int total = 0;
        for (const auto& d : cx.diffs) total += rank(d);
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_SymbolComplexSymplectic)->Arg(2)->Arg(3)->Arg(4);

static void BM_StrandCohomologyM6(benchmark::State& state) {
    StrandBuilder sb(standard_symplectic(3));
    int h = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto cx = sb.strand(h);
        benchmark::DoNotOptimize(cohomology(cx).dims);
    }
}
BENCHMARK(BM_StrandCohomologyM6)->Arg(4)->Arg(6);

static void BM_LepageDecompose(benchmark::State& state) {
    auto cal = standard_symplectic(3);
    std::mt19937_64 rng(13);
    auto basis = enumerate_basis(6, 3);
    for (auto _ : state) {
        Form w(6);
        for (int t = 0; t < 4; ++t)
            w.add_term(basis[rng() % basis.size()], Rational(static_cast<int>(rng() % 19) - 9));
        benchmark::DoNotOptimize(lepage_decompose(cal, w).size());
    }
}
BENCHMARK(BM_LepageDecompose);

BENCHMARK_MAIN();
