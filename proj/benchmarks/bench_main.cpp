#include <benchmark/benchmark.h>

#include <fibredim/dsl.hpp>
#include <fibredim/random_gen.hpp>
#include <fibredim/theorems.hpp>

#include <random>

using namespace fibredim;

namespace {

std::vector<Polynomial> random_ideal(std::uint64_t seed, const CoeffDomain& domain, int vars,
                                     int count, unsigned degree) {
    std::mt19937_64 rng(seed);
    MonomialOrder order = MonomialOrder::grevlex(vars);
    std::vector<Polynomial> gens;
    for (int i = 0; i < count; ++i) {
        Polynomial p = random_polynomial(rng, domain, order, degree, -9, 9, 4);
        if (!p.is_zero()) gens.push_back(p);
    }
    return gens;
}

void BM_BuchbergerRationals(benchmark::State& state) {
    int vars = static_cast<int>(state.range(0));
    auto gens = random_ideal(17, CoeffDomain::rationals(), vars, 3, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(buchberger_field(gens, MonomialOrder::grevlex(vars)));
    }
}
BENCHMARK(BM_BuchbergerRationals)->Arg(2)->Arg(3)->Arg(4);

void BM_BuchbergerInteger(benchmark::State& state) {
    int vars = static_cast<int>(state.range(0));
    auto gens = random_ideal(23, CoeffDomain::integers(), vars, 3, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(buchberger_integer(gens, MonomialOrder::grevlex(vars)));
    }
}
BENCHMARK(BM_BuchbergerInteger)->Arg(2)->Arg(3)->Arg(4);

void BM_NormalForm(benchmark::State& state) {
    CoeffDomain q = CoeffDomain::rationals();
    MonomialOrder order = MonomialOrder::grevlex(3);
    auto gens = random_ideal(31, q, 3, 3, 2);
    GroebnerBasis gb = buchberger_field(gens, order);
    std::mt19937_64 rng(5);
    Polynomial probe = random_polynomial(rng, q, order, 4, -9, 9, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(normal_form(probe, gb));
    }
}
BENCHMARK(BM_NormalForm);

void BM_IndependentSetSearch(benchmark::State& state) {
    int vars = static_cast<int>(state.range(0));
    std::mt19937_64 rng(99);
    std::vector<Monomial> lms;
    for (int i = 0; i < 8; ++i) {
        std::vector<unsigned> e(static_cast<size_t>(vars), 0);
        for (int d = 0; d < 3; ++d) e[static_cast<size_t>(rand_range(rng, 0, vars - 1))] += 1;
        lms.emplace_back(std::move(e));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(independent_set_dimension(lms, vars, SubsetSearch::pruned));
        benchmark::DoNotOptimize(independent_set_dimension(lms, vars, SubsetSearch::exhaustive));
    }
}
BENCHMARK(BM_IndependentSetSearch)->Arg(6)->Arg(10)->Arg(14);

void BM_CrossCheckPair(benchmark::State& state) {
    std::mt19937_64 rng(7);
    RandomAlgebraOptions opts;
    opts.force_nonzero_characteristic = true;
    AlgebraPresentation a = random_affine_algebra(rng, BaseRing::integers(), opts);
    AlgebraPresentation b = random_affine_algebra(rng, BaseRing::integers(), opts);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cross_check(a, b, {.seed = 1, .membership_probes = 2}));
    }
}
BENCHMARK(BM_CrossCheckPair);

}  // namespace

BENCHMARK_MAIN();
