#include <random>

#include <benchmark/benchmark.h>

#include <eform/algebroid/calculus.hpp>
#include <eform/cli/cli.hpp>
#include <eform/compat/compat.hpp>
#include <eform/graded/random.hpp>
#include <eform/poly/random.hpp>
#include <eform/qgraded/qgraded.hpp>
#include <eform/symplectic/spaces.hpp>
#include <eform/vinogradov/vinogradov.hpp>

using namespace eform;

namespace {

const std::string kFixtures = EFORM_FIXTURE_DIR;

cli::Manifest fixture(const std::string& name) { return cli::load_manifest(kFixtures + "/" + name + ".manifest"); }

void BM_PolynomialProduct(benchmark::State& state)
{
    auto vars = poly::make_vars({"x1", "x2", "x3", "x4"});
    poly::RandomPolySpec spec;
    spec.max_degree = 3;
    spec.max_terms = static_cast<int>(state.range(0));
    std::mt19937_64 rng(1);
    auto a = poly::random_polynomial(vars, spec, rng);
    auto b = poly::random_polynomial(vars, spec, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolynomialProduct)->Arg(4)->Arg(16)->Arg(64);

void BM_EDifferentialSquared(benchmark::State& state)
{
    auto m = fixture("so3-action");
    poly::RandomPolySpec spec;
    spec.max_degree = 3;
    std::mt19937_64 rng(2);
    auto alpha = algebroid::random_tensor<algebroid::ETag>(m.data.vars(), 3, static_cast<std::size_t>(state.range(0)),
                                                           spec, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(algebroid::e_differential(algebroid::e_differential(alpha, m.data), m.data));
}
BENCHMARK(BM_EDifferentialSquared)->DenseRange(0, 2);

void BM_PoissonBracket(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    auto ps = symplectic::twisted_phase_space({"x1", "x2"}, 2, n);
    graded::RandomGradedSpec spec;
    std::mt19937_64 rng(3);
    auto f = graded::random_homogeneous(ps.context(), n, std::nullopt, spec, rng);
    auto g = graded::random_homogeneous(ps.context(), n + 1, std::nullopt, spec, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(symplectic::poisson_bracket(f, g, ps));
}
BENCHMARK(BM_PoissonBracket)->DenseRange(1, 3);

void BM_CheckLieAlgebroid(benchmark::State& state)
{
    auto m = fixture("twisted-poisson-r4");
    for (auto _ : state)
        benchmark::DoNotOptimize(state.range(0) ? algebroid::check_lie_algebroid_framewise(m.data)
                                                : algebroid::check_lie_algebroid(m.data));
}
BENCHMARK(BM_CheckLieAlgebroid)->Arg(0)->Arg(1)->ArgNames({"framewise"});

// The four equivalent compatibility checks on the same data.
void BM_CompatibilityRoute(benchmark::State& state)
{
    auto m = fixture("twisted-poisson-r4");
    compat::PreNPlectic w(*m.omega, m.n);
    for (auto _ : state) {
        switch (state.range(0)) {
        case 0: benchmark::DoNotOptimize(compat::check_compatible(*m.j, w, m.data)); break;
        case 1: benchmark::DoNotOptimize(vinogradov::check_higher_dirac(*m.j, w, m.data)); break;
        case 2: benchmark::DoNotOptimize(qgraded::check_q_comp_nilpotent(m.data, *m.j, w)); break;
        default: benchmark::DoNotOptimize(qgraded::check_twisted_qp(m.data, *m.j, *m.omega)); break;
        }
    }
}
BENCHMARK(BM_CompatibilityRoute)->DenseRange(0, 3)->ArgNames({"route"})->Unit(benchmark::kMillisecond);

void BM_VerifyFixture(benchmark::State& state)
{
    auto m = fixture("homotopy-n2");
    cli::RunOptions opts;
    opts.samples = 10;
    for (auto _ : state)
        benchmark::DoNotOptimize(cli::run_checks(m, opts));
}
BENCHMARK(BM_VerifyFixture)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
