#include "pointed/comm_oracle.hpp"
#include "pointed/end_algebra.hpp"
#include "pointed/finite_lab.hpp"
#include "pointed/local_functions.hpp"
#include "pointed/pointed.hpp"
#include "pointed/random.hpp"

#include <benchmark/benchmark.h>

using namespace pointed;

namespace {

AlgebraHandle free_loops(std::size_t loops, std::size_t order)
{
	return TruncatedAlgebra::build(Quiver::from_counts({{loops}}), FieldSpec::rationals(), order);
}

} // namespace

// Geometric-series inverse of a dense unit; range(0) loops, range(1) order.
static void BM_Invert(benchmark::State &state)
{
	auto h = free_loops(state.range(0), state.range(1));
	Rng rng(1);
	auto x = random_unit(h, rng, 12);
	for (auto _ : state)
		benchmark::DoNotOptimize(invert(x));
	state.counters["dim"] = double(h->dimension());
}
BENCHMARK(BM_Invert)->Args({1, 8})->Args({1, 16})->Args({2, 4})->Args({2, 6})->Args({3, 4});

static void BM_Multiply(benchmark::State &state)
{
	auto h = free_loops(2, state.range(0));
	Rng rng(2);
	auto x = random_element(h, rng, 16), y = random_element(h, rng, 16);
	for (auto _ : state)
		benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Multiply)->Arg(4)->Arg(6)->Arg(8);

static void BM_EndInvert(benchmark::State &state)
{
	auto h = free_loops(1, 4);
	auto e = EndAlgebra::build(h, {std::size_t(state.range(0))});
	Rng rng(3);
	auto x = e->identity() + random_end_element(e, rng, 12);
	while (!end_classify(x).is_unit())
		x = e->identity() + random_end_element(e, rng, 12);
	for (auto _ : state)
		benchmark::DoNotOptimize(end_invert(x));
}
BENCHMARK(BM_EndInvert)->Arg(1)->Arg(2)->Arg(3);

// Localization closure of the commutative model with n variables at two points.
static void BM_LocalFunctionRing(benchmark::State &state)
{
	const std::size_t n = state.range(0), order = state.range(1);
	std::vector<oracle::Point> points{oracle::Point(n, 0), oracle::Point(n, 1)};
	auto model = oracle::build_commutative_model(n, points, order);
	auto pres = model.presentation({parse("x1 - 2")});
	for (auto _ : state)
		benchmark::DoNotOptimize(local_function_ring(pres).dimension());
	state.counters["dim"] = double(model.ambient->dimension());
}
BENCHMARK(BM_LocalFunctionRing)->Args({1, 4})->Args({1, 8})->Args({2, 3})->Args({2, 4});

static void BM_LabMatrixRing(benchmark::State &state)
{
	auto r = lab::matrix_ring(state.range(0), 2);
	for (auto _ : state) {
		benchmark::DoNotOptimize(lab::check_local_equivalences(*r).local());
		benchmark::DoNotOptimize(lab::unique_maximal_two_sided(*r).unique());
	}
}
BENCHMARK(BM_LabMatrixRing)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
