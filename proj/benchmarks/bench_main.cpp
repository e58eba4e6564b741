#include "wkit/character.hpp"
#include "wkit/liegen.hpp"
#include "wkit/quiverkac.hpp"
#include "wkit/shuffle.hpp"
#include "wkit/welement.hpp"
#include "wkit/yangian.hpp"

#include <benchmark/benchmark.h>

using namespace wkit;

static void BM_DeformedBracket(benchmark::State& state)
{
    WElement x = parse_welement("z^2*(D^4 + t^2*D^2 + 1) + z*D^3");
    WElement y = parse_welement("z^3*(D^5 - 2*D) + z*(D^2 + t^4)");
    for (auto _ : state)
        benchmark::DoNotOptimize(bracket(x, y, BracketKind::deformed));
}
BENCHMARK(BM_DeformedBracket);

static void BM_GenerateSpherical(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    std::vector<WElement> gens;
    for (unsigned a = 0; a <= static_cast<unsigned>(n); ++a)
        gens.push_back(WElement::monomial(1, a));
    for (auto _ : state)
        benchmark::DoNotOptimize(generate_subalgebra(gens, BracketKind::deformed, n, n));
}
BENCHMARK(BM_GenerateSpherical)->Arg(3)->Arg(5);

static void BM_ShuffleProduct(benchmark::State& state)
{
    const auto kernel = ShuffleKernel::standard();
    ShuffleElement f = parse_shuffle_element("x1^2*x2 + x1*x2^2 + t1");
    ShuffleElement g = parse_shuffle_element(state.range(0) == 1 ? "x1^3" : "x1*x2 + t2");
    for (auto _ : state)
        benchmark::DoNotOptimize(shuffle_product(f, g, kernel));
}
BENCHMARK(BM_ShuffleProduct)->Arg(1)->Arg(2);

static void BM_YangianSweep(benchmark::State& state)
{
    const unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sweep(3, 2, Model::w_deformed, ShuffleKernel::standard(), threads));
}
BENCHMARK(BM_YangianSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_KacBruteforce(benchmark::State& state)
{
    const unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kac_bruteforce(QuiverSpec::loops(2), {2}, 3, threads));
}
BENCHMARK(BM_KacBruteforce)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_PlethysticExp(benchmark::State& state)
{
    const int w = static_cast<int>(state.range(0));
    Window window{w, -2 * w, 20};
    Character g = char_closed_form(ClosedForm::bps_undeformed, {w, -2, 20 + 2 * w}, Convention::plain);
    for (auto _ : state)
        benchmark::DoNotOptimize(pbw_character(g, true, window));
}
BENCHMARK(BM_PlethysticExp)->Arg(4)->Arg(8);
BENCHMARK_MAIN();
