#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "rdpforge/search.hpp"
#include "rdpforge/verifier.hpp"
#include "support.hpp"

using namespace rdpforge;
using namespace rdpforge::testing;

namespace {

void BM_BruteSearch(benchmark::State& state) {
    const Descriptor d = D("lex(Z,Z)");
    std::mt19937_64 rng(3);
    std::vector<Quadruple> qs;
    for (int i = 0; i < 64; ++i) qs.push_back(random_quadruple(d, static_cast<int>(state.range(0)), rng));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(brute_rdp_search(d, RdpKind::RDP1, qs[i]));
        i = (i + 1) % qs.size();
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_CheckRdp(benchmark::State& state) {
    const Descriptor d = D("Zvec(2,cw)");
    CheckBudget b;
    b.radius = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_rdp(d, RdpKind::RDP2, b));
}

void BM_Search(benchmark::State& state, OpenProblem p, const char* group) {
    SearchConfig c;
    c.group = D(group);
    c.kind = default_search_kind(p);
    c.radius = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(search_open_problem(p, c));
}

}  // namespace

BENCHMARK(BM_BruteSearch)->Arg(2)->Arg(4);
BENCHMARK(BM_CheckRdp)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, remark32, OpenProblem::Remark32, "lex(Zvec(2,cw),Z)")
    ->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Search, wreath_rdp, OpenProblem::WreathRdp, "rwz(Z)")
    ->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
