#include <benchmark/benchmark.h>

#include <algorithm>
#include <array>
#include <random>
#include <vector>

#include "rdpforge/base_groups.hpp"
#include "rdpforge/lex.hpp"
#include "rdpforge/wreath.hpp"
#include "rdpforge/zwreath.hpp"
#include "support.hpp"

using namespace rdpforge;
using namespace rdpforge::testing;

namespace {

std::vector<Quadruple> quadruples(const Descriptor& d, int radius, int count) {
    std::mt19937_64 rng(1);
    std::vector<Quadruple> out;
    for (int i = 0; i < count; ++i) out.push_back(random_quadruple(d, radius, rng));
    return out;
}

template <class Engine>
void run_engine(benchmark::State& state, const char* group, int radius, Engine engine) {
    const Descriptor d = D(group);
    const std::vector<Quadruple> qs = quadruples(d, radius, 256);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(engine(d, qs[i]));
        i = (i + 1) % qs.size();
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_Linear(benchmark::State& s) {
    run_engine(s, "Z", 50, [](const Descriptor& d, const Quadruple& q) { return linear_rdp_decompose(d, q); });
}
void BM_Coordinatewise(benchmark::State& s) {
    run_engine(s, "Zvec(4,cw)", 10,
               [](const Descriptor& d, const Quadruple& q) { return coordwise_rdp_decompose(d, q); });
}
void BM_LexLinearHead(benchmark::State& s) {
    run_engine(s, "lex(Z,Zvec(2,cw))", 5, [](const Descriptor& d, const Quadruple& q) {
        return lex_rdp_decompose_linear_head(d, RdpKind::RDP1, q);
    });
}
void BM_LexAntilatticeHead(benchmark::State& s) {
    run_engine(s, "lex(Qvec(2,strict),Z)", 3,
               [](const Descriptor& d, const Quadruple& q) { return lex_rdp_decompose_antilattice_head(d, q); });
}
void BM_Wreath(benchmark::State& s) {
    run_engine(s, "wr(Z,Z)", 2, [](const Descriptor& d, const Quadruple& q) { return wreath_rdp_decompose(d, RdpKind::RDP1, q); });
}
void BM_ZWreathAbelian(benchmark::State& s) {
    run_engine(s, "rwz(Q)", 2, [](const Descriptor& d, const Quadruple& q) { return rw_rdp_decompose_abelian(d, q); });
}

void BM_RwInterpolate(benchmark::State& state) {
    const Descriptor d = D("rwz(Z)");
    std::mt19937_64 rng(2);
    std::vector<std::array<Elem, 4>> xs;
    for (int i = 0; i < 256; ++i) {
        std::array<Elem, 4> a{random_elem(d, 2, rng), random_elem(d, 2, rng), random_elem(d, 2, rng),
                              random_elem(d, 2, rng)};
        std::sort(a.begin(), a.end(), [&](const Elem& x, const Elem& y) { return less(d, x, y); });
        xs.push_back(a);
    }
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& a = xs[i];
        benchmark::DoNotOptimize(rw_interpolate(d, a[0], a[1], a[2], a[3]));
        i = (i + 1) % xs.size();
    }
    state.SetItemsProcessed(state.iterations());
}

}  // namespace

BENCHMARK(BM_Linear);
BENCHMARK(BM_Coordinatewise);
BENCHMARK(BM_LexLinearHead);
BENCHMARK(BM_LexAntilatticeHead);
BENCHMARK(BM_Wreath);
BENCHMARK(BM_ZWreathAbelian);
BENCHMARK(BM_RwInterpolate);
BENCHMARK_MAIN();
