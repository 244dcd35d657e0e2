// Microbenchmarks for the hot paths: reflection group generation, lattice
// ball enumeration, Smith reduction, and whole space enumerations.

#include <benchmark/benchmark.h>

#include "geocount/catalog.hpp"
#include "geocount/enumeration.hpp"
#include "geocount/geodesics.hpp"
#include "geocount/root_datum.hpp"
#include "geocount/smith.hpp"
#include "geocount/weyl.hpp"

namespace {

using namespace geocount;

Rational q(const char* s) { return Rational::from_string(s); }

RootDatum b_series_datum(std::size_t rank) {
    std::vector<Root> roots;
    for (std::size_t i = 0; i < rank; ++i) {
        for (std::size_t j = i + 1; j < rank; ++j) {
            RationalVector minus(rank, Rational(0)), plus(rank, Rational(0));
            minus[i] = Rational(1);
            minus[j] = Rational(-1);
            plus[i] = Rational(1);
            plus[j] = Rational(1);
            roots.push_back({minus, 1});
            roots.push_back({plus, 1});
        }
        RationalVector e(rank, Rational(0));
        e[i] = Rational(1);
        roots.push_back({e, 2});
    }
    return build_root_datum(rank, RationalMatrix::identity(rank), roots);
}

void BM_WeylGeneration(benchmark::State& state) {
    const std::size_t rank = static_cast<std::size_t>(state.range(0));
    const RootDatum datum = b_series_datum(rank);
    for (auto _ : state) {
        WeylGroup w = enumerate_weyl_group(datum, 1000000);
        benchmark::DoNotOptimize(w.size());
    }
}
BENCHMARK(BM_WeylGeneration)->Arg(2)->Arg(3)->Arg(4);

void BM_BallEnumeration(benchmark::State& state) {
    const long radius = state.range(0);
    const RationalMatrix basis = RationalMatrix::identity(3);
    const RationalMatrix gram = RationalMatrix::identity(3);
    const RationalVector center{q("1/3"), q("-1/2"), q("1/5")};
    for (auto _ : state) {
        auto points = enumerate_lattice_points_in_ball(basis, gram, center,
                                                       Rational(radius), false);
        benchmark::DoNotOptimize(points.size());
    }
}
BENCHMARK(BM_BallEnumeration)->Arg(4)->Arg(9)->Arg(16);

void BM_SmithReduction(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    IntMatrix a(n, n);
    long v = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            a.at(i, j) = Integer(((v * 37 + 11) % 19) - 9);
            v += 3;
        }
    for (auto _ : state) {
        auto d = smith_with_transforms(a);
        benchmark::DoNotOptimize(d.rank);
    }
}
BENCHMARK(BM_SmithReduction)->Arg(4)->Arg(8)->Arg(12);

void BM_EnumeratePreimages(benchmark::State& state) {
    const Space space = build_space(preset("Gr2R4"));
    const RationalVector target{q("1/2"), q("1/2")};
    const Rational bound(state.range(0));
    for (auto _ : state) {
        auto families = space.enumerate_preimages(target, bound);
        benchmark::DoNotOptimize(families.size());
    }
}
BENCHMARK(BM_EnumeratePreimages)->Arg(8)->Arg(32)->Arg(128);

void BM_ClassifyPoint(benchmark::State& state) {
    const Space space = build_space(preset("Gr2Rn:8"));
    const RationalVector h{q("7/6"), q("-5/4")};
    for (auto _ : state) {
        auto c = space.classify_point(h);
        benchmark::DoNotOptimize(c.index);
    }
}
BENCHMARK(BM_ClassifyPoint);

}  // namespace

BENCHMARK_MAIN();
