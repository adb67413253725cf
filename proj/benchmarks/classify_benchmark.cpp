#include <benchmark/benchmark.h>

#include <string>

#include "gdvc/classify.hpp"
#include "gdvc/geometry.hpp"
#include "gdvc/io.hpp"
#include "gdvc/jsj.hpp"
#include "gdvc/orbifold.hpp"

namespace {

gdvc::OrbifoldBase triangle_base() {
    gdvc::OrbifoldBase base;
    base.cone_points = {{2, 1}, {3, 1}, {7, 1}};
    return base;
}

/// Chain of n Seifert pieces over hyperbolic bases with crossed fibers.
gdvc::JsjGraph seifert_chain(std::int64_t n) {
    gdvc::JsjGraph graph;
    for (std::int64_t i = 0; i < n; ++i) {
        gdvc::SeifertPiece piece;
        piece.base = triangle_base();
        piece.base.boundary_count = (i == 0 || i == n - 1) ? 1 : 2;
        piece.fiber_slopes.assign(static_cast<std::size_t>(piece.base.boundary_count),
                                  gdvc::Slope{1, 0});
        graph.vertices.push_back({"v" + std::to_string(i), piece});
    }
    const gdvc::Mat2 crossed{0, 1, 1, 0};
    for (std::int64_t i = 0; i + 1 < n; ++i)
        graph.edges.push_back({{"v" + std::to_string(i), i == 0 ? 0 : 1},
                               {"v" + std::to_string(i + 1), 0},
                               crossed});
    return graph;
}

void BM_OrbifoldEuler(benchmark::State& state) {
    gdvc::OrbifoldBase base = triangle_base();
    for (std::int64_t i = 0; i < state.range(0); ++i)
        base.cone_points.push_back({2 + i % 8, 1});
    for (auto _ : state)
        benchmark::DoNotOptimize(gdvc::orbifold_euler_characteristic(base));
}
BENCHMARK(BM_OrbifoldEuler)->Range(1, 64);

void BM_MonodromyType(benchmark::State& state) {
    const gdvc::Mat2 monodromy{89, 55, 55, 34};
    for (auto _ : state) benchmark::DoNotOptimize(gdvc::monodromy_type(monodromy));
}
BENCHMARK(BM_MonodromyType);

void BM_ValidateJsjChain(benchmark::State& state) {
    const gdvc::JsjGraph graph = seifert_chain(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gdvc::validate_jsj(graph));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ValidateJsjChain)->RangeMultiplier(2)->Range(2, 128)->Complexity();

void BM_ClassifySum(benchmark::State& state) {
    gdvc::ManifoldDescription description;
    description.summands.push_back(gdvc::HyperbolicClosed{});
    description.summands.push_back(gdvc::TorusBundle{gdvc::Mat2{2, 1, 1, 1}});
    description.summands.push_back(
        gdvc::DeclaredGeometric{gdvc::Geometry::S3, gdvc::Pi1Order::finite(5)});
    description.summands.push_back(gdvc::JsjSummand{seifert_chain(4)});
    for (auto _ : state) benchmark::DoNotOptimize(gdvc::gdvc_manifold(description));
}
BENCHMARK(BM_ClassifySum);

void BM_ParseAndClassify(benchmark::State& state) {
    const std::string text = R"({"summands": [
        {"type": "torus_bundle", "monodromy": [[2, 1], [1, 1]]},
        {"type": "declared_geometric", "geometry": "S3", "pi1_order": 2},
        {"type": "seifert_closed",
         "base": {"genus": 0, "orientable": true,
                  "cone_points": [[2, 1], [3, 1], [7, 1]], "boundary_count": 0},
         "b": -1}]})";
    for (auto _ : state) {
        const gdvc::ParseResult parsed = gdvc::parse_description(text);
        benchmark::DoNotOptimize(gdvc::gdvc_manifold(*parsed.description));
    }
}
BENCHMARK(BM_ParseAndClassify);

} // namespace

BENCHMARK_MAIN();
