#include <doctest.h>

#include "gdvc/errors.hpp"
#include "gdvc/graph_bounds.hpp"
#include "support/generators.hpp"

using gdvc::acylindrical_bound;
using gdvc::GraphOfDims;
using gdvc::Mat2;
using gdvc::prime_sum_bounds;
using gdvc::Slope;
using gdvc::slopes_match;

TEST_CASE("acylindrical bound") {
    CHECK(acylindrical_bound({{0, 0, 0}, {0, 0}}) == 2);
    CHECK(acylindrical_bound({{3, 3}, {3}}) == 4);
    CHECK(acylindrical_bound({{0}, {}}) == 2);
    CHECK(acylindrical_bound({{5}, {1}}) == 5);
    CHECK_THROWS_AS(acylindrical_bound({{}, {}}), gdvc::Error);
}

TEST_CASE("acylindrical bound is monotone in every entry") {
    testgen::Rng rng(43);
    for (int i = 0; i < 500; ++i) {
        GraphOfDims dims;
        const std::int64_t vertices = rng.uniform(1, 5);
        const std::int64_t edges = rng.uniform(0, 5);
        for (std::int64_t v = 0; v < vertices; ++v)
            dims.vertex_dims.push_back(static_cast<int>(rng.uniform(0, 4)));
        for (std::int64_t e = 0; e < edges; ++e)
            dims.edge_dims.push_back(static_cast<int>(rng.uniform(0, 4)));
        const int before = acylindrical_bound(dims);

        GraphOfDims bumped = dims;
        if (!bumped.edge_dims.empty() && rng.coin())
            ++bumped.edge_dims[static_cast<std::size_t>(
                rng.uniform(0, static_cast<std::int64_t>(bumped.edge_dims.size()) - 1))];
        else
            ++bumped.vertex_dims[static_cast<std::size_t>(
                rng.uniform(0, static_cast<std::int64_t>(bumped.vertex_dims.size()) - 1))];
        CHECK(acylindrical_bound(bumped) >= before);
    }
}

TEST_CASE("free product window") {
    CHECK(prime_sum_bounds({0, 0, 0}) == std::pair{0, 2});
    CHECK(prime_sum_bounds({3}) == std::pair{3, 3});
    CHECK(prime_sum_bounds({4, 0}) == std::pair{4, 4});
    CHECK(prime_sum_bounds({2, 0}) == std::pair{2, 2});
    CHECK_THROWS_AS(prime_sum_bounds({}), gdvc::Error);
}

TEST_CASE("window bounds coincide unless every dimension is below 2") {
    testgen::Rng rng(47);
    for (int i = 0; i < 500; ++i) {
        std::vector<int> dims;
        const std::int64_t count = rng.uniform(1, 6);
        for (std::int64_t j = 0; j < count; ++j)
            dims.push_back(static_cast<int>(rng.uniform(0, 4)));
        const auto [lower, upper] = prime_sum_bounds(dims);
        CHECK(lower <= upper);
        if (lower >= 2)
            CHECK(lower == upper);
        else
            CHECK(upper == 2);
    }
}

TEST_CASE("slope matching across a gluing") {
    CHECK(slopes_match(Slope{1, 0}, Mat2::identity(), Slope{1, 0}));
    CHECK_FALSE(slopes_match(Slope{1, 0}, Mat2{0, 1, 1, 0}, Slope{1, 0}));
    CHECK(slopes_match(Slope{1, 0}, Mat2{0, 1, 1, 0}, Slope{0, 1}));
    // sign of the image does not matter
    CHECK(slopes_match(Slope{1, 0}, Mat2{-1, 0, 0, -1}, Slope{1, 0}));
    CHECK_THROWS_AS(slopes_match(Slope{1, 0}, Mat2{2, 0, 0, 1}, Slope{1, 0}), gdvc::Error);
}

TEST_CASE("slope matching is invariant under basis changes on both sides") {
    testgen::Rng rng(53);
    for (int i = 0; i < 2000; ++i) {
        const Slope s_a = testgen::random_slope(rng);
        const Slope s_b = testgen::random_slope(rng);
        const Mat2 gluing = testgen::random_unimodular(rng);
        const Mat2 change_a = testgen::random_unimodular(rng);
        const Mat2 change_b = testgen::random_unimodular(rng);
        const bool verdict = slopes_match(s_a, gluing, s_b);
        CHECK(slopes_match(gdvc::apply(change_a, s_a),
                           change_b * gluing * change_a.inverse(),
                           gdvc::apply(change_b, s_b)) == verdict);
        CHECK(slopes_match(s_b, gluing.inverse(), s_a) == verdict);
    }
}
