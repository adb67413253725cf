#include <doctest.h>

#include <algorithm>

#include "gdvc/classify.hpp"
#include "gdvc/errors.hpp"
#include "support/generators.hpp"
#include "support/graphs.hpp"

using gdvc::cross_check;
using gdvc::DeclaredGeometric;
using gdvc::DimResult;
using gdvc::gdvc_manifold;
using gdvc::gdvc_manifold_geometric;
using gdvc::gdvc_prime;
using gdvc::Geometry;
using gdvc::ManifoldDescription;
using gdvc::Mat2;
using gdvc::Pi1Order;
using gdvc::Pi1OrderClass;
using gdvc::PrimeProfile;
using gdvc::PrimeSummand;

namespace {

PrimeSummand projective_space() {
    return DeclaredGeometric{Geometry::S3, Pi1Order::finite(2)};
}

PrimeSummand lens_space(std::uint64_t order) {
    return DeclaredGeometric{Geometry::S3, Pi1Order::finite(order)};
}

PrimeSummand sphere_cross_circle() {
    gdvc::SeifertClosed summand;
    summand.invariants.section_obstruction = 0;
    return summand;  // sphere base, no cones, b = 0
}

PrimeSummand three_torus() {
    gdvc::SeifertClosed summand;
    summand.invariants.base.genus = 1;
    summand.invariants.section_obstruction = 0;
    return summand;
}

ManifoldDescription sum(std::vector<PrimeSummand> summands) {
    return {std::move(summands)};
}

} // namespace

TEST_CASE("per-summand profiles") {
    SUBCASE("flat torus bundle") {
        const PrimeProfile profile = gdvc_prime(gdvc::TorusBundle{Mat2::identity()});
        CHECK(profile.gdvc == 4);
        CHECK(profile.geometry == Geometry::E3);
        CHECK(profile.flat_geometry);
        CHECK_FALSE(profile.virtually_cyclic);
        CHECK(profile.order_class == Pi1OrderClass::Infinite);
    }
    SUBCASE("closed hyperbolic") {
        const PrimeProfile profile = gdvc_prime(gdvc::HyperbolicClosed{});
        CHECK(profile.gdvc == 3);
        CHECK(profile.geometry == Geometry::H3);
    }
    SUBCASE("twisted Seifert fibration over a hyperbolic triangle base") {
        gdvc::SeifertClosed summand;
        summand.invariants.base.cone_points = {{2, 1}, {3, 1}, {7, 1}};
        summand.invariants.section_obstruction = -1;
        const PrimeProfile profile = gdvc_prime(summand);
        CHECK(profile.gdvc == 3);
        CHECK(profile.geometry == Geometry::PSLtilde);
    }
    SUBCASE("projective space") {
        const PrimeProfile profile = gdvc_prime(projective_space());
        CHECK(profile.gdvc == 0);
        CHECK(profile.virtually_cyclic);
        CHECK(profile.order_class == Pi1OrderClass::Two);
    }
    SUBCASE("spherical Seifert summand has no declared order") {
        gdvc::SeifertClosed summand;  // Hopf-like: sphere base, b = -1
        summand.invariants.section_obstruction = -1;
        const PrimeProfile profile = gdvc_prime(summand);
        CHECK(profile.gdvc == 0);
        CHECK(profile.geometry == Geometry::S3);
        CHECK_FALSE(profile.order_class.has_value());
    }
    SUBCASE("declared spherical summand without an order") {
        CHECK_THROWS_AS(gdvc_prime(DeclaredGeometric{Geometry::S3, {}}), gdvc::Error);
    }
    SUBCASE("JSJ summand") {
        const PrimeProfile profile =
            gdvc_prime(gdvc::JsjSummand{testgraphs::hyperbolic_loop()});
        CHECK(profile.gdvc == 3);
        CHECK_FALSE(profile.geometry.has_value());
        CHECK(profile.order_class == Pi1OrderClass::Infinite);
    }
    SUBCASE("invalid JSJ summand propagates") {
        CHECK_THROWS_AS(gdvc_prime(gdvc::JsjSummand{testgraphs::k_k_graph()}),
                        gdvc::Error);
    }
    SUBCASE("profile invariants") {
        const PrimeProfile profile = gdvc_prime(sphere_cross_circle());
        CHECK(profile.geometry == Geometry::S2xE);
        CHECK(profile.virtually_cyclic);
        CHECK(profile.gdvc == 0);
        CHECK(profile.order_class == Pi1OrderClass::Infinite);
    }
}

TEST_CASE("whole-manifold classification") {
    CHECK(gdvc_manifold(sum({projective_space(), projective_space()})).value == 0);
    CHECK(gdvc_manifold(sum({projective_space(), projective_space(),
                             projective_space()}))
              .value == 2);
    CHECK(gdvc_manifold(sum({sphere_cross_circle(), projective_space()})).value == 2);
    CHECK(gdvc_manifold(sum({three_torus()})).value == 4);
    CHECK(gdvc_manifold(sum({gdvc::HyperbolicClosed{}, projective_space()})).value == 3);
    CHECK(gdvc_manifold(sum({DeclaredGeometric{Geometry::S3, Pi1Order::finite(1)}}))
              .value == 0);
    CHECK(gdvc_manifold(sum({lens_space(5), projective_space()})).value == 2);
    CHECK(gdvc_manifold(sum({three_torus(), gdvc::HyperbolicClosed{}})).value == 4);
    CHECK(gdvc_manifold(sum({gdvc::JsjSummand{testgraphs::hyperbolic_pair()},
                             projective_space()}))
              .value == 3);
}

TEST_CASE("the two-summand decision needs declared orders") {
    gdvc::SeifertClosed spherical;  // geometry S3, order unknown
    spherical.invariants.section_obstruction = -1;

    // Undecidable: the unknown side could be order 2 or not.
    CHECK_THROWS_AS(gdvc_manifold(sum({PrimeSummand{spherical}, projective_space()})),
                    gdvc::Error);
    // Decidable regardless of the unknown: the other factor is infinite.
    CHECK(gdvc_manifold(sum({PrimeSummand{spherical}, sphere_cross_circle()})).value == 2);
    // Three or more factors never need orders.
    CHECK(gdvc_manifold(sum({PrimeSummand{spherical}, projective_space(),
                             projective_space()}))
              .value == 2);
}

TEST_CASE("trace records the window and the clause") {
    const DimResult result = gdvc_manifold(sum({projective_space(), projective_space()}));
    const auto window = std::find_if(
        result.trace.begin(), result.trace.end(),
        [](const gdvc::TraceEntry& e) { return e.rule == "prime-sum-window"; });
    REQUIRE(window != result.trace.end());
    CHECK(window->detail == "[0, 2]");
    CHECK(std::any_of(result.trace.begin(), result.trace.end(),
                      [](const gdvc::TraceEntry& e) { return e.rule == "virtually-cyclic"; }));
}

TEST_CASE("geometric path on reference sums") {
    CHECK(gdvc_manifold_geometric(sum({gdvc::TorusBundle{Mat2{2, 1, 1, 1}}})) == 3);
    CHECK(gdvc_manifold_geometric(sum({sphere_cross_circle()})) == 0);
    CHECK(gdvc_manifold_geometric(sum({three_torus(), projective_space()})) == 4);
    CHECK(gdvc_manifold_geometric(sum({projective_space(), projective_space()})) == 0);
    CHECK(gdvc_manifold_geometric(sum({sphere_cross_circle(), projective_space()})) == 2);
    CHECK(gdvc_manifold_geometric(
              sum({gdvc::JsjSummand{testgraphs::hyperbolic_pair()}})) == 3);
}

TEST_CASE("both paths agree on reference sums") {
    CHECK(cross_check(sum({projective_space(), projective_space()})));
    CHECK(cross_check(sum({three_torus()})));
    CHECK(cross_check(sum({gdvc::DoubleOfK{Mat2{1, 1, 1, 2}}})));
    CHECK(cross_check(sum({gdvc::HyperbolicClosed{}, lens_space(7),
                           gdvc::TorusBundle{Mat2{1, 1, 0, 1}}})));
}

TEST_CASE("classification is permutation-invariant") {
    testgen::Rng rng(61);
    for (int i = 0; i < 300; ++i) {
        ManifoldDescription description = testgen::random_valid_description(rng);
        const int value = gdvc_manifold(description).value;
        std::shuffle(description.summands.begin(), description.summands.end(), rng.engine);
        CHECK(gdvc_manifold(description).value == value);
    }
}

TEST_CASE("values stay in {0,2,3,4} and appending cannot drop below the old max") {
    testgen::Rng rng(67);
    for (int i = 0; i < 300; ++i) {
        ManifoldDescription description = testgen::random_valid_description(rng);
        const DimResult result = gdvc_manifold(description);
        CHECK((result.value == 0 || result.value == 2 || result.value == 3 ||
               result.value == 4));

        std::vector<int> dims;
        for (const PrimeSummand& summand : description.summands)
            dims.push_back(gdvc_prime(summand).gdvc);
        const auto [lower, upper] = gdvc::prime_sum_bounds(dims);
        CHECK(result.value >= lower);
        CHECK(result.value <= upper);

        ManifoldDescription extended = description;
        extended.summands.push_back(gdvc::HyperbolicClosed{});
        CHECK(gdvc_manifold(extended).value >= lower);
    }
}

TEST_CASE("dimension zero iff the group is virtually cyclic") {
    testgen::Rng rng(71);
    for (int i = 0; i < 300; ++i) {
        const ManifoldDescription description = testgen::random_valid_description(rng);
        std::vector<PrimeProfile> profiles;
        for (const PrimeSummand& summand : description.summands)
            profiles.push_back(gdvc_prime(summand));
        const bool all_vc = std::all_of(profiles.begin(), profiles.end(),
                                        [](const PrimeProfile& p) { return p.virtually_cyclic; });
        const bool vc_total =
            (profiles.size() == 1 && all_vc) ||
            (profiles.size() == 2 && all_vc &&
             profiles[0].order_class == Pi1OrderClass::Two &&
             profiles[1].order_class == Pi1OrderClass::Two);
        CHECK((gdvc_manifold(description).value == 0) == vc_total);
    }
}
