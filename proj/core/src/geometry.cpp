#include "gdvc/geometry.hpp"

#include <cassert>
#include <cstdlib>

#include "gdvc/errors.hpp"
#include "gdvc/orbifold.hpp"

namespace gdvc {

const char* monodromy_type_name(MonodromyType t) {
    switch (t) {
        case MonodromyType::Elliptic: return "elliptic";
        case MonodromyType::Parabolic: return "parabolic";
        case MonodromyType::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

Rational euler_number(const SeifertInvariants& invariants) {
    if (!invariants.section_obstruction.has_value())
        throw Error(Errc::InvalidDescription,
                    "Euler number requires closed Seifert invariants (section obstruction b)");
    Rational sum(*invariants.section_obstruction);
    for (const ConePoint& cone : invariants.base.cone_points)
        sum += Rational(cone.rotation, cone.order);
    return -sum;
}

MonodromyType monodromy_type(const Mat2& monodromy) {
    if (monodromy.det() != 1)
        throw Error(Errc::BadDeterminant,
                    "torus-bundle monodromy must have determinant +1, got " +
                        std::to_string(monodromy.det()));
    const std::int64_t abs_trace = std::llabs(monodromy.trace());
    if (abs_trace < 2) return MonodromyType::Elliptic;
    if (abs_trace > 2) return MonodromyType::Hyperbolic;
    const bool plus_minus_identity =
        monodromy == Mat2::identity() || monodromy == -Mat2::identity();
    return plus_minus_identity ? MonodromyType::Elliptic : MonodromyType::Parabolic;
}

Geometry seifert_closed_geometry(const SeifertInvariants& invariants) {
    const OrbifoldClass base_class = classify_closed_orbifold(invariants.base);
    const bool twisted = !euler_number(invariants).is_zero();
    switch (base_class) {
        case OrbifoldClass::Bad:
        case OrbifoldClass::Spherical:
            return twisted ? Geometry::S3 : Geometry::S2xE;
        case OrbifoldClass::Euclidean:
            return twisted ? Geometry::Nil : Geometry::E3;
        case OrbifoldClass::Hyperbolic:
            return twisted ? Geometry::PSLtilde : Geometry::H2xE;
    }
    throw Error(Errc::InvalidDescription, "unreachable orbifold class");
}

Geometry torus_bundle_geometry(const Mat2& monodromy) {
    switch (monodromy_type(monodromy)) {
        case MonodromyType::Elliptic: return Geometry::E3;
        case MonodromyType::Parabolic: return Geometry::Nil;
        case MonodromyType::Hyperbolic: return Geometry::Sol;
    }
    throw Error(Errc::InvalidDescription, "unreachable monodromy type");
}

Mat2 double_of_k_monodromy(const Mat2& gluing) {
    if (!gluing.is_unimodular())
        throw Error(Errc::BadDeterminant,
                    "K-double gluing must have determinant +1 or -1, got " +
                        std::to_string(gluing.det()));
    const Mat2 holonomy{1, 0, 0, -1};
    const Mat2 composed = holonomy * gluing.inverse() * holonomy * gluing;
    assert(composed.det() == 1);
    return composed;
}

Geometry double_of_k_geometry(const Mat2& gluing) {
    return torus_bundle_geometry(double_of_k_monodromy(gluing));
}

bool is_virtually_cyclic_geometry(Geometry g) {
    return g == Geometry::S3 || g == Geometry::S2xE;
}

int geometry_gdvc(Geometry g) {
    switch (g) {
        case Geometry::S3:
        case Geometry::S2xE:
            return 0;
        case Geometry::E3:
            return 4;  // 3-crystallographic group: dimension n + 1
        case Geometry::H3:
        case Geometry::H2xE:
        case Geometry::PSLtilde:
        case Geometry::Nil:
        case Geometry::Sol:
            return 3;
    }
    throw Error(Errc::InvalidDescription, "unreachable geometry");
}

} // namespace gdvc
