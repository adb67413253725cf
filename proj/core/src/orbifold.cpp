#include "gdvc/orbifold.hpp"

#include "gdvc/errors.hpp"

namespace gdvc {

const char* orbifold_class_name(OrbifoldClass c) {
    switch (c) {
        case OrbifoldClass::Bad: return "bad";
        case OrbifoldClass::Spherical: return "spherical";
        case OrbifoldClass::Euclidean: return "euclidean";
        case OrbifoldClass::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

const char* bounded_orbifold_class_name(BoundedOrbifoldClass c) {
    switch (c) {
        case BoundedOrbifoldClass::Euclidean: return "euclidean";
        case BoundedOrbifoldClass::Hyperbolic: return "hyperbolic";
        case BoundedOrbifoldClass::InvalidPiece: return "invalid-piece";
    }
    return "?";
}

Rational orbifold_euler_characteristic(const OrbifoldBase& base) {
    const std::int64_t underlying =
        base.orientable ? 2 - 2 * base.genus - base.boundary_count
                        : 2 - base.genus - base.boundary_count;
    Rational chi(underlying);
    for (const ConePoint& cone : base.cone_points)
        chi -= Rational(cone.order - 1, cone.order);  // 1 - 1/alpha
    return chi;
}

OrbifoldClass classify_closed_orbifold(const OrbifoldBase& base) {
    if (base.boundary_count != 0)
        throw Error(Errc::NotClosed,
                    "closed-orbifold classification called on a base with " +
                        std::to_string(base.boundary_count) + " boundary components");

    // Teardrops and unequal spindles: sphere with one cone point, or with
    // two cone points of different orders. Everything else is good.
    if (base.orientable && base.genus == 0) {
        if (base.cone_points.size() == 1)
            return OrbifoldClass::Bad;
        if (base.cone_points.size() == 2 &&
            base.cone_points[0].order != base.cone_points[1].order)
            return OrbifoldClass::Bad;
    }

    const int sign = orbifold_euler_characteristic(base).sign();
    if (sign > 0) return OrbifoldClass::Spherical;
    if (sign == 0) return OrbifoldClass::Euclidean;
    return OrbifoldClass::Hyperbolic;
}

BoundedOrbifoldClass classify_bounded_orbifold_interior(const OrbifoldBase& base) {
    if (base.boundary_count < 1)
        throw Error(Errc::InvalidDescription,
                    "bounded-orbifold classification called on a closed base");

    const int sign = orbifold_euler_characteristic(base).sign();
    if (sign > 0) return BoundedOrbifoldClass::InvalidPiece;
    if (sign == 0) return BoundedOrbifoldClass::Euclidean;
    return BoundedOrbifoldClass::Hyperbolic;
}

} // namespace gdvc
