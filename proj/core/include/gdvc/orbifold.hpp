#pragma once

#include "gdvc/rational.hpp"
#include "gdvc/types.hpp"

namespace gdvc {

/// Classification of a closed 2-orbifold by its model geometry, plus the
/// bad class (not covered by a surface: teardrops and unequal spindles).
enum class OrbifoldClass { Bad, Spherical, Euclidean, Hyperbolic };

const char* orbifold_class_name(OrbifoldClass c);

/// Classification of the interior of a bounded base. A bounded base with
/// positive orbifold Euler characteristic cannot bound an incompressible
/// JSJ piece (the piece would be a fibered solid torus), so it is flagged
/// InvalidPiece rather than classified.
enum class BoundedOrbifoldClass { Euclidean, Hyperbolic, InvalidPiece };

const char* bounded_orbifold_class_name(BoundedOrbifoldClass c);

/// chi_orb = chi(underlying surface) - sum_i (1 - 1/alpha_i), where the
/// underlying chi is 2 - 2*genus - boundary (orientable) or
/// 2 - genus - boundary (non-orientable). Exact; the denominator divides
/// the lcm of the cone orders.
Rational orbifold_euler_characteristic(const OrbifoldBase& base);

/// Closed bases only (throws NotClosed otherwise). Bad iff the underlying
/// surface is the sphere with exactly one cone point or with exactly two
/// cone points of different orders; otherwise by the sign of chi_orb.
OrbifoldClass classify_closed_orbifold(const OrbifoldBase& base);

/// Bounded bases only (boundary_count >= 1): Euclidean at chi_orb = 0,
/// Hyperbolic below, InvalidPiece above.
BoundedOrbifoldClass classify_bounded_orbifold_interior(const OrbifoldBase& base);

} // namespace gdvc
