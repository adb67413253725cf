#pragma once

#include "gdvc/matrix2.hpp"
#include "gdvc/rational.hpp"
#include "gdvc/types.hpp"

namespace gdvc {

/// Conjugacy trichotomy for determinant-+1 integer matrices: finite order,
/// infinite order with an invariant rank-one subgroup, or neither.
enum class MonodromyType { Elliptic, Parabolic, Hyperbolic };

const char* monodromy_type_name(MonodromyType t);

/// Euler number e = -(b + sum_i beta_i/alpha_i) of a closed Seifert
/// fibration. Requires the section obstruction b (closed invariants).
Rational euler_number(const SeifertInvariants& invariants);

/// Elliptic iff the matrix has finite order (|trace| < 2, or +-identity);
/// Parabolic iff |trace| = 2 and not +-identity; Hyperbolic iff |trace| > 2.
/// Throws BadDeterminant unless det = +1.
MonodromyType monodromy_type(const Mat2& monodromy);

/// Model geometry of a closed orientable Seifert fibration, dispatched on
/// the base class and the vanishing of the Euler number:
///   Spherical or Bad base:  e != 0 -> S3,   e = 0 -> S2xE
///   Euclidean base:         e != 0 -> Nil,  e = 0 -> E3
///   Hyperbolic base:        e != 0 -> PSLtilde, e = 0 -> H2xE
/// Never H3 or Sol.
Geometry seifert_closed_geometry(const SeifertInvariants& invariants);

/// Model geometry of a torus bundle over the circle with the given
/// monodromy: Elliptic -> E3, Parabolic -> Nil, Hyperbolic -> Sol.
Geometry torus_bundle_geometry(const Mat2& monodromy);

/// Monodromy of the index-two torus bundle sitting inside a double of K
/// glued along `gluing`: the composition h * gluing^-1 * h * gluing of the
/// two boundary holonomy involutions (h = diag(1,-1) in the fixed K socket
/// basis) through the gluing. Always has determinant +1.
Mat2 double_of_k_monodromy(const Mat2& gluing);

/// Model geometry of a double of K: the geometry of its index-two
/// torus-bundle cover. E3, Nil, or Sol.
Geometry double_of_k_geometry(const Mat2& gluing);

/// True exactly for the two geometries whose closed manifolds have
/// virtually cyclic fundamental group: S3 and S2xE.
bool is_virtually_cyclic_geometry(Geometry g);

/// Virtually cyclic geometric dimension of the fundamental group of a
/// closed manifold with the given geometry:
///   S3, S2xE -> 0;  E3 -> 4;  everything else -> 3.
int geometry_gdvc(Geometry g);

} // namespace gdvc
