#pragma once

#include <optional>
#include <vector>

#include "gdvc/types.hpp"

namespace gdvc {

/// Order class of a summand's fundamental group, as consumed by the
/// connected-sum rules. Only the predicates "= 1", "= 2", "> 2" matter.
enum class Pi1OrderClass { Trivial, Two, MoreThanTwo, Infinite };

const char* pi1_order_class_name(Pi1OrderClass c);

/// Per-prime classification record. `order_class` is absent exactly for
/// spherical-geometry Seifert summands whose order was never declared;
/// such a summand classifies fine on its own but cannot drive the
/// two-summand infinite-dihedral decision.
struct PrimeProfile {
    int gdvc{0};
    std::optional<Geometry> geometry;  // absent for non-geometric (JSJ) primes
    bool virtually_cyclic{false};
    std::optional<Pi1OrderClass> order_class;
    bool flat_geometry{false};  // geometry == E3
    std::vector<TraceEntry> trace;
};

/// Dimension and profile of a single prime summand. JSJ summands are
/// semantically validated first (throws InvalidJsj on failure); declared
/// spherical summands without an order throw MissingOrder.
PrimeProfile gdvc_prime(const PrimeSummand& summand);

/// Dimension of the whole manifold, assembled from per-summand profiles:
///   4  if some summand is flat (its group contains Z^3);
///   0  if the group is virtually cyclic (a single virtually cyclic
///      summand, or two spherical summands of order exactly 2 - the
///      infinite dihedral case);
///   2  if it is a non-elementary free product of virtually cyclic groups;
///   3  in all other cases.
/// The trace records each summand's justification, the free-product
/// dimension window, and the clause that fired.
DimResult gdvc_manifold(const ManifoldDescription& description);

/// Independent geometric characterization, computed from per-summand
/// geometry tags and declared orders alone and sharing none of
/// gdvc_manifold's predicate logic:
///   0 if the manifold itself is modeled on S3 or S2xE;
///   2 if every summand is modeled on S3 or S2xE and the sum is
///     non-elementary (more than two summands, or two with an order > 2);
///   4 if some summand is modeled on E3;
///   3 in all other cases.
int gdvc_manifold_geometric(const ManifoldDescription& description);

/// True iff both classification paths agree. Holds for every valid
/// description; exercised universally by the acceptance suite.
bool cross_check(const ManifoldDescription& description);

} // namespace gdvc
