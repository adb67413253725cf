#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gdvc/matrix2.hpp"
#include "gdvc/slope.hpp"

namespace gdvc {

// ---------------------------------------------------------------------------
// Geometries
// ---------------------------------------------------------------------------

/// The eight 3-dimensional maximal model geometries.
enum class Geometry { S3, E3, H3, S2xE, H2xE, PSLtilde, Nil, Sol };

/// Fixed wire names: "S3", "E3", "H3", "S2xE", "H2xE", "PSLtilde", "Nil", "Sol".
const char* geometry_name(Geometry g);
std::optional<Geometry> parse_geometry(const std::string& name);

// ---------------------------------------------------------------------------
// Orbifold bases and Seifert invariants
// ---------------------------------------------------------------------------

/// Cone point of a 2-orbifold: local model a disk rotated by rotation/order
/// turns. Invariants: order >= 2, 0 < rotation < order, gcd = 1.
struct ConePoint {
    std::int64_t order{2};     // alpha
    std::int64_t rotation{1};  // beta

    friend bool operator==(const ConePoint&, const ConePoint&) = default;
};

/// Base 2-orbifold of a Seifert fibration. For a non-orientable base, genus
/// counts cross-caps (>= 1).
struct OrbifoldBase {
    std::int64_t genus{0};
    bool orientable{true};
    std::vector<ConePoint> cone_points;
    std::int64_t boundary_count{0};

    friend bool operator==(const OrbifoldBase&, const OrbifoldBase&) = default;
};

/// Seifert invariants of a compact orientable Seifert fibration. The integer
/// section obstruction b is meaningful only for closed fibrations and must be
/// absent when the base has boundary.
struct SeifertInvariants {
    OrbifoldBase base;
    std::optional<std::int64_t> section_obstruction;  // b

    friend bool operator==(const SeifertInvariants&, const SeifertInvariants&) = default;
};

// ---------------------------------------------------------------------------
// Fundamental group order (user-declared, for spherical summands)
// ---------------------------------------------------------------------------

/// Order of a fundamental group: a positive integer, or infinite.
class Pi1Order {
public:
    static Pi1Order finite(std::uint64_t n) { return Pi1Order(n); }
    static Pi1Order infinite() { return Pi1Order(); }

    bool is_infinite() const { return !order_.has_value(); }
    std::uint64_t order() const { return *order_; }

    friend bool operator==(const Pi1Order&, const Pi1Order&) = default;

private:
    Pi1Order() = default;
    explicit Pi1Order(std::uint64_t n) : order_(n) {}

    std::optional<std::uint64_t> order_;
};

// ---------------------------------------------------------------------------
// JSJ graphs
// ---------------------------------------------------------------------------

/// Seifert fibered JSJ piece: bounded base plus the fiber class induced on
/// each boundary torus, indexed by socket (socket i <=> boundary component i).
struct SeifertPiece {
    OrbifoldBase base;  // boundary_count >= 1
    std::vector<Slope> fiber_slopes;

    friend bool operator==(const SeifertPiece&, const SeifertPiece&) = default;
};

/// Finite-volume hyperbolic JSJ piece; sockets are its cusp tori.
struct HyperbolicPiece {
    std::int64_t cusp_count{1};

    friend bool operator==(const HyperbolicPiece&, const HyperbolicPiece&) = default;
};

/// Twisted I-bundle over the Klein bottle. One boundary socket. The socket
/// basis is fixed so that the boundary holonomy involution is diag(1,-1):
/// its eigen-slopes, the fiber classes of the two fibrations, are (1,0)
/// and (0,1) by convention.
struct KPiece {
    friend bool operator==(const KPiece&, const KPiece&) = default;
};

struct JsjVertex {
    std::string id;
    std::variant<SeifertPiece, HyperbolicPiece, KPiece> kind;

    friend bool operator==(const JsjVertex&, const JsjVertex&) = default;
};

/// Number of boundary sockets the vertex must have matched.
std::int64_t socket_count(const JsjVertex& v);

struct SocketRef {
    std::string vertex;
    std::int64_t socket{0};

    friend bool operator==(const SocketRef&, const SocketRef&) = default;

    std::string str() const { return vertex + ":" + std::to_string(socket); }
};

/// Torus gluing between two sockets. The gluing matrix maps the lattice
/// basis of the end_a torus to the basis of the end_b torus.
struct JsjEdge {
    SocketRef end_a;
    SocketRef end_b;
    Mat2 gluing;  // determinant +1 or -1

    friend bool operator==(const JsjEdge&, const JsjEdge&) = default;
};

/// Connected graph with every socket matched exactly once (the manifold is
/// closed) and at least one edge. Loops and multi-edges are allowed.
struct JsjGraph {
    std::vector<JsjVertex> vertices;
    std::vector<JsjEdge> edges;

    friend bool operator==(const JsjGraph&, const JsjGraph&) = default;
};

// ---------------------------------------------------------------------------
// Prime summands and manifold descriptions
// ---------------------------------------------------------------------------

struct SeifertClosed {
    SeifertInvariants invariants;  // boundary_count = 0, b present

    friend bool operator==(const SeifertClosed&, const SeifertClosed&) = default;
};

struct HyperbolicClosed {
    friend bool operator==(const HyperbolicClosed&, const HyperbolicClosed&) = default;
};

struct TorusBundle {
    Mat2 monodromy;  // determinant +1

    friend bool operator==(const TorusBundle&, const TorusBundle&) = default;
};

/// Two copies of the twisted I-bundle over the Klein bottle glued along
/// their boundary torus; the gluing is written in the fixed K socket basis
/// on both sides.
struct DoubleOfK {
    Mat2 gluing;  // determinant +1 or -1

    friend bool operator==(const DoubleOfK&, const DoubleOfK&) = default;
};

struct JsjSummand {
    JsjGraph graph;

    friend bool operator==(const JsjSummand&, const JsjSummand&) = default;
};

/// A geometric prime declared by its geometry tag. Spherical summands must
/// carry the order of their fundamental group; nothing else about a
/// spherical manifold is consumed downstream.
struct DeclaredGeometric {
    Geometry geometry{Geometry::S3};
    std::optional<Pi1Order> pi1_order;

    friend bool operator==(const DeclaredGeometric&, const DeclaredGeometric&) = default;
};

using PrimeSummand = std::variant<SeifertClosed, HyperbolicClosed, TorusBundle,
                                  DoubleOfK, JsjSummand, DeclaredGeometric>;

const char* summand_kind_name(const PrimeSummand& summand);

/// Ordered list of prime summands of a closed oriented connected 3-manifold.
/// The order carries no meaning; every consumer is permutation-invariant.
struct ManifoldDescription {
    std::vector<PrimeSummand> summands;

    friend bool operator==(const ManifoldDescription&, const ManifoldDescription&) = default;
};

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

/// One step of a justification trace: a stable rule identifier plus a
/// human-readable clause. The rule vocabulary is documented in the README.
struct TraceEntry {
    std::string rule;
    std::string detail;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// A computed virtually cyclic geometric dimension with its justification.
/// The value is always one of 0, 2, 3, 4; the value 1 never occurs.
struct DimResult {
    int value{0};
    std::vector<TraceEntry> trace;

    friend bool operator==(const DimResult&, const DimResult&) = default;
};

} // namespace gdvc
