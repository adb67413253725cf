#include "gdvc/types.hpp"

#include "gdvc/errors.hpp"

namespace gdvc {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::ZeroSlope: return "ZeroSlope";
        case Errc::NotClosed: return "NotClosed";
        case Errc::BadDeterminant: return "BadDeterminant";
        case Errc::InvalidJsj: return "InvalidJsj";
        case Errc::MissingOrder: return "MissingOrder";
        case Errc::InvalidDescription: return "InvalidDescription";
    }
    return "Unknown";
}

const char* geometry_name(Geometry g) {
    switch (g) {
        case Geometry::S3: return "S3";
        case Geometry::E3: return "E3";
        case Geometry::H3: return "H3";
        case Geometry::S2xE: return "S2xE";
        case Geometry::H2xE: return "H2xE";
        case Geometry::PSLtilde: return "PSLtilde";
        case Geometry::Nil: return "Nil";
        case Geometry::Sol: return "Sol";
    }
    return "?";
}

std::optional<Geometry> parse_geometry(const std::string& name) {
    static const std::pair<const char*, Geometry> table[] = {
        {"S3", Geometry::S3},     {"E3", Geometry::E3},
        {"H3", Geometry::H3},     {"S2xE", Geometry::S2xE},
        {"H2xE", Geometry::H2xE}, {"PSLtilde", Geometry::PSLtilde},
        {"Nil", Geometry::Nil},   {"Sol", Geometry::Sol},
    };
    for (const auto& [key, value] : table)
        if (name == key) return value;
    return std::nullopt;
}

std::int64_t socket_count(const JsjVertex& v) {
    if (const auto* seifert = std::get_if<SeifertPiece>(&v.kind))
        return seifert->base.boundary_count;
    if (const auto* hyperbolic = std::get_if<HyperbolicPiece>(&v.kind))
        return hyperbolic->cusp_count;
    return 1;  // KPiece
}

const char* summand_kind_name(const PrimeSummand& summand) {
    struct Namer {
        const char* operator()(const SeifertClosed&) const { return "seifert_closed"; }
        const char* operator()(const HyperbolicClosed&) const { return "hyperbolic_closed"; }
        const char* operator()(const TorusBundle&) const { return "torus_bundle"; }
        const char* operator()(const DoubleOfK&) const { return "double_of_k"; }
        const char* operator()(const JsjSummand&) const { return "jsj"; }
        const char* operator()(const DeclaredGeometric&) const { return "declared_geometric"; }
    };
    return std::visit(Namer{}, summand);
}

} // namespace gdvc
