#pragma once

// Hand-built JSJ graphs shared by the unit and acceptance suites.

#include "gdvc/types.hpp"

namespace testgraphs {

inline gdvc::OrbifoldBase disk_with_cones(std::initializer_list<std::int64_t> orders) {
    gdvc::OrbifoldBase base;
    base.boundary_count = 1;
    for (const std::int64_t order : orders) base.cone_points.push_back({order, 1});
    return base;
}

inline gdvc::JsjVertex seifert_vertex(const std::string& id, gdvc::OrbifoldBase base,
                                      std::vector<gdvc::Slope> fibers) {
    return {id, gdvc::SeifertPiece{std::move(base), std::move(fibers)}};
}

inline gdvc::JsjVertex hyperbolic_vertex(const std::string& id, std::int64_t cusps) {
    return {id, gdvc::HyperbolicPiece{cusps}};
}

inline gdvc::JsjVertex k_vertex(const std::string& id) {
    return {id, gdvc::KPiece{}};
}

/// Two Seifert pieces over hyperbolic disk bases, one edge. With the swap
/// gluing the fibrations miss each other; with the identity they match.
inline gdvc::JsjGraph seifert_pair(const gdvc::Mat2& gluing) {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(
        seifert_vertex("v0", disk_with_cones({2, 3}), {gdvc::Slope{1, 0}}));
    graph.vertices.push_back(
        seifert_vertex("v1", disk_with_cones({2, 7}), {gdvc::Slope{1, 0}}));
    graph.edges.push_back({{"v0", 0}, {"v1", 0}, gluing});
    return graph;
}

/// Two K pieces glued along their boundary torus: a geometric double, not
/// a JSJ decomposition.
inline gdvc::JsjGraph k_k_graph() {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(k_vertex("k0"));
    graph.vertices.push_back(k_vertex("k1"));
    graph.edges.push_back({{"k0", 0}, {"k1", 0}, gdvc::Mat2{1, 1, 0, 1}});
    return graph;
}

/// K piece attached to a Seifert piece over a hyperbolic base. The gluing
/// decides whether the neighboring fiber lands on a holonomy eigen-slope.
inline gdvc::JsjGraph k_seifert_graph(const gdvc::Mat2& gluing) {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(k_vertex("k0"));
    graph.vertices.push_back(
        seifert_vertex("v0", disk_with_cones({2, 3}), {gdvc::Slope{1, 0}}));
    graph.edges.push_back({{"k0", 0}, {"v0", 0}, gluing});
    return graph;
}

/// K piece attached to a hyperbolic piece; no slope condition applies.
inline gdvc::JsjGraph k_hyperbolic_graph() {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(k_vertex("k0"));
    graph.vertices.push_back(hyperbolic_vertex("h0", 1));
    graph.edges.push_back({{"k0", 0}, {"h0", 0}, gdvc::Mat2::identity()});
    return graph;
}

/// Single hyperbolic piece with two cusps and a self-gluing.
inline gdvc::JsjGraph hyperbolic_loop() {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(hyperbolic_vertex("h0", 2));
    graph.edges.push_back({{"h0", 0}, {"h0", 1}, gdvc::Mat2{2, 1, 1, 1}});
    return graph;
}

inline gdvc::JsjGraph hyperbolic_pair() {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(hyperbolic_vertex("h0", 1));
    graph.vertices.push_back(hyperbolic_vertex("h1", 1));
    graph.edges.push_back({{"h0", 0}, {"h1", 0}, gdvc::Mat2::identity()});
    return graph;
}

/// Hyperbolic piece glued to a Seifert piece; the identity gluing is fine
/// because hyperbolic edges carry no slope condition.
inline gdvc::JsjGraph mixed_graph() {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(hyperbolic_vertex("h0", 1));
    graph.vertices.push_back(
        seifert_vertex("v0", disk_with_cones({3, 4}), {gdvc::Slope{0, 1}}));
    graph.edges.push_back({{"h0", 0}, {"v0", 0}, gdvc::Mat2::identity()});
    return graph;
}

/// Seifert piece with two sockets and a self-gluing; fibrations match or
/// not depending on the gluing.
inline gdvc::JsjGraph seifert_loop(const gdvc::Mat2& gluing) {
    gdvc::JsjGraph graph;
    gdvc::OrbifoldBase base = disk_with_cones({2, 3});
    base.boundary_count = 2;
    graph.vertices.push_back(
        seifert_vertex("v0", base, {gdvc::Slope{1, 0}, gdvc::Slope{1, 0}}));
    graph.edges.push_back({{"v0", 0}, {"v0", 1}, gluing});
    return graph;
}

/// Chain with an annulus-base (torus x interval) piece in the middle.
inline gdvc::JsjGraph chain_with_trivial_piece() {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(hyperbolic_vertex("h0", 1));
    gdvc::OrbifoldBase annulus;
    annulus.boundary_count = 2;
    graph.vertices.push_back(
        seifert_vertex("t0", annulus, {gdvc::Slope{1, 0}, gdvc::Slope{1, 0}}));
    graph.vertices.push_back(hyperbolic_vertex("h1", 1));
    graph.edges.push_back({{"h0", 0}, {"t0", 0}, gdvc::Mat2::identity()});
    graph.edges.push_back({{"t0", 1}, {"h1", 0}, gdvc::Mat2::identity()});
    return graph;
}

/// K presented as a Seifert piece over the disk with two order-2 cones.
inline gdvc::JsjGraph disk22_presentation(const gdvc::Slope& fiber,
                                          const gdvc::Mat2& gluing) {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(
        seifert_vertex("k0", disk_with_cones({2, 2}), {fiber}));
    graph.vertices.push_back(
        seifert_vertex("v0", disk_with_cones({2, 3}), {gdvc::Slope{1, 0}}));
    graph.edges.push_back({{"k0", 0}, {"v0", 0}, gluing});
    return graph;
}

/// K presented as a Seifert piece over the Moebius band.
inline gdvc::JsjGraph moebius_presentation(const gdvc::Slope& fiber,
                                           const gdvc::Mat2& gluing) {
    gdvc::JsjGraph graph;
    gdvc::OrbifoldBase moebius;
    moebius.orientable = false;
    moebius.genus = 1;
    moebius.boundary_count = 1;
    graph.vertices.push_back(seifert_vertex("k0", moebius, {fiber}));
    graph.vertices.push_back(
        seifert_vertex("v0", disk_with_cones({2, 3}), {gdvc::Slope{1, 0}}));
    graph.edges.push_back({{"k0", 0}, {"v0", 0}, gluing});
    return graph;
}

/// Graph with a disk-base piece carrying no cone points (a solid torus).
inline gdvc::JsjGraph solid_torus_piece_graph() {
    gdvc::JsjGraph graph;
    graph.vertices.push_back(seifert_vertex("v0", disk_with_cones({}), {gdvc::Slope{1, 0}}));
    graph.vertices.push_back(hyperbolic_vertex("h0", 1));
    graph.edges.push_back({{"v0", 0}, {"h0", 0}, gdvc::Mat2::identity()});
    return graph;
}

} // namespace testgraphs
