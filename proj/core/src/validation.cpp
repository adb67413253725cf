#include "gdvc/validation.hpp"

#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace gdvc {

namespace {

void check_cone_points(const OrbifoldBase& base, const std::string& path,
                       std::vector<Diagnostic>& out) {
    for (std::size_t i = 0; i < base.cone_points.size(); ++i) {
        const ConePoint& cone = base.cone_points[i];
        const std::string cone_path = path + "/cone_points/" + std::to_string(i);
        if (cone.order < 2)
            out.push_back({cone_path, "cone order must be at least 2"});
        else if (cone.rotation <= 0 || cone.rotation >= cone.order)
            out.push_back({cone_path, "cone rotation must satisfy 0 < beta < alpha"});
        else if (std::gcd(cone.order, cone.rotation) != 1)
            out.push_back({cone_path, "cone rotation must be coprime to the order"});
    }
}

void check_base(const OrbifoldBase& base, const std::string& path,
                std::vector<Diagnostic>& out) {
    if (base.genus < 0)
        out.push_back({path + "/genus", "genus must be non-negative"});
    if (!base.orientable && base.genus < 1)
        out.push_back({path + "/genus",
                       "a non-orientable base needs at least one cross-cap (genus >= 1)"});
    if (base.boundary_count < 0)
        out.push_back({path + "/boundary_count", "boundary count must be non-negative"});
    check_cone_points(base, path, out);
}

bool is_canonical(const Slope& s) {
    if (s.p == 0 && s.q == 0) return false;
    if (std::gcd(s.p, s.q) != 1) return false;
    return s.p > 0 || (s.p == 0 && s.q == 1);
}

struct SocketKey {
    std::string vertex;
    std::int64_t socket;
    bool operator==(const SocketKey&) const = default;
};

struct SocketKeyHash {
    std::size_t operator()(const SocketKey& k) const {
        return std::hash<std::string>{}(k.vertex) ^
               (std::hash<std::int64_t>{}(k.socket) << 1);
    }
};

} // namespace

std::vector<Diagnostic> validate_jsj_structure(const JsjGraph& graph,
                                               const std::string& path_prefix) {
    std::vector<Diagnostic> out;

    if (graph.vertices.empty()) {
        out.push_back({path_prefix + "/vertices", "a JSJ graph needs at least one vertex"});
        return out;
    }

    std::unordered_map<std::string, std::size_t> vertex_index;
    for (std::size_t i = 0; i < graph.vertices.size(); ++i) {
        const JsjVertex& vertex = graph.vertices[i];
        const std::string vertex_path = path_prefix + "/vertices/" + std::to_string(i);
        if (vertex.id.empty())
            out.push_back({vertex_path + "/id", "vertex id must be non-empty"});
        if (!vertex_index.emplace(vertex.id, i).second)
            out.push_back({vertex_path + "/id", "duplicate vertex id '" + vertex.id + "'"});

        if (const auto* seifert = std::get_if<SeifertPiece>(&vertex.kind)) {
            check_base(seifert->base, vertex_path + "/base", out);
            if (seifert->base.boundary_count < 1)
                out.push_back({vertex_path + "/base/boundary_count",
                               "a Seifert JSJ piece has at least one boundary torus"});
            if (static_cast<std::int64_t>(seifert->fiber_slopes.size()) !=
                seifert->base.boundary_count)
                out.push_back({vertex_path + "/fiber_slopes",
                               "one fiber slope per boundary socket required (got " +
                                   std::to_string(seifert->fiber_slopes.size()) + " for " +
                                   std::to_string(seifert->base.boundary_count) +
                                   " sockets)"});
            for (std::size_t j = 0; j < seifert->fiber_slopes.size(); ++j)
                if (!is_canonical(seifert->fiber_slopes[j]))
                    out.push_back({vertex_path + "/fiber_slopes/" + std::to_string(j),
                                   "fiber slope must be primitive and canonical"});
        } else if (const auto* hyperbolic = std::get_if<HyperbolicPiece>(&vertex.kind)) {
            if (hyperbolic->cusp_count < 1)
                out.push_back({vertex_path + "/cusps",
                               "a hyperbolic JSJ piece has at least one cusp"});
        }
    }
    if (!out.empty()) return out;  // socket bookkeeping needs sane vertices

    if (graph.edges.empty())
        out.push_back({path_prefix + "/edges",
                       "a JSJ decomposition contains at least one torus"});

    std::unordered_map<SocketKey, int, SocketKeyHash> socket_use;
    const auto note_end = [&](const SocketRef& end, const std::string& end_path) {
        const auto found = vertex_index.find(end.vertex);
        if (found == vertex_index.end()) {
            out.push_back({end_path, "unknown vertex id '" + end.vertex + "'"});
            return;
        }
        const std::int64_t sockets = socket_count(graph.vertices[found->second]);
        if (end.socket < 0 || end.socket >= sockets) {
            out.push_back({end_path, "socket " + std::to_string(end.socket) +
                                         " out of range (vertex has " +
                                         std::to_string(sockets) + ")"});
            return;
        }
        ++socket_use[{end.vertex, end.socket}];
    };

    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
        const JsjEdge& edge = graph.edges[i];
        const std::string edge_path = path_prefix + "/edges/" + std::to_string(i);
        note_end(edge.end_a, edge_path + "/from");
        note_end(edge.end_b, edge_path + "/to");
        if (!edge.gluing.is_unimodular())
            out.push_back({edge_path + "/gluing",
                           "torus gluing must have determinant +1 or -1"});
    }

    for (const JsjVertex& vertex : graph.vertices) {
        for (std::int64_t socket = 0; socket < socket_count(vertex); ++socket) {
            const auto found = socket_use.find({vertex.id, socket});
            const int uses = found == socket_use.end() ? 0 : found->second;
            if (uses == 0)
                out.push_back({path_prefix,
                               "socket " + vertex.id + ":" + std::to_string(socket) +
                                   " is unmatched: manifold not closed"});
            else if (uses > 1)
                out.push_back({path_prefix,
                               "socket " + vertex.id + ":" + std::to_string(socket) +
                                   " is used by " + std::to_string(uses) + " edge ends"});
        }
    }

    // Connectivity over vertices reachable through edges.
    if (out.empty() && !graph.vertices.empty()) {
        std::unordered_map<std::string, std::vector<std::string>> adjacency;
        for (const JsjEdge& edge : graph.edges) {
            adjacency[edge.end_a.vertex].push_back(edge.end_b.vertex);
            adjacency[edge.end_b.vertex].push_back(edge.end_a.vertex);
        }
        std::unordered_set<std::string> seen;
        std::vector<std::string> stack{graph.vertices.front().id};
        while (!stack.empty()) {
            const std::string current = stack.back();
            stack.pop_back();
            if (!seen.insert(current).second) continue;
            for (const std::string& next : adjacency[current]) stack.push_back(next);
        }
        if (seen.size() != graph.vertices.size())
            out.push_back({path_prefix, "graph is not connected"});
    }

    return out;
}

std::vector<Diagnostic> validate_description(const ManifoldDescription& description) {
    std::vector<Diagnostic> out;
    if (description.summands.empty()) {
        out.push_back({"/summands", "at least one summand required"});
        return out;
    }

    const std::size_t count = description.summands.size();
    for (std::size_t i = 0; i < count; ++i) {
        const std::string path = "/summands/" + std::to_string(i);
        const PrimeSummand& summand = description.summands[i];

        if (const auto* seifert = std::get_if<SeifertClosed>(&summand)) {
            check_base(seifert->invariants.base, path + "/base", out);
            if (seifert->invariants.base.boundary_count != 0)
                out.push_back({path + "/base/boundary_count",
                               "a closed Seifert summand has no boundary"});
            if (!seifert->invariants.section_obstruction.has_value())
                out.push_back({path + "/b",
                               "closed Seifert invariants carry the section obstruction b"});
        } else if (const auto* bundle = std::get_if<TorusBundle>(&summand)) {
            if (bundle->monodromy.det() != 1)
                out.push_back({path + "/monodromy", "monodromy must have determinant +1"});
        } else if (const auto* dbl = std::get_if<DoubleOfK>(&summand)) {
            if (!dbl->gluing.is_unimodular())
                out.push_back({path + "/gluing",
                               "gluing must have determinant +1 or -1"});
        } else if (const auto* jsj = std::get_if<JsjSummand>(&summand)) {
            auto graph_diagnostics = validate_jsj_structure(jsj->graph, path + "/graph");
            out.insert(out.end(), graph_diagnostics.begin(), graph_diagnostics.end());
        } else if (const auto* declared = std::get_if<DeclaredGeometric>(&summand)) {
            if (declared->geometry == Geometry::S3) {
                if (!declared->pi1_order.has_value())
                    out.push_back({path + "/pi1_order",
                                   "a spherical summand carries the order of its "
                                   "fundamental group"});
                else if (declared->pi1_order->is_infinite())
                    out.push_back({path + "/pi1_order",
                                   "a spherical manifold has finite fundamental group"});
                else if (declared->pi1_order->order() < 1)
                    out.push_back({path + "/pi1_order", "order must be positive"});
                else if (declared->pi1_order->order() == 1 && count > 1)
                    out.push_back({path,
                                   "the 3-sphere is not a prime summand; it may only "
                                   "appear as the sole summand"});
            } else if (declared->pi1_order.has_value() &&
                       !declared->pi1_order->is_infinite()) {
                out.push_back({path + "/pi1_order",
                               "only spherical manifolds have finite fundamental group"});
            }
        }
    }
    return out;
}

} // namespace gdvc
