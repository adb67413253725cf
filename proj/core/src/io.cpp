#include "gdvc/io.hpp"

#include <cstdint>

#include "gdvc/errors.hpp"

namespace gdvc {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

struct Parser {
    std::vector<Diagnostic> diagnostics;

    void fail(const std::string& path, const std::string& message) {
        diagnostics.push_back({path, message});
    }

    std::optional<std::int64_t> integer(const json& j, const std::string& path) {
        if (j.is_number_float()) {
            fail(path, "floats are not accepted; use decimal integers");
            return std::nullopt;
        }
        if (!j.is_number_integer() && !j.is_number_unsigned()) {
            fail(path, "expected an integer");
            return std::nullopt;
        }
        return j.get<std::int64_t>();
    }

    std::optional<std::int64_t> integer_field(const json& j, const char* key,
                                              const std::string& path) {
        if (!j.contains(key)) {
            fail(path + "/" + key, "missing field");
            return std::nullopt;
        }
        return integer(j.at(key), path + "/" + key);
    }

    std::optional<Mat2> matrix(const json& j, const std::string& path) {
        if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
            !j[1].is_array() || j[1].size() != 2) {
            fail(path, "expected a 2x2 integer matrix [[a,b],[c,d]]");
            return std::nullopt;
        }
        const auto a = integer(j[0][0], path);
        const auto b = integer(j[0][1], path);
        const auto c = integer(j[1][0], path);
        const auto d = integer(j[1][1], path);
        if (!a || !b || !c || !d) return std::nullopt;
        return Mat2{*a, *b, *c, *d};
    }

    std::optional<Slope> slope(const json& j, const std::string& path) {
        if (!j.is_array() || j.size() != 2) {
            fail(path, "expected a slope [p, q]");
            return std::nullopt;
        }
        const auto p = integer(j[0], path);
        const auto q = integer(j[1], path);
        if (!p || !q) return std::nullopt;
        if (*p == 0 && *q == 0) {
            fail(path, "slope (0,0) does not determine a line");
            return std::nullopt;
        }
        return canonicalize_slope(*p, *q);
    }

    std::optional<OrbifoldBase> base(const json& j, const std::string& path) {
        if (!j.is_object()) {
            fail(path, "expected a base orbifold object");
            return std::nullopt;
        }
        OrbifoldBase result;
        bool ok = true;
        if (const auto genus = integer_field(j, "genus", path))
            result.genus = *genus;
        else
            ok = false;
        if (!j.contains("orientable") || !j.at("orientable").is_boolean()) {
            fail(path + "/orientable", "expected a boolean");
            ok = false;
        } else {
            result.orientable = j.at("orientable").get<bool>();
        }
        if (j.contains("boundary_count")) {
            if (const auto boundary = integer(j.at("boundary_count"), path + "/boundary_count"))
                result.boundary_count = *boundary;
            else
                ok = false;
        }
        if (j.contains("cone_points")) {
            const json& cones = j.at("cone_points");
            if (!cones.is_array()) {
                fail(path + "/cone_points", "expected an array of [alpha, beta] pairs");
                ok = false;
            } else {
                for (std::size_t i = 0; i < cones.size(); ++i) {
                    const std::string cone_path =
                        path + "/cone_points/" + std::to_string(i);
                    if (!cones[i].is_array() || cones[i].size() != 2) {
                        fail(cone_path, "expected an [alpha, beta] pair");
                        ok = false;
                        continue;
                    }
                    const auto alpha = integer(cones[i][0], cone_path);
                    const auto beta = integer(cones[i][1], cone_path);
                    if (!alpha || !beta) {
                        ok = false;
                        continue;
                    }
                    result.cone_points.push_back({*alpha, *beta});
                }
            }
        }
        return ok ? std::optional(result) : std::nullopt;
    }

    std::optional<JsjVertex> vertex(const json& j, const std::string& path) {
        if (!j.is_object() || !j.contains("id") || !j.at("id").is_string() ||
            !j.contains("kind") || !j.at("kind").is_string()) {
            fail(path, "expected a vertex object with string fields 'id' and 'kind'");
            return std::nullopt;
        }
        JsjVertex result;
        result.id = j.at("id").get<std::string>();
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "hyperbolic") {
            const auto cusps = integer_field(j, "cusps", path);
            if (!cusps) return std::nullopt;
            result.kind = HyperbolicPiece{*cusps};
        } else if (kind == "k_piece") {
            result.kind = KPiece{};
        } else if (kind == "seifert") {
            SeifertPiece piece;
            if (!j.contains("base")) {
                fail(path + "/base", "missing field");
                return std::nullopt;
            }
            const auto parsed_base = base(j.at("base"), path + "/base");
            if (!parsed_base) return std::nullopt;
            piece.base = *parsed_base;
            if (!j.contains("fiber_slopes") || !j.at("fiber_slopes").is_array()) {
                fail(path + "/fiber_slopes", "expected an array of slopes");
                return std::nullopt;
            }
            bool ok = true;
            const json& slopes = j.at("fiber_slopes");
            for (std::size_t i = 0; i < slopes.size(); ++i) {
                const auto parsed =
                    slope(slopes[i], path + "/fiber_slopes/" + std::to_string(i));
                if (parsed)
                    piece.fiber_slopes.push_back(*parsed);
                else
                    ok = false;
            }
            if (!ok) return std::nullopt;
            result.kind = piece;
        } else {
            fail(path + "/kind",
                 "unknown vertex kind '" + kind + "' (seifert, hyperbolic, k_piece)");
            return std::nullopt;
        }
        return result;
    }

    std::optional<SocketRef> socket_ref(const json& j, const std::string& path) {
        if (!j.is_array() || j.size() != 2 || !j[0].is_string()) {
            fail(path, "expected [vertex_id, socket]");
            return std::nullopt;
        }
        const auto socket = integer(j[1], path);
        if (!socket) return std::nullopt;
        return SocketRef{j[0].get<std::string>(), *socket};
    }

    std::optional<JsjGraph> graph(const json& j, const std::string& path) {
        if (!j.is_object() || !j.contains("vertices") || !j.at("vertices").is_array() ||
            !j.contains("edges") || !j.at("edges").is_array()) {
            fail(path, "expected a graph object with 'vertices' and 'edges' arrays");
            return std::nullopt;
        }
        JsjGraph result;
        bool ok = true;
        const json& vertices = j.at("vertices");
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            const auto parsed = vertex(vertices[i], path + "/vertices/" + std::to_string(i));
            if (parsed)
                result.vertices.push_back(*parsed);
            else
                ok = false;
        }
        const json& edges = j.at("edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const std::string edge_path = path + "/edges/" + std::to_string(i);
            const json& candidate = edges[i];
            if (!candidate.is_object() || !candidate.contains("from") ||
                !candidate.contains("to") || !candidate.contains("gluing")) {
                fail(edge_path, "expected an edge object with 'from', 'to', 'gluing'");
                ok = false;
                continue;
            }
            const auto from = socket_ref(candidate.at("from"), edge_path + "/from");
            const auto to = socket_ref(candidate.at("to"), edge_path + "/to");
            const auto gluing = matrix(candidate.at("gluing"), edge_path + "/gluing");
            if (!from || !to || !gluing) {
                ok = false;
                continue;
            }
            result.edges.push_back({*from, *to, *gluing});
        }
        return ok ? std::optional(result) : std::nullopt;
    }

    std::optional<PrimeSummand> summand(const json& j, const std::string& path) {
        if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
            fail(path, "expected a summand object with a string 'type'");
            return std::nullopt;
        }
        const std::string type = j.at("type").get<std::string>();
        if (type == "seifert_closed") {
            if (!j.contains("base")) {
                fail(path + "/base", "missing field");
                return std::nullopt;
            }
            const auto parsed_base = base(j.at("base"), path + "/base");
            if (!parsed_base) return std::nullopt;
            SeifertInvariants invariants;
            invariants.base = *parsed_base;
            if (j.contains("b")) {
                const auto obstruction = integer(j.at("b"), path + "/b");
                if (!obstruction) return std::nullopt;
                invariants.section_obstruction = *obstruction;
            }
            return PrimeSummand{SeifertClosed{invariants}};
        }
        if (type == "hyperbolic_closed") return PrimeSummand{HyperbolicClosed{}};
        if (type == "torus_bundle") {
            if (!j.contains("monodromy")) {
                fail(path + "/monodromy", "missing field");
                return std::nullopt;
            }
            const auto parsed = matrix(j.at("monodromy"), path + "/monodromy");
            if (!parsed) return std::nullopt;
            return PrimeSummand{TorusBundle{*parsed}};
        }
        if (type == "double_of_k") {
            if (!j.contains("gluing")) {
                fail(path + "/gluing", "missing field");
                return std::nullopt;
            }
            const auto parsed = matrix(j.at("gluing"), path + "/gluing");
            if (!parsed) return std::nullopt;
            return PrimeSummand{DoubleOfK{*parsed}};
        }
        if (type == "jsj") {
            if (!j.contains("graph")) {
                fail(path + "/graph", "missing field");
                return std::nullopt;
            }
            const auto parsed = graph(j.at("graph"), path + "/graph");
            if (!parsed) return std::nullopt;
            return PrimeSummand{JsjSummand{*parsed}};
        }
        if (type == "declared_geometric") {
            if (!j.contains("geometry") || !j.at("geometry").is_string()) {
                fail(path + "/geometry", "expected a geometry tag string");
                return std::nullopt;
            }
            const auto geometry = parse_geometry(j.at("geometry").get<std::string>());
            if (!geometry) {
                fail(path + "/geometry",
                     "unknown geometry '" + j.at("geometry").get<std::string>() +
                         "' (S3, E3, H3, S2xE, H2xE, PSLtilde, Nil, Sol)");
                return std::nullopt;
            }
            DeclaredGeometric declared{*geometry, std::nullopt};
            if (j.contains("pi1_order")) {
                const json& order = j.at("pi1_order");
                if (order.is_string() && order.get<std::string>() == "infinite") {
                    declared.pi1_order = Pi1Order::infinite();
                } else {
                    const auto value = integer(order, path + "/pi1_order");
                    if (!value) return std::nullopt;
                    if (*value < 1) {
                        fail(path + "/pi1_order", "order must be positive or \"infinite\"");
                        return std::nullopt;
                    }
                    declared.pi1_order = Pi1Order::finite(static_cast<std::uint64_t>(*value));
                }
            }
            return PrimeSummand{declared};
        }
        fail(path + "/type",
             "unknown summand type '" + type +
                 "' (seifert_closed, hyperbolic_closed, torus_bundle, double_of_k, "
                 "jsj, declared_geometric)");
        return std::nullopt;
    }
};

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

json matrix_to_json(const Mat2& m) {
    return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})});
}

json slope_to_json(const Slope& s) { return json::array({s.p, s.q}); }

json base_to_json(const OrbifoldBase& base) {
    json cones = json::array();
    for (const ConePoint& cone : base.cone_points)
        cones.push_back(json::array({cone.order, cone.rotation}));
    return {{"genus", base.genus},
            {"orientable", base.orientable},
            {"cone_points", cones},
            {"boundary_count", base.boundary_count}};
}

struct SummandSerializer {
    json operator()(const SeifertClosed& summand) const {
        json out{{"type", "seifert_closed"},
                 {"base", base_to_json(summand.invariants.base)}};
        if (summand.invariants.section_obstruction)
            out["b"] = *summand.invariants.section_obstruction;
        return out;
    }
    json operator()(const HyperbolicClosed&) const {
        return {{"type", "hyperbolic_closed"}};
    }
    json operator()(const TorusBundle& summand) const {
        return {{"type", "torus_bundle"}, {"monodromy", matrix_to_json(summand.monodromy)}};
    }
    json operator()(const DoubleOfK& summand) const {
        return {{"type", "double_of_k"}, {"gluing", matrix_to_json(summand.gluing)}};
    }
    json operator()(const JsjSummand& summand) const {
        json vertices = json::array();
        for (const JsjVertex& vertex : summand.graph.vertices) {
            json entry{{"id", vertex.id}};
            if (const auto* seifert = std::get_if<SeifertPiece>(&vertex.kind)) {
                entry["kind"] = "seifert";
                entry["base"] = base_to_json(seifert->base);
                json slopes = json::array();
                for (const Slope& s : seifert->fiber_slopes)
                    slopes.push_back(slope_to_json(s));
                entry["fiber_slopes"] = slopes;
            } else if (const auto* hyperbolic =
                           std::get_if<HyperbolicPiece>(&vertex.kind)) {
                entry["kind"] = "hyperbolic";
                entry["cusps"] = hyperbolic->cusp_count;
            } else {
                entry["kind"] = "k_piece";
            }
            vertices.push_back(entry);
        }
        json edges = json::array();
        for (const JsjEdge& edge : summand.graph.edges)
            edges.push_back({{"from", json::array({edge.end_a.vertex, edge.end_a.socket})},
                             {"to", json::array({edge.end_b.vertex, edge.end_b.socket})},
                             {"gluing", matrix_to_json(edge.gluing)}});
        return {{"type", "jsj"}, {"graph", {{"vertices", vertices}, {"edges", edges}}}};
    }
    json operator()(const DeclaredGeometric& summand) const {
        json out{{"type", "declared_geometric"},
                 {"geometry", geometry_name(summand.geometry)}};
        if (summand.pi1_order) {
            if (summand.pi1_order->is_infinite())
                out["pi1_order"] = "infinite";
            else
                out["pi1_order"] = summand.pi1_order->order();
        }
        return out;
    }
};

json diagnostics_to_json(const std::vector<Diagnostic>& diagnostics) {
    json out = json::array();
    for (const Diagnostic& diagnostic : diagnostics)
        out.push_back({{"path", diagnostic.path}, {"message", diagnostic.message}});
    return out;
}

const char* clause_text(const std::string& clause) {
    if (clause == "virtually-cyclic") return "the fundamental group is virtually cyclic";
    if (clause == "vc-free-product")
        return "non-elementary free product of virtually cyclic groups";
    if (clause == "flat-summand")
        return "a prime summand is flat; the group contains Z^3";
    if (clause == "generic")
        return "not virtually cyclic, not a free product of virtually cyclic groups, "
               "no Z^3 subgroup";
    return "";
}

} // namespace

ParseResult parse_description(const std::string& text) {
    ParseResult result;
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& error) {
        result.diagnostics.push_back({"/", error.what()});
        return result;
    }

    Parser parser;
    if (!root.is_object() || !root.contains("summands") ||
        !root.at("summands").is_array()) {
        parser.fail("/summands", "expected an object with a 'summands' array");
        result.diagnostics = std::move(parser.diagnostics);
        return result;
    }

    ManifoldDescription description;
    const json& summands = root.at("summands");
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const auto parsed =
            parser.summand(summands[i], "/summands/" + std::to_string(i));
        if (parsed) description.summands.push_back(*parsed);
    }

    result.diagnostics = std::move(parser.diagnostics);
    if (!result.diagnostics.empty()) return result;  // field mapping failed

    auto structural = validate_description(description);
    result.diagnostics.insert(result.diagnostics.end(), structural.begin(),
                              structural.end());
    result.description = std::move(description);
    return result;
}

json description_to_json(const ManifoldDescription& description) {
    json summands = json::array();
    for (const PrimeSummand& summand : description.summands)
        summands.push_back(std::visit(SummandSerializer{}, summand));
    return {{"summands", summands}};
}

std::string serialize_description(const ManifoldDescription& description) {
    return description_to_json(description).dump(2) + "\n";
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const char byte : bytes) {
        hash ^= static_cast<unsigned char>(byte);
        hash *= 0x100000001b3ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(hash));
    return std::string("fnv1a64:") + buffer;
}

std::string clause_of(const DimResult& result) {
    for (auto it = result.trace.rbegin(); it != result.trace.rend(); ++it) {
        if (it->rule == "virtually-cyclic" || it->rule == "vc-free-product" ||
            it->rule == "flat-summand" || it->rule == "generic")
            return it->rule;
    }
    return "generic";
}

std::string report_to_json(const Report& report, bool include_trace) {
    json out{{"version", report.version}, {"input_digest", report.input_digest}};
    if (report.result) {
        out["gdvc"] = report.result->value;
        if (report.clause) out["clause"] = *report.clause;
        if (include_trace) {
            json trace = json::array();
            for (const TraceEntry& entry : report.result->trace)
                trace.push_back({{"rule", entry.rule}, {"detail", entry.detail}});
            out["trace"] = trace;
        }
    }
    if (report.geometric_value) out["geometric_value"] = *report.geometric_value;
    if (report.cross_check) out["cross_check"] = *report.cross_check;
    if (!report.diagnostics.empty())
        out["diagnostics"] = diagnostics_to_json(report.diagnostics);
    if (!report.jsj_verdicts.empty()) {
        json verdicts = json::array();
        for (const JsjVerdict& verdict : report.jsj_verdicts) {
            json entry{{"valid", verdict.valid},
                       {"acylindricity_constant", verdict.acylindricity_constant}};
            if (!verdict.diagnostics.empty()) {
                json diagnostics = json::array();
                for (const JsjDiagnostic& diagnostic : verdict.diagnostics)
                    diagnostics.push_back({{"rule", diagnostic.rule},
                                           {"where", diagnostic.where},
                                           {"message", diagnostic.message}});
                entry["diagnostics"] = diagnostics;
            }
            if (verdict.redirect) entry["redirect"] = *verdict.redirect;
            verdicts.push_back(entry);
        }
        out["jsj"] = verdicts;
    }
    return out.dump(2) + "\n";
}

std::string report_to_text(const Report& report, bool include_trace) {
    std::string out;
    if (report.result) {
        out += "gdvc = " + std::to_string(report.result->value) + "\n";
        if (report.clause)
            out += "clause: " + *report.clause + " (" + clause_text(*report.clause) + ")\n";
        if (report.geometric_value)
            out += "geometric path: " + std::to_string(*report.geometric_value) +
                   (report.cross_check && *report.cross_check ? " (agrees)\n"
                                                              : " (MISMATCH)\n");
        for (const JsjVerdict& verdict : report.jsj_verdicts)
            if (verdict.valid)
                out += "jsj: acylindrical, k = " +
                       std::to_string(verdict.acylindricity_constant) + "\n";
        if (include_trace) {
            out += "trace:\n";
            for (const TraceEntry& entry : report.result->trace)
                out += "  [" + entry.rule + "] " + entry.detail + "\n";
        }
    }
    for (const Diagnostic& diagnostic : report.diagnostics)
        out += "error: " + diagnostic.path + ": " + diagnostic.message + "\n";
    for (const JsjVerdict& verdict : report.jsj_verdicts)
        if (verdict.redirect) out += "hint: " + *verdict.redirect + "\n";
    return out;
}

} // namespace gdvc
