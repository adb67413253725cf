#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdvc/classify.hpp"
#include "gdvc/jsj.hpp"
#include "gdvc/types.hpp"
#include "gdvc/validation.hpp"

namespace gdvc {

inline constexpr const char* kArtifactVersion = "0.1.0";

/// Result of parsing a description document: either a structurally
/// validated description, or diagnostics. Parsing is total; malformed input
/// produces diagnostics, never a crash.
struct ParseResult {
    std::optional<ManifoldDescription> description;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return description.has_value() && diagnostics.empty(); }
};

/// Parses the JSON document format described in the README. All numbers
/// must be decimal integers; floats are rejected. Unknown top-level keys
/// (e.g. "name", "expected") are ignored.
ParseResult parse_description(const std::string& text);

/// Inverse of parse_description on valid descriptions:
/// parse(serialize(m)) == m.
std::string serialize_description(const ManifoldDescription& description);
nlohmann::json description_to_json(const ManifoldDescription& description);

/// 64-bit FNV-1a content hash, rendered as "fnv1a64:<16 hex digits>".
std::string content_digest(const std::string& bytes);

/// Everything one classification run produces. Exactly one of `result`
/// and `diagnostics` is populated.
struct Report {
    std::string version{kArtifactVersion};
    std::string input_digest;
    std::optional<DimResult> result;
    std::optional<std::string> clause;     // stable clause id, with result
    std::optional<int> geometric_value;    // independent geometric path
    std::optional<bool> cross_check;
    std::vector<Diagnostic> diagnostics;
    std::vector<JsjVerdict> jsj_verdicts;  // per JSJ summand, in order
};

/// Byte-stable machine-readable form (keys sorted, fixed layout).
std::string report_to_json(const Report& report, bool include_trace);

/// Human-readable form.
std::string report_to_text(const Report& report, bool include_trace);

/// Stable identifier of the clause a DimResult fired
/// ("virtually-cyclic", "vc-free-product", "flat-summand", "generic").
std::string clause_of(const DimResult& result);

} // namespace gdvc
