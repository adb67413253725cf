#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdvc/types.hpp"

namespace gdvc {

/// One violated minimality/shape rule. `rule` is a stable identifier (see
/// README for the vocabulary); `where` names the offending vertex or edge.
struct JsjDiagnostic {
    std::string rule;
    std::string where;
    std::string message;

    friend bool operator==(const JsjDiagnostic&, const JsjDiagnostic&) = default;
};

/// Outcome of semantic JSJ validation. A valid graph is certified
/// acylindrical with constant k = 5; an invalid one carries diagnostics and
/// possibly a redirect to the summand constructor that does describe the
/// manifold (torus bundles and doubles of K are geometric, not JSJ-split).
struct JsjVerdict {
    bool valid{false};
    int acylindricity_constant{0};  // 5 when valid
    std::vector<JsjDiagnostic> diagnostics;
    std::optional<std::string> redirect;
};

/// Checks that a structurally valid graph is a genuine minimal JSJ
/// decomposition of a closed oriented non-geometric prime manifold:
/// every bounded Seifert base Euclidean or hyperbolic, no trivial
/// (annulus-base) piece, Euclidean-base pieces only as K in the fixed
/// eigen-basis, no K-K double, no fibration matching across a torus, no
/// K eigen-slope hit by a neighboring fibration, and at least one
/// hyperbolic or hyperbolic-base piece.
JsjVerdict validate_jsj(const JsjGraph& graph);

/// Dimension of a validated JSJ graph: always 3, with the per-piece table,
/// the edge-group dimension, the acylindrical window and the non-geometric
/// sharpening recorded in the trace. Throws InvalidJsj if validation fails.
DimResult jsj_gdvc(const JsjGraph& graph);

} // namespace gdvc
