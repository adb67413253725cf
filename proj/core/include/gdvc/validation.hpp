#pragma once

#include <string>
#include <vector>

#include "gdvc/types.hpp"

namespace gdvc {

/// A structural problem with an input description. `path` locates the
/// offending element ("/summands/2/monodromy" style).
struct Diagnostic {
    std::string path;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

/// Structural (non-mathematical) validation of a description against the
/// type invariants: cone-point ranges, determinant constraints, socket
/// matching and connectivity of JSJ graphs, declared-order consistency,
/// and the rule that the 3-sphere may only appear as the sole summand.
/// Returns an empty list iff everything holds.
std::vector<Diagnostic> validate_description(const ManifoldDescription& description);

/// Structural validation of a single JSJ graph (the graph-shaped subset of
/// validate_description). Semantic minimality rules live in validate_jsj.
std::vector<Diagnostic> validate_jsj_structure(const JsjGraph& graph, const std::string& path_prefix);

} // namespace gdvc
