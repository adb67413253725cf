#pragma once

#include <vector>

#include "gdvc/matrix2.hpp"
#include "gdvc/slope.hpp"

namespace gdvc {

/// Dimension labels of a graph of groups: the virtually cyclic geometric
/// dimensions of the vertex groups and of the edge groups. The groups
/// themselves are never represented; only their dimensions enter the
/// bounds.
struct GraphOfDims {
    std::vector<int> vertex_dims;  // non-empty
    std::vector<int> edge_dims;
};

/// Upper bound for the dimension of the fundamental group of a graph of
/// groups whose splitting is acylindrical:
///   max(2, max edge_dim + 1, max vertex_dim).
/// Acylindricity is the caller's assertion; this function does not check it.
int acylindrical_bound(const GraphOfDims& dims);

/// Two-sided bound for a free product (trivial edge groups) of groups with
/// the given dimensions: lower = max(dims), upper = max(2, max(dims)).
/// The bounds coincide whenever the max is at least 2.
std::pair<int, int> prime_sum_bounds(const std::vector<int>& dims);

/// Whether two fiber classes agree across a torus gluing: true iff
/// gluing * s_a = +-s_b. Throws BadDeterminant unless the gluing is
/// unimodular.
bool slopes_match(const Slope& s_a, const Mat2& gluing, const Slope& s_b);

} // namespace gdvc
