#include "gdvc/graph_bounds.hpp"

#include <algorithm>

#include "gdvc/errors.hpp"

namespace gdvc {

int acylindrical_bound(const GraphOfDims& dims) {
    if (dims.vertex_dims.empty())
        throw Error(Errc::InvalidDescription, "graph of dimensions needs at least one vertex");
    int bound = 2;
    for (int vertex_dim : dims.vertex_dims) bound = std::max(bound, vertex_dim);
    for (int edge_dim : dims.edge_dims) bound = std::max(bound, edge_dim + 1);
    return bound;
}

std::pair<int, int> prime_sum_bounds(const std::vector<int>& dims) {
    if (dims.empty())
        throw Error(Errc::InvalidDescription, "prime-sum bounds need at least one summand");
    const int lower = *std::max_element(dims.begin(), dims.end());
    return {lower, std::max(2, lower)};
}

bool slopes_match(const Slope& s_a, const Mat2& gluing, const Slope& s_b) {
    if (!gluing.is_unimodular())
        throw Error(Errc::BadDeterminant,
                    "torus gluing must have determinant +1 or -1, got " +
                        std::to_string(gluing.det()));
    const std::int64_t image_p = gluing.a * s_a.p + gluing.b * s_a.q;
    const std::int64_t image_q = gluing.c * s_a.p + gluing.d * s_a.q;
    return (image_p == s_b.p && image_q == s_b.q) ||
           (image_p == -s_b.p && image_q == -s_b.q);
}

} // namespace gdvc
