#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>

#include "gdvc/errors.hpp"
#include "gdvc/matrix2.hpp"

namespace gdvc {

/// A primitive class in the torus lattice, identified with its negation:
/// (p, q) ~ (-p, -q). Canonical form has p > 0, or p = 0 and q = 1, so
/// equality of slopes is plain field comparison. Fiber classes of Seifert
/// fibrations restricted to boundary tori, and the eigen-slopes of the
/// K-piece holonomy, live here.
struct Slope {
    std::int64_t p{1};
    std::int64_t q{0};

    friend bool operator==(const Slope&, const Slope&) = default;

    std::string str() const {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
};

/// Canonical primitive representative of the line through (p, q).
inline Slope canonicalize_slope(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0)
        throw Error(Errc::ZeroSlope, "slope (0,0) does not determine a line");
    const std::int64_t g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    return Slope{p, q};
}

inline Slope canonicalize_slope(std::pair<std::int64_t, std::int64_t> raw) {
    return canonicalize_slope(raw.first, raw.second);
}

/// Image of a slope under a basis map, recanonicalized. Unimodular maps
/// preserve primitivity, so the image is again a slope.
inline Slope apply(const Mat2& m, const Slope& s) {
    return canonicalize_slope(m.a * s.p + m.b * s.q, m.c * s.p + m.d * s.q);
}

} // namespace gdvc
