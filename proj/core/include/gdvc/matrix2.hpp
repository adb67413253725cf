#pragma once

#include <cstdint>
#include <string>

#include "gdvc/errors.hpp"

namespace gdvc {

/// 2x2 integer matrix, row-major. Used for torus-bundle monodromies,
/// K-double gluings, torus gluing maps and basis changes; all of those are
/// unimodular (determinant +1 or -1).
struct Mat2 {
    std::int64_t a{1}, b{0}, c{0}, d{1};

    static constexpr Mat2 identity() { return {1, 0, 0, 1}; }

    std::int64_t det() const { return a * d - b * c; }
    std::int64_t trace() const { return a + d; }

    bool is_unimodular() const {
        const std::int64_t det_value = det();
        return det_value == 1 || det_value == -1;
    }

    Mat2 operator-() const { return {-a, -b, -c, -d}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }

    /// Exact integer inverse; defined only for unimodular matrices.
    Mat2 inverse() const {
        const std::int64_t det_value = det();
        if (det_value != 1 && det_value != -1)
            throw Error(Errc::BadDeterminant,
                        "matrix inverse requires determinant +1 or -1, got " +
                            std::to_string(det_value));
        return {d / det_value, -b / det_value, -c / det_value, a / det_value};
    }

    friend bool operator==(const Mat2&, const Mat2&) = default;

    std::string str() const {
        return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" +
               std::to_string(c) + "," + std::to_string(d) + "]]";
    }
};

} // namespace gdvc
