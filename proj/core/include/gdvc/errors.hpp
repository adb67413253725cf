#pragma once

#include <stdexcept>
#include <string>

namespace gdvc {

enum class Errc {
    ZeroSlope,           // slope canonicalization of (0, 0)
    NotClosed,           // closed-orbifold operation on a bounded base
    BadDeterminant,      // matrix determinant outside the allowed set
    InvalidJsj,          // dimension requested for a graph that fails JSJ validation
    MissingOrder,        // classification needs an undeclared fundamental-group order
    InvalidDescription,  // operation called on structurally invalid input
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace gdvc
