#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pedalgeom {

enum class ErrorCode {
    NonFinite,
    DegenerateTriangle,
    CoincidentPoints,
    PointOnLine,
    NotRightTriangle,
    NegativeRatio,
    VertexInput,
    OnCircumcircle,
    Unbounded,
    NearSingular,
    NonConcurrent,
    NonPositiveRatio,
    DegenerateInner,
    NotInscribed,
};

std::string_view to_string(ErrorCode code);

/// Raised when a construction's geometric precondition does not hold.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace pedalgeom
