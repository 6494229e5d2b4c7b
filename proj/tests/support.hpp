#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pedalgeom/core.hpp"
#include "pedalgeom/errors.hpp"

namespace pedalgeom::testing {

inline const Triangle kUnit{{0.0, 1.0}, {0.0, 0.0}, {1.0, 0.0}};

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close(Point p, Point q, double tol) { return distance(p, q) <= tol; }

inline double max_vertex_gap(const Triangle& s, const Triangle& t) {
    return std::max({distance(s.a, t.a), distance(s.b, t.b), distance(s.c, t.c)});
}

/// Runs `fn` and returns the GeometryError code it throws.
template <typename Fn>
ErrorCode error_code_of(Fn&& fn) {
    try {
        fn();
    } catch (const GeometryError& e) {
        return e.code();
    }
    FAIL("expected a GeometryError");
    return ErrorCode::NonFinite;
}

} // namespace pedalgeom::testing
