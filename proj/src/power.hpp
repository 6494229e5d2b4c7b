#pragma once

#include <algorithm>
#include <cmath>

#include "pedalgeom/core.hpp"
#include "pedalgeom/pedal.hpp"
#include "wide.hpp"

namespace pedalgeom::detail {

struct CirclePower {
    /// R^2 - OP^2, positive inside the circumcircle.
    double power = 0.0;
    double radius2 = 0.0;
};

// R^2 - OP^2 = (A - P) . ((A - O) + (P - O)), evaluated in extended precision
// so that neither thin triangles nor far-away points lose the leading digits.
inline CirclePower circle_power(Point p, const Triangle& t) {
    const WideCircle c = circumcircle_wide(t);
    const WidePoint a = widen(t.a);
    const WidePoint q = widen(p);
    const wide power = dot(a - q, (a - c.center) + (q - c.center));
    return {static_cast<double>(power), static_cast<double>(c.radius2)};
}

inline CircleRegion classify_power(const CirclePower& cp, double tol) {
    const double radius = std::sqrt(cp.radius2);
    const double op = std::sqrt(std::max(0.0, cp.radius2 - cp.power));
    const double gap = -cp.power / (radius + op);
    if (std::abs(gap) <= tol * radius) {
        return CircleRegion::On;
    }
    return gap < 0.0 ? CircleRegion::Inside : CircleRegion::Outside;
}

} // namespace pedalgeom::detail
