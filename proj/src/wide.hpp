#pragma once

#include "pedalgeom/core.hpp"

namespace pedalgeom::detail {

// Extended-precision scalar for the few quantities whose cancellation is
// unbounded in double: circumcenters of thin triangles and areas formed from
// points far from the triangle.
#if defined(__SIZEOF_FLOAT128__)
__extension__ typedef __float128 wide;
#else
typedef long double wide;
#endif

struct WidePoint {
    wide x = 0;
    wide y = 0;
};

inline WidePoint widen(Point p) { return {p.x, p.y}; }
inline Point narrow(WidePoint p) { return {static_cast<double>(p.x), static_cast<double>(p.y)}; }

inline WidePoint operator+(WidePoint p, WidePoint q) { return {p.x + q.x, p.y + q.y}; }
inline WidePoint operator-(WidePoint p, WidePoint q) { return {p.x - q.x, p.y - q.y}; }
inline WidePoint operator*(wide s, WidePoint p) { return {s * p.x, s * p.y}; }
inline wide dot(WidePoint p, WidePoint q) { return p.x * q.x + p.y * q.y; }
inline wide cross(WidePoint p, WidePoint q) { return p.x * q.y - p.y * q.x; }

inline wide abs(wide v) { return v < 0 ? -v : v; }

struct WideCircle {
    WidePoint center;
    wide radius2 = 0;
};

inline WideCircle circumcircle_wide(const Triangle& t) {
    const WidePoint a = widen(t.a);
    const WidePoint ab = widen(t.b) - a;
    const WidePoint ac = widen(t.c) - a;
    const wide d = 2 * cross(ab, ac);
    const wide ab2 = dot(ab, ab);
    const wide ac2 = dot(ac, ac);
    const WidePoint offset{(ac.y * ab2 - ab.y * ac2) / d, (ab.x * ac2 - ac.x * ab2) / d};
    return {a + offset, dot(offset, offset)};
}

/// Twice the signed area of (p, q, r).
inline wide twice_signed_area(WidePoint p, WidePoint q, WidePoint r) {
    return cross(q - p, r - p);
}

/// Foot of the perpendicular from p onto the line through u and v.
inline WidePoint foot(WidePoint p, WidePoint u, WidePoint v) {
    const WidePoint d = v - u;
    return u + (dot(p - u, d) / dot(d, d)) * d;
}

} // namespace pedalgeom::detail
