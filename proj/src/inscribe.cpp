#include "pedalgeom/inscribe.hpp"

#include <algorithm>
#include <string>

namespace pedalgeom {

namespace {

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

// Ratio from->x / x->to for x on the open segment [from, to].
double measured_ratio(Point from, Point to, Point x, double tol, const char* name) {
    const Point d = to - from;
    const double len = norm(d);
    const double off_line = std::abs(cross(d, x - from)) / len;
    const double s = dot(x - from, d) / (len * len);
    if (off_line > tol * len || !(s > tol && s < 1.0 - tol)) {
        throw GeometryError(ErrorCode::NotInscribed, std::string(name) + ": not strictly inside its side");
    }
    return distance(from, x) / distance(x, to);
}

} // namespace

void require_ratios(const RatioTriple& k) {
    if (!positive_finite(k.k1) || !positive_finite(k.k2) || !positive_finite(k.k3)) {
        throw GeometryError(ErrorCode::NonPositiveRatio, "ratios: every ratio must be positive and finite");
    }
}

Point divide_segment(Point m, Point p, double k, double tol) {
    if (!positive_finite(k)) {
        throw GeometryError(ErrorCode::NonPositiveRatio, "ratio: must be positive and finite");
    }
    require_finite(m, "segment start");
    require_finite(p, "segment end");
    if (distance(m, p) <= tol * std::max(norm(m), norm(p))) {
        throw GeometryError(ErrorCode::CoincidentPoints, "segment: endpoints coincide");
    }
    return {(m.x + k * p.x) / (1.0 + k), (m.y + k * p.y) / (1.0 + k)};
}

Triangle inscribe_b(const Triangle& t, const RatioTriple& k, double tol) {
    require_triangle(t, tol);
    require_ratios(k);
    const Point& a1 = t.a;
    const Point& a2 = t.b;
    const Point& a3 = t.c;
    return {divide_segment(a3, a2, k.k1, tol),
            divide_segment(a1, a3, k.k2, tol),
            divide_segment(a2, a1, k.k3, tol)};
}

InscribedChain inscribe_c(const Triangle& t, const RatioTriple& k, double tol) {
    const Triangle b = inscribe_b(t, k, tol);
    // Positive ratios put B strictly inside the sides, so this cannot trip.
    if (is_degenerate(b, tol)) {
        throw GeometryError(ErrorCode::DegenerateInner, "inscribed triangle: degenerate");
    }
    const Point& b1 = b.a;
    const Point& b2 = b.b;
    const Point& b3 = b.c;
    return {b, {divide_segment(b2, b3, k.k1, tol),
                divide_segment(b3, b1, k.k2, tol),
                divide_segment(b1, b2, k.k3, tol)}};
}

HomotopyResult homotopic_check(const Triangle& t1, const Triangle& t2, double tol) {
    require_triangle(t1, tol, "first triangle");
    require_triangle(t2, tol, "second triangle");
    const auto v1 = t1.vertices();
    const auto v2 = t2.vertices();
    for (int shift = 0; shift < 3; ++shift) {
        bool all_parallel = true;
        for (int i = 0; i < 3 && all_parallel; ++i) {
            const int j = (i + 1) % 3;
            const Point side1 = v1[j] - v1[i];
            const Point side2 = v2[(j + shift) % 3] - v2[(i + shift) % 3];
            all_parallel = sine_between(side1, side2) <= tol;
        }
        if (all_parallel) {
            return {true, shift};
        }
    }
    return {};
}

MeanIdentity geometric_mean_identity(const Triangle& t, const RatioTriple& k, double tol) {
    const InscribedChain chain = inscribe_c(t, k, tol);
    const double b = area(chain.b);
    return {b * b, area(t) * area(chain.c)};
}

RatioTriple recover_ratios(const Triangle& outer, const Triangle& inscribed, double tol) {
    require_triangle(outer, tol, "outer triangle");
    require_finite(inscribed.a, "inscribed triangle");
    require_finite(inscribed.b, "inscribed triangle");
    require_finite(inscribed.c, "inscribed triangle");
    const Point& a1 = outer.a;
    const Point& a2 = outer.b;
    const Point& a3 = outer.c;
    return {measured_ratio(a3, a2, inscribed.a, tol, "first inscribed vertex"),
            measured_ratio(a1, a3, inscribed.b, tol, "second inscribed vertex"),
            measured_ratio(a2, a1, inscribed.c, tol, "third inscribed vertex")};
}

} // namespace pedalgeom
