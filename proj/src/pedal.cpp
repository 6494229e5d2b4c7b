#include "pedalgeom/pedal.hpp"

#include <numbers>

#include "power.hpp"

namespace pedalgeom {

namespace {

int sign_with_band(double v, double band) {
    if (std::abs(v) <= band) {
        return 0;
    }
    return v > 0.0 ? 1 : -1;
}

} // namespace

std::string_view to_string(CircleRegion region) {
    switch (region) {
        case CircleRegion::Inside: return "inside";
        case CircleRegion::On: return "on";
        case CircleRegion::Outside: return "outside";
    }
    return "unknown";
}

Triangle pedal_triangle(Point p, const Triangle& t, double tol) {
    require_finite(p, "pedal point");
    require_triangle(t, tol);
    return {project_onto(p, line_through(t.b, t.c, tol)),
            project_onto(p, line_through(t.a, t.c, tol)),
            project_onto(p, line_through(t.a, t.b, tol))};
}

std::array<Line, 3> oriented_side_lines(const Triangle& t, double tol) {
    require_triangle(t, tol);
    const Point g = t.centroid();
    const double band = tol * t.scale();
    return {calibrate_interior(line_through(t.b, t.c, tol), g, band),
            calibrate_interior(line_through(t.a, t.c, tol), g, band),
            calibrate_interior(line_through(t.a, t.b, tol), g, band)};
}

DirectedDistances directed_distances(Point p, const Triangle& t, double tol) {
    require_finite(p, "point");
    const auto lines = oriented_side_lines(t, tol);
    return {lines[0].eval(p), lines[1].eval(p), lines[2].eval(p)};
}

double signed_decomposition(Point p, const Triangle& t, double tol) {
    const DirectedDistances d = directed_distances(p, t, tol);
    // Angles of a triangle lie in (0, pi); their sines come from the
    // unsigned area and the adjacent sides.
    const double twice_area = 2.0 * area(t);
    const double side_a = distance(t.b, t.c);
    const double side_b = distance(t.a, t.c);
    const double side_c = distance(t.a, t.b);
    const double sin_a = twice_area / (side_b * side_c);
    const double sin_b = twice_area / (side_a * side_c);
    const double sin_c = twice_area / (side_a * side_b);
    return 0.5 * (d.d_b * d.d_c * sin_a + d.d_a * d.d_b * sin_c + d.d_a * d.d_c * sin_b);
}

double pedal_area_ratio(Point p, const Triangle& t, double tol) {
    require_finite(p, "pedal point");
    require_triangle(t, tol);
    const detail::CirclePower cp = detail::circle_power(p, t);
    return std::abs(cp.power) / (4.0 * cp.radius2);
}

namespace {

// Feet of far-away points are spread over distances of order OP, so the
// feet and the shoelace sum are formed in extended precision.
double wide_pedal_ratio(Point p, const Triangle& t) {
    using namespace detail;
    const WidePoint a = widen(t.a);
    const WidePoint b = widen(t.b);
    const WidePoint c = widen(t.c);
    const WidePoint q = widen(p);
    const wide pedal = twice_signed_area(foot(q, b, c), foot(q, a, c), foot(q, a, b));
    return static_cast<double>(abs(pedal) / abs(twice_signed_area(a, b, c)));
}

} // namespace

double constructed_pedal_ratio(Point p, const Triangle& t, double tol) {
    require_finite(p, "pedal point");
    require_triangle(t, tol);
    return wide_pedal_ratio(p, t);
}

RightTrianglePoint right_triangle_d_point(const Triangle& t, double tol) {
    require_triangle(t, tol);
    const Point ca = t.a - t.c;
    const Point cb = t.b - t.c;
    const double angle = std::atan2(std::abs(cross(ca, cb)), dot(ca, cb));
    if (std::abs(angle - std::numbers::pi / 2.0) > tol) {
        throw GeometryError(ErrorCode::NotRightTriangle, "triangle: angle at the third vertex is not a right angle");
    }
    const double a2 = norm2(cb);
    // The hypotenuse AB is a diameter of the circumcircle.
    const double radius2 = 0.25 * norm2(t.a - t.b);
    return {2.0 * t.c - t.b, a2 / (2.0 * radius2)};
}

SimsonResult simson_check(Point p, const Triangle& t, double tol) {
    const double residual = constructed_pedal_ratio(p, t, tol);
    // |OP - R| = tol * R maps to a pedal ratio of tol * (2 + tol) / 4.
    return {residual <= tol * (2.0 + tol) / 4.0, residual};
}

std::vector<Circle> iso_area_locus(const Triangle& t, double ratio, double tol) {
    if (!(ratio >= 0.0)) {
        throw GeometryError(ErrorCode::NegativeRatio, "ratio: must be non-negative");
    }
    if (!std::isfinite(ratio)) {
        throw GeometryError(ErrorCode::NonFinite, "ratio: non-finite");
    }
    const Circle cc = circumcircle(t, tol);
    if (ratio == 0.0) {
        return {cc};
    }
    std::vector<Circle> out;
    const double four_ratio = 4.0 * ratio;
    if (four_ratio <= 1.0) {
        out.push_back({cc.center, cc.radius * std::sqrt(1.0 - four_ratio)});
    }
    out.push_back({cc.center, cc.radius * std::sqrt(1.0 + four_ratio)});
    return out;
}

CircleRegion classify_against(const Circle& c, Point p, double tol) {
    const double gap = distance(p, c.center) - c.radius;
    if (std::abs(gap) <= tol * c.radius) {
        return CircleRegion::On;
    }
    return gap < 0.0 ? CircleRegion::Inside : CircleRegion::Outside;
}

SignProfile sign_profile(Point p, const Triangle& t, double tol) {
    const DirectedDistances d = directed_distances(p, t, tol);
    const double band = tol * t.scale();
    const int sa = sign_with_band(d.d_a, band);
    const int sb = sign_with_band(d.d_b, band);
    const int sc = sign_with_band(d.d_c, band);

    SignProfile out;
    out.distance_product_signs = {sb * sc, sa * sc, sa * sb};
    const detail::CirclePower cp = detail::circle_power(p, t);
    out.circumcircle = detail::classify_power(cp, tol);
    return out;
}

} // namespace pedalgeom
