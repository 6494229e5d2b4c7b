#include "pedalgeom/core.hpp"

#include <algorithm>
#include <string>

#include "wide.hpp"

namespace pedalgeom {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
        case ErrorCode::CoincidentPoints: return "CoincidentPoints";
        case ErrorCode::PointOnLine: return "PointOnLine";
        case ErrorCode::NotRightTriangle: return "NotRightTriangle";
        case ErrorCode::NegativeRatio: return "NegativeRatio";
        case ErrorCode::VertexInput: return "VertexInput";
        case ErrorCode::OnCircumcircle: return "OnCircumcircle";
        case ErrorCode::Unbounded: return "Unbounded";
        case ErrorCode::NearSingular: return "NearSingular";
        case ErrorCode::NonConcurrent: return "NonConcurrent";
        case ErrorCode::NonPositiveRatio: return "NonPositiveRatio";
        case ErrorCode::DegenerateInner: return "DegenerateInner";
        case ErrorCode::NotInscribed: return "NotInscribed";
    }
    return "Unknown";
}

void require_finite(Point p, const char* what) {
    if (!is_finite(p)) {
        throw GeometryError(ErrorCode::NonFinite, std::string(what) + ": non-finite coordinate");
    }
}

double Triangle::scale() const {
    return std::max({distance(a, b), distance(b, c), distance(c, a)});
}

AffineMap AffineMap::inverse() const {
    const double det = determinant();
    if (det == 0.0 || !std::isfinite(det)) {
        throw GeometryError(ErrorCode::NearSingular, "affine map: singular linear part");
    }
    AffineMap inv;
    inv.m11 = m22 / det;
    inv.m12 = -m12 / det;
    inv.m21 = -m21 / det;
    inv.m22 = m11 / det;
    inv.t1 = -(inv.m11 * t1 + inv.m12 * t2);
    inv.t2 = -(inv.m21 * t1 + inv.m22 * t2);
    return inv;
}

double signed_area(const Triangle& t) {
    // Coordinate differences and their products are exact in the wide type,
    // so the result is the correctly rounded area up to one wide rounding and
    // relabeling the vertices cannot change its magnitude.
    const detail::wide twice = detail::twice_signed_area(detail::widen(t.a), detail::widen(t.b), detail::widen(t.c));
    return static_cast<double>(twice / 2);
}

bool is_degenerate(const Triangle& t, double tol) {
    const double s = t.scale();
    return std::abs(signed_area(t)) <= tol * s * s;
}

void require_triangle(const Triangle& t, double tol, const char* what) {
    require_finite(t.a, what);
    require_finite(t.b, what);
    require_finite(t.c, what);
    if (is_degenerate(t, tol)) {
        throw GeometryError(ErrorCode::DegenerateTriangle, std::string(what) + ": degenerate (collinear or coincident vertices)");
    }
}

Circle circumcircle(const Triangle& t, double tol) {
    require_triangle(t, tol);
    // Thin triangles put the center far away; the cancellation in the
    // determinant is absorbed by the wider type.
    const detail::WideCircle c = detail::circumcircle_wide(t);
    return {detail::narrow(c.center), std::sqrt(static_cast<double>(c.radius2))};
}

Line line_with_normal(Point through, Point normal) {
    const double n = norm(normal);
    const double alpha = normal.x / n;
    const double beta = normal.y / n;
    return {alpha, beta, -(alpha * through.x + beta * through.y)};
}

Line line_through(Point p, Point q, double tol) {
    require_finite(p, "line point");
    require_finite(q, "line point");
    const Point d = q - p;
    const double len = norm(d);
    const double s = std::max(norm(p), norm(q));
    if (len == 0.0 || len <= tol * s) {
        throw GeometryError(ErrorCode::CoincidentPoints, "line_through: points coincide");
    }
    const Line l = line_with_normal(p, {-d.y, d.x});
    // Anchor gamma on the midpoint so both points evaluate symmetrically.
    const Point m = midpoint(p, q);
    return {l.alpha, l.beta, -(l.alpha * m.x + l.beta * m.y)};
}

Line calibrate_interior(const Line& l, Point interior, double min_distance) {
    const double v = l.eval(interior);
    if (std::abs(v) <= min_distance) {
        throw GeometryError(ErrorCode::PointOnLine, "calibrate_interior: calibration point lies on the line");
    }
    return v > 0.0 ? l : l.negated();
}

Point project_onto(Point p, const Line& l) {
    return p - l.eval(p) * l.normal();
}

Point reflect_across(Point p, const Line& l) {
    return p - 2.0 * l.eval(p) * l.normal();
}

std::optional<Point> intersect(const Line& l1, const Line& l2, double min_sine) {
    const double det = l1.alpha * l2.beta - l2.alpha * l1.beta;
    if (std::abs(det) <= min_sine || det == 0.0) {
        return std::nullopt;
    }
    return Point{(l1.beta * l2.gamma - l2.beta * l1.gamma) / det,
                 (l1.gamma * l2.alpha - l2.gamma * l1.alpha) / det};
}

AffineMap affine_to_unit(const Triangle& t, double tol) {
    require_triangle(t, tol);
    // Columns (c - b) and (a - b) must map to e1 and e2: M = [c-b | a-b]^-1.
    const AffineMap to_triangle{t.c.x - t.b.x, t.a.x - t.b.x,
                                t.c.y - t.b.y, t.a.y - t.b.y,
                                t.b.x, t.b.y};
    return to_triangle.inverse();
}

Point apply_affine(const AffineMap& m, Point p) {
    return {m.m11 * p.x + m.m12 * p.y + m.t1, m.m21 * p.x + m.m22 * p.y + m.t2};
}

Triangle apply_affine(const AffineMap& m, const Triangle& t) {
    return {apply_affine(m, t.a), apply_affine(m, t.b), apply_affine(m, t.c)};
}

AffineMap compose(const AffineMap& second, const AffineMap& first) {
    AffineMap r;
    r.m11 = second.m11 * first.m11 + second.m12 * first.m21;
    r.m12 = second.m11 * first.m12 + second.m12 * first.m22;
    r.m21 = second.m21 * first.m11 + second.m22 * first.m21;
    r.m22 = second.m21 * first.m12 + second.m22 * first.m22;
    r.t1 = second.m11 * first.t1 + second.m12 * first.t2 + second.t1;
    r.t2 = second.m21 * first.t1 + second.m22 * first.t2 + second.t2;
    return r;
}

Point incenter(const Triangle& t) {
    const double la = distance(t.b, t.c);
    const double lb = distance(t.a, t.c);
    const double lc = distance(t.a, t.b);
    return (la * t.a + lb * t.b + lc * t.c) / (la + lb + lc);
}

double sine_between(Point u, Point v) {
    const double nu = norm(u);
    const double nv = norm(v);
    if (nu == 0.0 || nv == 0.0) {
        return 0.0;
    }
    return std::min(1.0, std::abs(cross(u, v)) / (nu * nv));
}

} // namespace pedalgeom
