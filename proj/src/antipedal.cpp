#include "pedalgeom/antipedal.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "power.hpp"
#include "wide.hpp"

namespace pedalgeom {

namespace {

void require_not_vertex(Point k, const Triangle& t, double tol) {
    const double band = tol * t.scale();
    for (const Point v : t.vertices()) {
        if (distance(k, v) <= band) {
            throw GeometryError(ErrorCode::VertexInput, "point: coincides with a vertex of the triangle");
        }
    }
}

// Reflection of the cevian from `vertex` towards k in the internal bisector
// at `vertex`. With u, v along the sides and w towards k, the reflected
// direction is parallel to u * v * conj(w) read as complex numbers; no
// normalization is needed, so the line stays exact up to rounding.
struct WideRay {
    detail::WidePoint origin;
    detail::WidePoint direction;
};

WideRay reflected_cevian(Point vertex, Point left, Point right, Point k) {
    using namespace detail;
    const WidePoint o = widen(vertex);
    const WidePoint u = widen(left) - o;
    const WidePoint v = widen(right) - o;
    const WidePoint w = widen(k) - o;
    const WidePoint uv{u.x * v.x - u.y * v.y, u.x * v.y + u.y * v.x};
    return {o, {uv.x * w.x + uv.y * w.y, uv.y * w.x - uv.x * w.y}};
}

// Squared sine of the angle between two rays.
detail::wide sine2(const WideRay& r1, const WideRay& r2) {
    const detail::wide c = detail::cross(r1.direction, r2.direction);
    return c * c / (detail::dot(r1.direction, r1.direction) * detail::dot(r2.direction, r2.direction));
}

std::optional<detail::WidePoint> meet(const WideRay& r1, const WideRay& r2) {
    const detail::wide den = detail::cross(r1.direction, r2.direction);
    if (den == 0) {
        return std::nullopt;
    }
    return r1.origin + (detail::cross(r2.origin - r1.origin, r2.direction) / den) * r1.direction;
}

double sine_of(const Line& l1, const Line& l2) {
    return std::abs(l1.alpha * l2.beta - l2.alpha * l1.beta);
}

struct Perpendiculars {
    Line at_a, at_b, at_c;
};

Perpendiculars checked_perpendiculars(Point k, const Triangle& t, double tol) {
    require_finite(k, "point");
    require_triangle(t, tol);
    require_not_vertex(k, t, tol);
    if (detail::classify_power(detail::circle_power(k, t), tol) == CircleRegion::On) {
        throw GeometryError(ErrorCode::OnCircumcircle, "point: lies on the circumcircle; the perpendiculars are concurrent");
    }
    Perpendiculars p{line_with_normal(t.a, t.a - k), line_with_normal(t.b, t.b - k), line_with_normal(t.c, t.c - k)};
    const double min_sine = std::min({sine_of(p.at_a, p.at_b), sine_of(p.at_b, p.at_c), sine_of(p.at_a, p.at_c)});
    if (min_sine <= tol) {
        throw GeometryError(ErrorCode::Unbounded, "point: lies on a side line; two perpendiculars are parallel");
    }
    return p;
}

} // namespace

IsogonalResult isogonal_conjugate(Point k, const Triangle& t, double tol) {
    require_finite(k, "point");
    require_triangle(t, tol);
    require_not_vertex(k, t, tol);

    IsogonalResult out;
    if (detail::classify_power(detail::circle_power(k, t), tol) == CircleRegion::On) {
        return out;
    }

    const WideRay ra = reflected_cevian(t.a, t.b, t.c, k);
    const WideRay rb = reflected_cevian(t.b, t.a, t.c, k);
    const WideRay rc = reflected_cevian(t.c, t.a, t.b, k);
    const auto pab = meet(ra, rb);
    const auto pbc = meet(rb, rc);
    const auto pca = meet(rc, ra);
    if (!pab || !pbc || !pca) {
        return out;
    }

    // Each intersection's error grows like 1/sin(angle between the lines), so
    // the average is weighted by sin^2 to favour the well-conditioned pairs.
    const detail::wide wab = sine2(ra, rb);
    const detail::wide wbc = sine2(rb, rc);
    const detail::wide wca = sine2(rc, ra);
    out.point = detail::narrow((1 / (wab + wbc + wca)) * (wab * *pab + wbc * *pbc + wca * *pca));
    const Point qab = detail::narrow(*pab);
    const Point qbc = detail::narrow(*pbc);
    const Point qca = detail::narrow(*pca);
    out.spread = std::max({distance(qab, qbc), distance(qbc, qca), distance(qca, qab)});
    if (!is_finite(out.point)) {
        return {};
    }
    out.defined = true;

    // The spread allowed grows with 1/sin of the worst pair and with the
    // distance of the conjugate from the triangle.
    const double min_sine = std::sqrt(static_cast<double>(std::min({wab, wbc, wca})));
    const double reach = std::max(t.scale(), distance(out.point, t.centroid()));
    if (out.spread > tol * reach / min_sine) {
        throw GeometryError(ErrorCode::NonConcurrent, "isogonal: reflected cevians do not concur");
    }
    return out;
}

Triangle antipedal_triangle(Point k, const Triangle& t, double tol) {
    const Perpendiculars p = checked_perpendiculars(k, t, tol);
    return {*intersect(p.at_b, p.at_c), *intersect(p.at_a, p.at_c), *intersect(p.at_a, p.at_b)};
}

double antipedal_area_ratio(Point k, const Triangle& t, double tol) {
    checked_perpendiculars(k, t, tol);
    const IsogonalResult conj = isogonal_conjugate(k, t, tol);
    const detail::CirclePower cp = detail::circle_power(conj.point, t);
    if (!conj.defined || std::abs(cp.power) <= tol * cp.radius2) {
        throw GeometryError(ErrorCode::NearSingular, "point: isogonal conjugate lies on the circumcircle");
    }
    return 4.0 * cp.radius2 / std::abs(cp.power);
}

double constructed_antipedal_ratio(Point k, const Triangle& t, double tol) {
    return area(antipedal_triangle(k, t, tol)) / area(t);
}

} // namespace pedalgeom
