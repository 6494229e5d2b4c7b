#pragma once

#include <array>
#include <cmath>
#include <optional>

#include "pedalgeom/errors.hpp"

namespace pedalgeom {

/// Relative tolerance used by every on-line / on-circle / degeneracy
/// predicate. Predicates multiply it by a characteristic length of the
/// configuration (triangle diameter or circle radius).
inline constexpr double kDefaultTolerance = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
};

constexpr Point operator+(Point p, Point q) { return {p.x + q.x, p.y + q.y}; }
constexpr Point operator-(Point p, Point q) { return {p.x - q.x, p.y - q.y}; }
constexpr Point operator-(Point p) { return {-p.x, -p.y}; }
constexpr Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
constexpr Point operator*(Point p, double s) { return {s * p.x, s * p.y}; }
constexpr Point operator/(Point p, double s) { return {p.x / s, p.y / s}; }

constexpr double dot(Point p, Point q) { return p.x * q.x + p.y * q.y; }
constexpr double cross(Point p, Point q) { return p.x * q.y - p.y * q.x; }
inline double norm(Point p) { return std::hypot(p.x, p.y); }
constexpr double norm2(Point p) { return dot(p, p); }
inline double distance(Point p, Point q) { return norm(p - q); }
constexpr Point midpoint(Point p, Point q) { return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)}; }
inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Throws NonFinite naming `what` if p has a NaN or infinite coordinate.
void require_finite(Point p, const char* what);

/// Implicit line alpha*x + beta*y + gamma = 0, kept normalized so that
/// alpha^2 + beta^2 = 1 and eval() is a signed Euclidean distance.
struct Line {
    double alpha = 0.0;
    double beta = 1.0;
    double gamma = 0.0;

    double eval(Point p) const { return alpha * p.x + beta * p.y + gamma; }
    Point normal() const { return {alpha, beta}; }
    Point direction() const { return {-beta, alpha}; }
    Line negated() const { return {-alpha, -beta, -gamma}; }
};

/// Ordered vertex triple. Orientation is whatever the caller supplies.
struct Triangle {
    Point a;
    Point b;
    Point c;

    std::array<Point, 3> vertices() const { return {a, b, c}; }
    /// Diameter: the longest side length.
    double scale() const;
    Point centroid() const { return (a + b + c) / 3.0; }

    friend bool operator==(const Triangle&, const Triangle&) = default;
};

struct Circle {
    Point center;
    double radius = 0.0;
};

/// x' = M x + t with M = [[m11, m12], [m21, m22]].
struct AffineMap {
    double m11 = 1.0, m12 = 0.0;
    double m21 = 0.0, m22 = 1.0;
    double t1 = 0.0, t2 = 0.0;

    static AffineMap identity() { return {}; }
    static AffineMap translation(double dx, double dy) { return {1, 0, 0, 1, dx, dy}; }

    double determinant() const { return m11 * m22 - m12 * m21; }
    /// Throws NearSingular when the linear part is not invertible.
    AffineMap inverse() const;
};

/// Half the cross product (b - a) x (c - a); positive iff counterclockwise.
double signed_area(const Triangle& t);
inline double area(const Triangle& t) { return std::abs(signed_area(t)); }

/// |signed_area| <= tol * scale^2.
bool is_degenerate(const Triangle& t, double tol = kDefaultTolerance);

/// Throws NonFinite or DegenerateTriangle.
void require_triangle(const Triangle& t, double tol, const char* what = "triangle");

Circle circumcircle(const Triangle& t, double tol = kDefaultTolerance);

Line line_through(Point p, Point q, double tol = kDefaultTolerance);

/// Line through `through` whose normal is parallel to `normal`.
Line line_with_normal(Point through, Point normal);

/// Returns l or its negation so that interior evaluates positive. Throws
/// PointOnLine when |l.eval(interior)| <= min_distance.
Line calibrate_interior(const Line& l, Point interior, double min_distance = 0.0);

/// Foot of the perpendicular from p onto l (l normalized).
Point project_onto(Point p, const Line& l);

/// Reflection of p across l (l normalized).
Point reflect_across(Point p, const Line& l);

/// Intersection of two normalized lines, or nullopt when the sine of the
/// angle between them is at most min_sine.
std::optional<Point> intersect(const Line& l1, const Line& l2, double min_sine = 0.0);

/// Affine map sending t.a -> (0,1), t.b -> (0,0), t.c -> (1,0).
AffineMap affine_to_unit(const Triangle& t, double tol = kDefaultTolerance);

Point apply_affine(const AffineMap& m, Point p);
Triangle apply_affine(const AffineMap& m, const Triangle& t);

/// `second` applied after `first`.
AffineMap compose(const AffineMap& second, const AffineMap& first);

Point incenter(const Triangle& t);

/// Sine of the angle between two direction vectors, in [0, 1].
double sine_between(Point u, Point v);

} // namespace pedalgeom
