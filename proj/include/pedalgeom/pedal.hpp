#pragma once

#include <array>
#include <vector>

#include "pedalgeom/core.hpp"

namespace pedalgeom {

/// Signed distances to the side lines BC (d_a), AC (d_b) and AB (d_c).
/// Each line is oriented so the triangle's interior is on its positive side.
struct DirectedDistances {
    double d_a = 0.0;
    double d_b = 0.0;
    double d_c = 0.0;
};

enum class CircleRegion { Inside, On, Outside };

std::string_view to_string(CircleRegion region);

struct SignProfile {
    /// Signs (-1, 0, +1) of (d_b*d_c, d_a*d_c, d_a*d_b).
    std::array<int, 3> distance_product_signs{};
    CircleRegion circumcircle = CircleRegion::Inside;
};

struct RightTrianglePoint {
    Point d;
    /// a^2 / (2 R^2) with a = |BC|.
    double ratio = 0.0;
};

struct SimsonResult {
    bool is_collinear = false;
    /// Area of the pedal triangle divided by the area of the reference.
    double residual = 0.0;
};

/// Feet of p on BC, AC and AB, in that order. The result may be degenerate.
Triangle pedal_triangle(Point p, const Triangle& t, double tol = kDefaultTolerance);

/// The three side lines (BC, AC, AB), calibrated positive on the centroid.
std::array<Line, 3> oriented_side_lines(const Triangle& t, double tol = kDefaultTolerance);

DirectedDistances directed_distances(Point p, const Triangle& t, double tol = kDefaultTolerance);

/// (d_b d_c sin A + d_a d_b sin C + d_a d_c sin B) / 2. Equals +|pedal area|
/// inside the circumcircle and -|pedal area| outside it.
double signed_decomposition(Point p, const Triangle& t, double tol = kDefaultTolerance);

/// Closed form |R^2 - OP^2| / (4 R^2).
double pedal_area_ratio(Point p, const Triangle& t, double tol = kDefaultTolerance);

/// |area(pedal_triangle(p, t))| / |area(t)|, measured on the construction.
double constructed_pedal_ratio(Point p, const Triangle& t, double tol = kDefaultTolerance);

/// For a triangle right-angled at c: the point D on line BC with C the
/// midpoint of DB, and the area ratio its pedal triangle must have.
RightTrianglePoint right_triangle_d_point(const Triangle& t, double tol = kDefaultTolerance);

/// Collinearity of the pedal feet. is_collinear holds exactly when p lies in
/// the band |OP - R| <= tol * R.
SimsonResult simson_check(Point p, const Triangle& t, double tol = kDefaultTolerance);

/// Circles on which the pedal area ratio equals `ratio` (0, 1 or 2 of them,
/// inner first). ratio == 0 yields the circumcircle itself.
std::vector<Circle> iso_area_locus(const Triangle& t, double ratio, double tol = kDefaultTolerance);

SignProfile sign_profile(Point p, const Triangle& t, double tol = kDefaultTolerance);

/// Inside/On/Outside against the band |OP - R| <= tol * R.
CircleRegion classify_against(const Circle& c, Point p, double tol = kDefaultTolerance);

} // namespace pedalgeom
