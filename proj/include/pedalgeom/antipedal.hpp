#pragma once

#include "pedalgeom/core.hpp"

namespace pedalgeom {

struct IsogonalResult {
    /// Meaningful only when `defined`.
    Point point;
    /// False when k is within the circumcircle band (conjugate at infinity).
    bool defined = false;
    /// Largest distance between the three pairwise intersections of the
    /// reflected cevians.
    double spread = 0.0;
};

/// Reflects the cevians AK, BK, CK in the internal bisectors at A, B, C and
/// intersects the reflections. Throws VertexInput when k is a vertex, and
/// NonConcurrent if the reflections fail to meet in one point.
IsogonalResult isogonal_conjugate(Point k, const Triangle& t, double tol = kDefaultTolerance);

/// Triangle TUV bounded by the perpendiculars to KA at A, KB at B and KC at C;
/// T lies on the perpendiculars at B and C, U at A and C, V at A and B.
Triangle antipedal_triangle(Point k, const Triangle& t, double tol = kDefaultTolerance);

/// Closed form 4 R^2 / |R^2 - OK1^2| with K1 the isogonal conjugate of k.
double antipedal_area_ratio(Point k, const Triangle& t, double tol = kDefaultTolerance);

/// |area(antipedal_triangle(k, t))| / |area(t)|, measured on the construction.
double constructed_antipedal_ratio(Point k, const Triangle& t, double tol = kDefaultTolerance);

} // namespace pedalgeom
