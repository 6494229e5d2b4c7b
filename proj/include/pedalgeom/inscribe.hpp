#pragma once

#include "pedalgeom/core.hpp"

namespace pedalgeom {

/// Division ratios of an inscribed triangle B1B2B3 in A1A2A3:
///   k1 = A3B1 / B1A2,  k2 = A1B2 / B2A3,  k3 = A2B3 / B3A1.
/// All strictly positive and finite.
struct RatioTriple {
    double k1 = 1.0;
    double k2 = 1.0;
    double k3 = 1.0;
};

/// Throws NonPositiveRatio unless every ratio is positive and finite.
void require_ratios(const RatioTriple& k);

/// The B-triangle and the C-triangle inscribed in it.
struct InscribedChain {
    Triangle b;
    Triangle c;
};

struct HomotopyResult {
    bool homotopic = false;
    /// Vertex i of the first triangle corresponds to vertex (i + shift) % 3
    /// of the second. Meaningful only when homotopic.
    int shift = 0;
};

struct MeanIdentity {
    /// area(B-triangle)^2
    double lhs = 0.0;
    /// area(outer) * area(C-triangle)
    double rhs = 0.0;
};

/// Point N on segment MP with MN / NP = k.
Point divide_segment(Point m, Point p, double k, double tol = kDefaultTolerance);

/// B1 on A2A3, B2 on A1A3, B3 on A2A1, with t = (A1, A2, A3).
Triangle inscribe_b(const Triangle& t, const RatioTriple& k, double tol = kDefaultTolerance);

/// C1 on B2B3 with B2C1 / C1B3 = k1, C2 on B1B3 with B3C2 / C2B1 = k2,
/// C3 on B1B2 with B1C3 / C3B2 = k3. This orientation makes the C-triangle
/// homotopic to the outer one; the mirrored orientation has the same area
/// but is homotopic only when k1 = k2 = k3 = 1.
InscribedChain inscribe_c(const Triangle& t, const RatioTriple& k, double tol = kDefaultTolerance);

/// Pairwise parallel sides under the identity or a cyclic relabeling.
HomotopyResult homotopic_check(const Triangle& t1, const Triangle& t2, double tol = kDefaultTolerance);

MeanIdentity geometric_mean_identity(const Triangle& t, const RatioTriple& k, double tol = kDefaultTolerance);

/// Measures the ratios of a triangle whose vertices sit strictly inside the
/// sides A2A3, A1A3 and A2A1 of `outer`. Throws NotInscribed otherwise.
RatioTriple recover_ratios(const Triangle& outer, const Triangle& inscribed, double tol = kDefaultTolerance);

} // namespace pedalgeom
