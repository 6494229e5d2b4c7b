#pragma once

#include <cstdint>
#include <string>

#include "pedalgeom/core.hpp"
#include "pedalgeom/text_format.hpp"

namespace pedalgeom::commands {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kUsageError = 2,
    kGeometryError = 3,
};

// Each command takes a parsed input document and returns the output document.
// Missing or mistyped entries raise text::ParseError; failed geometric
// preconditions raise GeometryError whose message names the offending entry.

/// Input: triangle, point.
text::Document pedal(const text::Document& in, double tol = kDefaultTolerance);
/// Input: triangle, point.
text::Document antipedal(const text::Document& in, double tol = kDefaultTolerance);
/// Input: triangle, point.
text::Document isogonal(const text::Document& in, double tol = kDefaultTolerance);
/// Input: triangle, ratios = [k1, k2, k3].
text::Document inscribe(const text::Document& in, double tol = kDefaultTolerance);
/// Input: triangle, ratio.
text::Document locus(const text::Document& in, double tol = kDefaultTolerance);
/// Input: triangle, point.
text::Document simson(const text::Document& in, double tol = kDefaultTolerance);

/// Scene: triangle; optional pedal_points, antipedal_points, locus_ratios,
/// inscribed_ratios and draw.* toggles. Returns an SVG 1.1 document.
std::string svg(const text::Document& scene, double tol = kDefaultTolerance);

} // namespace pedalgeom::commands
