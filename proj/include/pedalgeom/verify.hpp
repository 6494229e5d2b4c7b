#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pedalgeom/core.hpp"
#include "pedalgeom/text_format.hpp"

namespace pedalgeom::verify {

/// Deterministic sampler. Every (seed, stream) pair yields an independent,
/// reproducible sequence; uniform doubles are built from the top 53 bits so
/// results do not depend on the standard library's distributions.
class Sampler {
public:
    Sampler(std::uint64_t seed, std::uint64_t stream);

    double uniform(double lo, double hi);
    Point point(double half_width);
    /// Vertices uniform in [-10, 10]^2, rejecting |signed area| < 1e-3.
    Triangle triangle();
    /// Random point strictly inside t.
    Point interior(const Triangle& t);

private:
    std::mt19937_64 engine_;
};

struct PropertyOutcome {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::size_t checked = 0;
    bool pass = true;
};

struct Report {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<PropertyOutcome> properties;

    bool all_pass() const;
};

/// Runs every randomized property over `trials` samples each.
Report run(std::uint64_t seed, std::size_t trials, double tol = kDefaultTolerance);

text::Document to_document(const Report& report);

} // namespace pedalgeom::verify
