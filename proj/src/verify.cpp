#include "pedalgeom/verify.hpp"

#include <algorithm>
#include <functional>
#include <numbers>

#include "pedalgeom/antipedal.hpp"
#include "pedalgeom/inscribe.hpp"
#include "pedalgeom/pedal.hpp"

namespace pedalgeom::verify {

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(stream), std::uint32_t(stream >> 32)};
    engine_.seed(seq);
}

double Sampler::uniform(double lo, double hi) {
    const double u = double(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

Point Sampler::point(double half_width) {
    const double x = uniform(-half_width, half_width);
    return {x, uniform(-half_width, half_width)};
}

Triangle Sampler::triangle() {
    while (true) {
        const Point a = point(10.0);
        const Point b = point(10.0);
        const Triangle t{a, b, point(10.0)};
        if (std::abs(signed_area(t)) >= 1e-3) {
            return t;
        }
    }
}

Point Sampler::interior(const Triangle& t) {
    const double r1 = std::sqrt(uniform(0.0, 1.0));
    const double r2 = uniform(0.0, 1.0);
    return (1.0 - r1) * t.a + r1 * (1.0 - r2) * t.b + r1 * r2 * t.c;
}

bool Report::all_pass() const {
    return std::all_of(properties.begin(), properties.end(), [](const PropertyOutcome& p) { return p.pass; });
}

namespace {

// Accumulates the worst residual of one property. A trial that throws
// counts as an infinite residual.
class Property {
public:
    Property(std::string name, double tolerance) { out_.name = std::move(name); out_.tolerance = tolerance; }

    void record(double residual) {
        ++out_.checked;
        if (!(residual <= out_.max_residual)) {
            out_.max_residual = std::isnan(residual) ? std::numeric_limits<double>::infinity() : residual;
        }
    }

    PropertyOutcome finish() {
        out_.pass = out_.max_residual <= out_.tolerance;
        return out_;
    }

private:
    PropertyOutcome out_;
};

double ratio_error(double value, double expected) {
    return std::abs(value - expected) / std::max(1.0, std::abs(expected));
}

double max_vertex_gap(const Triangle& s, const Triangle& t) {
    return std::max({distance(s.a, t.a), distance(s.b, t.b), distance(s.c, t.c)});
}

using Trial = std::function<void(Sampler&)>;

void run_trials(std::uint64_t seed, std::uint64_t stream, std::size_t trials, const Trial& trial,
                const std::function<void()>& on_error) {
    Sampler sampler(seed, stream);
    for (std::size_t i = 0; i < trials; ++i) {
        try {
            trial(sampler);
        } catch (const GeometryError&) {
            on_error();
        }
    }
}

} // namespace

Report run(std::uint64_t seed, std::size_t trials, double tol) {
    Report report;
    report.seed = seed;
    report.trials = trials;
    auto& props = report.properties;
    constexpr double kInf = std::numeric_limits<double>::infinity();

    {
        Property equidistant("core.circumcircle_equidistance", 1e-12);
        Property idempotent("core.projection_idempotence", 1e-14);
        Property composition("core.affine_composition", 1e-10);
        run_trials(seed, 1, trials, [&](Sampler& s) {
            const Triangle t = s.triangle();
            const Circle c = circumcircle(t, tol);
            double worst = 0.0;
            for (const Point v : t.vertices()) {
                worst = std::max(worst, std::abs(distance(c.center, v) - c.radius) / c.radius);
            }
            equidistant.record(worst);

            const Point p = s.point(20.0);
            const Line l = line_through(t.a, t.b, tol);
            const Point f = project_onto(p, l);
            idempotent.record(distance(project_onto(f, l), f) / std::max(norm(p), t.scale()));

            AffineMap m{s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-5, 5), s.uniform(-5, 5)};
            if (std::abs(m.determinant()) < 1e-2) {
                m.m11 += 1.0;
                m.m22 += 1.0 + std::abs(m.m12 * m.m21);
            }
            composition.record(distance(apply_affine(m.inverse(), apply_affine(m, p)), p) / std::max(1.0, norm(p)));
        }, [&] { equidistant.record(kInf); });
        props.push_back(equidistant.finish());
        props.push_back(idempotent.finish());
        props.push_back(composition.finish());
    }

    {
        Property closed_form("pedal.area_ratio", 1e-9);
        Property sign("pedal.decomposition_sign", 0.0);
        Property magnitude("pedal.decomposition_magnitude", 1e-9);
        run_trials(seed, 2, trials, [&](Sampler& s) {
            const Triangle t = s.triangle();
            const Point p = s.point(20.0);
            const double formula = pedal_area_ratio(p, t, tol);
            const double constructed = constructed_pedal_ratio(p, t, tol);
            closed_form.record(ratio_error(formula, constructed));

            const Circle c = circumcircle(t, tol);
            const double power = c.radius * c.radius - norm2(p - c.center);
            if (std::abs(power) > 1e-6 * c.radius * c.radius) {
                const double decomposition = signed_decomposition(p, t, tol);
                sign.record((decomposition > 0.0) == (power > 0.0) ? 0.0 : 1.0);
                magnitude.record(ratio_error(std::abs(decomposition) / area(t), constructed));
            }
        }, [&] { closed_form.record(kInf); });
        props.push_back(closed_form.finish());
        props.push_back(sign.finish());
        props.push_back(magnitude.finish());
    }

    {
        Property seven("pedal.seven_points", 1e-12);
        Property right("pedal.right_triangle_point", 1e-12);
        run_trials(seed, 3, trials, [&](Sampler& s) {
            const Triangle t = s.triangle();
            const Circle c = circumcircle(t, tol);
            double worst = std::abs(pedal_area_ratio(c.center, t, tol) - 0.25);
            for (const Point v : t.vertices()) {
                worst = std::max(worst, pedal_area_ratio(v, t, tol));
                worst = std::max(worst, pedal_area_ratio(2.0 * c.center - v, t, tol));
            }
            seven.record(worst);

            const Point corner = s.point(10.0);
            const double theta = s.uniform(0.0, 2.0 * std::numbers::pi);
            const Point u{std::cos(theta), std::sin(theta)};
            const Triangle rt{corner + s.uniform(0.5, 10.0) * Point{-u.y, u.x}, corner + s.uniform(0.5, 10.0) * u, corner};
            const RightTrianglePoint d = right_triangle_d_point(rt, tol);
            right.record(std::max(std::abs(pedal_area_ratio(d.d, rt, tol) - d.ratio),
                                  std::abs(constructed_pedal_ratio(d.d, rt, tol) - d.ratio)) / d.ratio);
        }, [&] { seven.record(kInf); });
        props.push_back(seven.finish());
        props.push_back(right.finish());
    }

    {
        Property on("pedal.simson_on_circle", 1e-9);
        Property off("pedal.simson_off_circle", 0.0);
        Property locus("pedal.locus", 1e-9);
        run_trials(seed, 4, trials, [&](Sampler& s) {
            const Triangle t = s.triangle();
            const Circle c = circumcircle(t, tol);
            const double theta = s.uniform(0.0, 2.0 * std::numbers::pi);
            const Point dir{std::cos(theta), std::sin(theta)};
            const SimsonResult hit = simson_check(c.center + c.radius * dir, t, tol);
            on.record(hit.is_collinear ? hit.residual : kInf);

            double rho = s.uniform(0.0, 2.0 - 2e-3);
            rho = rho < 1.0 - 1e-3 ? rho : rho + 2e-3;
            off.record(simson_check(c.center + rho * c.radius * dir, t, tol).is_collinear ? 1.0 : 0.0);

            const double ratio = s.uniform(0.0, 1.0);
            for (const Circle& ring : iso_area_locus(t, ratio, tol)) {
                const double phi = s.uniform(0.0, 2.0 * std::numbers::pi);
                const Point q = ring.center + ring.radius * Point{std::cos(phi), std::sin(phi)};
                locus.record(ratio_error(pedal_area_ratio(q, t, tol), ratio));
            }
        }, [&] { on.record(kInf); });
        props.push_back(on.finish());
        props.push_back(off.finish());
        props.push_back(locus.finish());
    }

    {
        Property closed_form("antipedal.area_ratio", 1e-8);
        Property roundtrip("antipedal.roundtrip", 1e-8);
        Property reciprocity("antipedal.reciprocity", 1e-8);
        Property homotopy("antipedal.homotopy", 1e-9);
        Property fixed("isogonal.incenter_fixed", 1e-10);
        Property involution("isogonal.involution", 1e-8);
        Property spread("isogonal.concurrency", 1e-9);
        run_trials(seed, 5, trials, [&](Sampler& s) {
            const Triangle t = s.triangle();
            const double scale = t.scale();
            const Point in = incenter(t);
            fixed.record(distance(isogonal_conjugate(in, t, tol).point, in) / scale);

            const Point k = s.interior(t);
            const IsogonalResult conj = isogonal_conjugate(k, t, tol);
            // Points of very thin triangles can sit inside the circumcircle
            // band, where the conjugate is at infinity.
            if (!conj.defined) {
                return;
            }
            spread.record(conj.spread / scale);
            const IsogonalResult back = isogonal_conjugate(conj.point, t, tol);
            if (back.defined) {
                involution.record(distance(back.point, k) / scale);
            }

            const Circle c = circumcircle(t, tol);
            if (std::abs(c.radius * c.radius - norm2(conj.point - c.center)) <= 1e-6 * c.radius * c.radius) {
                return;
            }
            const Triangle tuv = antipedal_triangle(k, t, tol);
            const Triangle def = pedal_triangle(conj.point, t, tol);
            const double formula = antipedal_area_ratio(k, t, tol);
            closed_form.record(std::abs(formula - area(tuv) / area(t)) / formula);
            roundtrip.record(max_vertex_gap(pedal_triangle(k, tuv, tol), t) / scale);
            reciprocity.record(std::abs(area(def) * area(tuv) / (area(t) * area(t)) - 1.0));
            homotopy.record(std::max({sine_between(tuv.b - tuv.a, def.b - def.a), sine_between(tuv.c - tuv.b, def.c - def.b),
                                      sine_between(tuv.a - tuv.c, def.a - def.c)}));
        }, [&] { closed_form.record(kInf); });
        props.push_back(closed_form.finish());
        props.push_back(roundtrip.finish());
        props.push_back(reciprocity.finish());
        props.push_back(homotopy.finish());
        props.push_back(fixed.finish());
        props.push_back(involution.finish());
        props.push_back(spread.finish());
    }

    {
        Property mean("inscribe.mean_identity", 1e-10);
        Property homotopic("inscribe.homotopy", 0.0);
        Property closed("inscribe.unit_closed_forms", 1e-12);
        Property recover("inscribe.recover_ratios", 1e-10);
        Property affine("inscribe.affine_invariance", 1e-8);
        run_trials(seed, 6, trials, [&](Sampler& s) {
            const Triangle t = s.triangle();
            const RatioTriple k{s.uniform(0.1, 10.0), s.uniform(0.1, 10.0), s.uniform(0.1, 10.0)};
            const MeanIdentity m = geometric_mean_identity(t, k, tol);
            mean.record(std::abs(m.lhs - m.rhs) / m.rhs);

            const InscribedChain chain = inscribe_c(t, k, tol);
            homotopic.record(homotopic_check(t, chain.c, tol).homotopic ? 0.0 : 1.0);

            const RatioTriple back = recover_ratios(t, chain.b, tol);
            recover.record(std::max({std::abs(back.k1 - k.k1) / k.k1, std::abs(back.k2 - k.k2) / k.k2,
                                     std::abs(back.k3 - k.k3) / k.k3}));

            const Triangle unit{{0, 1}, {0, 0}, {1, 0}};
            const InscribedChain u = inscribe_c(unit, k, tol);
            const double num = k.k1 * k.k2 * k.k3 + 1.0;
            const double den = (1.0 + k.k1) * (1.0 + k.k2) * (1.0 + k.k3);
            closed.record(std::max(std::abs(area(u.b) - num / (2.0 * den)),
                                   std::abs(area(u.c) - num * num / (2.0 * den * den))));

            AffineMap map{s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-5, 5), s.uniform(-5, 5)};
            if (std::abs(map.determinant()) < 1e-1) {
                return;
            }
            const Triangle image = apply_affine(map, t);
            const InscribedChain mapped = inscribe_c(image, k, tol);
            const double ab = area(chain.b) / area(t);
            const double ac = area(chain.c) / area(t);
            affine.record(std::max({std::abs(area(mapped.b) / area(image) - ab) / ab,
                                    std::abs(area(mapped.c) / area(image) - ac) / ac,
                                    max_vertex_gap(mapped.c, apply_affine(map, chain.c)) / image.scale()}));
        }, [&] { mean.record(kInf); });
        props.push_back(mean.finish());
        props.push_back(homotopic.finish());
        props.push_back(closed.finish());
        props.push_back(recover.finish());
        props.push_back(affine.finish());
    }

    return report;
}

text::Document to_document(const Report& report) {
    using text::Value;
    text::Document doc;
    doc.set("command", Value::symbol("verify"));
    doc.set("seed", Value::of(double(report.seed)));
    doc.set("trials", Value::of(double(report.trials)));
    for (const PropertyOutcome& p : report.properties) {
        const std::string prefix = "property." + p.name;
        doc.set(prefix + ".checked", Value::of(double(p.checked)));
        doc.set(prefix + ".max_residual", Value::of(p.max_residual));
        doc.set(prefix + ".tolerance", Value::of(p.tolerance));
        doc.set(prefix + ".pass", Value::of(p.pass));
    }
    doc.set("status", Value::symbol(report.all_pass() ? "pass" : "fail"));
    return doc;
}

} // namespace pedalgeom::verify
