#include "support.hpp"

#include <numbers>

#include "pedalgeom/antipedal.hpp"
#include "pedalgeom/inscribe.hpp"
#include "pedalgeom/pedal.hpp"
#include "pedalgeom/verify.hpp"

using namespace pedalgeom;
using namespace pedalgeom::testing;

namespace {

const Triangle kAcute{{0, 0}, {4, 0}, {1, 3}};

Point orthocenter(const Triangle& t) {
    const Line from_a = line_with_normal(t.a, t.c - t.b);
    const Line from_b = line_with_normal(t.b, t.c - t.a);
    return *intersect(from_a, from_b);
}

Triangle equilateral(double side) {
    return {{0, 0}, {side, 0}, {0.5 * side, 0.5 * std::sqrt(3.0) * side}};
}

} // namespace

TEST_CASE("isogonal conjugate") {
    SUBCASE("incenter is fixed") {
        verify::Sampler s(31, 0);
        for (int i = 0; i < 300; ++i) {
            const Triangle t = s.triangle();
            const Point in = incenter(t);
            const IsogonalResult r = isogonal_conjugate(in, t);
            REQUIRE(r.defined);
            CHECK(distance(r.point, in) <= 1e-10 * t.scale());
        }
    }
    SUBCASE("circumcenter maps to the orthocenter") {
        CHECK(close(orthocenter(kAcute), {1, 1}, 1e-15));
        const IsogonalResult r = isogonal_conjugate(circumcircle(kAcute).center, kAcute);
        REQUIRE(r.defined);
        CHECK(close(r.point, {1, 1}, 1e-13));

        verify::Sampler s(32, 0);
        for (int i = 0; i < 300; ++i) {
            const Triangle t = s.triangle();
            const IsogonalResult h = isogonal_conjugate(circumcircle(t).center, t);
            if (h.defined) {
                CHECK(distance(h.point, orthocenter(t)) <= 1e-8 * std::max(t.scale(), norm(h.point)));
            }
        }
    }
    SUBCASE("involution on interior points") {
        verify::Sampler s(33, 0);
        for (int i = 0; i < 1000; ++i) {
            const Triangle t = s.triangle();
            const Point k = s.interior(t);
            const IsogonalResult once = isogonal_conjugate(k, t);
            if (!once.defined) {
                continue;
            }
            CHECK(once.spread <= 1e-9 * t.scale());
            const IsogonalResult twice = isogonal_conjugate(once.point, t);
            if (twice.defined) {
                CHECK(distance(twice.point, k) <= 1e-8 * t.scale());
            }
        }
    }
    SUBCASE("points on the circumcircle have no finite conjugate") {
        const Circle c = circumcircle(kAcute);
        CHECK_FALSE(isogonal_conjugate(c.center + c.radius * Point{0.6, -0.8}, kAcute).defined);
    }
    SUBCASE("vertex input") {
        CHECK(error_code_of([] { isogonal_conjugate(kAcute.b, kAcute); }) == ErrorCode::VertexInput);
    }
}

TEST_CASE("antipedal triangle") {
    SUBCASE("center of an equilateral triangle") {
        // The perpendiculars to the radii are the tangents at the vertices,
        // which bound the equilateral triangle of twice the side.
        const Triangle t = equilateral(2.0);
        const Point center = t.centroid();
        const Triangle tuv = antipedal_triangle(center, t);
        CHECK(close(distance(tuv.a, tuv.b), 4.0, 1e-14));
        CHECK(close(distance(tuv.b, tuv.c), 4.0, 1e-14));
        CHECK(close(distance(tuv.c, tuv.a), 4.0, 1e-14));
        CHECK(max_vertex_gap(pedal_triangle(center, tuv), t) <= 1e-14);
        CHECK(close(antipedal_area_ratio(center, t), 4.0, 1e-13));
    }
    SUBCASE("vertex labels follow the perpendiculars") {
        const Point k{1.5, 1.0};
        const Triangle tuv = antipedal_triangle(k, kAcute);
        const Line at_a = line_with_normal(kAcute.a, kAcute.a - k);
        const Line at_b = line_with_normal(kAcute.b, kAcute.b - k);
        const Line at_c = line_with_normal(kAcute.c, kAcute.c - k);
        CHECK(std::abs(at_b.eval(tuv.a)) <= 1e-13);
        CHECK(std::abs(at_c.eval(tuv.a)) <= 1e-13);
        CHECK(std::abs(at_a.eval(tuv.b)) <= 1e-13);
        CHECK(std::abs(at_c.eval(tuv.b)) <= 1e-13);
        CHECK(std::abs(at_a.eval(tuv.c)) <= 1e-13);
        CHECK(std::abs(at_b.eval(tuv.c)) <= 1e-13);
    }
    SUBCASE("round trip through the pedal triangle") {
        verify::Sampler s(34, 0);
        for (int i = 0; i < 500; ++i) {
            const Triangle t = s.triangle();
            const Point k = s.interior(t);
            const Circle c = circumcircle(t);
            if (std::abs(distance(k, c.center) - c.radius) <= 1e-6 * c.radius) {
                continue;
            }
            CHECK(max_vertex_gap(pedal_triangle(k, antipedal_triangle(k, t)), t) <= 1e-8 * t.scale());
        }
    }
    SUBCASE("preconditions") {
        const Circle c = circumcircle(kAcute);
        CHECK(error_code_of([&] { antipedal_triangle(c.center + c.radius * Point{0.6, -0.8}, kAcute); }) == ErrorCode::OnCircumcircle);
        CHECK(error_code_of([] { antipedal_triangle(kAcute.c, kAcute); }) == ErrorCode::VertexInput);
        // On side line AB the perpendiculars at A and B are parallel.
        CHECK(error_code_of([] { antipedal_triangle({2, 0}, kAcute); }) == ErrorCode::Unbounded);
    }
}

TEST_CASE("antipedal area ratio") {
    SUBCASE("circumcenter") {
        const Circle c = circumcircle(kAcute);
        const double oh2 = norm2(Point{1, 1} - c.center);
        const double expected = 4 * c.radius * c.radius / std::abs(c.radius * c.radius - oh2);
        CHECK(close(antipedal_area_ratio(c.center, kAcute), expected, 1e-12 * expected));
        CHECK(close(constructed_antipedal_ratio(c.center, kAcute), expected, 1e-12 * expected));
    }
    SUBCASE("incenter") {
        verify::Sampler s(35, 0);
        for (int i = 0; i < 200; ++i) {
            const Triangle t = s.triangle();
            const Point in = incenter(t);
            const double formula = antipedal_area_ratio(in, t);
            CHECK(std::abs(formula - constructed_antipedal_ratio(in, t)) <= 1e-8 * formula);
        }
    }
    SUBCASE("product with the pedal ratio of the conjugate") {
        verify::Sampler s(36, 0);
        for (int i = 0; i < 500; ++i) {
            const Triangle t = s.triangle();
            const Point k = s.interior(t);
            const IsogonalResult conj = isogonal_conjugate(k, t);
            const Circle c = circumcircle(t);
            if (!conj.defined || std::abs(c.radius * c.radius - norm2(conj.point - c.center)) <= 1e-6 * c.radius * c.radius) {
                continue;
            }
            CHECK(std::abs(pedal_area_ratio(conj.point, t) * antipedal_area_ratio(k, t) - 1.0) <= 1e-9);
            const Triangle tuv = antipedal_triangle(k, t);
            const Triangle def = pedal_triangle(conj.point, t);
            CHECK(homotopic_check(tuv, def).homotopic);
            CHECK(homotopic_check(tuv, def).shift == 0);
        }
    }
    SUBCASE("the ratio decays towards the circumcircle") {
        // K -> circle sends K1 to infinity, so 4R^2 / |R^2 - OK1^2| -> 0.
        const Circle c = circumcircle(kAcute);
        const Point dir{0.6, -0.8};
        double previous = antipedal_area_ratio(c.center + 0.9 * c.radius * dir, kAcute);
        for (const double rho : {0.99, 0.999, 0.9999}) {
            const Point k = c.center + rho * c.radius * dir;
            const double formula = antipedal_area_ratio(k, kAcute);
            CHECK(formula < previous);
            CHECK(std::abs(formula - constructed_antipedal_ratio(k, kAcute)) <= 1e-6 * formula);
            previous = formula;
        }
        CHECK(previous < 1e-2);
    }
}
