#include "support.hpp"

#include <limits>
#include <numbers>

#include "pedalgeom/verify.hpp"

using namespace pedalgeom;
using namespace pedalgeom::testing;

TEST_CASE("signed area follows the counterclockwise convention") {
    // b - a = (0, -1), c - a = (1, -1): cross = 0*(-1) - (-1)*1 = 1.
    CHECK(signed_area(kUnit) == 0.5);
    CHECK(area(kUnit) == 0.5);
    CHECK(signed_area({{0, 0}, {1, 0}, {1, 0}}) == 0.0);
    CHECK(signed_area({{0, 0}, {4, 0}, {0, 3}}) == 6.0);
    CHECK(signed_area({{0, 0}, {0, 3}, {4, 0}}) == -6.0);
}

TEST_CASE("swapping two vertices negates the signed area exactly") {
    verify::Sampler s(11, 0);
    for (int i = 0; i < 200; ++i) {
        const Triangle t = s.triangle();
        const double a = signed_area(t);
        CHECK(signed_area({t.b, t.a, t.c}) == -a);
        CHECK(signed_area({t.a, t.c, t.b}) == -a);
        CHECK(signed_area({t.c, t.b, t.a}) == -a);
    }
}

TEST_CASE("degeneracy predicate") {
    CHECK(is_degenerate({{0, 0}, {1, 1}, {2, 2}}));
    CHECK_FALSE(is_degenerate(kUnit));
    CHECK(error_code_of([] { require_triangle({{0, 0}, {1, 0}, {2, 0}}, 1e-9); }) == ErrorCode::DegenerateTriangle);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK(error_code_of([&] { require_triangle({{nan, 0}, {1, 0}, {0, 1}}, 1e-9); }) == ErrorCode::NonFinite);
}

TEST_CASE("circumcircle") {
    SUBCASE("right angle at the origin") {
        const Circle c = circumcircle(kUnit);
        CHECK(close(c.center, {0.5, 0.5}, 1e-15));
        CHECK(close(c.radius, std::sqrt(0.5), 1e-15));
    }
    SUBCASE("points on the unit circle") {
        const Circle c = circumcircle({{-1, 0}, {1, 0}, {0, 1}});
        CHECK(close(c.center, {0, 0}, 1e-15));
        CHECK(close(c.radius, 1.0, 1e-15));
    }
    SUBCASE("random triangles are equidistant") {
        verify::Sampler s(12, 0);
        for (int i = 0; i < 500; ++i) {
            const Triangle t = s.triangle();
            const Circle c = circumcircle(t);
            for (const Point v : t.vertices()) {
                CHECK(std::abs(distance(v, c.center) - c.radius) <= 1e-12 * c.radius);
            }
        }
    }
    SUBCASE("degenerate input") {
        CHECK(error_code_of([] { circumcircle({{0, 0}, {1, 0}, {3, 0}}); }) == ErrorCode::DegenerateTriangle);
    }
}

TEST_CASE("line through two points") {
    const Line x_axis = line_through({0, 0}, {1, 0});
    CHECK(x_axis.alpha == 0.0);
    CHECK(std::abs(x_axis.beta) == 1.0);
    CHECK(x_axis.gamma == 0.0);

    const Line y_axis = line_through({0, 0}, {0, 1});
    CHECK(std::abs(y_axis.alpha) == 1.0);
    CHECK(y_axis.beta == 0.0);
    CHECK(y_axis.gamma == 0.0);

    const Line ac = line_through({0, 1}, {1, 0});
    const double s = std::copysign(1.0, ac.alpha);
    CHECK(close(s * ac.alpha, 1 / std::sqrt(2.0), 1e-15));
    CHECK(close(s * ac.beta, 1 / std::sqrt(2.0), 1e-15));
    CHECK(close(s * ac.gamma, -1 / std::sqrt(2.0), 1e-15));
    CHECK(close(ac.alpha * ac.alpha + ac.beta * ac.beta, 1.0, 1e-15));
    CHECK(close(ac.eval({0, 1}), 0.0, 1e-15));
    CHECK(close(ac.eval({1, 0}), 0.0, 1e-15));

    CHECK(error_code_of([] { line_through({1, 1}, {1, 1}); }) == ErrorCode::CoincidentPoints);
}

TEST_CASE("interior calibration") {
    const Point g{0.25, 0.25};
    CHECK(calibrate_interior(line_through({0, 0}, {1, 0}), g).beta > 0);
    CHECK(calibrate_interior(line_through({0, 0}, {0, 1}), g).alpha > 0);

    const Line raw = line_with_normal({0, 1}, {1, 1});
    CHECK(raw.eval(g) < 0);
    const Line flipped = calibrate_interior(raw, g);
    CHECK(flipped.alpha == -raw.alpha);
    CHECK(flipped.gamma == -raw.gamma);
    CHECK(flipped.eval(g) > 0);

    CHECK(error_code_of([] { calibrate_interior(line_through({0, 0}, {1, 0}), {5, 0}); }) == ErrorCode::PointOnLine);

    verify::Sampler s(13, 0);
    for (int i = 0; i < 200; ++i) {
        const Point p = s.point(10), q = s.point(10), inside = s.point(10);
        const Line l = line_through(p, q);
        if (std::abs(l.eval(inside)) > 1e-6) {
            CHECK(calibrate_interior(l, inside).eval(inside) > 0);
        }
    }
}

TEST_CASE("projection onto a line") {
    CHECK(project_onto({0.25, 0.25}, line_through({0, 0}, {1, 0})) == Point{0.25, 0.0});
    CHECK(close(project_onto({1, 1}, line_through({0, 1}, {1, 0})), {0.5, 0.5}, 1e-15));

    verify::Sampler s(14, 0);
    for (int i = 0; i < 500; ++i) {
        const Line l = line_through(s.point(10), s.point(10));
        const Point p = s.point(20);
        const Point f = project_onto(p, l);
        CHECK(std::abs(l.eval(f)) <= 1e-13);
        CHECK(std::abs(dot(p - f, l.direction())) <= 1e-12);
        CHECK(close(project_onto(f, l), f, 1e-14));
    }
}

TEST_CASE("reflection and intersection") {
    const Line diag = line_through({0, 0}, {1, 1});
    CHECK(close(reflect_across({1, 0}, diag), {0, 1}, 1e-15));
    const auto x = intersect(line_through({0, 0}, {1, 1}), line_through({0, 2}, {2, 0}));
    REQUIRE(x.has_value());
    CHECK(close(*x, {1, 1}, 1e-15));
    CHECK_FALSE(intersect(line_through({0, 0}, {1, 0}), line_through({0, 1}, {1, 1})).has_value());
}

TEST_CASE("affine map to the unit triangle") {
    SUBCASE("unit triangle gives the identity") {
        const AffineMap m = affine_to_unit(kUnit);
        CHECK(m.m11 == 1.0);
        CHECK(m.m12 == 0.0);
        CHECK(m.m21 == 0.0);
        CHECK(m.m22 == 1.0);
        CHECK(m.t1 == 0.0);
        CHECK(m.t2 == 0.0);
    }
    SUBCASE("vertices land on the targets") {
        verify::Sampler s(15, 0);
        for (int i = 0; i < 500; ++i) {
            const Triangle t = s.triangle();
            const Triangle u = apply_affine(affine_to_unit(t), t);
            CHECK(max_vertex_gap(u, kUnit) <= 1e-12 * t.scale());
        }
    }
    SUBCASE("segment ratios along a line are preserved") {
        verify::Sampler s(16, 0);
        for (int i = 0; i < 200; ++i) {
            const AffineMap m = affine_to_unit(s.triangle());
            const Point p = s.point(10), q = s.point(10);
            const double u = s.uniform(0.1, 0.9);
            const Point n = p + u * (q - p);
            const Point p2 = apply_affine(m, p), n2 = apply_affine(m, n), q2 = apply_affine(m, q);
            const double before = distance(p, n) / distance(n, q);
            CHECK(std::abs(distance(p2, n2) / distance(n2, q2) - before) <= 1e-10 * before);
        }
    }
    SUBCASE("parallel lines stay parallel") {
        const AffineMap m{2, 1, -0.5, 3, 4, -2};
        const Point d{1, 2};
        const Point p0{0, 0}, p1{3, -1};
        const Point d0 = apply_affine(m, p0 + d) - apply_affine(m, p0);
        const Point d1 = apply_affine(m, p1 + d) - apply_affine(m, p1);
        CHECK(std::abs(cross(d0, d1)) <= 1e-12 * norm(d0) * norm(d1));
    }
    SUBCASE("degenerate input") {
        CHECK(error_code_of([] { affine_to_unit({{0, 0}, {1, 1}, {2, 2}}); }) == ErrorCode::DegenerateTriangle);
    }
}

TEST_CASE("applying affine maps") {
    CHECK(apply_affine(AffineMap::identity(), Point{3, 4}) == Point{3, 4});
    CHECK(apply_affine(AffineMap::translation(1, 0), Point{0, 0}) == Point{1, 0});
    const AffineMap m{1, 2, 3, 4, 5, 6};
    CHECK(apply_affine(m, Point{1, 1}) == Point{8, 13});

    verify::Sampler s(17, 0);
    for (int i = 0; i < 200; ++i) {
        const AffineMap a{s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-3, 3), s.uniform(-5, 5), s.uniform(-5, 5)};
        if (std::abs(a.determinant()) < 0.1) {
            continue;
        }
        const Point p = s.point(10);
        CHECK(close(apply_affine(a.inverse(), apply_affine(a, p)), p, 1e-10 * 10));
        const AffineMap b = AffineMap::translation(1, -2);
        CHECK(close(apply_affine(compose(b, a), p), apply_affine(b, apply_affine(a, p)), 1e-12 * 10));
    }
    CHECK(error_code_of([] { AffineMap{1, 2, 2, 4, 0, 0}.inverse(); }) == ErrorCode::NearSingular);
}

TEST_CASE("incenter and angle sines") {
    // 3-4-5 right triangle: inradius (3 + 4 - 5) / 2 = 1.
    CHECK(close(incenter({{0, 0}, {4, 0}, {0, 3}}), {1, 1}, 1e-15));
    CHECK(close(sine_between({1, 0}, {0, 2}), 1.0, 1e-15));
    CHECK(sine_between({1, 1}, {-2, -2}) == 0.0);
}

TEST_CASE("non-finite inputs are rejected") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK(error_code_of([&] { require_finite({inf, 0}, "p"); }) == ErrorCode::NonFinite);
    CHECK(error_code_of([&] { line_through({inf, 0}, {0, 0}); }) == ErrorCode::NonFinite);
}
