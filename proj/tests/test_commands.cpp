#include "support.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "pedalgeom/commands.hpp"
#include "pedalgeom/pedal.hpp"

using namespace pedalgeom;
using namespace pedalgeom::testing;
using text::Document;

namespace pt = boost::property_tree;

namespace {

const std::string kUnitLine = "triangle = [[0, 1], [0, 0], [1, 0]]\n";

Document run(Document (*command)(const Document&, double), const std::string& input) {
    return command(text::parse(input), kDefaultTolerance);
}

pt::ptree parse_svg(const std::string& svg) {
    std::istringstream in(svg);
    pt::ptree tree;
    pt::read_xml(in, tree);
    return tree;
}

std::vector<std::string> layer_ids(const pt::ptree& tree) {
    std::vector<std::string> ids;
    for (const auto& [tag, child] : tree.get_child("svg")) {
        if (tag == "g") {
            ids.push_back(child.get<std::string>("<xmlattr>.id"));
        }
    }
    return ids;
}

// Centers of the point markers, keyed by their label text, in plane coordinates.
std::map<std::string, Point> labeled_points(const pt::ptree& tree) {
    std::vector<Point> centers;
    std::vector<std::string> labels;
    for (const auto& [tag, layer] : tree.get_child("svg")) {
        if (tag != "g") continue;
        const std::string id = layer.get<std::string>("<xmlattr>.id");
        for (const auto& [etag, element] : layer) {
            if (id == "points" && etag == "circle") {
                centers.push_back({element.get<double>("<xmlattr>.cx"), -element.get<double>("<xmlattr>.cy")});
            }
            if (id == "labels" && etag == "text") {
                labels.push_back(element.get_value<std::string>());
            }
        }
    }
    REQUIRE(centers.size() == labels.size());
    std::map<std::string, Point> out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        out[labels[i]] = centers[i];
    }
    return out;
}

} // namespace

TEST_CASE("pedal command") {
    const Document out = run(commands::pedal, kUnitLine + "point = [0.25, 0.25]\n");
    CHECK(out.text("command") == "pedal");
    CHECK(close(out.number("ratio.formula"), 0.1875, 1e-15));
    CHECK(close(out.number("ratio.constructed"), 0.1875, 1e-15));
    CHECK(out.number("ratio.difference") <= 1e-12);
    CHECK(out.triangle("pedal_triangle").a == Point{0.25, 0});
    CHECK(out.numbers("signs.products") == std::vector<double>{1, 1, 1});
    CHECK(out.text("signs.circumcircle") == "inside");
    CHECK(close(out.number("decomposition.signed_area"), out.number("area.pedal"), 1e-15));

    const Document centered = run(commands::pedal, kUnitLine + "point = [0.5, 0.5]\n");
    CHECK(close(centered.number("ratio.formula"), 0.25, 1e-15));

    try {
        run(commands::pedal, "triangle = [[0, 0], [1, 1], [2, 2]]\npoint = [0, 1]\n");
        FAIL("expected a geometry error");
    } catch (const GeometryError& e) {
        CHECK(e.code() == ErrorCode::DegenerateTriangle);
        CHECK(std::string(e.what()).find("triangle") != std::string::npos);
    }
    CHECK_THROWS_AS(run(commands::pedal, kUnitLine), text::ParseError);
    CHECK_THROWS_AS(run(commands::pedal, kUnitLine + "point = [1, 2, 3]\n"), text::ParseError);
}

TEST_CASE("antipedal command") {
    const double h = std::sqrt(3.0);
    const Document out = run(commands::antipedal, "triangle = [[0, 0], [2, 0], [1, " + text::format_number(h) +
                                                      "]]\npoint = [1, " + text::format_number(h / 3) + "]\n");
    CHECK(close(out.number("ratio.formula"), 4.0, 1e-13));
    CHECK(close(out.number("ratio.constructed"), 4.0, 1e-13));
    CHECK(close(out.number("reciprocity.product"), 1.0, 1e-13));
    CHECK(out.boolean("homotopic"));
    CHECK(out.number("roundtrip.max_error") <= 1e-14);

    CHECK_THROWS_AS(run(commands::antipedal, kUnitLine + "point = [1, 1]\n"), GeometryError);
}

TEST_CASE("isogonal command") {
    const Triangle t{{0, 0}, {4, 0}, {0, 3}};
    const Document out = run(commands::isogonal, "triangle = [[0, 0], [4, 0], [0, 3]]\npoint = [1, 1]\n");
    CHECK(out.boolean("defined"));
    CHECK(distance(out.point("conjugate"), incenter(t)) <= out.number("tolerance"));

    const Document circle = run(commands::isogonal, kUnitLine + "point = [1, 1]\n");
    CHECK_FALSE(circle.boolean("defined"));
    CHECK_FALSE(circle.contains("conjugate"));
}

TEST_CASE("inscribe command") {
    const Document out = run(commands::inscribe, kUnitLine + "ratios = [1, 1, 1]\n");
    CHECK(out.number("area.outer") == 0.5);
    CHECK(close(out.number("area.b"), 0.125, 1e-15));
    CHECK(close(out.number("area.c"), 0.03125, 1e-15));
    CHECK(close(out.number("mean_identity.lhs"), out.number("mean_identity.rhs"), 1e-16));
    CHECK(out.boolean("homotopic"));

    CHECK_THROWS_AS(run(commands::inscribe, kUnitLine + "ratios = [1, 1]\n"), text::ParseError);
    CHECK_THROWS_AS(run(commands::inscribe, kUnitLine + "ratios = [1, -1, 1]\n"), GeometryError);
}

TEST_CASE("locus command") {
    const Document zero = run(commands::locus, kUnitLine + "ratio = 0\n");
    CHECK(zero.number("circles.count") == 1);
    const Circle cc = circumcircle(kUnit);
    const auto& circle = zero.at("circles").items.at(0).items;
    CHECK(circle.at(0).number == cc.center.x);
    CHECK(circle.at(1).number == cc.center.y);
    CHECK(circle.at(2).number == cc.radius);

    CHECK(run(commands::locus, kUnitLine + "ratio = 0.1875\n").number("circles.count") == 2);
    CHECK(run(commands::locus, kUnitLine + "ratio = 0.5\n").number("circles.count") == 1);
}

TEST_CASE("simson command") {
    const Document on = run(commands::simson, kUnitLine + "point = [1, 1]\n");
    CHECK(on.boolean("collinear"));
    CHECK(on.number("circle_gap") <= 1e-15);
    const Document off = run(commands::simson, kUnitLine + "point = [0.25, 0.25]\n");
    CHECK_FALSE(off.boolean("collinear"));
    CHECK(close(off.number("residual"), 0.1875, 1e-15));
}

TEST_CASE("svg scenes") {
    SUBCASE("pedal scene is well-formed with ordered layers") {
        const std::string svg = commands::svg(text::parse(kUnitLine + "pedal_points = [[0.25, 0.25]]\n"));
        const pt::ptree tree = parse_svg(svg);
        CHECK(tree.get<std::string>("svg.<xmlattr>.version") == "1.1");
        CHECK(layer_ids(tree) == std::vector<std::string>{"circumcircle", "reference", "constructions", "points", "labels"});
        const auto points = labeled_points(tree);
        for (const char* label : {"A", "B", "C", "O", "P", "A'", "B'", "C'"}) {
            CHECK(points.count(label) == 1);
        }
        CHECK(close(points.at("B'"), {0.5, 0.5}, 1e-8));

        // viewBox = bounding box of the circumcircle plus a 10% margin.
        std::istringstream box(tree.get<std::string>("svg.<xmlattr>.viewBox"));
        double x = 0, y = 0, w = 0, h = 0;
        box >> x >> y >> w >> h;
        const Circle cc = circumcircle(kUnit);
        const double side = 2 * cc.radius;
        CHECK(close(x, cc.center.x - cc.radius - 0.1 * side, 1e-8));
        CHECK(close(w, 1.2 * side, 1e-8));
        CHECK(close(h, 1.2 * side, 1e-8));
        CHECK(close(y, -(cc.center.y + cc.radius) - 0.1 * side, 1e-8));
    }
    SUBCASE("simson line joins collinear feet") {
        const std::string svg = commands::svg(text::parse(kUnitLine + "pedal_points = [[1, 1]]\n"));
        const pt::ptree tree = parse_svg(svg);
        const auto points = labeled_points(tree);
        const Point a = points.at("A'"), b = points.at("B'"), c = points.at("C'");
        CHECK(std::abs(cross(b - a, c - a)) <= 1e-8 * distance(a, c));
        CHECK(svg.find("stroke=\"#2ca02c\"") != std::string::npos);
    }
    SUBCASE("antipedal scene shows both triangles and the conjugate") {
        const std::string svg = commands::svg(text::parse("triangle = [[0, 0], [4, 0], [1, 3]]\nantipedal_points = [[1.5, 1]]\n"));
        const auto points = labeled_points(parse_svg(svg));
        for (const char* label : {"K", "K1", "T", "U", "V", "D", "E", "F"}) {
            CHECK(points.count(label) == 1);
        }
    }
    SUBCASE("full scene") {
        const std::string svg = commands::svg(text::parse(
            kUnitLine +
            "pedal_points = [[0.25, 0.25], [1, 1]]\nantipedal_points = [[0.3, 0.3]]\nlocus_ratios = [0.05, 0.1875, 1]\n"
            "inscribed_ratios = [2, 0.5, 3]\ndraw.circumcircle = true\n"));
        CHECK_NOTHROW(parse_svg(svg));
    }
    SUBCASE("invalid elements are named") {
        try {
            commands::svg(text::parse(kUnitLine + "antipedal_points = [[0.3, 0.3], [1, 1]]\n"));
            FAIL("expected a geometry error");
        } catch (const GeometryError& e) {
            CHECK(std::string(e.what()).find("antipedal_points[1]") != std::string::npos);
        }
        try {
            commands::svg(text::parse(kUnitLine + "locus_ratios = [-1]\n"));
            FAIL("expected a geometry error");
        } catch (const GeometryError& e) {
            CHECK(std::string(e.what()).find("locus_ratios[0]") != std::string::npos);
        }
    }
}
