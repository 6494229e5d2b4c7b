#include <algorithm>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "pedalgeom/antipedal.hpp"
#include "pedalgeom/commands.hpp"
#include "pedalgeom/inscribe.hpp"
#include "pedalgeom/pedal.hpp"

namespace pedalgeom::commands {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (const char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

struct Bounds {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();

    void add(Point p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    void add(const Triangle& t) {
        add(t.a);
        add(t.b);
        add(t.c);
    }
    void add(const Circle& c) {
        add(c.center - Point{c.radius, c.radius});
        add(c.center + Point{c.radius, c.radius});
    }
};

// Collects elements per layer; the plane's y axis points up, SVG's down.
class Canvas {
public:
    enum Layer { kCircles, kReference, kConstructions, kPoints, kLabels, kLayerCount };

    void circle(Layer layer, const Circle& c, const std::string& style) {
        bounds_.add(c);
        layers_[layer] += "    <circle cx=\"" + num(c.center.x) + "\" cy=\"" + num(-c.center.y) + "\" r=\"" +
                          num(c.radius) + "\" " + style + "/>\n";
    }

    void segment(Layer layer, Point p, Point q, const std::string& style) {
        bounds_.add(p);
        bounds_.add(q);
        layers_[layer] += "    <line x1=\"" + num(p.x) + "\" y1=\"" + num(-p.y) + "\" x2=\"" + num(q.x) +
                          "\" y2=\"" + num(-q.y) + "\" " + style + "/>\n";
    }

    void triangle(Layer layer, const Triangle& t, const std::string& style) {
        bounds_.add(t);
        std::string pts;
        for (const Point p : t.vertices()) {
            if (!pts.empty()) pts.push_back(' ');
            pts += num(p.x) + "," + num(-p.y);
        }
        layers_[layer] += "    <polygon points=\"" + pts + "\" " + style + "/>\n";
    }

    void dot(Point p, const std::string& label, const std::string& color) {
        bounds_.add(p);
        pending_dots_.push_back({p, label, color});
    }

    std::string render() {
        const double w0 = bounds_.max_x - bounds_.min_x;
        const double h0 = bounds_.max_y - bounds_.min_y;
        const double extent = std::max({w0, h0, 1e-12});
        const double w = std::max(w0, 1e-3 * extent);
        const double h = std::max(h0, 1e-3 * extent);
        const double min_x = bounds_.min_x - 0.1 * w;
        const double min_y = -bounds_.max_y - 0.1 * h;
        const double vw = 1.2 * w;
        const double vh = 1.2 * h;
        const double stroke = extent / 400.0;
        const double radius = extent / 150.0;
        const double font = extent / 30.0;

        for (const auto& d : pending_dots_) {
            layers_[kPoints] += "    <circle cx=\"" + num(d.p.x) + "\" cy=\"" + num(-d.p.y) + "\" r=\"" + num(radius) +
                                "\" fill=\"" + d.color + "\"/>\n";
            layers_[kLabels] += "    <text x=\"" + num(d.p.x + radius) + "\" y=\"" + num(-d.p.y - radius) +
                                "\" font-size=\"" + num(font) + "\">" + escape(d.label) + "</text>\n";
        }

        static constexpr const char* kNames[] = {"circumcircle", "reference", "constructions", "points", "labels"};
        std::string out;
        out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
        out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(min_x) + " " + num(min_y) +
               " " + num(vw) + " " + num(vh) + "\" width=\"800\" height=\"" + num(800.0 * vh / vw) + "\">\n";
        for (int i = 0; i < kLayerCount; ++i) {
            out += "  <g id=\"" + std::string(kNames[i]) + "\" stroke-width=\"" + num(stroke) +
                   "\" font-family=\"sans-serif\">\n";
            out += layers_[i];
            out += "  </g>\n";
        }
        out += "</svg>\n";
        return out;
    }

private:
    struct Dot {
        Point p;
        std::string label;
        std::string color;
    };

    Bounds bounds_;
    std::string layers_[kLayerCount];
    std::vector<Dot> pending_dots_;
};

bool flag(const text::Document& scene, const char* key, bool fallback) {
    return scene.contains(key) ? scene.boolean(key) : fallback;
}

[[noreturn]] void rethrow_named(const GeometryError& e, const std::string& element) {
    throw GeometryError(e.code(), element + ": " + e.what());
}

const std::string kOutline = "fill=\"none\" stroke=\"black\"";
const std::string kPedalStyle = "fill=\"#1f77b4\" fill-opacity=\"0.15\" stroke=\"#1f77b4\"";
const std::string kAntipedalStyle = "fill=\"none\" stroke=\"#d62728\"";
const std::string kGuide = "stroke=\"gray\" stroke-opacity=\"0.6\" fill=\"none\"";

} // namespace

std::string svg(const text::Document& scene, double tol) {
    const Triangle t = scene.triangle("triangle");
    require_triangle(t, tol, "triangle");
    const Circle cc = circumcircle(t, tol);
    const std::vector<Point> pedal_points = scene.contains("pedal_points") ? scene.points("pedal_points") : std::vector<Point>{};
    const std::vector<Point> antipedal_points =
        scene.contains("antipedal_points") ? scene.points("antipedal_points") : std::vector<Point>{};
    const std::vector<double> locus_ratios =
        scene.contains("locus_ratios") ? scene.numbers("locus_ratios") : std::vector<double>{};

    Canvas canvas;
    if (flag(scene, "draw.circumcircle", true)) {
        canvas.circle(Canvas::kCircles, cc, kOutline);
        canvas.dot(cc.center, "O", "black");
    }
    canvas.triangle(Canvas::kReference, t, "fill=\"none\" stroke=\"black\" stroke-linejoin=\"round\"");
    canvas.dot(t.a, "A", "black");
    canvas.dot(t.b, "B", "black");
    canvas.dot(t.c, "C", "black");

    const bool draw_pedal = flag(scene, "draw.pedal", true);
    const bool draw_simson = flag(scene, "draw.simson", true);
    for (std::size_t i = 0; i < pedal_points.size(); ++i) {
        const std::string name = "pedal_points[" + std::to_string(i) + "]";
        const Point p = pedal_points[i];
        Triangle feet;
        SimsonResult simson;
        try {
            require_finite(p, "point");
            feet = pedal_triangle(p, t, tol);
            simson = simson_check(p, t, tol);
        } catch (const GeometryError& e) {
            rethrow_named(e, name);
        }
        const std::string suffix = pedal_points.size() > 1 ? std::to_string(i + 1) : "";
        if (draw_pedal) {
            canvas.triangle(Canvas::kConstructions, feet, kPedalStyle);
        }
        for (const Point f : feet.vertices()) {
            canvas.segment(Canvas::kConstructions, p, f, kGuide);
        }
        if (draw_simson && simson.is_collinear) {
            // Join the two feet farthest apart; the third lies between them.
            const auto v = feet.vertices();
            std::pair<Point, Point> ends{v[0], v[1]};
            for (int a = 0; a < 3; ++a) {
                for (int b = a + 1; b < 3; ++b) {
                    if (distance(v[a], v[b]) > distance(ends.first, ends.second)) ends = {v[a], v[b]};
                }
            }
            canvas.segment(Canvas::kConstructions, ends.first, ends.second, "stroke=\"#2ca02c\"");
        }
        canvas.dot(p, "P" + suffix, "#1f77b4");
        canvas.dot(feet.a, "A'" + suffix, "#1f77b4");
        canvas.dot(feet.b, "B'" + suffix, "#1f77b4");
        canvas.dot(feet.c, "C'" + suffix, "#1f77b4");
    }

    for (std::size_t i = 0; i < antipedal_points.size(); ++i) {
        const std::string name = "antipedal_points[" + std::to_string(i) + "]";
        const Point k = antipedal_points[i];
        Triangle tuv;
        Triangle def;
        IsogonalResult conj;
        try {
            tuv = antipedal_triangle(k, t, tol);
            conj = isogonal_conjugate(k, t, tol);
            if (!conj.defined) {
                throw GeometryError(ErrorCode::NearSingular, "isogonal conjugate at infinity");
            }
            def = pedal_triangle(conj.point, t, tol);
        } catch (const GeometryError& e) {
            rethrow_named(e, name);
        }
        const std::string suffix = antipedal_points.size() > 1 ? std::to_string(i + 1) : "";
        canvas.triangle(Canvas::kConstructions, tuv, kAntipedalStyle);
        canvas.triangle(Canvas::kConstructions, def, kPedalStyle);
        for (const Point v : t.vertices()) {
            canvas.segment(Canvas::kConstructions, k, v, kGuide);
        }
        canvas.dot(k, "K" + suffix, "#d62728");
        canvas.dot(conj.point, "K1" + suffix, "#9467bd");
        canvas.dot(tuv.a, "T" + suffix, "#d62728");
        canvas.dot(tuv.b, "U" + suffix, "#d62728");
        canvas.dot(tuv.c, "V" + suffix, "#d62728");
        canvas.dot(def.a, "D" + suffix, "#1f77b4");
        canvas.dot(def.b, "E" + suffix, "#1f77b4");
        canvas.dot(def.c, "F" + suffix, "#1f77b4");
    }

    for (std::size_t i = 0; i < locus_ratios.size(); ++i) {
        std::vector<Circle> circles;
        try {
            circles = iso_area_locus(t, locus_ratios[i], tol);
        } catch (const GeometryError& e) {
            rethrow_named(e, "locus_ratios[" + std::to_string(i) + "]");
        }
        for (const Circle& c : circles) {
            canvas.circle(Canvas::kConstructions, c, "fill=\"none\" stroke=\"#ff7f0e\"");
        }
    }

    if (scene.contains("inscribed_ratios")) {
        const std::vector<double> ks = scene.numbers("inscribed_ratios");
        if (ks.size() != 3) {
            throw text::ParseError("inscribed_ratios: expected three numbers");
        }
        InscribedChain chain;
        try {
            chain = inscribe_c(t, {ks[0], ks[1], ks[2]}, tol);
        } catch (const GeometryError& e) {
            rethrow_named(e, "inscribed_ratios");
        }
        canvas.triangle(Canvas::kConstructions, chain.b, "fill=\"none\" stroke=\"#8c564b\"");
        canvas.triangle(Canvas::kConstructions, chain.c, "fill=\"none\" stroke=\"#e377c2\"");
        const char* b_names[] = {"B1", "B2", "B3"};
        const char* c_names[] = {"C1", "C2", "C3"};
        for (int j = 0; j < 3; ++j) {
            canvas.dot(chain.b.vertices()[j], b_names[j], "#8c564b");
            canvas.dot(chain.c.vertices()[j], c_names[j], "#e377c2");
        }
    }

    return canvas.render();
}

} // namespace pedalgeom::commands
