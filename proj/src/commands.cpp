#include "pedalgeom/commands.hpp"

#include <algorithm>

#include "pedalgeom/antipedal.hpp"
#include "pedalgeom/inscribe.hpp"
#include "pedalgeom/pedal.hpp"

namespace pedalgeom::commands {

using text::Document;
using text::Value;

namespace {

Document header(const char* command, const Triangle& t) {
    Document out;
    out.set("command", Value::symbol(command));
    out.set("triangle", Value::triangle(t));
    return out;
}

void put_circle(Document& out, const std::string& prefix, const Circle& c) {
    out.set(prefix + ".center", Value::point(c.center));
    out.set(prefix + ".radius", Value::of(c.radius));
}

Value signs(const std::array<int, 3>& s) {
    return Value::numbers({double(s[0]), double(s[1]), double(s[2])});
}

} // namespace

Document pedal(const Document& in, double tol) {
    const Triangle t = in.triangle("triangle");
    const Point p = in.point("point");

    const Triangle feet = pedal_triangle(p, t, tol);
    const DirectedDistances d = directed_distances(p, t, tol);
    const SignProfile profile = sign_profile(p, t, tol);
    const double formula = pedal_area_ratio(p, t, tol);
    const double constructed = constructed_pedal_ratio(p, t, tol);

    Document out = header("pedal", t);
    out.set("point", Value::point(p));
    put_circle(out, "circumcircle", circumcircle(t, tol));
    out.set("pedal_triangle", Value::triangle(feet));
    out.set("distances", Value::numbers({d.d_a, d.d_b, d.d_c}));
    out.set("signs.products", signs(profile.distance_product_signs));
    out.set("signs.circumcircle", Value::symbol(std::string(to_string(profile.circumcircle))));
    out.set("decomposition.signed_area", Value::of(signed_decomposition(p, t, tol)));
    out.set("area.reference", Value::of(area(t)));
    out.set("area.pedal", Value::of(area(feet)));
    out.set("ratio.formula", Value::of(formula));
    out.set("ratio.constructed", Value::of(constructed));
    out.set("ratio.difference", Value::of(std::abs(formula - constructed)));
    return out;
}

Document antipedal(const Document& in, double tol) {
    const Triangle t = in.triangle("triangle");
    const Point k = in.point("point");

    const Triangle tuv = antipedal_triangle(k, t, tol);
    const IsogonalResult conj = isogonal_conjugate(k, t, tol);
    const double formula = antipedal_area_ratio(k, t, tol);
    const double constructed = area(tuv) / area(t);
    const Triangle def = pedal_triangle(conj.point, t, tol);
    const Triangle back = pedal_triangle(k, tuv, tol);
    const double roundtrip = std::max({distance(back.a, t.a), distance(back.b, t.b), distance(back.c, t.c)});

    Document out = header("antipedal", t);
    out.set("point", Value::point(k));
    put_circle(out, "circumcircle", circumcircle(t, tol));
    out.set("antipedal_triangle", Value::triangle(tuv));
    out.set("conjugate", Value::point(conj.point));
    out.set("conjugate_pedal_triangle", Value::triangle(def));
    out.set("ratio.formula", Value::of(formula));
    out.set("ratio.constructed", Value::of(constructed));
    out.set("ratio.difference", Value::of(std::abs(formula - constructed)));
    out.set("reciprocity.product", Value::of(area(def) * area(tuv) / (area(t) * area(t))));
    out.set("homotopic", Value::of(homotopic_check(tuv, def, tol).homotopic));
    out.set("roundtrip.max_error", Value::of(roundtrip));
    return out;
}

Document isogonal(const Document& in, double tol) {
    const Triangle t = in.triangle("triangle");
    const Point k = in.point("point");
    const IsogonalResult conj = isogonal_conjugate(k, t, tol);

    Document out = header("isogonal", t);
    out.set("point", Value::point(k));
    out.set("defined", Value::of(conj.defined));
    if (conj.defined) {
        out.set("conjugate", Value::point(conj.point));
        out.set("spread", Value::of(conj.spread));
    }
    out.set("tolerance", Value::of(tol * t.scale()));
    return out;
}

Document inscribe(const Document& in, double tol) {
    const Triangle t = in.triangle("triangle");
    const std::vector<double> ks = in.numbers("ratios");
    if (ks.size() != 3) {
        throw text::ParseError("ratios: expected three numbers");
    }
    const RatioTriple k{ks[0], ks[1], ks[2]};
    const InscribedChain chain = inscribe_c(t, k, tol);
    const MeanIdentity mean = geometric_mean_identity(t, k, tol);
    const HomotopyResult h = homotopic_check(t, chain.c, tol);

    Document out = header("inscribe", t);
    out.set("ratios", Value::numbers(ks));
    out.set("b_triangle", Value::triangle(chain.b));
    out.set("c_triangle", Value::triangle(chain.c));
    out.set("area.outer", Value::of(area(t)));
    out.set("area.b", Value::of(area(chain.b)));
    out.set("area.c", Value::of(area(chain.c)));
    out.set("mean_identity.lhs", Value::of(mean.lhs));
    out.set("mean_identity.rhs", Value::of(mean.rhs));
    out.set("homotopic", Value::of(h.homotopic));
    out.set("homotopy.shift", Value::of(double(h.shift)));
    return out;
}

Document locus(const Document& in, double tol) {
    const Triangle t = in.triangle("triangle");
    const double ratio = in.number("ratio");
    const std::vector<Circle> circles = iso_area_locus(t, ratio, tol);

    Document out = header("locus", t);
    out.set("ratio", Value::of(ratio));
    put_circle(out, "circumcircle", circumcircle(t, tol));
    std::vector<Value> items;
    for (const Circle& c : circles) {
        items.push_back(Value::numbers({c.center.x, c.center.y, c.radius}));
    }
    out.set("circles.count", Value::of(double(circles.size())));
    out.set("circles", Value::list(std::move(items)));
    return out;
}

Document simson(const Document& in, double tol) {
    const Triangle t = in.triangle("triangle");
    const Point p = in.point("point");
    const SimsonResult r = simson_check(p, t, tol);
    const Circle cc = circumcircle(t, tol);

    Document out = header("simson", t);
    out.set("point", Value::point(p));
    put_circle(out, "circumcircle", cc);
    out.set("feet", Value::triangle(pedal_triangle(p, t, tol)));
    out.set("collinear", Value::of(r.is_collinear));
    out.set("residual", Value::of(r.residual));
    out.set("circle_gap", Value::of(std::abs(distance(p, cc.center) - cc.radius) / cc.radius));
    return out;
}

} // namespace pedalgeom::commands
