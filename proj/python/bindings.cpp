#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pedalgeom/antipedal.hpp"
#include "pedalgeom/commands.hpp"
#include "pedalgeom/inscribe.hpp"
#include "pedalgeom/pedal.hpp"
#include "pedalgeom/text_format.hpp"
#include "pedalgeom/verify.hpp"

namespace py = pybind11;
using namespace pedalgeom;

namespace {

std::string repr(Point p) {
    return "Point(" + text::format_number(p.x) + ", " + text::format_number(p.y) + ")";
}

void bind_types(py::module_& m) {
    py::class_<Point>(m, "Point")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def(py::init([](const std::pair<double, double>& xy) { return Point{xy.first, xy.second}; }))
        .def_readwrite("x", &Point::x)
        .def_readwrite("y", &Point::y)
        .def("__iter__", [](const Point& p) { return py::iter(py::make_tuple(p.x, p.y)); })
        .def("__eq__", [](const Point& p, const Point& q) { return p == q; })
        .def("__repr__", &repr);
    py::implicitly_convertible<py::tuple, Point>();
    py::implicitly_convertible<py::list, Point>();

    py::class_<Triangle>(m, "Triangle")
        .def(py::init<Point, Point, Point>(), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_readwrite("a", &Triangle::a)
        .def_readwrite("b", &Triangle::b)
        .def_readwrite("c", &Triangle::c)
        .def("vertices", &Triangle::vertices)
        .def("scale", &Triangle::scale)
        .def("centroid", &Triangle::centroid)
        .def("__repr__", [](const Triangle& t) {
            return "Triangle(" + repr(t.a) + ", " + repr(t.b) + ", " + repr(t.c) + ")";
        });

    py::class_<Circle>(m, "Circle")
        .def(py::init<Point, double>(), py::arg("center"), py::arg("radius"))
        .def_readwrite("center", &Circle::center)
        .def_readwrite("radius", &Circle::radius);

    py::class_<Line>(m, "Line")
        .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("beta"), py::arg("gamma"))
        .def_readwrite("alpha", &Line::alpha)
        .def_readwrite("beta", &Line::beta)
        .def_readwrite("gamma", &Line::gamma)
        .def("eval", &Line::eval);

    py::class_<AffineMap>(m, "AffineMap")
        .def(py::init<double, double, double, double, double, double>(),
             py::arg("m11"), py::arg("m12"), py::arg("m21"), py::arg("m22"), py::arg("t1"), py::arg("t2"))
        .def_readwrite("m11", &AffineMap::m11)
        .def_readwrite("m12", &AffineMap::m12)
        .def_readwrite("m21", &AffineMap::m21)
        .def_readwrite("m22", &AffineMap::m22)
        .def_readwrite("t1", &AffineMap::t1)
        .def_readwrite("t2", &AffineMap::t2)
        .def("inverse", &AffineMap::inverse);

    py::class_<DirectedDistances>(m, "DirectedDistances")
        .def_readonly("d_a", &DirectedDistances::d_a)
        .def_readonly("d_b", &DirectedDistances::d_b)
        .def_readonly("d_c", &DirectedDistances::d_c);

    py::enum_<CircleRegion>(m, "CircleRegion")
        .value("INSIDE", CircleRegion::Inside)
        .value("ON", CircleRegion::On)
        .value("OUTSIDE", CircleRegion::Outside);

    py::class_<SignProfile>(m, "SignProfile")
        .def_readonly("distance_product_signs", &SignProfile::distance_product_signs)
        .def_readonly("circumcircle", &SignProfile::circumcircle);

    py::class_<SimsonResult>(m, "SimsonResult")
        .def_readonly("is_collinear", &SimsonResult::is_collinear)
        .def_readonly("residual", &SimsonResult::residual);

    py::class_<RightTrianglePoint>(m, "RightTrianglePoint")
        .def_readonly("d", &RightTrianglePoint::d)
        .def_readonly("ratio", &RightTrianglePoint::ratio);

    py::class_<IsogonalResult>(m, "IsogonalResult")
        .def_readonly("point", &IsogonalResult::point)
        .def_readonly("defined", &IsogonalResult::defined)
        .def_readonly("spread", &IsogonalResult::spread);

    py::class_<RatioTriple>(m, "RatioTriple")
        .def(py::init<double, double, double>(), py::arg("k1"), py::arg("k2"), py::arg("k3"))
        .def_readwrite("k1", &RatioTriple::k1)
        .def_readwrite("k2", &RatioTriple::k2)
        .def_readwrite("k3", &RatioTriple::k3);

    py::class_<InscribedChain>(m, "InscribedChain")
        .def_readonly("b", &InscribedChain::b)
        .def_readonly("c", &InscribedChain::c);

    py::class_<HomotopyResult>(m, "HomotopyResult")
        .def_readonly("homotopic", &HomotopyResult::homotopic)
        .def_readonly("shift", &HomotopyResult::shift);
}

void bind_operations(py::module_& m) {
    const auto tol = py::arg("tol") = kDefaultTolerance;

    m.def("signed_area", &signed_area);
    m.def("circumcircle", &circumcircle, py::arg("t"), tol);
    m.def("line_through", &line_through, py::arg("p"), py::arg("q"), tol);
    m.def("project_onto", &project_onto, py::arg("p"), py::arg("line"));
    m.def("affine_to_unit", &affine_to_unit, py::arg("t"), tol);
    m.def("apply_affine", py::overload_cast<const AffineMap&, Point>(&apply_affine));
    m.def("incenter", &incenter);

    m.def("pedal_triangle", &pedal_triangle, py::arg("p"), py::arg("t"), tol);
    m.def("directed_distances", &directed_distances, py::arg("p"), py::arg("t"), tol);
    m.def("signed_decomposition", &signed_decomposition, py::arg("p"), py::arg("t"), tol);
    m.def("pedal_area_ratio", &pedal_area_ratio, py::arg("p"), py::arg("t"), tol);
    m.def("constructed_pedal_ratio", &constructed_pedal_ratio, py::arg("p"), py::arg("t"), tol);
    m.def("right_triangle_d_point", &right_triangle_d_point, py::arg("t"), tol);
    m.def("simson_check", &simson_check, py::arg("p"), py::arg("t"), tol);
    m.def("iso_area_locus", &iso_area_locus, py::arg("t"), py::arg("ratio"), tol);
    m.def("sign_profile", &sign_profile, py::arg("p"), py::arg("t"), tol);

    m.def("isogonal_conjugate", &isogonal_conjugate, py::arg("k"), py::arg("t"), tol);
    m.def("antipedal_triangle", &antipedal_triangle, py::arg("k"), py::arg("t"), tol);
    m.def("antipedal_area_ratio", &antipedal_area_ratio, py::arg("k"), py::arg("t"), tol);
    m.def("constructed_antipedal_ratio", &constructed_antipedal_ratio, py::arg("k"), py::arg("t"), tol);

    m.def("divide_segment", &divide_segment, py::arg("m"), py::arg("p"), py::arg("k"), tol);
    m.def("inscribe_b", &inscribe_b, py::arg("t"), py::arg("k"), tol);
    m.def("inscribe_c", &inscribe_c, py::arg("t"), py::arg("k"), tol);
    m.def("homotopic_check", &homotopic_check, py::arg("t1"), py::arg("t2"), tol);
    m.def("geometric_mean_identity", [](const Triangle& t, const RatioTriple& k, double tol) {
        const MeanIdentity r = geometric_mean_identity(t, k, tol);
        return py::make_tuple(r.lhs, r.rhs);
    }, py::arg("t"), py::arg("k"), tol);
    m.def("recover_ratios", &recover_ratios, py::arg("outer"), py::arg("inscribed"), tol);

    // Document-level commands operate on the text format.
    m.def("run_command", [](const std::string& name, const std::string& input, double tol) {
        const text::Document doc = text::parse(input);
        if (name == "pedal") return text::emit(commands::pedal(doc, tol));
        if (name == "antipedal") return text::emit(commands::antipedal(doc, tol));
        if (name == "isogonal") return text::emit(commands::isogonal(doc, tol));
        if (name == "inscribe") return text::emit(commands::inscribe(doc, tol));
        if (name == "locus") return text::emit(commands::locus(doc, tol));
        if (name == "simson") return text::emit(commands::simson(doc, tol));
        if (name == "svg") return commands::svg(doc, tol);
        throw py::value_error("unknown command '" + name + "'");
    }, py::arg("name"), py::arg("document"), tol);
    m.def("verify", [](std::uint64_t seed, std::size_t trials, double tol) {
        const verify::Report report = verify::run(seed, trials, tol);
        return py::make_tuple(report.all_pass(), text::emit(verify::to_document(report)));
    }, py::arg("seed"), py::arg("trials"), tol);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Pedal and antipedal triangle constructions";

    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
    py::register_exception<text::ParseError>(m, "ParseError", PyExc_ValueError);

    m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;
    bind_types(m);
    bind_operations(m);
}
