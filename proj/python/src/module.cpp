#include "resultants/crosscheck.hpp"
#include "resultants/discrim.hpp"
#include "resultants/errors.hpp"
#include "resultants/io.hpp"
#include "resultants/pipeline.hpp"
#include "resultants/series.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <iomanip>
#include <sstream>

namespace py = pybind11;
using namespace resultants;

namespace {

using Terms = std::map<std::vector<int>, std::string>;

HomPoly to_poly(int n, int degree, const Terms& terms)
{
    std::vector<std::pair<Exponent, Rational>> entries;
    for (const auto& [e, c] : terms) entries.emplace_back(e, parse_rational(c));
    return make_poly(n, degree, entries);
}

py::dict from_poly(const HomPoly& p)
{
    py::dict out;
    for (const auto& [e, c] : p.terms()) out[py::tuple(py::cast(e))] = to_string(c);
    return out;
}

PolySystem to_system(int n, const std::vector<std::pair<int, Terms>>& polys)
{
    std::vector<HomPoly> out;
    for (const auto& [r, t] : polys) out.push_back(to_poly(n, r, t));
    return PolySystem(std::move(out));
}

std::string real_string(const Real& x, int digits)
{
    std::ostringstream out;
    out << std::setprecision(digits) << x;
    return out.str();
}

std::vector<std::string> method_names(const std::vector<Method>& ms)
{
    std::vector<std::string> out;
    for (Method m : ms) out.push_back(to_string(m));
    return out;
}

HybridVariant parse_variant(const std::string& v)
{
    if (v == "a") return HybridVariant::a;
    if (v == "b") return HybridVariant::b;
    throw ParseError("variant must be a or b");
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact resultants and discriminants of homogeneous polynomial systems";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ShapeError>(m, "ShapeError", base.ptr());
    py::register_exception<DegenerateError>(m, "DegenerateError", base.ptr());

    m.def("resultant", [](int n, const std::vector<std::pair<int, Terms>>& polys, const std::string& method, const std::string& variant) {
        const PolySystem sys = to_system(n, polys);
        const Method mm = resolve(parse_method(method), sys);
        const HybridVariant v = parse_variant(variant);
        if (!applicable(mm, sys, v)) throw ShapeError("method " + to_string(mm) + " does not apply to shape " + shape_label(sys));
        return to_string(compute_resultant(sys, mm, v));
    }, py::arg("n"), py::arg("polys"), py::arg("method") = "auto", py::arg("variant") = "a");

    m.def("applicable_methods", [](int n, const std::vector<std::pair<int, Terms>>& polys) {
        return method_names(applicable_methods(to_system(n, polys)));
    });

    m.def("resolve_method", [](int n, const std::vector<std::pair<int, Terms>>& polys, const std::string& method) {
        return to_string(resolve(parse_method(method), to_system(n, polys)));
    }, py::arg("n"), py::arg("polys"), py::arg("method") = "auto");

    m.def("discriminant", [](int n, int degree, const Terms& t, const std::string& method, const std::string& via) {
        const HomPoly p = to_poly(n, degree, t);
        if (via == "gradient") return to_string(discriminant(p, parse_method(method)));
        if (via == "invariants") return to_string(discriminant_via_invariants(p));
        if (via == "symmetric") return to_string(discriminant_via_symmetric(p));
        throw ParseError("via must be gradient, invariants or symmetric");
    }, py::arg("n"), py::arg("degree"), py::arg("terms"), py::arg("method") = "auto", py::arg("via") = "gradient");

    m.def("discriminant_degree", &discriminant_degree);

    m.def("invariant", [](int n, int degree, const Terms& t, const std::string& tag) {
        return to_string(invariant(to_poly(n, degree, t), parse_invariant_tag(tag)));
    });

    m.def("invariant_tags", [] {
        std::vector<std::string> out;
        for (auto tag : all_invariant_tags()) out.push_back(to_string(tag));
        return out;
    });

    m.def("poly_to_json", [](int n, int degree, const Terms& t) { return poly_to_json(to_poly(n, degree, t)); });

    m.def("poly_from_json", [](const std::string& text) {
        const HomPoly p = poly_from_json(text);
        return py::make_tuple(p.nvars(), p.degree(), from_poly(p));
    });

    m.def("system_from_json", [](const std::string& text) {
        const PolySystem sys = system_from_json(text);
        py::list polys;
        for (std::size_t i = 0; i < static_cast<std::size_t>(sys.nvars()); ++i) polys.append(py::make_tuple(sys[i].degree(), from_poly(sys[i])));
        return py::make_tuple(sys.nvars(), polys);
    });

    m.def("area_series", [](int order) { return coefficient_strings(area_series_quartic(order)); });

    m.def("root_series", [](int r, int terms) { return coefficient_strings(root_series_fixed_point(r, terms)); });

    m.def("root_series_coefficient", [](int r, int k) { return root_series_coefficient(r, k).get_str(); });

    m.def("ward_residual_terms", [](int order, const std::string& branch) {
        if (branch != "small" && branch != "large") throw ParseError("branch must be small or large");
        return ward_residual_quadratic(order, branch == "small" ? RootBranch::small : RootBranch::large).terms.size();
    }, py::arg("order"), py::arg("branch") = "small");

    m.def("j24", [](const std::string& eps, int digits) {
        const J24Branches j = j24_branches(parse_rational(eps), digits);
        py::dict out;
        out["z"] = real_string(j.z, digits);
        out["j1"] = real_string(j.j1, digits);
        out["j2"] = real_string(j.j2, digits);
        out["regular"] = real_string(j.regular, digits);
        return out;
    }, py::arg("eps"), py::arg("digits") = 30);

    m.def("volume_4d", [](const std::string& a, const std::string& b, const std::string& c, const std::string& hbar, int digits) {
        const VolumeResult v = volume_4d(parse_rational(a), parse_rational(b), parse_rational(c), parse_rational(hbar), digits);
        return py::make_tuple(real_string(v.value, digits), v.closed_form);
    }, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("hbar") = "1", py::arg("digits") = 30);

    m.def("crosscheck", [](const std::vector<int>& degrees, int count, std::uint64_t seed, const std::vector<std::string>& methods) {
        std::vector<Method> ms;
        for (const auto& name : methods) ms.push_back(parse_method(name));
        CrossRun run;
        {
            py::gil_scoped_release release;
            run = cross_validate_random(degrees, count, seed, ms);
        }
        py::dict out;
        out["shape"] = run.shape;
        out["checked"] = run.checked;
        out["mismatches"] = run.mismatches;
        out["rejected"] = run.rejected;
        std::vector<std::string> failures;
        for (const auto& f : run.failures) failures.push_back(f.summary());
        out["failures"] = failures;
        return out;
    }, py::arg("degrees"), py::arg("count"), py::arg("seed") = 1, py::arg("methods") = std::vector<std::string>{});
}
