#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csa/commands.hpp"
#include "csa/error.hpp"
#include "csa/poly_io.hpp"

namespace py = pybind11;
using namespace csa;

namespace {

Json to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    const auto dumps = py::module_::import("json").attr("dumps");
    return Json::parse(dumps(obj).cast<std::string>());
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

// request keys mirror CommandInput; all optional
CommandInput to_input(const py::dict& req) {
    CommandInput in;
    auto get = [&](const char* key) -> py::object { return req.contains(key) ? py::object(req[key]) : py::none(); };
    in.algebra = to_json(get("algebra"));
    if (auto polys = get("polys"); !polys.is_none())
        for (const auto& p : polys) in.polys.push_back(to_json(p));
    in.minpoly = to_json(get("minpoly"));
    in.class_doc = to_json(get("class"));
    if (auto ms = get("matrices"); !ms.is_none())
        for (const auto& m : ms) in.matrices.push_back(to_json(m));
    in.override_doc = to_json(get("override"));
    if (auto pl = get("places"); !pl.is_none()) in.places = pl.cast<std::vector<std::string>>();
    if (auto h = get("height"); !h.is_none()) in.height = h.cast<long>();
    if (auto t = get("trials"); !t.is_none()) in.trials = t.cast<long>();
    if (auto s = get("seed"); !s.is_none()) in.seed = s.cast<std::uint64_t>();
    if (auto e = get("explain"); !e.is_none()) in.explain = e.cast<bool>();
    if (auto a = get("allow_singular"); !a.is_none()) in.allow_singular = a.cast<bool>();
    return in;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Characteristic polynomials and conjugacy classes in central simple algebras over Q";

    static py::exception<Error> csa_error(m, "CsaError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::tuple args = py::make_tuple(std::string(to_string(e.kind())), e.what());
            PyErr_SetObject(csa_error.ptr(), args.ptr());
        }
    });

    m.def("commands", &command_names, "Names accepted by run().");
    m.def(
        "run",
        [](const std::string& name, const py::dict& request) {
            const CommandResult r = run_command(name, to_input(request));
            return py::make_tuple(from_json(r.doc), r.negative);
        },
        py::arg("name"), py::arg("request"),
        "Runs one operation on JSON-like inputs; returns (document, negative).");

    m.def(
        "hilbert_symbol",
        [](const std::string& a, const std::string& b, const std::string& place) {
            return hilbert_symbol(parse_rat(a), parse_rat(b), Place::parse(place));
        },
        py::arg("a"), py::arg("b"), py::arg("place"));
    m.def(
        "quaternion_to_csa",
        [](const std::string& a, const std::string& b, long n) {
            return from_json(algebra_to_json(quaternion_to_csa(parse_rat(a), parse_rat(b), n)));
        },
        py::arg("a"), py::arg("b"), py::arg("n") = 1);
    m.def(
        "validate_csa", [](const py::object& doc) { return from_json(algebra_to_json(algebra_from_json(to_json(doc)))); },
        py::arg("algebra"));
    m.def(
        "format_poly", [](const py::object& p) { return format_poly(poly_from_json(to_json(p))); }, py::arg("poly"));
    m.def(
        "is_irreducible", [](const py::object& p) { return is_irreducible(poly_from_json(to_json(p))); },
        py::arg("poly"));
}
