#include "gha/io/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gha;

namespace {

std::string dump(const Report& r) { return r.to_json().dump(); }

LieAlgebra lie(const std::string& text) { return lie_from_json(parse_json_text(text)); }

std::string mc_check_text(const std::string& text, int trunc) {
    Json j = parse_json_text(text);
    if (j.contains("structure_constants")) return dump(ce_object_suite(lie_from_json(j), trunc));
    DGLieAlgebra L = dgla_from_json(j);
    if (!j.contains("element")) throw InputError("mc_check: missing field 'element'");
    return dump(mc_check_suite(L, svec_from_json(j.at("element"), *L.space)));
}

}  // namespace

PYBIND11_MODULE(_gha, m) {
    m.doc() = "Exact graded homological algebra checks; every suite returns a JSON report string";

    static auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "StructuralError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Json::exception& e) {
            py::set_error(input_error, e.what());
        }
    });

    m.def("builtin_lie_names", &builtin_lie_names);
    m.def("builtin_lie", [](const std::string& name) { return lie_to_json(builtin_lie(name)).dump(); },
          py::arg("name"));

    m.def("verify", [](const std::string& g, int trunc) { return dump(verify_suite(lie(g), trunc)); },
          py::arg("algebra"), py::arg("trunc") = 3);
    m.def("invariants", [](const std::string& g, int degree) { return dump(invariants_suite(lie(g), degree)); },
          py::arg("algebra"), py::arg("degree") = 3);
    m.def(
        "chern_weil",
        [](const std::string& g, const std::string& conn, const std::string& poly) {
            LieAlgebra a = lie(g);
            a.validate();
            return dump(chern_weil_suite(connection_from_json(parse_json_text(conn), a), parse_json_text(poly)));
        },
        py::arg("algebra"), py::arg("connection"), py::arg("polynomial"));
    m.def(
        "rep_verify",
        [](const std::string& sset, const std::string& rep, int pmax) {
            SSetPtr K = sset_from_json(parse_json_text(sset), pmax);
            return dump(rep_verify_suite(*K, rep_from_json(parse_json_text(rep), K)));
        },
        py::arg("sset"), py::arg("rep"), py::arg("pmax") = -1);
    m.def("spectral", [](const std::string& in, int pages) { return dump(spectral_input_suite(parse_json_text(in), pages)); },
          py::arg("input"), py::arg("pages") = 4);
    m.def("mc_check", &mc_check_text, py::arg("input"), py::arg("trunc") = 3);
    m.def("gauss_manin", [](const std::string& g, int trunc) { return dump(gauss_manin_suite(lie(g), trunc)); },
          py::arg("algebra"), py::arg("trunc") = 3);
    m.def(
        "ainfty_check",
        [](const std::string& cat, int length) { return dump(ainfty_suite(dgcat_from_json(parse_json_text(cat)), length)); },
        py::arg("category"), py::arg("length") = 3);
}
