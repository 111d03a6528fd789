#include <pybind11/pybind11.h>

#include "conedual/cstar.hpp"
#include "conedual/json_io.hpp"

namespace py = pybind11;
using namespace conedual;

namespace {

// All interfaces speak JSON strings; the Python side stays schema-free.

std::string polar_str(const std::string& p) {
    return dump_canonical(polyhedron_to_json(one_sided_polar(polyhedron_from_json(json::parse(p)))));
}

std::string bipolar_str(const std::string& p) {
    return dump_canonical(polyhedron_to_json(bipolar(polyhedron_from_json(json::parse(p)))));
}

bool check_quadruple(const std::string& q, const std::string& prop) {
    return has_property(quadruple_from_json(json::parse(q)), property_from_string(prop));
}

std::string constant(const std::string& q, const std::string& prop) {
    const auto c = optimal_constant(quadruple_from_json(json::parse(q)), property_from_string(prop));
    return extended_to_json(c).get<std::string>();
}

std::string polar_quadruple_str(const std::string& q) {
    return dump_canonical(
        quadruple_to_json(polar_quadruple(quadruple_from_json(json::parse(q)))));
}

std::string sum_constant_str(const std::string& inst, const std::string& prop) {
    const auto c =
        sum_constant(instance_from_json(json::parse(inst)), property_from_string(prop));
    return extended_to_json(c).get<std::string>();
}

std::string ando(const std::string& inst_s, const std::string& x_s) {
    const DirectSumInstance inst = instance_from_json(json::parse(inst_s));
    const auto res = ando_decompose(inst, vector_from_json(json::parse(x_s)));
    json out;
    if (!res) {
        out["feasible"] = false;
    } else {
        out["feasible"] = true;
        out["value"] = rational_to_json(res->value);
        json parts = json::array();
        for (const auto& part : res->parts) parts.push_back(vector_to_json(part));
        out["parts"] = parts;
    }
    return dump_canonical(out);
}

py::dict cstar_item(int item, int n, int samples, std::uint64_t seed, double rel_tol) {
    const CheckStats st = check_norm_inequality_item(item, n, samples, seed, rel_tol);
    py::dict d;
    d["samples"] = st.samples;
    d["violations"] = st.violations;
    d["worst_margin"] = st.worst_margin;
    return d;
}

}  // namespace

PYBIND11_MODULE(pyconedual, m) {
    m.doc() = "Exact rational cone duality toolkit (JSON-string interfaces)";
    m.def("polar", &polar_str, py::arg("polyhedron_json"),
          "One-sided polar of a polyhedron, as canonical JSON.");
    m.def("bipolar", &bipolar_str, py::arg("polyhedron_json"));
    m.def("has_property", &check_quadruple, py::arg("quadruple_json"), py::arg("property"));
    m.def("optimal_constant", &constant, py::arg("quadruple_json"), py::arg("property"),
          "Optimal scaling constant as a rational string, or \"inf\".");
    m.def("polar_quadruple", &polar_quadruple_str, py::arg("quadruple_json"));
    m.def("sum_constant", &sum_constant_str, py::arg("instance_json"), py::arg("property"));
    m.def("ando_decompose", &ando, py::arg("instance_json"), py::arg("x_json"));
    m.def("check_norm_inequality", &cstar_item, py::arg("item"), py::arg("n"), py::arg("samples"),
          py::arg("seed"), py::arg("rel_tol"),
          "Sampled check of one of the eight matrix norm inequalities.");
}
