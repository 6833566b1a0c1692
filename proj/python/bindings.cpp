// Thin layer: strings in, JSON text out. The Python side decodes.

#include <pybind11/pybind11.h>

#include "denseaut/parser.hpp"
#include "denseaut/serialize.hpp"
#include "denseaut/witness.hpp"

namespace py = pybind11;
using namespace denseaut;

namespace {

ExactMatrix element(const std::string& text, std::size_t n) {
  auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') return parse_matrix(text);
  return as_matrix(parse_scalar(text), n);
}

std::string aut(const std::string& group) {
  Group g = parse_group(group);
  Json j;
  j["group"] = g.to_string();
  Json body = to_json(aut_group(g));
  for (auto& [k, v] : body.items()) j[k] = v;
  return j.dump();
}

std::string member_of(const std::string& group, const std::string& vector) {
  Group g = parse_group(group);
  auto verdict = member(g, parse_vector(vector));
  Json j;
  j["member"] = verdict.member;
  j["witness"] = verdict.witness ? to_json(Vector(*verdict.witness)) : Json(nullptr);
  return j.dump();
}

bool aut_has(const std::string& group, const std::string& elem) {
  Group g = parse_group(group);
  return aut_member(g, element(elem, g.dimension()));
}

std::string certificate(const std::string& group, const std::string& elem) {
  Group g = parse_group(group);
  return to_json(acts_invariantly(g, element(elem, g.dimension()))).dump();
}

std::string oracle(const std::string& group, unsigned height, bool cross) {
  Group g = parse_group(group);
  OracleOptions opts;
  opts.height = height;
  return to_json(cross ? cross_check(g, opts) : brute_force_aut(g, opts)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<SearchExhausted>(m, "SearchExhausted", PyExc_RuntimeError);

  m.def("normalize", [](const std::string& g) { return normalize(parse_group(g)).to_string(); });
  m.def("scalar", [](const std::string& s) { return parse_scalar(s).to_string(); });
  m.def("aut", &aut);
  m.def("member", &member_of);
  m.def("aut_member", &aut_has);
  m.def("certificate", &certificate);
  m.def("oracle", &oracle, py::arg("group"), py::arg("height") = 3, py::arg("cross") = false);
  m.def("dim", [](const std::string& g) -> py::object {
    AutResult r = aut_group(parse_group(g));
    if (!r.is_exact()) return py::none();
    return py::int_(dim_of_aut(r));
  });
  m.def("is_dense", [](const std::string& g) { return is_dense(parse_group(g)); });
  m.def("is_divisible", [](const std::string& g) { return is_divisible(parse_group(g)); });
  m.def("is_cyclic", [](const std::string& g) { return is_cyclic(parse_group(g)); });
}
