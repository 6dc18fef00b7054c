#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relufibre/error.hpp"
#include "relufibre/json_io.hpp"

namespace py = pybind11;
using namespace relufibre;

namespace {

RatVec to_point(const std::vector<std::string>& coords) {
  RatVec x;
  x.reserve(coords.size());
  for (const auto& s : coords) x.push_back(Rat::parse(s));
  return x;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact fibre computations for shallow ReLU network parameters";

  static py::exception<Error> exc(m, "RelufibreError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(exc.ptr(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Parameter>(m, "Parameter")
      .def_static("from_json", &parse_parameter, py::arg("text"))
      .def("to_json", &serialize)
      .def_property_readonly("m", &Parameter::m)
      .def_property_readonly("n", &Parameter::n)
      .def_property_readonly("k", &Parameter::k)
      .def("__eq__", [](const Parameter& a, const Parameter& b) { return a == b; })
      .def("__repr__", [](const Parameter& p) { return "Parameter(" + serialize(p) + ")"; });

  m.def("minimal_form", [](const Parameter& p) { return to_json(minimal_form(p)).dump(); });
  m.def("zero_factor_rank", &zero_factor_rank);
  m.def("zero_factor_reduce", [](const Parameter& p) { return to_json(zero_factor_reduce(p)).dump(); });
  m.def("project", &project, py::arg("theta"), py::arg("t"));
  m.def("ominus", &ominus);

  m.def("act", [](const std::string& g, const Parameter& p) {
    return act(group_element_from_json(Json::parse(g)), p);
  });
  m.def("stabilizer", [](const Parameter& p) { return to_json(stabilizer(p)).dump(); });
  m.def("stabilizer_rows", [](const Parameter& p) { return to_json(stabilizer_rows(p)).dump(); });
  m.def("same_orbit", [](const Parameter& a, const Parameter& b) -> std::optional<std::string> {
    auto g = same_orbit(a, b);
    if (!g) return std::nullopt;
    return to_json(*g).dump();
  });

  m.def("equivalent", [](const Parameter& a, const Parameter& b) {
    return to_json(equivalent(a, b)).dump();
  });
  m.def("flip", &flip, py::arg("theta"), py::arg("subset"));
  m.def("flip_subsets", &flip_subsets, py::arg("theta"),
        py::arg("width_cap") = kDefaultFlipWidthCap);
  m.def("collapse_pair", &collapse_pair);
  m.def("absorb_zero_row", &absorb_zero_row);

  m.def("genericity_certificate",
        [](const Parameter& p, std::size_t cap) -> std::optional<std::string> {
          auto v = genericity_certificate(p, cap);
          if (!v) return std::nullopt;
          return to_json(*v).dump();
        },
        py::arg("theta"), py::arg("width_cap") = kDefaultSweepWidthCap);
  m.def("verdict", [](const Parameter& p) { return to_json(verdict(p)).dump(); });
  m.def("orbit_sample", &orbit_sample, py::arg("theta"), py::arg("count"), py::arg("seed"));

  m.def("eval", [](const Parameter& p, const std::vector<std::string>& x) {
    std::vector<std::string> out;
    for (const auto& y : eval(p, to_point(x))) out.push_back(y.str());
    return out;
  });
  m.def("activation_pattern", [](const Parameter& p, const std::vector<std::string>& x) {
    return activation_pattern(p, to_point(x));
  });
  m.def("exact_equal_1d", &exact_equal_1d);
  m.def("equal_on_samples", [](const Parameter& a, const Parameter& b, std::size_t count,
                               std::uint64_t seed) {
    return to_json(equal_on_samples(a, b, count, seed)).dump();
  });
  m.def("arrangement_svg",
        [](const Parameter& p, std::array<double, 4> bbox, std::size_t grid, double opacity) {
          PlotOptions opt;
          opt.bbox = {bbox[0], bbox[1], bbox[2], bbox[3]};
          opt.grid = grid;
          opt.opacity = opacity;
          return arrangement_svg(p, opt);
        },
        py::arg("theta"), py::arg("bbox") = std::array<double, 4>{-6, -6, 6, 6},
        py::arg("grid") = 200, py::arg("opacity") = 0.25);
}
