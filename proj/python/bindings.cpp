#include "modelhom/barcode.hpp"
#include "modelhom/distance.hpp"
#include "modelhom/error.hpp"
#include "modelhom/fixtures.hpp"
#include "modelhom/model_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace modelhom;

namespace {

std::vector<std::vector<std::string>> labelled(const LabelledComplex& k) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : k.simplices()) out.push_back(simplex_labels(*k.universe(), s));
  return out;
}

FiltrationOrder order_for(const std::vector<const LabelledComplex*>& models, std::optional<int> max_dim,
                          std::optional<std::uint64_t> seed) {
  int m = 0;
  for (const auto* k : models) m = std::max(m, k->dimension());
  auto order = FiltrationOrder::shortlex(models.front()->universe(), max_dim.value_or(m));
  if (seed) order = FiltrationOrder::permuted(order, *seed);
  return order;
}

py::list trace_list(const Verdict& v) {
  py::list out;
  for (const auto& t : v.trace) {
    py::dict step;
    step["index"] = t.index;
    step["op"] = t.op;
    step["admissible"] = t.admissible;
    step["invertible"] = t.invertible;
    step["fingerprint"] = t.fingerprint;
    step["note"] = t.note;
    out.append(step);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Labelled simplicial complexes, flat filtrations, persistence and model equivalence";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<OperationError>(m, "OperationError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<LabelledComplex>(m, "Model")
      .def_property_readonly("labels", [](const LabelledComplex& k) { return k.universe()->labels(); })
      .def_property_readonly("universe_hash", [](const LabelledComplex& k) { return k.universe()->hash(); })
      .def_property_readonly("dimension", &LabelledComplex::dimension)
      .def_property_readonly("max_dim", &LabelledComplex::max_dim)
      .def("counts", &LabelledComplex::count_by_dimension, "Simplex counts per dimension")
      .def("simplices", &labelled, "Simplices as label lists, in shortlex order")
      .def("to_json", [](const LabelledComplex& k, const std::string& name) {
        return serialize_model(document_from_complex(k, name));
      }, py::arg("name") = "model")
      .def("__len__", &LabelledComplex::size)
      .def("__eq__", [](const LabelledComplex& a, const LabelledComplex& b) { return labelled_equal(a, b); });

  m.def("parse_model", [](const std::string& text, bool auto_close) {
    ParseOptions opts;
    opts.auto_close = auto_close;
    return parse_model(text, opts).complex;
  }, py::arg("text"), py::arg("auto_close") = false);
  m.def("load_model", [](const std::string& path, bool auto_close) {
    ParseOptions opts;
    opts.auto_close = auto_close;
    opts.source = path;
    return parse_model(read_file(path), opts).complex;
  }, py::arg("path"), py::arg("auto_close") = false);
  m.def("fixture", &load_fixture, py::arg("name"));
  m.def("fixture_names", &fixture_names);

  m.def("rank", [](const std::vector<std::string>& labels, const std::vector<std::string>& universe, int max_dim) {
    auto u = make_universe("python", universe);
    std::vector<Vertex> vs;
    for (const auto& l : labels) vs.push_back(u->index(l));
    return FiltrationOrder::shortlex(u, max_dim).rank(Simplex(vs));
  }, py::arg("labels"), py::arg("universe"), py::arg("max_dim"), "Shortlex rank of a simplex");

  m.def("barcode", [](const LabelledComplex& k, const std::string& format, std::optional<int> max_dim,
                      std::optional<std::uint64_t> seed) {
    const auto order = order_for({&k}, max_dim, seed);
    return export_barcode(compute_persistence(k, order), parse_barcode_format(format));
  }, py::arg("model"), py::arg("format") = "json", py::arg("max_dim") = py::none(), py::arg("seed") = py::none());

  m.def("betti", [](const LabelledComplex& k) { return betti(k, order_for({&k}, std::nullopt, std::nullopt)); },
        py::arg("model"));

  m.def("distance", [](const LabelledComplex& a, const LabelledComplex& b, const std::string& mode,
                       std::optional<int> max_dim, std::optional<std::uint64_t> seed) -> std::size_t {
    if (parse_distance_mode(mode) == DistanceMode::Simplicial) return d_simplicial(a, b);
    const auto order = order_for({&a, &b}, max_dim, seed);
    return d_persistence(compute_persistence(a, order), compute_persistence(b, order));
  }, py::arg("a"), py::arg("b"), py::arg("mode") = "simplicial", py::arg("max_dim") = py::none(),
        py::arg("seed") = py::none());

  m.def("verify", [](const LabelledComplex& a, const LabelledComplex& b, const std::string& script,
                     const std::string& declaration, const std::string& mode) {
    const auto v = verify_script(a, parse_script(script), b, parse_declaration(declaration), parse_mode(mode));
    py::dict out;
    out["accepted"] = v.accepted;
    out["reason"] = v.reason;
    out["failed_step"] = v.failed_step ? py::cast(*v.failed_step) : py::none();
    out["trace"] = trace_list(v);
    return out;
  }, py::arg("a"), py::arg("b"), py::arg("script"), py::arg("declaration"), py::arg("mode") = "strict",
        "Script and declaration are JSON documents");

  m.def("invert", [](const LabelledComplex& a, const std::string& script, const std::string& declaration,
                     const std::string& mode) {
    return serialize_script(invert_script(a, parse_script(script), parse_declaration(declaration), parse_mode(mode)));
  }, py::arg("a"), py::arg("script"), py::arg("declaration"), py::arg("mode") = "strict");

  m.def("search", [](const LabelledComplex& a, const LabelledComplex& b, const std::string& declaration,
                     std::size_t max_ops, std::size_t max_states, const std::string& mode) -> py::object {
    const auto r = search_equivalence(a, b, parse_declaration(declaration), {max_ops, max_states, parse_mode(mode)});
    if (!r.found) return py::none();
    return py::str(serialize_script(r.script));
  }, py::arg("a"), py::arg("b"), py::arg("declaration"), py::arg("max_ops") = 4, py::arg("max_states") = 200000,
        py::arg("mode") = "strict", "Script JSON, or None when nothing is found within the bound");
}
