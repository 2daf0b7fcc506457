#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symtrop/acceptance.hpp"
#include "symtrop/json_io.hpp"
#include "symtrop/tropical.hpp"

namespace py = pybind11;
using namespace symtrop;

namespace {

std::vector<std::vector<std::string>> matrix_str(const Matrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    std::vector<std::string> r;
    for (const Rat& x : row) r.push_back(rat_pretty(x));
    out.push_back(std::move(r));
  }
  return out;
}

py::dict cone_dict(const Cone& c, const std::vector<Partition>& labels) {
  py::dict d;
  d["dim"] = c.dim();
  d["inequalities"] = matrix_str(c.inequalities());
  d["equations"] = matrix_str(c.equations());
  d["rays"] = matrix_str(c.rays());
  d["lineality"] = matrix_str(c.lineality());
  std::vector<std::string> pretty;
  for (const auto& row : c.inequalities())
    pretty.push_back(inequality_str(row, labels));
  d["facets_pretty"] = pretty;
  return d;
}

std::vector<Partition> index_labels(int dim) {
  std::vector<Partition> labels;
  for (int i = 1; i <= dim; ++i) labels.push_back(Partition({i}));
  return labels;
}

std::vector<py::dict> report_list(const Report& rep) {
  std::vector<py::dict> out;
  for (const auto& c : rep) {
    py::dict d;
    d["name"] = c.name;
    d["pass"] = c.pass;
    d["detail"] = c.detail;
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_symtrop, m) {
  m.doc() = "Exact tools for the superdominance order, tropical Vandermonde "
            "cells and even-symmetric SOS dual cones";

  py::class_<Partition>(m, "Partition")
      .def(py::init([](const std::string& s) { return Partition::parse(s); }))
      .def(py::init<std::vector<int>>())
      .def_property_readonly("parts", &Partition::parts)
      .def_property_readonly("size", &Partition::size)
      .def_property_readonly("length", &Partition::length)
      .def("__str__", &Partition::str)
      .def("__repr__", &Partition::str)
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; });

  m.def("partitions", [](int d, bool even) {
    return even ? enum_even_partitions(d) : enum_partitions(d);
  }, py::arg("d"), py::arg("even") = false);
  m.def("superdominates", &superdominates);
  m.def("dominates", &dominates);
  m.def("fuse", [](const Partition& a, const Partition& b) { return fuse(a, b); });
  m.def("star", &star);
  m.def("covers", &covers);
  m.def("hasse", &hasse);
  m.def("hasse_dot", &hasse_dot);

  m.def("binomial_inequality_holds", &binomial_inequality_holds);
  m.def("binomial_violation_witness", [](const Partition& a, const Partition& b) {
    auto w = binomial_violation_witness(a, b);
    std::optional<std::vector<std::string>> out;
    if (w) {
      out.emplace();
      for (const Rat& x : *w) out->push_back(rat_pretty(x));
    }
    return out;
  });

  m.def("trop_vandermonde", [](int d) {
    return cone_dict(trop_vandermonde(d), index_labels(d));
  });
  m.def("trop_bp_dual", [](int d) {
    return cone_dict(trop_bp_dual(d), even_coords(d));
  });
  m.def("t_k_cone", [](int d, int k) {
    return cone_dict(t_k_cone(d, k), even_coords(d));
  });
  m.def("trop_of_sos", [](const std::string& kind) {
    GramPencil p = build_pencil(kind);
    return cone_dict(trop_of_sos(p), even_coords(p.d));
  });
  m.def("stabilization_tau", [](int d, int kmax) {
    auto t = stabilization_tau(d, kmax);
    py::dict out;
    out["tau"] = t.tau;
    out["certified"] = t.certified;
    return out;
  }, py::arg("d"), py::arg("kmax") = 4);

  m.def("pencil_pretty", [](const std::string& kind) {
    return pencil_pretty(build_pencil(kind));
  });
  m.def("pencil_json", [](const std::string& kind) {
    return pencil_json(build_pencil(kind)).dump();
  });

  m.def("verify_quartic", [] { return report_list(verify_quartic()); });
  m.def("verify_decic", [] { return report_list(verify_decic()); });
  m.def("verify_sos4_extreme_rays",
        [] { return report_list(verify_sos4_extreme_rays()); });
  m.def("run_acceptance", [] { return report_list(acceptance::run_all()); });
}
