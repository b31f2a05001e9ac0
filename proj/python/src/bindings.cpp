#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphercat/ar_combinatorics.hpp"
#include "sphercat/dg_core.hpp"
#include "sphercat/error.hpp"
#include "sphercat/hom_oracle.hpp"
#include "sphercat/io.hpp"
#include "sphercat/tstructures.hpp"

namespace py = pybind11;
using namespace sphercat;

namespace {

using Label = std::pair<int, int>;

Indec to_indec(const Label& l) { return {l.first, l.second}; }
Label to_label(Indec t) { return {t.shift, t.width}; }

std::vector<Label> to_labels(const std::vector<Indec>& ts) {
  std::vector<Label> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(to_label(t));
  return out;
}

Window make_window(int imin, int imax, int rmax) {
  if (imin > imax || rmax < 0) throw py::value_error("window needs imin <= imax and rmax >= 0");
  return {imin, imax, rmax};
}

DgModule parse_module(const std::string& text) {
  try {
    return module_from_json(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::parse_error, e.what());
  }
}

HomBackend backend_of(bool oracle) { return oracle ? HomBackend::oracle : HomBackend::closed; }

std::string dump(const Report& r) { return report_to_json(r).dump(); }

#define WINDOW_ARGS py::arg("imin") = -8, py::arg("imax") = 8, py::arg("rmax") = 6

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Compact DG modules over k[T] with deg T = w - 1";

  // what() starts with the error code name, e.g. "NotPrime: ...".
  py::register_exception<Error>(m, "SphercatError", PyExc_ValueError);

  m.attr("DEFAULT_PRIME") = PrimeField::kDefaultPrime;

  m.def(
      "hom_dim",
      [](int w, Label t, Label u, bool oracle, std::uint32_t prime) {
        return HomDimension(w, backend_of(oracle), prime)(to_indec(t), to_indec(u));
      },
      py::arg("w"), py::arg("t"), py::arg("u"), py::arg("oracle") = false, py::arg("prime") = PrimeField::kDefaultPrime,
      "dim Hom(t, u) for labels (i, r) standing for S^i X_r");

  m.def(
      "hom_table",
      [](int w, Label t, Label u, int lo, int hi, bool oracle) {
        const HomDimension hom(w, backend_of(oracle));
        std::map<int, std::size_t> out;
        for (int n = lo; n <= hi; ++n) out[n] = hom(to_indec(t), suspend(to_indec(u), n));
        return out;
      },
      py::arg("w"), py::arg("t"), py::arg("u"), py::arg("lo"), py::arg("hi"), py::arg("oracle") = false,
      "n -> dim Hom(t, S^n u) for lo <= n <= hi");

  m.def("tau", [](int w, Label t) { return to_label(tau(w, to_indec(t))); }, py::arg("w"), py::arg("t"));
  m.def("serre", [](int w, Label t) { return to_label(serre(w, to_indec(t))); }, py::arg("w"), py::arg("t"));

  m.def(
      "ar_triangle",
      [](int w, Label t) {
        const auto tri = ar_triangle(w, to_indec(t));
        return py::make_tuple(to_label(tri.start), to_labels(tri.middle), to_label(tri.end));
      },
      py::arg("w"), py::arg("t"), "(start, middle, end) of the AR triangle ending in t");

  m.def(
      "quiver_window",
      [](int w, int imin, int imax, int rmax) {
        const auto g = quiver_window(w, make_window(imin, imax, rmax));
        std::vector<std::pair<Label, Label>> arrows;
        for (const auto& [a, b] : g.arrows) arrows.emplace_back(to_label(a), to_label(b));
        return py::make_tuple(to_labels(g.vertices), arrows);
      },
      py::arg("w"), WINDOW_ARGS);

  m.def(
      "quiver_dot",
      [](int w, int imin, int imax, int rmax) {
        return quiver_to_dot(w, quiver_window(w, make_window(imin, imax, rmax)));
      },
      py::arg("w"), WINDOW_ARGS);

  m.def(
      "component_count",
      [](int w, int imin, int imax, int rmax) { return component_count(w, make_window(imin, imax, rmax)); },
      py::arg("w"), WINDOW_ARGS);

  m.def(
      "decompose", [](const std::string& module_json) { return to_labels(decompose(parse_module(module_json))); },
      py::arg("module_json"), "labels of the indecomposable summands of a module given as JSON");

  m.def(
      "indec_module_json",
      [](int w, Label t, std::uint32_t prime) {
        return module_to_json(make_indec_module(make_algebra(w, prime), to_indec(t))).dump();
      },
      py::arg("w"), py::arg("t"), py::arg("prime") = PrimeField::kDefaultPrime);

  m.def(
      "truncate",
      [](const std::string& module_json, int threshold) {
        const auto mod = parse_module(module_json);
        const auto tri = decomposition_triangle(mod.algebra().w, mod, threshold);
        return nlohmann::json{{"sub", module_to_json(tri.sub)},
                              {"quot", module_to_json(tri.quot)},
                              {"sub_labels", labels_to_json(tri.sub_labels)},
                              {"quot_labels", labels_to_json(tri.quot_labels)}}
            .dump();
      },
      py::arg("module_json"), py::arg("threshold") = 0);

  m.def(
      "closed_vs_oracle",
      [](int w, int imin, int imax, int rmax) { return dump(closed_vs_oracle_check(w, make_window(imin, imax, rmax))); },
      py::arg("w"), WINDOW_ARGS);

  m.def(
      "canonical_check",
      [](int w, bool oracle, int imin, int imax, int rmax) {
        return dump(orthogonality_check(w, canonical_spec(w), make_window(imin, imax, rmax), backend_of(oracle)));
      },
      py::arg("w"), py::arg("oracle") = false, WINDOW_ARGS);

  m.def(
      "sparseness_evidence",
      [](int w, int imin, int imax, int rmax) { return dump(sparseness_evidence(w, make_window(imin, imax, rmax))); },
      py::arg("w"), WINDOW_ARGS);

  m.def(
      "silting_check", [](int w, int n_max, bool oracle) { return dump(silting_check(w, n_max, backend_of(oracle))); },
      py::arg("w"), py::arg("n_max") = 12, py::arg("oracle") = true);

  m.def(
      "thick_closure",
      [](int w, Label seed, int imin, int imax, int rmax) {
        const auto r = thick_closure_window(w, to_indec(seed), make_window(imin, imax, rmax));
        py::dict out;
        out["reached"] = to_labels(r.reached);
        out["interior_missing"] = to_labels(r.interior_missing);
        out["note"] = r.note;
        return out;
      },
      py::arg("w"), py::arg("seed"), WINDOW_ARGS);
}
