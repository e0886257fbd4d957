// Python bindings for the main operations: integer linear algebra, homology,
// model checking, matrix application and expression normalization.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "picardlab/algebra.hpp"
#include "picardlab/model_io.hpp"
#include "picardlab/rewrite.hpp"
#include "picardlab/suite.hpp"
#include "picardlab/theory.hpp"

namespace py = pybind11;
using namespace picardlab;
using zlin::Int;
using zlin::IntMatrix;
using zlin::IntVec;

namespace {

// cpp_int <-> Python int through decimal strings: exact at any width.
py::int_ to_py(const Int& v) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(v.str().c_str(), nullptr, 10));
}

Int to_int(const py::handle& obj) { return Int(py::str(obj).cast<std::string>()); }

IntVec to_vec(const py::sequence& seq) {
  IntVec v;
  for (const auto& item : seq) v.push_back(to_int(item));
  return v;
}

IntMatrix to_matrix(const py::sequence& rows) {
  std::vector<IntVec> parsed;
  for (const auto& row : rows) parsed.push_back(to_vec(row.cast<py::sequence>()));
  const int r = static_cast<int>(parsed.size());
  const int c = r == 0 ? 0 : static_cast<int>(parsed[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(parsed[static_cast<std::size_t>(i)].size()) != c)
      throw py::value_error("matrix rows have unequal lengths");
    for (int j = 0; j < c; ++j)
      m.at(i, j) = parsed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

py::list from_vec(const IntVec& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list from_matrix(const IntMatrix& m) {
  py::list out;
  for (int i = 0; i < m.rows(); ++i) {
    py::list row;
    for (int j = 0; j < m.cols(); ++j) row.append(to_py(m.at(i, j)));
    out.append(row);
  }
  return out;
}

py::list from_report(const Report& report) {
  py::list out;
  for (const auto& r : report.records) {
    py::dict rec;
    rec["check"] = r.name;
    rec["status"] = status_name(r.status);
    if (!r.counterexample.empty()) rec["counterexample"] = r.counterexample;
    out.append(rec);
  }
  return out;
}

picard::Model model_from_file(const model_io::ModelFile& mf) {
  return mf.skeletal
             ? picard::PicardGroupoid::skeletal_model(mf.complex, *mf.skeletal)
             : picard::PicardGroupoid::strict_model(mf.complex);
}

}  // namespace

PYBIND11_MODULE(_picardlab, m) {
  m.doc() = "Picard groupoids of two-term complexes: exact checks over Z";

  m.def(
      "smith_normal_form",
      [](const py::sequence& rows) {
        const auto dec = zlin::smith_normal_form(to_matrix(rows));
        return py::make_tuple(from_matrix(dec.u), from_matrix(dec.d), from_matrix(dec.v));
      },
      py::arg("matrix"), "U*M*V = D with U, V unimodular, D diagonal with divisibility");

  m.def(
      "solve_linear",
      [](const py::sequence& rows, const py::sequence& b) -> py::object {
        const auto sol = zlin::solve_linear(to_matrix(rows), to_vec(b));
        if (!sol) return py::none();
        py::list kernel;
        for (const auto& k : sol->kernel) kernel.append(from_vec(k));
        return py::make_tuple(from_vec(sol->particular), kernel);
      },
      py::arg("matrix"), py::arg("b"),
      "integer solution (particular, kernel basis) of M x = b, or None");

  m.def(
      "homology",
      [](const py::sequence& a, const py::sequence& b, const py::sequence& d) {
        const auto c = complexes::make_complex(zlin::FgAbelianGroup(to_vec(a)),
                                               zlin::FgAbelianGroup(to_vec(b)),
                                               to_matrix(d));
        const auto h = complexes::homology(c);
        py::dict out;
        out["pi0"] = from_vec(h.pi0.factors());
        out["pi1"] = from_vec(h.pi1.factors());
        return out;
      },
      py::arg("a_factors"), py::arg("b_factors"), py::arg("d"),
      "invariant factors of pi0 = coker d and pi1 = ker d");

  m.def(
      "check_model",
      [](const std::string& model_json, int cases, std::uint64_t seed) {
        return from_report(
            suite::run_model_checks(model_io::parse_model_file(model_json), cases, seed));
      },
      py::arg("model_json"), py::arg("cases") = 8, py::arg("seed") = 0,
      "full verification suite on a JSON model; list of {check, status, ...}");

  m.def(
      "fuzz",
      [](int cases, std::uint64_t seed) { return from_report(suite::run_fuzz(cases, seed)); },
      py::arg("cases") = 8, py::arg("seed") = 0,
      "seeded random-model suite; deterministic per (cases, seed)");

  m.def(
      "apply_matrix",
      [](const std::string& model_json, const py::sequence& matrix,
         const py::sequence& objects) {
        const auto p = model_from_file(model_io::parse_model_file(model_json));
        algebra::ObjTuple tuple;
        for (const auto& o : objects)
          tuple.push_back(p->object_from_coords(to_vec(o.cast<py::sequence>())));
        py::list out;
        for (const auto& r :
             algebra::apply_matrix_objects(theory::make_cell(to_matrix(matrix)), tuple, p))
          out.append(from_vec(r.payload.coords));
        return out;
      },
      py::arg("model_json"), py::arg("matrix"), py::arg("objects"),
      "apply an integer matrix to a tuple of objects, canonical coordinates out");

  m.def(
      "normalize_expression",
      [](const std::string& text) {
        const auto e = expr::parse_expr(text);
        return expr::to_string(expr::canonical_form(expr::coeffs(e, expr::max_var(e))));
      },
      py::arg("expression"),
      "canonical left-nested form of a formal-sum expression, e.g. '(x2 + x1)'");
}
