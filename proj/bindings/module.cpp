// Python bindings. Scalars cross the boundary exactly: python ints map to
// the integer kernel, and Fraction / float / "p/q" strings map to the
// rational one. Results come back as int or fractions.Fraction, never as
// floating point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dynhull/determinants.hpp"
#include "dynhull/dyndet.hpp"
#include "dynhull/errors.hpp"
#include "dynhull/generators.hpp"
#include "dynhull/geometry.hpp"
#include "dynhull/hull.hpp"
#include "dynhull/matrix.hpp"
#include "dynhull/scalar.hpp"

namespace py = pybind11;
using namespace dynhull;

namespace {

bool is_plain_int(py::handle h) {
  // bool is an int subclass in python; keep it out of matrices.
  return py::isinstance<py::int_>(h) && !py::isinstance<py::bool_>(h);
}

ExactInt to_int(py::handle h) {
  if (!is_plain_int(h)) throw py::type_error("expected an int entry");
  return ExactInt(py::str(h).cast<std::string>());
}

ExactRat to_rat(py::handle h) {
  // bool would otherwise pass the numerator/denominator duck test below.
  if (py::isinstance<py::bool_>(h)) throw py::type_error("expected a number, got bool");
  if (is_plain_int(h)) return ExactRat(to_int(h));
  if (py::isinstance<py::float_>(h)) {
    const double x = h.cast<double>();
    if (!std::isfinite(x)) throw py::value_error("non-finite float entry");
    return ExactRat::from_double(x);
  }
  if (py::isinstance<py::str>(h)) return ExactRat(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    return ExactRat(to_int(h.attr("numerator")), to_int(h.attr("denominator")));
  }
  throw py::type_error("expected int, float, Fraction, or 'p/q' string");
}

py::object from_int(const ExactInt& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

py::object from_rat(const ExactRat& v) {
  return py::module_::import("fractions").attr("Fraction")(from_int(v.num()), from_int(v.den()));
}

// True when every entry of the nested sequence is a plain int, in which
// case the integer kernel applies.
bool all_int_entries(py::sequence rows) {
  for (py::handle row : rows)
    for (py::handle x : py::cast<py::sequence>(row))
      if (!is_plain_int(x)) return false;
  return true;
}

template <class S>
S convert(py::handle h) {
  if constexpr (scalar_traits<S>::is_field) {
    return to_rat(h);
  } else {
    return to_int(h);
  }
}

template <class S>
py::object box(const S& v) {
  if constexpr (scalar_traits<S>::is_field) {
    return from_rat(v);
  } else {
    return from_int(v);
  }
}

template <class S>
SquareMatrix<S> to_matrix(py::sequence rows) {
  const int n = static_cast<int>(py::len(rows));
  if (n == 0) throw py::value_error("empty matrix");
  SquareMatrix<S> m(n);
  int r = 0;
  for (py::handle row : rows) {
    auto cols = py::cast<py::sequence>(row);
    if (static_cast<int>(py::len(cols)) != n)
      throw py::value_error("matrix rows must all have length " + std::to_string(n));
    int c = 0;
    for (py::handle x : cols) m(r, c++) = convert<S>(x);
    ++r;
  }
  return m;
}

template <class S>
std::vector<S> to_values(py::sequence seq) {
  std::vector<S> out;
  out.reserve(py::len(seq));
  for (py::handle x : seq) out.push_back(convert<S>(x));
  return out;
}

template <class S>
PointSet<S> to_pointset(py::sequence pts) {
  if (py::len(pts) == 0) throw py::value_error("empty point sequence");
  auto first = py::cast<py::sequence>(pts[0]);
  PointSet<S> ps(static_cast<int>(py::len(first)));
  for (py::handle p : pts) ps.add(to_values<S>(py::cast<py::sequence>(p)));
  return ps;
}

template <class S>
py::list matrix_rows(const SquareMatrix<S>& m) {
  py::list rows;
  for (int i = 0; i < m.dim(); ++i) {
    py::list row;
    for (int j = 0; j < m.dim(); ++j) row.append(box(m(i, j)));
    rows.append(row);
  }
  return rows;
}

template <class S>
S run_static_det(const SquareMatrix<S>& m, const std::string& algo) {
  if (algo == "auto") return detail::det_static(m);
  if (algo == "laplace") return det_laplace(m);
  if (algo == "bird") return det_bird(m);
  if (algo == "bareiss") return det_bareiss(m);
  throw py::value_error("unknown algorithm: " + algo + " (auto|laplace|bird|bareiss|lu)");
}

py::object py_det(py::sequence rows, const std::string& algo) {
  if (all_int_entries(rows)) {
    auto m = to_matrix<ExactInt>(rows);
    if (algo == "lu") {
      // LU needs a field; an integer matrix still has an integer det.
      SquareMatrix<ExactRat> q(m.dim());
      for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) q(i, j) = ExactRat(m(i, j));
      return from_int(det_lu(q).num());
    }
    return from_int(run_static_det(m, algo));
  }
  auto m = to_matrix<ExactRat>(rows);
  return from_rat(algo == "lu" ? det_lu(m) : run_static_det(m, algo));
}

py::tuple py_adjoint(py::sequence rows) {
  if (all_int_entries(rows)) {
    auto [adj, det] = adjoint(to_matrix<ExactInt>(rows));
    return py::make_tuple(matrix_rows(adj), from_int(det));
  }
  auto [adj, det] = adjoint(to_matrix<ExactRat>(rows));
  return py::make_tuple(matrix_rows(adj), from_rat(det));
}

py::tuple py_inverse(py::sequence rows) {
  auto [inv, det] = inverse(to_matrix<ExactRat>(rows));
  if (det.is_zero()) throw SingularMatrix("inverse of a singular matrix");
  return py::make_tuple(matrix_rows(inv), from_rat(det));
}

// Dynamic adjoint over whichever scalar kind the constructor saw.
class PyDynAdjoint {
 public:
  PyDynAdjoint(py::sequence rows)
      : state_(all_int_entries(rows)
                   ? State(dynadj_init(to_matrix<ExactInt>(rows)))
                   : State(dynadj_init(to_matrix<ExactRat>(rows)))) {}

  int dim() const {
    return std::visit([](const auto& s) { return s.dim(); }, state_);
  }
  py::object det() const {
    return std::visit([](const auto& s) { return box(s.det()); }, state_);
  }
  py::object matrix() const {
    return std::visit([](const auto& s) { return py::object(matrix_rows(s.matrix())); }, state_);
  }
  py::object adjugate() const {
    return std::visit([](const auto& s) { return py::object(matrix_rows(s.adjugate())); }, state_);
  }
  py::object peek_det(int col, py::sequence values) const {
    return std::visit(
        [&](const auto& s) {
          using Sc = std::decay_t<decltype(s.det())>;
          return box(dynadj_peek_det(s, ColumnUpdate<Sc>{col, to_values<Sc>(values)}));
        },
        state_);
  }
  void update(int col, py::sequence values) {
    std::visit(
        [&](auto& s) {
          using Sc = std::decay_t<decltype(s.det())>;
          s.apply(ColumnUpdate<Sc>{col, to_values<Sc>(values)});
        },
        state_);
  }

 private:
  using State = std::variant<DynAdjState<ExactInt>, DynAdjState<ExactRat>>;
  State state_;
};

class PyDynInverse {
 public:
  PyDynInverse(py::sequence rows) : state_(dyninv_init(to_matrix<ExactRat>(rows))) {}

  int dim() const { return state_.dim(); }
  py::object det() const { return from_rat(state_.det()); }
  py::object matrix() const { return matrix_rows(state_.matrix()); }
  py::object inverse() const { return matrix_rows(state_.inverse()); }
  py::object peek_det(int col, py::sequence values) const {
    return from_rat(dyninv_peek_det(state_, ColumnUpdate<ExactRat>{col, to_values<ExactRat>(values)}));
  }
  void update(int col, py::sequence values) {
    state_.apply(ColumnUpdate<ExactRat>{col, to_values<ExactRat>(values)});
  }

 private:
  DynInvState<ExactRat> state_;
};

HullConfig make_config(const std::string& algo, int threshold_dim, const std::string& on_zero,
                       const std::string& order) {
  HullConfig cfg;
  if (algo == "auto") {
    cfg.predicate_mode = PredicateMode::Auto;
  } else if (algo == "hashed") {
    cfg.predicate_mode = PredicateMode::Hashed;
  } else if (algo == "laplace") {
    cfg.predicate_mode = PredicateMode::Laplace;
  } else {
    throw py::value_error("unknown algorithm: " + algo + " (auto|hashed|laplace)");
  }
  cfg.threshold_dim = threshold_dim;
  if (on_zero == "fail") {
    cfg.on_zero = ZeroPredicate::Fail;
  } else if (on_zero == "not-visible") {
    cfg.on_zero = ZeroPredicate::NotVisible;
  } else {
    throw py::value_error("unknown on_zero policy: " + on_zero + " (fail|not-visible)");
  }
  if (order == "lex") {
    cfg.order = InsertionOrder::Lexicographic;
  } else if (order == "input") {
    cfg.order = InsertionOrder::InputOrder;
  } else {
    throw py::value_error("unknown insertion order: " + order + " (lex|input)");
  }
  return cfg;
}

class PyHull {
 public:
  PyHull(py::sequence points, const std::string& algo, int threshold_dim,
         const std::string& on_zero, const std::string& order) {
    const HullConfig cfg = make_config(algo, threshold_dim, on_zero, order);
    if (all_int_entries(points)) {
      tri_ = convex_hull(to_pointset<ExactInt>(points), cfg);
    } else {
      tri_ = convex_hull(to_pointset<ExactRat>(points), cfg);
    }
  }

  int dim() const {
    return std::visit([](const auto& t) { return t.dim(); }, tri_);
  }
  std::vector<VertexId> vertices() const {
    return std::visit([](const auto& t) { return t.hull_vertices(); }, tri_);
  }
  py::object volume() const {
    return std::visit([](const auto& t) { return from_rat(t.volume()); }, tri_);
  }
  std::size_t n_cells() const {
    return std::visit([](const auto& t) { return t.cells().size(); }, tri_);
  }
  bool has_states() const {
    return std::visit([](const auto& t) { return t.has_states(); }, tri_);
  }

  // -1 means outside the hull (kOutsideCell); anything else is a cell id
  // usable as the hint of the next call.
  CellId locate(py::sequence point, CellId hint) const {
    return std::visit(
        [&](const auto& t) {
          using Sc = typename std::decay_t<decltype(t)>::Scalar;
          const auto q = to_values<Sc>(point);
          return t.locate(std::span<const Sc>(q), hint);
        },
        tri_);
  }
  CellId locate_scratch(py::sequence point, CellId hint) const {
    return std::visit(
        [&](const auto& t) {
          using Sc = typename std::decay_t<decltype(t)>::Scalar;
          const auto q = to_values<Sc>(point);
          return t.locate_scratch(std::span<const Sc>(q), StaticDetKind::Auto, hint);
        },
        tri_);
  }
  bool contains(py::sequence point) const {
    return (has_states() ? locate(point, 0) : locate_scratch(point, 0)) != kOutsideCell;
  }

 private:
  std::variant<Triangulation<ExactInt>, Triangulation<ExactRat>> tri_;
};

py::list py_gen_points(long n, int d, const std::string& dist, const std::string& scenario,
                       std::uint64_t seed) {
  AnyPointSet ps = gen_points(n, d, parse_distribution(dist), parse_scenario(scenario), seed);
  py::list out;
  std::visit(
      [&](const auto& set) {
        for (const auto& p : set.pts) {
          py::list q;
          for (const auto& x : p) q.append(box(x));
          out.append(q);
        }
      },
      ps);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact determinants, dynamic determinant updates, convex hulls";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", base);
  py::register_exception<SingularMatrix>(m, "SingularMatrix", base);
  py::register_exception<SingularUpdate>(m, "SingularUpdate", base);
  py::register_exception<NonExactDivision>(m, "NonExactDivision", base);
  py::register_exception<DegenerateInput>(m, "DegenerateInput", base);
  py::register_exception<TooFewPoints>(m, "TooFewPoints", base);
  py::register_exception<InvalidScenario>(m, "InvalidScenario", base);
  py::register_exception<ParseError>(m, "ParseError", base);

  m.def("det", &py_det, py::arg("rows"), py::arg("algo") = "auto",
        "Exact determinant of a square matrix given as nested sequences.\n"
        "Integer entries use the division-free integer kernel; Fraction,\n"
        "float or 'p/q' string entries use the rational one. algo is one of\n"
        "auto, laplace, bird, bareiss, lu.");
  m.def("adjoint", &py_adjoint, py::arg("rows"),
        "Adjugate matrix and determinant, as (rows, det).");
  m.def("inverse", &py_inverse, py::arg("rows"),
        "Exact inverse over rationals, as (rows, det). Raises SingularMatrix.");

  py::class_<PyDynAdjoint>(m, "DynamicAdjoint",
                           "Maintains (matrix, adjugate, determinant) under column\n"
                           "replacements. Integer input keeps an integer state; every\n"
                           "internal division is exact.")
      .def(py::init<py::sequence>(), py::arg("rows"))
      .def_property_readonly("dim", &PyDynAdjoint::dim)
      .def_property_readonly("det", &PyDynAdjoint::det)
      .def("matrix", &PyDynAdjoint::matrix)
      .def("adjugate", &PyDynAdjoint::adjugate)
      .def("peek_det", &PyDynAdjoint::peek_det, py::arg("col"), py::arg("values"),
           "Determinant after replacing a column, without committing.")
      .def("update", &PyDynAdjoint::update, py::arg("col"), py::arg("values"),
           "Replace a column in place. Raises SingularUpdate (state unchanged)\n"
           "when the new matrix would be singular.");

  py::class_<PyDynInverse>(m, "DynamicInverse",
                           "Maintains (matrix, inverse, determinant) over rationals\n"
                           "under column replacements.")
      .def(py::init<py::sequence>(), py::arg("rows"))
      .def_property_readonly("dim", &PyDynInverse::dim)
      .def_property_readonly("det", &PyDynInverse::det)
      .def("matrix", &PyDynInverse::matrix)
      .def("inverse", &PyDynInverse::inverse)
      .def("peek_det", &PyDynInverse::peek_det, py::arg("col"), py::arg("values"))
      .def("update", &PyDynInverse::update, py::arg("col"), py::arg("values"));

  py::class_<PyHull>(m, "Hull",
                     "Full-dimensional convex hull with exact predicates. 'hashed'\n"
                     "caches dynamic determinant states per cell and enables locate();\n"
                     "'laplace' recomputes every predicate from scratch; 'auto' hashes\n"
                     "from threshold_dim on.")
      .def(py::init<py::sequence, const std::string&, int, const std::string&,
                    const std::string&>(),
           py::arg("points"), py::arg("algo") = "auto", py::arg("threshold_dim") = 6,
           py::arg("on_zero") = "fail", py::arg("order") = "lex")
      .def_property_readonly("dim", &PyHull::dim)
      .def_property_readonly("has_states", &PyHull::has_states)
      .def("vertices", &PyHull::vertices, "Hull vertex ids, ascending.")
      .def("volume", &PyHull::volume, "Exact volume as a Fraction.")
      .def("n_cells", &PyHull::n_cells)
      .def("locate", &PyHull::locate, py::arg("point"), py::arg("hint") = 0,
           "Cell id containing the point, or -1 if outside. Needs a hashed build.")
      .def("locate_scratch", &PyHull::locate_scratch, py::arg("point"), py::arg("hint") = 0,
           "Same walk with from-scratch determinants; works on any build.")
      .def("contains", &PyHull::contains, py::arg("point"));

  m.def("convex_hull",
        [](py::sequence points, const std::string& algo, int threshold_dim,
           const std::string& on_zero, const std::string& order) {
          return PyHull(points, algo, threshold_dim, on_zero, order);
        },
        py::arg("points"), py::arg("algo") = "auto", py::arg("threshold_dim") = 6,
        py::arg("on_zero") = "fail", py::arg("order") = "lex",
        "Build a Hull from a sequence of points. order 'lex' sorts the input\n"
        "first (beneath-and-beyond); 'input' inserts points as given.");

  m.def("gen_points", &py_gen_points, py::arg("n"), py::arg("d"), py::arg("dist") = "cube",
        py::arg("scenario") = "d", py::arg("seed") = 1,
        "Random points: dist is cube, ball or sphere; scenario a|b|c|d picks\n"
        "the coordinate grid (c and d are integer grids).");

  m.attr("__version__") = "0.1.0";
}
