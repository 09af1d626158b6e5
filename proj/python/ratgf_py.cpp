// Python bindings. Documents cross the boundary as JSON text in the same
// schemas the command-line tool reads and writes; the ratgf package wraps
// them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ratgf/genfun.hpp"
#include "ratgf/io.hpp"
#include "ratgf/solver.hpp"

namespace py = pybind11;
using namespace ratgf;

namespace {

io::Problem load(const std::string& problem_json) {
  io::Problem p = io::parse_problem_text(problem_json);
  require_valid(io::validate(p));
  return p;
}

RationalFn load_gf(const std::string& gf_json) { return io::parse_gf(io::json::parse(gf_json)); }

MultiIndex to_index(const std::vector<std::int64_t>& v) { return MultiIndex(v); }

}  // namespace

PYBIND11_MODULE(_ratgf, m) {
  m.doc() = "Exact rational generating functions of multidimensional difference equations";

  static py::exception<Error> error_type(m, "RatgfError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(error_type.ptr(), e.what());
    }
  });

  m.def("genfunc", [](const std::string& problem, bool zw) {
    const io::Problem p = load(problem);
    return io::gf_to_json(assemble_gf(p.equation, p.data), zw).dump();
  }, py::arg("problem"), py::arg("zw") = false);

  m.def("solve", [](const std::string& problem, const std::vector<std::int64_t>& box) {
    const io::Problem p = load(problem);
    return io::table_to_json(solve_box(p.equation, p.data, to_index(box))).dump();
  }, py::arg("problem"), py::arg("box"));

  m.def("green", [](const std::string& problem, const std::vector<std::int64_t>& tau, bool zw) {
    const io::Problem p = io::parse_problem_text(problem);
    require_valid(validate_equation(p.equation));
    return io::gf_to_json(green_gf(p.equation, to_index(tau)), zw).dump();
  }, py::arg("problem"), py::arg("tau"), py::arg("zw") = false);

  m.def("expand", [](const std::string& gf, std::int64_t order) {
    return io::expansion_to_json(expand_at_infinity(load_gf(gf), order)).dump();
  }, py::arg("gf"), py::arg("order"));

  m.def("coeff_at", [](const std::string& gf, const std::vector<std::int64_t>& x) {
    return coeff_at(load_gf(gf), to_index(x)).str();
  }, py::arg("gf"), py::arg("x"));

  m.def("ratfn_eq", [](const std::string& f, const std::string& g) {
    return equivalent(load_gf(f), load_gf(g));
  }, py::arg("f"), py::arg("g"));

  m.def("theorem1_series", [](const std::string& problem, int formula, std::int64_t order) {
    if (formula < 1 || formula > 4) throw py::value_error("formula must be 1, 2, 3 or 4");
    const io::Problem p = load(problem);
    return io::expansion_to_json(theorem1_series(p.equation, p.data, static_cast<Formula>(formula), order)).dump();
  }, py::arg("problem"), py::arg("formula"), py::arg("order"));

  m.def("verify", [](const std::string& problem, const std::vector<std::int64_t>& box) {
    const io::Problem p = load(problem);
    return io::report_to_json(verify(p.equation, p.data, to_index(box), p.expected)).dump();
  }, py::arg("problem"), py::arg("box"));

  m.def("faces", [](const std::vector<std::int64_t>& corner) {
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::vector<std::int64_t>>>> out;
    for (const Face& f : faces(to_index(corner))) {
      std::vector<std::vector<std::int64_t>> pts;
      for (const MultiIndex& x : f.points) pts.push_back(x.values());
      out.emplace_back(f.flags.values(), std::move(pts));
    }
    return out;
  }, py::arg("m"));
}
