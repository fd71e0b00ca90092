#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyset/calculus.hpp"
#include "cyset/census.hpp"
#include "cyset/error.hpp"
#include "cyset/garside.hpp"
#include "cyset/germ.hpp"
#include "cyset/zappa.hpp"

namespace py = pybind11;
using namespace cyset;

namespace {

std::vector<Index> images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

std::vector<std::vector<Index>> table(const CycleSet& s) {
  std::vector<std::vector<Index>> rows;
  for (const auto& p : s.rows()) rows.push_back(images(p));
  return rows;
}

py::object witness_tuple(const std::optional<LawWitness>& w) {
  if (!w) return py::none();
  return py::make_tuple(w->i, w->j, w->u, w->left, w->right);
}

}  // namespace

PYBIND11_MODULE(_cyset, m) {
  m.doc() = "Finite cycle sets, their monomial representation, germs and census (0-based indices)";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&] { return py::exception<Error>(m, "CysetError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error.get_stored(), (std::string(code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<CycleSet>(m, "CycleSet")
      .def(py::init([](const std::vector<std::vector<Index>>& rows) { return CycleSet::from_table(rows); }),
           py::arg("table"))
      .def_static("from_cycles", &CycleSet::from_cycles, py::arg("rows"))
      .def_static("trivial", &CycleSet::trivial, py::arg("n"))
      .def_static("cyclic", &CycleSet::cyclic, py::arg("n"))
      .def_static("parse", [](const std::string& text) { return parse_cys(text); }, py::arg("text"))
      .def_property_readonly("size", &CycleSet::size)
      .def("__len__", &CycleSet::size)
      .def("psi", [](const CycleSet& s, Index i) { return images(s.psi(i)); }, py::arg("i"))
      .def("star", &CycleSet::star)
      .def("table", &table)
      .def("to_cys", [](const CycleSet& s) { return format_cys(s); })
      .def("__eq__", [](const CycleSet& a, const CycleSet& b) { return a == b; })
      .def("__repr__", [](const CycleSet& s) { return "CycleSet(" + describe(s) + ")"; });

  py::class_<MonomialElement>(m, "MonomialElement")
      .def(py::init([](std::vector<Exponent> cp, std::vector<Index> perm) {
             return MonomialElement{std::move(cp), Permutation::from_images(std::move(perm))};
           }),
           py::arg("cp"), py::arg("perm"))
      .def_readonly("cp", &MonomialElement::cp)
      .def_property_readonly("perm", [](const MonomialElement& g) { return images(g.perm); })
      .def("length", &MonomialElement::length)
      .def("is_positive", &MonomialElement::is_positive)
      .def("__mul__", [](const MonomialElement& a, const MonomialElement& b) { return multiply(a, b); })
      .def("inverse", [](const MonomialElement& g) { return inverse(g); })
      .def("__eq__", [](const MonomialElement& a, const MonomialElement& b) { return a == b; })
      .def("__repr__", &MonomialElement::to_string);

  m.def("validate", [](const CycleSet& s) { return witness_tuple(validate(s).witness); },
        "None when the law holds, else (i, j, u, left, right)");
  m.def("is_cycle_set", [](const std::vector<std::vector<Index>>& rows) { return validate(rows).valid(); });
  m.def("theta", &theta);
  m.def("omega", &omega);
  m.def("pi", &pi);
  m.def("word_to_element", &word_to_element);
  m.def("pi_expression", &pi_expression);
  m.def("words_equal", &words_equal);
  m.def("left_divides", &left_divides);
  m.def("right_divides", &right_divides);
  m.def("gcd_left", &gcd_left);
  m.def("lcm_left", &lcm_left);
  m.def("gcd_right", &gcd_right);
  m.def("lcm_right", &lcm_right);
  m.def("delta", &delta, py::arg("s"), py::arg("k") = 1);

  m.def("class_of", &class_of);
  m.def("germ_order", [](const CycleSet& s) { return Germ(s).closure().size; });
  m.def("is_permutation_free", [](const CycleSet& s) { return Germ(s).closure().permutation_free(); });
  m.def("retraction", &retraction);
  m.def("class_bounds", [](unsigned n) {
    const auto b = class_bounds(n);
    return py::dict(py::arg("a_n") = b.a_n, py::arg("landau_g") = b.landau_g,
                    py::arg("factorial") = b.factorial_bound);
  });

  m.def("zappa_compose", [](const CycleSet& s1, const CycleSet& s2) {
    const auto r = zappa_compose(s1, s2);
    return py::dict(py::arg("candidate") = r.candidate, py::arg("valid") = r.valid(),
                    py::arg("witness") = witness_tuple(r.validation.witness), py::arg("d1") = r.d1,
                    py::arg("d2") = r.d2, py::arg("u") = r.u, py::arg("v") = r.v);
  });
  m.def("sylow_decompose", [](const CycleSet& s) {
    py::list out;
    for (const auto& f : sylow_decompose(s))
      out.append(py::dict(py::arg("prime") = f.prime, py::arg("exponent") = f.exponent,
                          py::arg("beta") = f.beta, py::arg("cycle_set") = f.cycle_set));
    return out;
  });
  m.def("sylow_recompose", py::overload_cast<const std::vector<CycleSet>&>(&sylow_recompose));

  m.def(
      "census",
      [](std::size_t n, bool iso, std::size_t cap) {
        return enumerate_all(n, iso ? CensusMode::UpToIso : CensusMode::Labeled, cap);
      },
      py::arg("n"), py::arg("iso") = false, py::arg("cap") = kDefaultCensusCap);
  m.def(
      "census_stats",
      [](std::size_t n, bool iso) {
        const auto r = census_stats(n, iso ? CensusMode::UpToIso : CensusMode::Labeled);
        return py::dict(py::arg("labeled") = r.total_count, py::arg("iso") = r.iso_count, py::arg("dmax") = r.dmax,
                        py::arg("histogram") = r.class_histogram,
                        py::arg("prime_power_fraction") = r.prime_power_fraction,
                        py::arg("violations") = r.violations);
      },
      py::arg("n"), py::arg("iso") = false);
}
