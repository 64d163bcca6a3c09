#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "brumer/case_file.hpp"
#include "brumer/cohomology.hpp"
#include "brumer/errors.hpp"
#include "brumer/selftest.hpp"
#include "brumer/stickelberger.hpp"
#include "brumer/verifier.hpp"

namespace py = pybind11;
using namespace brumer;

namespace {

std::vector<std::string> coefficient_strings(const GroupRingElement& x) {
  std::vector<std::string> out;
  for (long g = 0; g < x.group()->order(); ++g) out.push_back(x.coefficient(g).get_str());
  return out;
}

py::dict theta(long conductor, const std::vector<long>& deplete, const std::vector<long>& smooth) {
  const auto d = DirichletGroup::full(conductor);
  std::vector<PlaceSpec> places{DirichletGroup::infinite_place(true, false)};
  for (long q : prime_factors(conductor)) places.push_back(d.prime_place(q, true, false));
  for (long q : deplete)
    if (conductor % q != 0) places.push_back(d.prime_place(q, true, false));
  for (long q : smooth) places.push_back(d.prime_place(q, false, true));
  check_disjoint(places);
  const auto assembled = assemble_theta(d.group(), places, compute_l_value_table(d, places));
  const auto oracle = kubota_oracle_theta(d, places);
  std::vector<long> residues(static_cast<std::size_t>(d.group()->order()), 0);
  for (long a = 1; a < conductor; ++a)
    if (d.element_of(a) >= 0) residues[static_cast<std::size_t>(d.element_of(a))] = a;
  py::dict out;
  out["residues"] = residues;
  out["coefficients"] = coefficient_strings(assembled.theta.with_ring(BaseRing::rationals()));
  out["routes_agree"] = assembled.theta == oracle.theta;
  out["deligne_ribet"] = assembled.deligne_ribet;
  out["integral"] = assembled.integral;
  return out;
}

std::vector<std::string> tate(const std::vector<long>& invariants, const std::vector<long>& multipliers, long coefficients,
                              int degree) {
  std::vector<long> c(invariants.size(), 0);
  const GroupPtr g = build_group(invariants, c);
  const GModule m = multipliers.empty() ? GModule::trivial(g, {Integer(coefficients)})
                                        : GModule::twisted(g, {Integer(coefficients)}, multipliers);
  std::vector<std::string> out;
  for (const auto& d : tate_group(m, degree).invariants()) out.push_back(d.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_brumer, m) {
  m.doc() = "Stickelberger elements, Fitting ideals and case-file verification";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error_type;
  error_type.call_once_and_store_result([&] { return py::exception<Error>(m, "BrumerError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error_type.get_stored(), (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "verify",
      [](const std::string& path, bool strict_provenance) {
        return verify_case(load_case(path, strict_provenance)).to_json();
      },
      py::arg("path"), py::arg("strict_provenance") = false, "Verify a case file; returns the JSON report.");
  m.def(
      "verify_text",
      [](const std::string& text, bool strict_provenance) {
        return verify_case(parse_case(text, strict_provenance)).to_json();
      },
      py::arg("text"), py::arg("strict_provenance") = false, "Verify case-file JSON given as a string.");
  m.def("theta", &theta, py::arg("conductor"), py::arg("deplete") = std::vector<long>{},
        py::arg("smooth") = std::vector<long>{}, "Stickelberger element for (Z/f)^*, coefficients as rational strings.");
  m.def("tate", &tate, py::arg("invariants"), py::arg("multipliers") = std::vector<long>{},
        py::arg("coefficients") = 0L, py::arg("degree") = 0,
        "Invariant factors of a Tate cohomology group of a cyclic-coefficient module.");
  m.def(
      "selftest",
      [](std::uint64_t seed, long rounds) {
        py::list out;
        for (const auto& p : run_selftest(seed, rounds)) {
          py::dict d;
          d["name"] = p.name;
          d["cases"] = p.cases;
          d["failures"] = p.failures;
          d["passed"] = p.passed();
          out.append(d);
        }
        return out;
      },
      py::arg("seed") = 1, py::arg("rounds") = 10);
}
