#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "digbin/digits.hpp"
#include "digbin/ptm.hpp"
#include "digbin/report.hpp"
#include "digbin/sierpinski.hpp"

namespace py = pybind11;
using namespace digbin;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python package wraps
// them in fractions.Fraction.
Rational to_rational(const py::handle& h) {
  return Rational::parse(py::str(h).cast<std::string>());
}

std::vector<Rational> to_rationals(const py::iterable& items) {
  std::vector<Rational> out;
  for (const auto& h : items) out.push_back(to_rational(h));
  return out;
}

std::vector<std::string> to_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::string matrix_json(const std::string& kind, unsigned b, unsigned depth,
                        const std::optional<std::string>& eval, std::size_t cap) {
  std::optional<Rational> x0;
  if (eval) x0 = Rational::parse(*eval);
  return report::to_json(report::build_matrix(report::parse_kind(kind), b, depth, cap, x0)).dump();
}

py::object witness_dict(const std::optional<Mismatch<Rational>>& w) {
  if (!w) return py::none();
  py::dict d;
  d["row"] = w->row;
  d["col"] = w->col;
  d["lhs"] = w->lhs.str();
  d["rhs"] = w->rhs.str();
  return std::move(d);
}

}  // namespace

PYBIND11_MODULE(_digbin, m) {
  m.doc() = "Exact Sierpinski matrices, digital binomial identities and PTM polynomials";

  m.def("to_digits", [](digits::Natural n, unsigned b) { return digits::to_digits(n, b).digits; });
  m.def("digit_sum", &digits::digit_sum);
  m.def("ptm", &digits::ptm);
  m.def("parity_w", &digits::parity_w);
  m.def("dominates", &digits::dominates);
  m.def("carry_free", &digits::carry_free);
  m.def("multiplicity", &digits::multiplicity);
  m.def("dominated_set", &digits::dominated_set);

  m.def("matrix_json", &matrix_json, py::arg("kind"), py::arg("base"), py::arg("depth"),
        py::arg("eval") = py::none(), py::arg("cap") = kDefaultCap);
  m.def("s_entry", [](unsigned b, unsigned depth, digits::Natural j, digits::Natural k) {
    return sierpinski::s_entry(b, depth, j, k).str();
  });
  m.def("binom_rising", [](unsigned d) { return binom_rising(d, Polynomial::x()).str(); });
  m.def("verify_one_parameter", [](unsigned b, unsigned depth, std::size_t cap) {
    return sierpinski::verify_one_parameter(b, depth, cap).holds;
  }, py::arg("base"), py::arg("depth"), py::arg("cap") = kDefaultCap);
  m.def("verify_closed_form", [](unsigned b, unsigned depth, std::size_t cap) {
    return sierpinski::verify_closed_form(b, depth, cap).holds;
  }, py::arg("base"), py::arg("depth"), py::arg("cap") = kDefaultCap);
  m.def("digital_binomial_sides", [](digits::Natural n, unsigned b) {
    const auto [l, r] = sierpinski::digital_binomial_sides(n, b);
    return std::pair{l.str(), r.str()};
  });
  m.def("multiplicity_identity_sides", [](digits::Natural n, unsigned b) {
    const auto [l, r] = sierpinski::multiplicity_identity_sides(n, b);
    return std::pair{l.str(), r.str()};
  });
  m.def("gould_check", py::overload_cast<unsigned>(&sierpinski::gould_check));
  m.def("shifted_gould_check", &sierpinski::shifted_gould_check);
  m.def("stirling_first", [](unsigned n, unsigned k) {
    return py::int_(py::str(sierpinski::stirling_first(n, k).get_str()));
  });
  m.def("stirling_identity_check", &sierpinski::stirling_identity_check);
  m.def("x_power_entry_check", &sierpinski::x_power_entry_check);
  m.def("exp_generator_matches", [](unsigned b, unsigned depth) {
    const auto x = sierpinski::x_matrix(b, depth);
    return sierpinski::matrix_exp_nilpotent(x, sierpinski::generator_nilpotency_bound(b, depth)) ==
           sierpinski::s_matrix(b, depth);
  });
  m.def("structured_apply", [](unsigned b, unsigned depth, const py::handle& x0, const py::iterable& v) {
    const auto chain = sierpinski::KroneckerChain::sierpinski(b, depth, to_rational(x0));
    return to_strings(sierpinski::structured_apply(chain, to_rationals(v)));
  });

  m.def("coefficients_by_formula", [](unsigned depth, const py::iterable& a) {
    return to_strings(ptm::coefficients_by_formula(depth, ptm::ZeroSumVector(to_rationals(a))));
  });
  m.def("ptm_report_json", [](unsigned depth, const py::iterable& a) {
    return report::ptm_report(depth, ptm::ZeroSumVector(to_rationals(a))).dump();
  });
  m.def("base3_corollary_check", [](digits::Natural n, const py::iterable& a) {
    return ptm::base3_corollary_check(n, ptm::ZeroSumVector(to_rationals(a)));
  });
  m.def("prouhet_partition", [](unsigned b, unsigned degree, std::size_t cap) {
    return ptm::prouhet_partition(b, degree, cap);
  }, py::arg("base"), py::arg("degree"), py::arg("cap") = kDefaultCap);
  m.def("power_relation_check", [](unsigned b, unsigned depth) { return ptm::power_relation_check(b, depth); });
  m.def("eigen_poly_annihilation_check", &ptm::eigen_poly_annihilation_check);
  m.def("braid_check", [](unsigned b, unsigned depth) {
    const auto r = ptm::braid_check(b, depth);
    return py::make_tuple(r.holds, witness_dict(r.witness));
  });

  m.def("run_suite_json", [](const std::string& suite, unsigned b, unsigned depth,
                             std::uint64_t seed, std::size_t cap) {
    report::SuiteConfig config{b, depth, cap, seed};
    return report::suite_report(suite, config, report::run_suite(suite, config)).dump();
  }, py::arg("suite"), py::arg("base"), py::arg("depth"), py::arg("seed") = 1,
        py::arg("cap") = kDefaultCap);

  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_ValueError);
}
