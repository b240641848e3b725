#include "digbin/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "digbin/digits.hpp"
#include "digbin/sierpinski.hpp"

namespace digbin::report {

namespace {

template <typename T>
std::string entry_str(const T& v) {
  return v.str();
}

template <typename T>
json mismatch_json(const Mismatch<T>& m) {
  return json{{"row", m.row}, {"col", m.col}, {"lhs", entry_str(m.lhs)}, {"rhs", entry_str(m.rhs)}};
}

Check make(std::string name, const SuiteConfig& c, bool ok, json witness = nullptr) {
  return Check{std::move(name), c.base, c.depth, ok ? Status::Pass : Status::Fail,
               std::move(witness)};
}

void one_parameter_suite(const SuiteConfig& c, std::vector<Check>& out) {
  const auto closed = sierpinski::verify_closed_form(c.base, c.depth, c.cap);
  out.push_back(make("closed-form-entries", c, closed.holds,
                     closed.witness ? mismatch_json(*closed.witness) : json(nullptr)));
  const auto group = sierpinski::verify_one_parameter(c.base, c.depth, c.cap);
  out.push_back(make("one-parameter-law", c, group.holds,
                     group.witness ? mismatch_json(*group.witness) : json(nullptr)));

  json gould_witness = nullptr;
  for (unsigned n = 0; n <= 8 && gould_witness.is_null(); ++n)
    if (!sierpinski::gould_check(n)) gould_witness = json{{"n", n}};
  out.push_back(make("gould-identity", c, gould_witness.is_null(), gould_witness));

  json shifted_witness = nullptr;
  for (unsigned p = 1; p <= 8 && shifted_witness.is_null(); ++p)
    for (unsigned q = 1; q <= p && shifted_witness.is_null(); ++q)
      if (!sierpinski::shifted_gould_check(p, q)) shifted_witness = json{{"p", p}, {"q", q}};
  out.push_back(make("shifted-gould-identity", c, shifted_witness.is_null(), shifted_witness));
}

void digital_binomial_suite(const SuiteConfig& c, std::vector<Check>& out) {
  const auto limit = static_cast<digits::Natural>(sierpinski::checked_dim(c.base, c.depth, c.cap));
  json thm = nullptr;
  json cor = nullptr;
  json binary = nullptr;
  const auto xy = Polynomial::x() + Polynomial::y();
  for (digits::Natural n = 0; n < limit; ++n) {
    const auto [lhs, rhs] = sierpinski::digital_binomial_sides(n, c.base);
    if (thm.is_null() && !(lhs == rhs)) {
      thm = json{{"n", n}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
    }
    const auto [mlhs, mrhs] = sierpinski::multiplicity_identity_sides(n, c.base);
    if (cor.is_null() && !(mlhs == mrhs && mlhs == lhs)) {
      cor = json{{"n", n}, {"lhs", mlhs.str()}, {"rhs", mrhs.str()}};
    }
    if (c.base == 2 && binary.is_null()) {
      const auto expected = xy.pow(static_cast<unsigned>(digits::digit_sum(n, 2)));
      if (!(lhs == expected && rhs == expected)) binary = json{{"n", n}, {"rhs", rhs.str()}};
    }
  }
  out.push_back(make("digital-binomial-theorem", c, thm.is_null(), thm));
  out.push_back(make("digit-multiplicity-form", c, cor.is_null(), cor));
  if (c.base == 2) out.push_back(make("binary-digital-binomial", c, binary.is_null(), binary));
}

void exp_suite(const SuiteConfig& c, std::vector<Check>& out) {
  const PolyMatrix x = sierpinski::x_matrix(c.base, c.depth, c.cap);
  const unsigned bound = sierpinski::generator_nilpotency_bound(c.base, c.depth);
  const PolyMatrix e = sierpinski::matrix_exp_nilpotent(x, bound);
  const auto mismatch = e.first_mismatch(sierpinski::s_matrix(c.base, c.depth, c.cap));
  out.push_back(make("exp-generator", c, !mismatch, mismatch ? mismatch_json(*mismatch) : json(nullptr)));
  out.push_back(make("generator-nilpotent", c, x.pow(bound + 1).is_zero()));

  json power_witness = nullptr;
  for (unsigned n = 1; n < c.base && power_witness.is_null(); ++n)
    if (!sierpinski::x_power_entry_check(c.base, n)) power_witness = json{{"n", n}};
  out.push_back(make("generator-power-entries", c, power_witness.is_null(), power_witness));
}

void stirling_suite(const SuiteConfig& c, std::vector<Check>& out) {
  json identity = nullptr;
  for (unsigned l = 1; l <= 12 && identity.is_null(); ++l)
    for (unsigned n = 1; n <= l && identity.is_null(); ++n)
      if (!sierpinski::stirling_identity_check(l, n)) identity = json{{"l", l}, {"n", n}};
  out.push_back(make("stirling-cycle-identity", c, identity.is_null(), identity));

  json gen = nullptr;
  for (unsigned n = 0; n <= 12 && gen.is_null(); ++n) {
    const Polynomial rising = binom_rising(n, Polynomial::x()).scaled(Rational(factorial(n)));
    for (unsigned k = 0; k <= n; ++k) {
      if (rising.coefficient(k, 0) != Rational(sierpinski::stirling_first(n, k))) {
        gen = json{{"n", n}, {"k", k}};
        break;
      }
    }
  }
  out.push_back(make("stirling-generating-function", c, gen.is_null(), gen));
}

void factorization_suite(const SuiteConfig& c, std::vector<Check>& out) {
  const unsigned b = c.base;
  const std::size_t dim = sierpinski::checked_dim(b, c.depth, c.cap);
  const RationalMatrix m = ptm::m_matrix(b, c.depth, c.cap);
  const RationalMatrix s = ptm::s_int(b, c.depth, c.cap);
  const RationalMatrix id = RationalMatrix::identity(dim);
  out.push_back(make("m-inverse-is-sierpinski", c, m * s == id && s * m == id));
  out.push_back(make("s-int-equals-s-at-one", c,
                     s == evaluate(sierpinski::s_matrix(b, c.depth, c.cap), Rational(1))));

  std::mt19937_64 rng(c.seed);
  json formula = nullptr;
  json vanish = nullptr;
  json factor = nullptr;
  json order = nullptr;
  json corollary = nullptr;
  for (unsigned trial = 0; trial < c.random_vectors; ++trial) {
    const auto a = ptm::ZeroSumVector::random(b, rng);
    auto vec = [&a] { return rationals_json(a.entries()); };
    const auto by_formula = ptm::coefficients_by_formula(c.depth, a);
    if (formula.is_null() && by_formula != ptm::coefficients_by_matrix(c.depth, a, c.cap)) {
      formula = json{{"zero_sum", vec()}};
    }
    for (std::size_t n = 0; n < by_formula.size() && vanish.is_null(); ++n) {
      const auto e = digits::to_digits(n, b);
      const bool has_top = std::find(e.digits.begin(), e.digits.end(), b - 1) != e.digits.end();
      if (has_top && !by_formula[n].is_zero()) vanish = json{{"zero_sum", vec()}, {"n", n}};
    }
    const auto rep = ptm::verify_factorization(c.depth, a);
    if (factor.is_null() && !rep.holds) factor = json{{"zero_sum", vec()}};
    if (order.is_null() && ptm::zero_order_at_one(rep.f) < c.depth) {
      order = json{{"zero_sum", vec()}, {"order", ptm::zero_order_at_one(rep.f)}};
    }
    if (b == 3) {
      for (digits::Natural n = 0; n < 27 && corollary.is_null(); ++n) {
        if (digits::multiplicity(n, 2, 3) != 0) continue;
        if (!ptm::base3_corollary_check(n, a)) corollary = json{{"zero_sum", vec()}, {"n", n}};
      }
    }
  }
  out.push_back(make("coefficients-formula-equals-matrix", c, formula.is_null(), formula));
  out.push_back(make("coefficients-vanish-on-top-digit", c, vanish.is_null(), vanish));
  out.push_back(make("ptm-factorization", c, factor.is_null(), factor));
  out.push_back(make("zero-of-order-n-at-one", c, order.is_null(), order));
  if (b == 3) out.push_back(make("base3-corollary", c, corollary.is_null(), corollary));
}

void relations_suite(const SuiteConfig& c, std::vector<Check>& out) {
  const unsigned b = c.base;
  const auto u = ptm::u_matrix(b, c.depth, c.cap);
  const auto v = ptm::v_matrix(b, c.depth, c.cap);
  out.push_back(make("u-kronecker-recursion", c, u == ptm::u_matrix_kronecker(b, c.depth, c.cap)));
  out.push_back(make("v-kronecker-recursion", c, v == ptm::v_matrix_kronecker(b, c.depth, c.cap)));
  out.push_back(make("v-skew-transpose-of-u", c, v == u.skew_transpose()));
  out.push_back(make("power-relation", c, ptm::power_relation_check(b, c.depth, c.cap)));
  out.push_back(make("eigen-polynomial-annihilation", c, ptm::eigen_poly_annihilation_check(b)));

  const auto braid = ptm::braid_check(b, c.depth, c.cap);
  Check braid_check{"braid-relation", b, c.depth, Status::Pass,
                    braid.witness ? mismatch_json(*braid.witness) : json(nullptr)};
  if (b == 2) {
    braid_check.status = braid.holds ? Status::Pass : Status::Fail;
  } else {
    braid_check.status = braid.holds ? Status::Fail : Status::ExpectedFail;
  }
  out.push_back(std::move(braid_check));
  if (b == 2) out.push_back(make("braid-squares", c, ptm::braid_square_check(b, c.depth, c.cap)));
}

void prouhet_suite(const SuiteConfig& c, std::vector<Check>& out) {
  const auto parts = ptm::prouhet_partition(c.base, c.depth, c.cap);
  const auto table = ptm::power_sums(parts, c.depth);
  out.push_back(make("prouhet-equal-power-sums", c, ptm::equal_power_sums(table)));
}

}  // namespace

MatrixKind parse_kind(const std::string& name) {
  if (name == "S") return MatrixKind::S;
  if (name == "X") return MatrixKind::X;
  if (name == "M") return MatrixKind::M;
  if (name == "T") return MatrixKind::T;
  if (name == "U") return MatrixKind::U;
  if (name == "V") return MatrixKind::V;
  throw std::invalid_argument("unknown matrix kind '" + name + "' (expected S, X, M, T, U or V)");
}

AnyMatrix build_matrix(MatrixKind kind, unsigned b, unsigned depth, std::size_t cap,
                       const std::optional<Rational>& x0) {
  auto symbolic = [&](PolyMatrix m) -> AnyMatrix {
    if (x0) return evaluate(m, *x0);
    return m;
  };
  switch (kind) {
    case MatrixKind::S: return symbolic(sierpinski::s_matrix(b, depth, cap));
    case MatrixKind::X: return symbolic(sierpinski::x_matrix(b, depth, cap));
    case MatrixKind::M: return ptm::m_matrix(b, depth, cap);
    case MatrixKind::T: return ptm::t_matrix(b, depth, cap);
    case MatrixKind::U: return ptm::u_matrix(b, depth, cap);
    case MatrixKind::V: return ptm::v_matrix(b, depth, cap);
  }
  throw std::logic_error("unhandled matrix kind");
}

json to_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (const auto& p : m.row(i)) row.push_back(p.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (const auto& r : m.row(i)) row.push_back(r.str());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const AnyMatrix& m) {
  return std::visit([](const auto& v) { return to_json(v); }, m);
}

std::string to_csv(const RationalMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) out += ',';
      out += m(i, j).str();
    }
    out += '\n';
  }
  return out;
}

std::string to_text(const AnyMatrix& m) {
  std::vector<std::vector<std::string>> cells;
  std::visit(
      [&cells](const auto& mat) {
        for (std::size_t i = 0; i < mat.dim(); ++i) {
          auto& row = cells.emplace_back();
          for (const auto& e : mat.row(i)) row.push_back(e.str());
        }
      },
      m);
  std::size_t width = 1;
  for (const auto& row : cells)
    for (const auto& s : row) width = std::max(width, s.size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) os << "  ";
      os << std::string(width - row[j].size(), ' ') << row[j];
    }
    os << '\n';
  }
  return os.str();
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::ExpectedFail: return "expected-fail";
  }
  return "unknown";
}

std::vector<Check> run_suite(const std::string& suite, const SuiteConfig& config) {
  sierpinski::checked_dim(config.base, config.depth, config.cap);
  std::vector<Check> out;
  const bool all = suite == "all";
  bool known = all;
  auto want = [&](const char* name) {
    if (suite == name) known = true;
    return all || suite == name;
  };
  if (want("one-parameter")) one_parameter_suite(config, out);
  if (want("digital-binomial")) digital_binomial_suite(config, out);
  if (want("exp")) exp_suite(config, out);
  if (want("stirling")) stirling_suite(config, out);
  if (want("factorization")) factorization_suite(config, out);
  if (want("relations")) relations_suite(config, out);
  if (want("prouhet")) prouhet_suite(config, out);
  if (!known) throw std::invalid_argument("unknown verification suite '" + suite + "'");
  return out;
}

json suite_report(const std::string& suite, const SuiteConfig& config,
                  const std::vector<Check>& checks) {
  json list = json::array();
  bool ok = true;
  for (const auto& c : checks) {
    json entry{{"name", c.name}, {"b", c.base}, {"N", c.depth}, {"status", to_string(c.status)}};
    if (!c.witness.is_null()) entry["witness"] = c.witness;
    list.push_back(std::move(entry));
    ok = ok && passed(c);
  }
  return json{{"suite", suite},         {"base", config.base}, {"depth", config.depth},
              {"seed", config.seed},    {"checks", list},      {"all_passed", ok}};
}

json rationals_json(const std::vector<Rational>& v) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

json ptm_report(unsigned depth, const ptm::ZeroSumVector& a) {
  const auto rep = ptm::verify_factorization(depth, a);
  return json{{"base", a.base()},
              {"depth", depth},
              {"zero_sum", rationals_json(a.entries())},
              {"f_coefficients", rationals_json(rep.f.coefficients())},
              {"c_coefficients", rationals_json(ptm::coefficients_by_formula(depth, a))},
              {"product_coefficients", rationals_json(rep.product.coefficients())},
              {"equal", rep.holds}};
}

json prouhet_report(unsigned b, unsigned degree, std::size_t cap) {
  const auto parts = ptm::prouhet_partition(b, degree, cap);
  const auto table = ptm::power_sums(parts, degree);
  json sums = json::array();
  for (const auto& row : table) {
    json r = json::array();
    for (const auto& v : row) r.push_back(v.get_str());
    sums.push_back(std::move(r));
  }
  return json{{"base", b},         {"degree", degree}, {"sets", parts},
              {"power_sums", sums}, {"equal", ptm::equal_power_sums(table)}};
}

}  // namespace digbin::report
