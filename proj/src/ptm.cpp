#include "digbin/ptm.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "digbin/sierpinski.hpp"

namespace digbin::ptm {

namespace {

RationalMatrix base_m(unsigned b) {
  RationalMatrix m(b);
  for (unsigned i = 0; i < b; ++i) {
    m(i, i) = Rational(1);
    if (i > 0) m(i, i - 1) = Rational(-1);
  }
  return m;
}

RationalMatrix base_s(unsigned b) {
  RationalMatrix s(b);
  for (unsigned i = 0; i < b; ++i)
    for (unsigned j = 0; j <= i; ++j) s(i, j) = Rational(1);
  return s;
}

RationalMatrix kronecker_power(const RationalMatrix& base, unsigned depth, std::size_t cap) {
  RationalMatrix m = base;
  for (unsigned n = 1; n < depth; ++n) m = kronecker(base, m, cap);
  return m;
}

RationalMatrix signed_identity(std::size_t dim, bool negative) {
  return RationalMatrix::identity(dim).scaled(Rational(negative ? -1 : 1));
}

}  // namespace

ZeroSumVector::ZeroSumVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw std::invalid_argument("zero-sum vector needs at least 2 entries");
  Rational sum(0);
  for (const auto& e : entries_) sum += e;
  if (!sum.is_zero()) {
    throw std::invalid_argument("entries sum to " + sum.str() + ", expected 0");
  }
}

ZeroSumVector ZeroSumVector::random(unsigned b, std::mt19937_64& rng) {
  digits::require_base(b);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  std::vector<Rational> e;
  Rational sum(0);
  for (unsigned i = 0; i + 1 < b; ++i) {
    e.emplace_back(Integer(num(rng)), Integer(den(rng)));
    sum += e.back();
  }
  e.push_back(-sum);
  return ZeroSumVector(std::move(e));
}

ZeroSumVector ZeroSumVector::parse(const std::string& csv) {
  std::vector<Rational> e;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) e.push_back(Rational::parse(item));
  return ZeroSumVector(std::move(e));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return UniPoly(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coefficient(i) + b.coefficient(i);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(i);
  return UniPoly(std::move(out));
}

Rational UniPoly::eval(const Rational& x0) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x0 + *it;
  return acc;
}

RationalMatrix m_matrix(unsigned b, unsigned depth, std::size_t cap) {
  sierpinski::checked_dim(b, depth, cap);
  return kronecker_power(base_m(b), depth, cap);
}

RationalMatrix s_int(unsigned b, unsigned depth, std::size_t cap) {
  sierpinski::checked_dim(b, depth, cap);
  return kronecker_power(base_s(b), depth, cap);
}

std::vector<Rational> f_vector(unsigned depth, const ZeroSumVector& a) {
  const Natural dim = digits::checked_pow(a.base(), depth);
  std::vector<Rational> f;
  f.reserve(dim);
  for (Natural n = 0; n < dim; ++n) f.push_back(a[digits::ptm(n, a.base())]);
  return f;
}

std::vector<Rational> coefficients_by_formula(unsigned depth, const ZeroSumVector& a) {
  const unsigned b = a.base();
  const Natural dim = digits::checked_pow(b, depth);
  std::vector<Rational> c;
  c.reserve(dim);
  for (Natural n = 0; n < dim; ++n) {
    Rational sum(0);
    for (Natural k : digits::dominated_set(n, b)) sum += a[digits::ptm(k, b)];
    c.push_back(std::move(sum));
  }
  return c;
}

std::vector<Rational> coefficients_by_matrix(unsigned depth, const ZeroSumVector& a,
                                             std::size_t cap) {
  return digbin::apply(s_int(a.base(), depth, cap), f_vector(depth, a));
}

UniPoly ptm_polynomial(unsigned depth, const ZeroSumVector& a) { return UniPoly(f_vector(depth, a)); }

UniPoly cyclotomic_product(unsigned b, unsigned depth) {
  UniPoly prod(std::vector<Rational>{Rational(1)});
  for (unsigned m = 0; m < depth; ++m) {
    const Natural power = digits::checked_pow(b, m);
    std::vector<Rational> factor(power + 1);
    factor[0] = Rational(1);
    factor[power] = Rational(-1);
    prod = prod * UniPoly(std::move(factor));
  }
  return prod;
}

FactorizationReport verify_factorization(unsigned depth, const ZeroSumVector& a) {
  FactorizationReport r;
  r.f = ptm_polynomial(depth, a);
  r.p = UniPoly(coefficients_by_formula(depth, a));
  r.product = r.p * cyclotomic_product(a.base(), depth);
  r.holds = r.product == r.f;
  return r;
}

unsigned zero_order_at_one(const UniPoly& p) {
  if (p.degree() < 0) throw std::invalid_argument("zero polynomial vanishes to infinite order");
  unsigned order = 0;
  UniPoly d = p;
  while (d.eval(Rational(1)).is_zero()) {
    ++order;
    d = d.derivative();
  }
  return order;
}

bool base3_corollary_check(Natural n, const ZeroSumVector& a) {
  if (a.base() != 3) throw std::invalid_argument("base-3 corollary needs a 3-entry zero-sum vector");
  for (Natural t = n; t > 0; t /= 3) {
    if (t % 3 == 2) {
      throw std::invalid_argument("n = " + std::to_string(n) + " has a digit 2 in base 3");
    }
  }
  Rational c(0);
  for (Natural k : digits::dominated_set(n, 3)) c += a[digits::ptm(k, 3)];
  const Rational& rhs = a[digits::ptm(2 * n, 3)];
  return c == (digits::parity_w(n) == 1 ? -rhs : rhs);
}

std::vector<std::vector<Natural>> prouhet_partition(unsigned b, unsigned degree, std::size_t cap) {
  digits::require_base(b);
  const Natural count = digits::checked_pow(b, degree + 1);
  if (count > cap) throw CapExceeded(static_cast<std::size_t>(count), cap);
  std::vector<std::vector<Natural>> parts(b);
  for (Natural n = 0; n < count; ++n) parts[digits::ptm(n, b)].push_back(n);
  return parts;
}

std::vector<std::vector<Integer>> power_sums(const std::vector<std::vector<Natural>>& parts,
                                             unsigned degree) {
  std::vector<std::vector<Integer>> table(degree + 1, std::vector<Integer>(parts.size(), 0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Natural n : parts[i]) {
      Integer power = 1;
      for (unsigned m = 0; m <= degree; ++m) {
        table[m][i] += power;
        power *= static_cast<unsigned long>(n);
      }
    }
  }
  return table;
}

bool equal_power_sums(const std::vector<std::vector<Integer>>& table) {
  for (const auto& row : table)
    for (const auto& v : row)
      if (v != row.front()) return false;
  return true;
}

RationalMatrix t_matrix(unsigned b, unsigned depth, std::size_t cap) {
  return m_matrix(b, depth, cap).transpose();
}

RationalMatrix u_matrix(unsigned b, unsigned depth, std::size_t cap) {
  return s_int(b, depth, cap) * t_matrix(b, depth, cap);
}

RationalMatrix v_matrix(unsigned b, unsigned depth, std::size_t cap) {
  return t_matrix(b, depth, cap) * s_int(b, depth, cap);
}

RationalMatrix u_matrix_kronecker(unsigned b, unsigned depth, std::size_t cap) {
  sierpinski::checked_dim(b, depth, cap);
  return kronecker_power(base_s(b) * base_m(b).transpose(), depth, cap);
}

RationalMatrix v_matrix_kronecker(unsigned b, unsigned depth, std::size_t cap) {
  sierpinski::checked_dim(b, depth, cap);
  return kronecker_power(base_m(b).transpose() * base_s(b), depth, cap);
}

bool power_relation_check(unsigned b, unsigned depth, std::size_t cap) {
  const RationalMatrix u = u_matrix(b, depth, cap);
  const RationalMatrix v = v_matrix(b, depth, cap);
  const bool negative = (static_cast<unsigned long>(depth) * (b + 1)) % 2 == 1;
  const RationalMatrix expected = signed_identity(u.dim(), negative);
  return u.pow(b + 1) == expected && v.pow(b + 1) == expected;
}

bool eigen_poly_annihilation_check(unsigned b) {
  auto annihilates = [b](const RationalMatrix& m) {
    RationalMatrix acc(m.dim());
    RationalMatrix power = RationalMatrix::identity(m.dim());
    for (unsigned j = 0; j <= b; ++j) {
      acc = acc + power.scaled(Rational(j % 2 == 0 ? -1 : 1));
      power = power * m;
    }
    return acc.is_zero();
  };
  return annihilates(u_matrix(b, 1)) && annihilates(v_matrix(b, 1));
}

BraidResult braid_check(unsigned b, unsigned depth, std::size_t cap) {
  const RationalMatrix s = s_int(b, depth, cap);
  const RationalMatrix t = t_matrix(b, depth, cap);
  const RationalMatrix q = s * t * s;
  const RationalMatrix r = t * s * t;
  auto mismatch = q.first_mismatch(r);
  return {!mismatch.has_value(), std::move(mismatch)};
}

bool braid_square_check(unsigned b, unsigned depth, std::size_t cap) {
  const RationalMatrix s = s_int(b, depth, cap);
  const RationalMatrix t = t_matrix(b, depth, cap);
  const RationalMatrix q = s * t * s;
  const RationalMatrix r = t * s * t;
  const RationalMatrix expected = signed_identity(s.dim(), depth % 2 == 1);
  return q * q == expected && r * r == expected;
}

}  // namespace digbin::ptm
