#include "digbin/sierpinski.hpp"

#include <stdexcept>
#include <string>

namespace digbin::sierpinski {

namespace {

/// binom_rising(d, arg) for d = 0..b-1.
std::vector<Polynomial> rising_table(unsigned b, const Polynomial& arg) {
  std::vector<Polynomial> t;
  t.reserve(b);
  for (unsigned d = 0; d < b; ++d) t.push_back(binom_rising(d, arg));
  return t;
}

Polynomial entry_from_table(const std::vector<Polynomial>& table, unsigned b, Natural j,
                            Natural k) {
  if (k > j || !digits::dominates(k, j, b)) return {};
  Polynomial p(1);
  for (Natural diff = j - k; diff > 0; diff /= b) {
    const auto d = static_cast<unsigned>(diff % b);
    if (d != 0) p = p * table[d];
  }
  return p;
}

Polynomial digit_product(const digits::BaseBExpansion& e, std::size_t length,
                         const std::vector<Polynomial>& table) {
  Polynomial p(1);
  for (std::size_t i = 0; i < length; ++i) {
    const unsigned d = e.digit(i);
    if (d != 0) p = p * table[d];
  }
  return p;
}

}  // namespace

std::size_t checked_dim(unsigned b, unsigned depth, std::size_t cap) {
  digits::require_base(b);
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  Natural dim = 1;
  for (unsigned i = 0; i < depth; ++i) {
    dim *= b;
    if (dim > cap) throw CapExceeded(static_cast<std::size_t>(dim), cap);
  }
  return static_cast<std::size_t>(dim);
}

PolyMatrix s_base(unsigned b, const Polynomial& arg) {
  digits::require_base(b);
  const auto table = rising_table(b, arg);
  PolyMatrix m(b);
  for (unsigned j = 0; j < b; ++j)
    for (unsigned k = 0; k <= j; ++k) m(j, k) = table[j - k];
  return m;
}

PolyMatrix s_matrix(unsigned b, unsigned depth, std::size_t cap, const Polynomial& arg) {
  checked_dim(b, depth, cap);
  const PolyMatrix base = s_base(b, arg);
  PolyMatrix s = base;
  for (unsigned n = 1; n < depth; ++n) s = kronecker(base, s, cap);
  return s;
}

Polynomial s_entry(unsigned b, unsigned depth, Natural j, Natural k, const Polynomial& arg) {
  const Natural dim = digits::checked_pow(b, depth);
  if (j >= dim || k >= dim) {
    throw std::out_of_range("entry (" + std::to_string(j) + "," + std::to_string(k) +
                            ") outside " + std::to_string(dim) + "x" + std::to_string(dim));
  }
  return entry_from_table(rising_table(b, arg), b, j, k);
}

CheckResult verify_one_parameter(unsigned b, unsigned depth, std::size_t cap) {
  const std::size_t dim = checked_dim(b, depth, cap);
  const PolyMatrix product =
      s_matrix(b, depth, cap, Polynomial::x()) * s_matrix(b, depth, cap, Polynomial::y());
  const auto table = rising_table(b, Polynomial::x() + Polynomial::y());
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      Polynomial expected = entry_from_table(table, b, j, k);
      if (!(product(j, k) == expected)) {
        return {false, Mismatch<Polynomial>{j, k, product(j, k), std::move(expected)}};
      }
    }
  }
  return {};
}

CheckResult verify_closed_form(unsigned b, unsigned depth, std::size_t cap) {
  const std::size_t dim = checked_dim(b, depth, cap);
  const PolyMatrix s = s_matrix(b, depth, cap);
  const auto table = rising_table(b, Polynomial::x());
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      Polynomial expected = entry_from_table(table, b, j, k);
      if (!(s(j, k) == expected)) return {false, Mismatch<Polynomial>{j, k, s(j, k), std::move(expected)}};
    }
  }
  return {};
}

std::pair<Polynomial, Polynomial> digital_binomial_sides(Natural n, unsigned b) {
  const auto x = Polynomial::x();
  const auto y = Polynomial::y();
  const auto tx = rising_table(b, x);
  const auto ty = rising_table(b, y);
  const auto txy = rising_table(b, x + y);
  const auto en = digits::to_digits(n, b);
  const std::size_t length = en.length();

  Polynomial lhs = digit_product(en, length, txy);
  Polynomial rhs;
  for (Natural m : digits::dominated_set(n, b)) {
    rhs.add_product(digit_product(digits::to_digits(m, b), length, tx),
                    digit_product(digits::to_digits(n - m, b), length, ty));
  }
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Polynomial, Polynomial> multiplicity_identity_sides(Natural n, unsigned b) {
  const auto x = Polynomial::x();
  const auto y = Polynomial::y();
  const auto tx = rising_table(b, x);
  const auto ty = rising_table(b, y);
  const auto txy = rising_table(b, x + y);

  // The digit-0 factor binom_rising(0, ·) is the constant 1, so products start at j = 1.
  auto grouped = [b](Natural v, const std::vector<Polynomial>& table) {
    Polynomial p(1);
    for (unsigned j = 1; j < b; ++j) {
      const Natural mu = digits::multiplicity(v, j, b);
      if (mu > 0) p = p * table[j].pow(static_cast<unsigned>(mu));
    }
    return p;
  };

  Polynomial lhs = grouped(n, txy);
  Polynomial rhs;
  for (Natural m : digits::dominated_set(n, b)) rhs.add_product(grouped(m, tx), grouped(n - m, ty));
  return {std::move(lhs), std::move(rhs)};
}

std::pair<Polynomial, Polynomial> gould_sides(unsigned n) {
  // binom(z+k, k) = binom_rising(k, z+1).
  const auto x1 = Polynomial::x() + Polynomial(1);
  const auto y1 = Polynomial::y() + Polynomial(1);
  Polynomial lhs;
  for (unsigned k = 0; k <= n; ++k) lhs.add_product(binom_rising(k, x1), binom_rising(n - k, y1));
  Polynomial rhs = binom_rising(n, Polynomial::x() + Polynomial::y() + Polynomial(2));
  return {std::move(lhs), std::move(rhs)};
}

bool gould_check(unsigned n) {
  const auto [lhs, rhs] = gould_sides(n);
  return lhs == rhs;
}

bool gould_check(const Rational& x0, const Rational& y0, unsigned n) {
  const auto [lhs, rhs] = gould_sides(n);
  return lhs.eval(x0, y0) == rhs.eval(x0, y0);
}

std::pair<Polynomial, Polynomial> shifted_gould_sides(unsigned p, unsigned q) {
  if (q < 1 || q > p) {
    throw std::invalid_argument("shifted Gould identity needs 1 <= q <= p, got p=" +
                                std::to_string(p) + " q=" + std::to_string(q));
  }
  const auto x = Polynomial::x();
  const auto y = Polynomial::y();
  Polynomial lhs;
  for (unsigned v = q; v <= p; ++v) lhs.add_product(binom_rising(p - v, x), binom_rising(v - q, y));
  Polynomial rhs = binom_rising(p - q, x + y);
  return {std::move(lhs), std::move(rhs)};
}

bool shifted_gould_check(unsigned p, unsigned q) {
  const auto [lhs, rhs] = shifted_gould_sides(p, q);
  return lhs == rhs;
}

Integer stirling_first(unsigned n, unsigned k) {
  if (k > n) {
    throw std::invalid_argument("stirling_first needs k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  std::vector<Integer> row{1};  // c(0, ·)
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1, 0);
    for (unsigned i = 0; i <= m; ++i) {
      if (i >= 1) next[i] += row[i - 1];
      if (i < row.size()) next[i] += Integer(m - 1) * row[i];
    }
    row = std::move(next);
  }
  return row[k];
}

bool stirling_identity_check(unsigned l, unsigned n) {
  if (n < 1 || n > l) throw std::invalid_argument("stirling identity needs 1 <= n <= l");
  Integer lhs = 0;
  for (unsigned i = 1; i <= l - n + 1; ++i) {
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), l, i);
    lhs += factorial(i - 1) * binom * stirling_first(l - i, n - 1);
  }
  return lhs == Integer(n) * stirling_first(l, n);
}

PolyMatrix x_base(unsigned b, const Polynomial& arg) {
  digits::require_base(b);
  PolyMatrix m(b);
  for (unsigned j = 1; j < b; ++j)
    for (unsigned k = 0; k < j; ++k) m(j, k) = arg.scaled(Rational(1, static_cast<long>(j - k)));
  return m;
}

PolyMatrix x_matrix(unsigned b, unsigned depth, std::size_t cap) {
  checked_dim(b, depth, cap);
  const PolyMatrix base = x_base(b);
  PolyMatrix x = base;
  for (unsigned n = 1; n < depth; ++n) x = kronecker_sum(base, x, cap);
  return x;
}

bool x_power_entry_check(unsigned b, unsigned n) {
  digits::require_base(b);
  if (n < 1 || n > b - 1) throw std::invalid_argument("power must satisfy 1 <= n <= b-1");
  const PolyMatrix power = x_base(b).pow(n);
  for (unsigned j = 0; j < b; ++j) {
    for (unsigned k = 0; k < b; ++k) {
      Polynomial expected;
      if (j >= k + n) {
        const Rational coeff(factorial(n) * stirling_first(j - k, n), factorial(j - k));
        expected = Polynomial::monomial(coeff, n, 0);
      }
      if (!(power(j, k) == expected)) return false;
    }
  }
  return true;
}

PolyMatrix matrix_exp_nilpotent(const PolyMatrix& x, unsigned nilpotency_bound) {
  if (!x.is_strictly_lower_triangular()) {
    throw std::invalid_argument("matrix exponential requires a strictly lower-triangular matrix");
  }
  PolyMatrix sum = PolyMatrix::identity(x.dim());
  PolyMatrix term = PolyMatrix::identity(x.dim());
  for (unsigned n = 1; n <= nilpotency_bound; ++n) {
    term = (term * x).scaled(Rational(1, static_cast<long>(n)));
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return sum;
}

std::size_t KroneckerChain::dim() const {
  std::size_t d = 1;
  for (unsigned i = 0; i < depth; ++i) d *= factor.dim();
  return d;
}

KroneckerChain KroneckerChain::sierpinski(unsigned b, unsigned depth, const Rational& x0) {
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  return {evaluate(s_base(b), x0), depth};
}

RationalMatrix KroneckerChain::materialize(std::size_t cap) const {
  RationalMatrix m = factor;
  for (unsigned i = 1; i < depth; ++i) m = kronecker(factor, m, cap);
  return m;
}

std::vector<Rational> structured_apply(const KroneckerChain& chain, std::span<const Rational> v) {
  const std::size_t b = chain.factor.dim();
  const std::size_t dim = chain.dim();
  if (v.size() != dim) {
    throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                " does not match dimension " + std::to_string(dim));
  }
  std::vector<Rational> cur(v.begin(), v.end());
  std::vector<Rational> next(dim);
  std::vector<Rational> fibre(b);
  // Every factor is identical, so applying it along each digit axis in any
  // order yields the full Kronecker product.
  for (std::size_t stride = 1; stride < dim; stride *= b) {
    for (std::size_t base = 0; base < dim; ++base) {
      if ((base / stride) % b != 0) continue;
      for (std::size_t k = 0; k < b; ++k) fibre[k] = cur[base + k * stride];
      for (std::size_t i = 0; i < b; ++i) {
        Rational acc(0);
        for (std::size_t k = 0; k < b; ++k) {
          const Rational& a = chain.factor(i, k);
          if (!a.is_zero() && !fibre[k].is_zero()) acc += a * fibre[k];
        }
        next[base + i * stride] = std::move(acc);
      }
    }
    std::swap(cur, next);
  }
  return cur;
}

}  // namespace digbin::sierpinski
