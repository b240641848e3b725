#include "digbin/matrix.hpp"

namespace digbin {

RationalMatrix evaluate(const PolyMatrix& m, const Rational& x0, const Rational& y0) {
  RationalMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (!m(i, j).is_zero()) out(i, j) = m(i, j).eval(x0, y0);
    }
  return out;
}

std::vector<Rational> apply(const RationalMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.dim()) throw std::invalid_argument("vector length does not match matrix");
  std::vector<Rational> out;
  out.reserve(m.dim());
  mpq_class acc;
  mpq_class term;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    acc = 0;
    for (std::size_t j = 0; j < m.dim(); ++j) {
      mpq_mul(term.get_mpq_t(), m(i, j).raw().get_mpq_t(), v[j].raw().get_mpq_t());
      mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), term.get_mpq_t());
    }
    out.emplace_back(acc);
  }
  return out;
}

}  // namespace digbin
