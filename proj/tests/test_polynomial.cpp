#include <random>

#include "digbin/polynomial.hpp"
#include "digbin/rational.hpp"
#include "doctest.h"

using digbin::binom_rising;
using digbin::Integer;
using digbin::Polynomial;
using digbin::Rational;

namespace {

const Polynomial X = Polynomial::x();
const Polynomial Y = Polynomial::y();

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

Polynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> exp(0, 3);
  std::uniform_int_distribution<int> terms(0, 4);
  Polynomial p;
  const int n = terms(rng);
  for (int i = 0; i < n; ++i) p += Polynomial::monomial(random_rational(rng), exp(rng), exp(rng));
  return p;
}

Integer binomial_by_factorials(unsigned n, unsigned k) {
  return digbin::factorial(n) / (digbin::factorial(k) * digbin::factorial(n - k));
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(Integer(2), Integer(4)) == Rational(Integer(1), Integer(2)));
  CHECK(Rational(Integer(3), Integer(-6)).str() == "-1/2");
  CHECK(Rational(Integer(6), Integer(3)).str() == "2");
  CHECK(Rational::parse("-3/9") == Rational(Integer(-1), Integer(3)));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ring arithmetic") {
  CHECK(X * Y + Polynomial() == X * Y);
  CHECK((X + Polynomial(1)) * (X - Polynomial(1)) == X * X - Polynomial(1));
  CHECK(X.scaled(Rational(Integer(1), Integer(2))).coefficient(1, 0) == Rational(Integer(1), Integer(2)));
  CHECK((X - X).is_zero());
  CHECK((X - X).terms().empty());
  CHECK(X.scaled(Rational(0)).is_zero());
  CHECK(Polynomial(0).is_zero());
}

TEST_CASE("ring axioms and evaluation homomorphism on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poly(rng);
    const auto q = random_poly(rng);
    const auto r = random_poly(rng);
    CHECK(p * q == q * p);
    CHECK(p + q == q + p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p - p == Polynomial());
    const auto x0 = random_rational(rng);
    const auto y0 = random_rational(rng);
    CHECK((p * q).eval(x0, y0) == p.eval(x0, y0) * q.eval(x0, y0));
    CHECK((p + q).eval(x0, y0) == p.eval(x0, y0) + q.eval(x0, y0));
  }
}

TEST_CASE("eval") {
  CHECK((X * X + Y).eval(Rational(2), Rational(3)) == Rational(7));
  CHECK(binom_rising(2, X).eval(Rational(1)) == Rational(1));
  CHECK(Polynomial().eval(Rational(5), Rational(-2)) == Rational(0));
}

TEST_CASE("binom_rising") {
  CHECK(binom_rising(0, X) == Polynomial(1));
  CHECK(binom_rising(1, X) == X);
  const Rational half(Integer(1), Integer(2));
  CHECK(binom_rising(2, X) == X.pow(2).scaled(half) + X.scaled(half));
  const auto xy = X + Y;
  CHECK(binom_rising(2, xy) == (xy * (xy + Polynomial(1))).scaled(half));
  CHECK(binom_rising(2, xy).substitute_x(Polynomial()).eval(Rational(0), Rational(0)) == Rational(0));
  // y -> 0 specialisation of the x+y form gives the x form.
  CHECK(binom_rising(3, xy).eval(Rational(5), Rational(0)) == binom_rising(3, X).eval(Rational(5)));

  for (unsigned d = 0; d <= 8; ++d) {
    const auto p = binom_rising(d, X);
    CHECK(p.total_degree() == static_cast<int>(d));
    for (unsigned m = 1; m <= 10; ++m) {
      CHECK(p.eval(Rational(m)) == Rational(binomial_by_factorials(m + d - 1, d)));
    }
  }
}

TEST_CASE("rendering") {
  const Rational half(Integer(1), Integer(2));
  CHECK(binom_rising(2, X).str() == "(1/2)*x^2 + (1/2)*x");
  CHECK(Polynomial().str() == "0");
  CHECK(Polynomial(1).str() == "1");
  CHECK((X + Y).pow(2).str() == "x^2 + 2*x*y + y^2");
  CHECK((X - Polynomial(3)).str() == "x - 3");
  CHECK((-X.scaled(half) + Polynomial(Rational(Integer(-2), Integer(3)))).str() == "-(1/2)*x - 2/3");
}
