#include <random>

#include "digbin/sierpinski.hpp"
#include "doctest.h"

using namespace digbin;
using namespace digbin::sierpinski;

namespace {

const Polynomial X = Polynomial::x();
const Polynomial Y = Polynomial::y();

Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }

// Stirling numbers read off the expanded rising factorial x(x+1)...(x+n-1).
Integer stirling_from_expansion(unsigned n, unsigned k) {
  Polynomial p(1);
  for (unsigned i = 0; i < n; ++i) p = p * (X + Polynomial(i));
  return p.coefficient(k, 0).numerator();
}

}  // namespace

TEST_CASE("s_base") {
  const auto s2 = s_base(2);
  CHECK(s2(0, 0) == Polynomial(1));
  CHECK(s2(0, 1).is_zero());
  CHECK(s2(1, 0) == X);
  CHECK(s2(1, 1) == Polynomial(1));

  const auto s3 = s_base(3);
  CHECK(s3(2, 0) == binom_rising(2, X));
  CHECK(s3(0, 2).is_zero());
  CHECK(s3.is_unit_lower_triangular());
  CHECK_THROWS_AS(s_base(1), std::invalid_argument);
}

TEST_CASE("kronecker block convention") {
  const auto s1 = s_base(2);
  CHECK(kronecker(s1, s1)(3, 0) == X * X);
  const auto s31 = s_base(3);
  CHECK(kronecker(s31, s31)(8, 0) == binom_rising(2, X).pow(2));

  const auto id = PolyMatrix::identity(2);
  const auto blocks = kronecker(id, s31);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      const bool same_block = i / 3 == j / 3;
      CHECK(blocks(i, j) == (same_block ? s31(i % 3, j % 3) : Polynomial()));
    }
}

TEST_CASE("s_matrix and cap") {
  CHECK(s_matrix(4, 1) == s_base(4));
  CHECK(s_matrix(2, 3)(7, 4) == X * X);
  CHECK_THROWS_AS(s_matrix(2, 13), CapExceeded);
  CHECK_THROWS_AS(s_matrix(3, 3, 26), CapExceeded);
  CHECK_NOTHROW(s_matrix(3, 3, 27));
  CHECK_THROWS_AS(s_matrix(2, 0), std::invalid_argument);
}

TEST_CASE("closed-form entries") {
  for (unsigned depth = 1; depth <= 3; ++depth) {
    const auto s = s_matrix(2, depth);
    for (Natural j = 0; j < s.dim(); ++j)
      for (Natural k = 0; k < s.dim(); ++k) {
        const auto e = s_entry(2, depth, j, k);
        CHECK(e == s(j, k));
        if (k <= j && digits::dominates(k, j, 2)) {
          CHECK(e == X.pow(static_cast<unsigned>(digits::digit_sum(j - k, 2))));
        } else {
          CHECK(e.is_zero());
        }
      }
  }
  CHECK(s_entry(3, 2, 5, 5) == Polynomial(1));
  CHECK_THROWS_AS(s_entry(3, 2, 9, 0), std::out_of_range);

  for (unsigned b = 2; b <= 5; ++b)
    for (unsigned depth = 1; depth <= 3; ++depth) {
      if (digits::checked_pow(b, depth) > 125) continue;
      CHECK(verify_closed_form(b, depth).holds);
    }
}

TEST_CASE("one-parameter group law") {
  const auto r = verify_one_parameter(2, 2);
  CHECK(r.holds);
  const auto product = s_matrix(2, 2) * s_matrix(2, 2, kDefaultCap, Y);
  CHECK(product(3, 0) == (X + Y).pow(2));
  for (unsigned b = 2; b <= 5; ++b) CHECK(verify_one_parameter(b, 1).holds);
  CHECK(verify_one_parameter(3, 2).holds);

  // S(x) S(-x) = I and det S = 1.
  for (unsigned b = 2; b <= 4; ++b) {
    const auto s = s_matrix(b, 2);
    const auto inv = s_matrix(b, 2, kDefaultCap, -X);
    CHECK(s * inv == PolyMatrix::identity(s.dim()));
    CHECK(s.is_unit_lower_triangular());
  }
}

TEST_CASE("digital binomial theorem") {
  const auto [l3, r3] = digital_binomial_sides(3, 2);
  CHECK(l3 == (X + Y).pow(2));
  CHECK(r3 == l3);
  CHECK(r3.terms().size() == 3);  // x^2 + 2xy + y^2 collects the four summands

  const auto [l0, r0] = digital_binomial_sides(0, 3);
  CHECK(l0 == Polynomial(1));
  CHECK(r0 == Polynomial(1));

  // n = 7 = 21_3: brute-force RHS over all m <= 7 with m ⪯ 7.
  const auto [l7, r7] = digital_binomial_sides(7, 3);
  Polynomial brute;
  for (Natural m = 0; m <= 7; ++m) {
    if (!digits::dominates(m, 7, 3)) continue;
    Polynomial term(1);
    for (Natural t = m; t > 0; t /= 3) term = term * binom_rising(t % 3, X);
    for (Natural t = 7 - m; t > 0; t /= 3) term = term * binom_rising(t % 3, Y);
    brute += term;
  }
  CHECK(r7 == brute);
  CHECK(l7 == binom_rising(1, X + Y) * binom_rising(2, X + Y));
  CHECK(l7 == r7);

  for (unsigned b = 2; b <= 4; ++b)
    for (Natural n = 0; n < b * b * b; ++n) {
      const auto [lhs, rhs] = digital_binomial_sides(n, b);
      CHECK(lhs == rhs);
      const auto [mlhs, mrhs] = multiplicity_identity_sides(n, b);
      CHECK(mlhs == mrhs);
      CHECK(mlhs == lhs);
      if (b == 2) CHECK(lhs == (X + Y).pow(static_cast<unsigned>(digits::digit_sum(n, 2))));
    }
}

TEST_CASE("Gould and shifted identities") {
  CHECK(gould_check(0));
  const auto [l1, r1] = gould_sides(1);
  CHECK(l1 == X + Y + Polynomial(2));
  CHECK(r1 == X + Y + Polynomial(2));
  CHECK(gould_check(4));
  CHECK(gould_check(frac(3, 7), frac(-5, 2), 6));

  CHECK(shifted_gould_check(3, 3));
  const auto [ls, rs] = shifted_gould_sides(4, 3);
  CHECK(ls == X + Y);
  CHECK(rs == X + Y);
  CHECK(shifted_gould_check(5, 2));
  CHECK_THROWS_AS(shifted_gould_sides(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(shifted_gould_sides(2, 0), std::invalid_argument);
}

TEST_CASE("Stirling numbers") {
  CHECK(stirling_first(3, 1) == 2);
  CHECK(stirling_first(4, 2) == 11);
  CHECK(stirling_first(0, 0) == 1);
  CHECK(stirling_first(5, 0) == 0);
  for (unsigned n = 0; n <= 12; ++n) {
    CHECK(stirling_first(n, n) == 1);
    for (unsigned k = 0; k <= n; ++k) CHECK(stirling_first(n, k) == stirling_from_expansion(n, k));
  }
  CHECK_THROWS_AS(stirling_first(2, 3), std::invalid_argument);

  CHECK(stirling_identity_check(2, 2));
  CHECK(stirling_identity_check(3, 1));
  CHECK(stirling_identity_check(5, 2));
  for (unsigned l = 1; l <= 12; ++l)
    for (unsigned n = 1; n <= l; ++n) CHECK(stirling_identity_check(l, n));
}

TEST_CASE("generator X") {
  const auto x3 = x_base(3);
  CHECK(x3(2, 0) == X.scaled(frac(1, 2)));
  CHECK(x3(1, 1).is_zero());
  CHECK(x_base(4)(3, 0) == X.scaled(frac(1, 3)));

  CHECK(x_matrix(5, 1) == x_base(5));
  const auto x22 = x_matrix(2, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const bool is_x = (i == 1 && j == 0) || (i == 2 && j == 0) || (i == 3 && j == 1) || (i == 3 && j == 2);
      CHECK(x22(i, j) == (is_x ? X : Polynomial()));
    }

  for (unsigned b = 2; b <= 4; ++b)
    for (unsigned depth = 1; depth <= 2; ++depth) {
      const auto x = x_matrix(b, depth);
      const unsigned bound = generator_nilpotency_bound(b, depth);
      CHECK(x.is_strictly_lower_triangular());
      CHECK(x.pow(bound + 1).is_zero());
      CHECK_FALSE(x.pow(bound).is_zero());
    }

  const auto sq = x_base(4).pow(2);
  CHECK(sq(3, 0) == X * X);
  for (unsigned b = 2; b <= 6; ++b)
    for (unsigned n = 1; n < b; ++n) CHECK(x_power_entry_check(b, n));
  CHECK_THROWS_AS(x_power_entry_check(3, 3), std::invalid_argument);
}

TEST_CASE("nilpotent exponential") {
  CHECK(matrix_exp_nilpotent(PolyMatrix(3), 0) == PolyMatrix::identity(3));
  CHECK(matrix_exp_nilpotent(PolyMatrix(3), 5) == PolyMatrix::identity(3));
  for (unsigned b = 2; b <= 5; ++b) CHECK(matrix_exp_nilpotent(x_base(b), b - 1) == s_base(b));
  CHECK(matrix_exp_nilpotent(x_matrix(3, 2), generator_nilpotency_bound(3, 2)) == s_matrix(3, 2));
  CHECK_THROWS_AS(matrix_exp_nilpotent(s_base(3), 2), std::invalid_argument);
}

TEST_CASE("structured apply matches dense product") {
  auto chain = KroneckerChain::sierpinski(2, 1, Rational(3));
  std::vector<Rational> v{Rational(1), Rational(2)};
  CHECK(structured_apply(chain, v) == digbin::apply(evaluate(s_base(2), Rational(3)), v));

  chain = KroneckerChain::sierpinski(2, 3, Rational(1));
  std::vector<Rational> e0(8);
  e0[0] = Rational(1);
  CHECK(structured_apply(chain, e0) == std::vector<Rational>(8, Rational(1)));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 9);
  for (auto [b, depth] : {std::pair{3u, 3u}, std::pair{2u, 4u}, std::pair{4u, 2u}}) {
    const Rational x0 = frac(2, 3);
    const auto dense = evaluate(s_matrix(b, depth), x0);
    chain = KroneckerChain::sierpinski(b, depth, x0);
    CHECK(chain.materialize() == dense);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> v;
      for (std::size_t i = 0; i < dense.dim(); ++i) v.emplace_back(Integer(num(rng)), Integer(den(rng)));
      CHECK(structured_apply(chain, v) == digbin::apply(dense, v));
    }
  }
  CHECK_THROWS_AS(structured_apply(chain, std::vector<Rational>(3)), std::invalid_argument);
}
