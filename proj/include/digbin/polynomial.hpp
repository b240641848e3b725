#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>

#include "digbin/rational.hpp"

namespace digbin {

/// Exponent pair (e_x, e_y) of a monomial x^e_x y^e_y.
struct Monomial {
  unsigned ex = 0;
  unsigned ey = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in x and y over the rationals.
///
/// Canonical form: no stored coefficient is zero and the zero polynomial is the
/// empty map, so operator== decides polynomial identity.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  Polynomial(T c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Polynomial x();
  static Polynomial y();
  static Polynomial monomial(const Rational& c, unsigned ex, unsigned ey);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of x^ex y^ey (zero if absent).
  Rational coefficient(unsigned ex, unsigned ey) const;
  /// Maximum total degree; -1 for the zero polynomial.
  int total_degree() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  /// Accumulates a·b into *this without building the intermediate product.
  void add_product(const Polynomial& a, const Polynomial& b);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  Polynomial scaled(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  /// Exact evaluation at (x0, y0).
  Rational eval(const Rational& x0, const Rational& y0 = Rational(0)) const;

  /// Replaces x by `value`, keeping y.
  Polynomial substitute_x(const Polynomial& value) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Rendering such as "(1/2)*x^2 + (1/2)*x", highest total degree first.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// arg (arg+1) ... (arg+d-1) / d!, i.e. binom(arg+d-1, d); equals 1 for d = 0.
Polynomial binom_rising(unsigned d, const Polynomial& arg);

}  // namespace digbin
