#include "digbin/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace digbin {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

Polynomial Polynomial::x() { return monomial(Rational(1), 1, 0); }
Polynomial Polynomial::y() { return monomial(Rational(1), 0, 1); }

Polynomial Polynomial::monomial(const Rational& c, unsigned ex, unsigned ey) {
  Polynomial p;
  p.add_term(Monomial{ex, ey}, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational Polynomial::coefficient(unsigned ex, unsigned ey) const {
  const auto it = terms_.find(Monomial{ex, ey});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.ex + m.ey));
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b) {
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) add_term(Monomial{ma.ex + mb.ex, ma.ey + mb.ey}, ca * cb);
  }
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  r.add_product(a, b);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

Rational Polynomial::eval(const Rational& x0, const Rational& y0) const {
  Rational sum(0);
  for (const auto& [m, c] : terms_) sum += c * digbin::pow(x0, m.ex) * digbin::pow(y0, m.ey);
  return sum;
}

Polynomial Polynomial::substitute_x(const Polynomial& value) const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r += value.pow(m.ex) * monomial(c, 0, m.ey);
  return r;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string s;
  auto var = [&s](char v, unsigned e) {
    if (e == 0) return;
    if (!s.empty()) s += '*';
    s += v;
    if (e > 1) s += '^' + std::to_string(e);
  };
  var('x', m.ex);
  var('y', m.ey);
  return s;
}

}  // namespace

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const auto da = a.first.ex + a.first.ey;
    const auto db = b.first.ex + b.first.ey;
    if (da != db) return da > db;
    return a.first.ex > b.first.ex;
  });
  std::string out;
  bool first = true;
  for (const auto& [m, c] : ordered) {
    const bool negative = c.sign() < 0;
    const Rational mag = negative ? -c : c;
    const std::string mono = monomial_str(m);
    std::string body;
    if (mono.empty()) {
      body = mag.str();
    } else if (mag.is_one()) {
      body = mono;
    } else if (mag.is_integer()) {
      body = mag.str() + "*" + mono;
    } else {
      body = "(" + mag.str() + ")*" + mono;
    }
    if (first) {
      out = negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

Polynomial binom_rising(unsigned d, const Polynomial& arg) {
  Polynomial r(1);
  for (unsigned i = 0; i < d; ++i) r = r * (arg + Polynomial(i));
  return r.scaled(Rational(Integer(1), factorial(d)));
}

}  // namespace digbin
