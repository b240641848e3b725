#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "digbin/digits.hpp"
#include "digbin/matrix.hpp"
#include "digbin/polynomial.hpp"

// Generalized Sierpinski matrices S_{b,N}(x), their generator X_{b,N}(x), and
// the identities that tie them to the digital binomial theorem.
namespace digbin::sierpinski {

using digits::Natural;

/// b×b lower-triangular base factor, entry (j,k) = binom_rising(j-k, arg).
PolyMatrix s_base(unsigned b, const Polynomial& arg = Polynomial::x());

/// N-fold Kronecker power of s_base(b, arg), built as S_{N+1} = S_1 ⊗ S_N.
PolyMatrix s_matrix(unsigned b, unsigned depth, std::size_t cap = kDefaultCap,
                    const Polynomial& arg = Polynomial::x());

/// Closed-form entry: the product of binom_rising(d_i(j-k), arg) over the
/// base-b digits of j-k when k ⪯ j, zero otherwise.
Polynomial s_entry(unsigned b, unsigned depth, Natural j, Natural k,
                   const Polynomial& arg = Polynomial::x());

/// Dimension b^depth after checking it against the cap.
std::size_t checked_dim(unsigned b, unsigned depth, std::size_t cap);

struct CheckResult {
  bool holds = true;
  std::optional<Mismatch<Polynomial>> witness;
};

/// Symbolic S(x)·S(y) against the closed form with argument x+y.
CheckResult verify_one_parameter(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);

/// Kronecker-built S_{b,N} against s_entry at every position.
CheckResult verify_closed_form(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);

/// Both sides of the base-b digital binomial theorem for n, using the digit
/// length of n (digits of m and n-m padded to that length).
std::pair<Polynomial, Polynomial> digital_binomial_sides(Natural n, unsigned b);

/// Both sides of the digit-multiplicity form of the digital binomial theorem.
std::pair<Polynomial, Polynomial> multiplicity_identity_sides(Natural n, unsigned b);

/// Gould's convolution sum_k C(x+k,k) C(y+n-k,n-k) = C(x+y+n+1,n), symbolically.
std::pair<Polynomial, Polynomial> gould_sides(unsigned n);
bool gould_check(unsigned n);
/// Gould's identity evaluated at a rational point.
bool gould_check(const Rational& x0, const Rational& y0, unsigned n);

/// sum_{v=q}^{p} C(x+p-v-1,p-v) C(y+v-q-1,v-q) = C(x+y+p-q-1,p-q) for 1 <= q <= p.
std::pair<Polynomial, Polynomial> shifted_gould_sides(unsigned p, unsigned q);
bool shifted_gould_check(unsigned p, unsigned q);

/// Unsigned Stirling numbers of the first kind via
/// c(n,k) = c(n-1,k-1) + (n-1) c(n-1,k), c(0,0) = 1.
Integer stirling_first(unsigned n, unsigned k);

/// sum_{i=1}^{l-n+1} (i-1)! C(l,i) c(l-i,n-1) == n c(l,n), for 1 <= n <= l.
bool stirling_identity_check(unsigned l, unsigned n);

/// b×b strictly lower-triangular generator, entry (j,k) = arg/(j-k).
PolyMatrix x_base(unsigned b, const Polynomial& arg = Polynomial::x());

/// X_{N+1} = X_1 ⊕ X_N (Kronecker sum).
PolyMatrix x_matrix(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);

/// Compares x_base(b)^n with (n!/(j-k)!) c(j-k, n) x^n for j >= k+n, zero elsewhere.
bool x_power_entry_check(unsigned b, unsigned n);

/// sum_{n=0}^{bound} X^n / n!. Throws std::invalid_argument unless X is
/// strictly lower-triangular.
PolyMatrix matrix_exp_nilpotent(const PolyMatrix& x, unsigned nilpotency_bound);

/// Nilpotency bound used for exp(X_{b,N}): N(b-1).
inline unsigned generator_nilpotency_bound(unsigned b, unsigned depth) { return depth * (b - 1); }

/// N-fold Kronecker power of a numeric factor, never materialized.
struct KroneckerChain {
  RationalMatrix factor;
  unsigned depth = 1;

  std::size_t dim() const;
  /// S_{b,N} evaluated at x0.
  static KroneckerChain sierpinski(unsigned b, unsigned depth, const Rational& x0);
  /// Dense materialization of the chain.
  RationalMatrix materialize(std::size_t cap = kDefaultCap) const;
};

/// chain·v computed one Kronecker factor at a time, O(N·b·b^N) coefficient operations.
std::vector<Rational> structured_apply(const KroneckerChain& chain, std::span<const Rational> v);

}  // namespace digbin::sierpinski
