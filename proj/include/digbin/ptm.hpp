#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "digbin/digits.hpp"
#include "digbin/matrix.hpp"
#include "digbin/rational.hpp"

// Prouhet-Thue-Morse polynomials, their Sierpinski factorization, Prouhet's
// solution of the Tarry-Escott problem, and the U/V/braid group relations.
namespace digbin::ptm {

using digits::Natural;

/// b rationals summing to zero.
class ZeroSumVector {
 public:
  /// Throws std::invalid_argument naming the sum when it is nonzero, or when
  /// fewer than two entries are given.
  explicit ZeroSumVector(std::vector<Rational> entries);

  /// b-1 random rationals with the last entry balancing the sum.
  static ZeroSumVector random(unsigned b, std::mt19937_64& rng);

  /// Parses a comma-separated list such as "1,-1/2,-1/2".
  static ZeroSumVector parse(const std::string& csv);

  unsigned base() const { return static_cast<unsigned>(entries_.size()); }
  const std::vector<Rational>& entries() const { return entries_; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<Rational> entries_;
};

/// Dense univariate polynomial, coefficient index = exponent, trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  UniPoly derivative() const;
  Rational eval(const Rational& x0) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// M_1 ⊗ ... ⊗ M_1 with M_1 = 1 on the diagonal, -1 on the subdiagonal.
RationalMatrix m_matrix(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);

/// Kronecker power of the b×b lower-triangular all-ones matrix; equals S_{b,N}(1).
RationalMatrix s_int(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);

/// Component n is A[ptm(n, b)], n < b^N.
std::vector<Rational> f_vector(unsigned depth, const ZeroSumVector& a);

/// c_n = sum of A[ptm(k,b)] over k ⪯ n.
std::vector<Rational> coefficients_by_formula(unsigned depth, const ZeroSumVector& a);

/// c = S_N · a, the matrix route to the same coefficients.
std::vector<Rational> coefficients_by_matrix(unsigned depth, const ZeroSumVector& a,
                                             std::size_t cap = kDefaultCap);

/// F_N(x; A) = sum_n A[ptm(n,b)] x^n.
UniPoly ptm_polynomial(unsigned depth, const ZeroSumVector& a);

/// prod_{m=0}^{N-1} (1 - x^{b^m}).
UniPoly cyclotomic_product(unsigned b, unsigned depth);

struct FactorizationReport {
  UniPoly f;        // F_N
  UniPoly p;        // P_N from the coefficient formula
  UniPoly product;  // P_N · prod (1 - x^{b^m})
  bool holds = false;
};

FactorizationReport verify_factorization(unsigned depth, const ZeroSumVector& a);

/// Order of vanishing of p at x = 1 (0 if p(1) != 0); the zero polynomial throws.
unsigned zero_order_at_one(const UniPoly& p);

/// c_n == (-1)^{w(n)} A[ptm(2n, 3)] for base-3 n with digits in {0,1}.
/// Throws std::invalid_argument if n has a digit 2 or A is not base 3.
bool base3_corollary_check(Natural n, const ZeroSumVector& a);

/// Prouhet's assignment n -> S_{ptm(n,b)} over 0 .. b^{M+1}-1.
std::vector<std::vector<Natural>> prouhet_partition(unsigned b, unsigned degree,
                                                    std::size_t cap = kDefaultCap);

/// table[m][i] = sum_{n in parts[i]} n^m for m = 0..degree.
std::vector<std::vector<Integer>> power_sums(const std::vector<std::vector<Natural>>& parts,
                                             unsigned degree);

/// Every row of the power-sum table is constant.
bool equal_power_sums(const std::vector<std::vector<Integer>>& table);

/// T_N = M_N^t.
RationalMatrix t_matrix(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);
/// U_N = S_N T_N, by direct product.
RationalMatrix u_matrix(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);
/// V_N = T_N S_N, by direct product.
RationalMatrix v_matrix(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);
/// U_1 ⊗ ... ⊗ U_1.
RationalMatrix u_matrix_kronecker(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);
/// V_1 ⊗ ... ⊗ V_1.
RationalMatrix v_matrix_kronecker(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);

/// U^{b+1} == V^{b+1} == (-1)^{N(b+1)} I.
bool power_relation_check(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);

/// p(U_1) == p(V_1) == 0 with p(r) = sum_{j=0}^{b} (-1)^{j+1} r^j.
bool eigen_poly_annihilation_check(unsigned b);

struct BraidResult {
  bool holds = true;
  std::optional<Mismatch<Rational>> witness;  // first differing entry of STS vs TST
};

/// S T S == T S T.
BraidResult braid_check(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);

/// Q^2 == R^2 == (-1)^N I with Q = STS, R = TST.
bool braid_square_check(unsigned b, unsigned depth, std::size_t cap = kDefaultCap);

}  // namespace digbin::ptm
