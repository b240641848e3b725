#pragma once

#include <cstdint>
#include <vector>

// Base-b numeral kernel: digit expansions, digit statistics, digital dominance.
namespace digbin::digits {

using Natural = std::uint64_t;

/// A non-negative integer together with its base-b digits, least significant
/// first. Zero is stored as the single digit [0].
struct BaseBExpansion {
  unsigned base = 2;
  Natural value = 0;
  std::vector<unsigned> digits{0};

  /// Digit i, or 0 past the stored length.
  unsigned digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
  std::size_t length() const { return digits.size(); }
};

/// Throws std::invalid_argument for b < 2.
void require_base(unsigned b);

BaseBExpansion to_digits(Natural n, unsigned b);

/// Inverse of to_digits; digits must be < b.
Natural from_digits(const std::vector<unsigned>& digits, unsigned b);

Natural digit_sum(Natural n, unsigned b);

/// Generalized Prouhet-Thue-Morse value: digit_sum(n, b) mod b.
unsigned ptm(Natural n, unsigned b);

/// Base-3 digit sum mod 2.
unsigned parity_w(Natural n);

/// m ⪯ n: every base-b digit of m is at most the matching digit of n.
bool dominates(Natural m, Natural n, unsigned b);

/// Adding j and k in base b involves no carries.
bool carry_free(Natural j, Natural k, unsigned b);

/// Number of positions holding digit j, 1 <= j <= b-1.
Natural multiplicity(Natural n, unsigned j, unsigned b);

/// All k with k ⪯ n, ascending.
std::vector<Natural> dominated_set(Natural n, unsigned b);

/// b^e, throwing std::overflow_error if it does not fit in 64 bits.
Natural checked_pow(unsigned b, unsigned e);

}  // namespace digbin::digits
