#include "digbin/digits.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace digbin::digits {

void require_base(unsigned b) {
  if (b < 2) throw std::invalid_argument("base must be at least 2, got " + std::to_string(b));
}

BaseBExpansion to_digits(Natural n, unsigned b) {
  require_base(b);
  BaseBExpansion e;
  e.base = b;
  e.value = n;
  if (n == 0) return e;
  e.digits.clear();
  while (n > 0) {
    e.digits.push_back(static_cast<unsigned>(n % b));
    n /= b;
  }
  return e;
}

Natural from_digits(const std::vector<unsigned>& digits, unsigned b) {
  require_base(b);
  Natural value = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it >= b) throw std::invalid_argument("digit out of range for base");
    value = value * b + *it;
  }
  return value;
}

Natural digit_sum(Natural n, unsigned b) {
  require_base(b);
  Natural s = 0;
  for (; n > 0; n /= b) s += n % b;
  return s;
}

unsigned ptm(Natural n, unsigned b) { return static_cast<unsigned>(digit_sum(n, b) % b); }

unsigned parity_w(Natural n) { return static_cast<unsigned>(digit_sum(n, 3) % 2); }

bool dominates(Natural m, Natural n, unsigned b) {
  require_base(b);
  for (; m > 0 || n > 0; m /= b, n /= b) {
    if (m % b > n % b) return false;
  }
  return true;
}

bool carry_free(Natural j, Natural k, unsigned b) {
  require_base(b);
  for (; j > 0 && k > 0; j /= b, k /= b) {
    if (j % b + k % b >= b) return false;
  }
  return true;
}

Natural multiplicity(Natural n, unsigned j, unsigned b) {
  require_base(b);
  if (j < 1 || j > b - 1) {
    throw std::invalid_argument("digit " + std::to_string(j) + " outside [1, " +
                                std::to_string(b - 1) + "]");
  }
  Natural count = 0;
  for (; n > 0; n /= b) count += (n % b == j) ? 1 : 0;
  return count;
}

std::vector<Natural> dominated_set(Natural n, unsigned b) {
  const auto e = to_digits(n, b);
  // Cartesian product of per-digit ranges [0, d_i].
  std::vector<Natural> out{0};
  Natural place = 1;
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    const auto prev = out.size();
    for (unsigned d = 1; d <= e.digits[i]; ++d) {
      for (std::size_t t = 0; t < prev; ++t) out.push_back(out[t] + d * place);
    }
    if (i + 1 < e.digits.size()) place *= b;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Natural checked_pow(unsigned b, unsigned e) {
  Natural r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<Natural>::max() / b) throw std::overflow_error("b^N overflows");
    r *= b;
  }
  return r;
}

}  // namespace digbin::digits
