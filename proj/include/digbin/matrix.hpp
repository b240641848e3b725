#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "digbin/polynomial.hpp"
#include "digbin/rational.hpp"

namespace digbin {

inline void accumulate_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void accumulate_product(Polynomial& acc, const Polynomial& a, const Polynomial& b) {
  acc.add_product(a, b);
}

/// Thrown when a construction would exceed the configured dimension cap.
class CapExceeded : public std::length_error {
 public:
  CapExceeded(std::size_t dim, std::size_t cap)
      : std::length_error("matrix dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(cap)) {}
};

inline constexpr std::size_t kDefaultCap = 4096;

/// First mismatching entry in row-major order.
template <typename T>
struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  T lhs;
  T rhs;
};

/// Dense square matrix, row-major. T is Rational or Polynomial.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static SquareMatrix identity(std::size_t dim) {
    SquareMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  /// Bounds-checked access.
  const T& at(std::size_t r, std::size_t c) const {
    if (r >= dim_ || c >= dim_) throw std::out_of_range("matrix index out of range");
    return (*this)(r, c);
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    require_same_dim(a, b);
    SquareMatrix out(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) {
      for (std::size_t k = 0; k < a.dim_; ++k) {
        const T& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < a.dim_; ++j) {
          const T& bkj = b(k, j);
          if (!bkj.is_zero()) accumulate_product(out(i, j), aik, bkj);
        }
      }
    }
    return out;
  }

  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) {
    require_same_dim(a, b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  SquareMatrix scaled(const Rational& c) const {
    SquareMatrix out = *this;
    for (auto& v : out.data_) v = scale_entry(v, c);
    return out;
  }

  /// Repeated multiplication; pow(0) is the identity.
  SquareMatrix pow(unsigned e) const {
    SquareMatrix r = identity(dim_);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  SquareMatrix transpose() const {
    SquareMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Reflection across the anti-diagonal: out(i,j) = in(dim-1-j, dim-1-i).
  SquareMatrix skew_transpose() const {
    SquareMatrix t(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) t(i, j) = (*this)(dim_ - 1 - j, dim_ - 1 - i);
    return t;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!v.is_zero()) return false;
    return true;
  }

  bool is_strictly_lower_triangular() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i; j < dim_; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    return true;
  }

  bool is_unit_lower_triangular() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!((*this)(i, i) == T(1))) return false;
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!(*this)(i, j).is_zero()) return false;
    }
    return true;
  }

  std::optional<Mismatch<T>> first_mismatch(const SquareMatrix& other) const {
    require_same_dim(*this, other);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (!((*this)(i, j) == other(i, j))) return Mismatch<T>{i, j, (*this)(i, j), other(i, j)};
    return std::nullopt;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

  std::span<const T> row(std::size_t r) const { return {data_.data() + r * dim_, dim_}; }

 private:
  static void require_same_dim(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  }
  static T scale_entry(const T& v, const Rational& c) {
    if constexpr (std::is_same_v<T, Polynomial>) {
      return v.scaled(c);
    } else {
      return v * c;
    }
  }

  std::size_t dim_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = SquareMatrix<Polynomial>;
using RationalMatrix = SquareMatrix<Rational>;

/// A ⊗ B with the left factor indexing blocks: block (p,q) is A(p,q)·B.
template <typename T>
SquareMatrix<T> kronecker(const SquareMatrix<T>& a, const SquareMatrix<T>& b,
                          std::size_t cap = kDefaultCap) {
  const std::size_t n = a.dim() * b.dim();
  if (n > cap) throw CapExceeded(n, cap);
  SquareMatrix<T> out(n);
  for (std::size_t p = 0; p < a.dim(); ++p) {
    for (std::size_t q = 0; q < a.dim(); ++q) {
      const T& apq = a(p, q);
      if (apq.is_zero()) continue;
      for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t s = 0; s < b.dim(); ++s) {
          if (b(r, s).is_zero()) continue;
          out(p * b.dim() + r, q * b.dim() + s) = apq * b(r, s);
        }
    }
  }
  return out;
}

/// A ⊕ B = A ⊗ I + I ⊗ B.
template <typename T>
SquareMatrix<T> kronecker_sum(const SquareMatrix<T>& a, const SquareMatrix<T>& b,
                              std::size_t cap = kDefaultCap) {
  return kronecker(a, SquareMatrix<T>::identity(b.dim()), cap) +
         kronecker(SquareMatrix<T>::identity(a.dim()), b, cap);
}

/// Entrywise evaluation of a polynomial matrix at (x0, y0).
RationalMatrix evaluate(const PolyMatrix& m, const Rational& x0, const Rational& y0 = Rational(0));

/// Dense matrix-vector product.
std::vector<Rational> apply(const RationalMatrix& m, std::span<const Rational> v);

}  // namespace digbin
