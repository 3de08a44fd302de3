#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace ssc {

/// Arbitrary-precision rational. gmpxx keeps results of arithmetic in
/// canonical (reduced, positive denominator) form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Always "num/den", e.g. "3/1", "-1/2".
std::string to_string(const Rational& value);

/// Accepts "n" or "n/d". Throws std::invalid_argument on malformed text or a
/// zero denominator.
Rational parse_rational(const std::string& text);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool operator==(const RationalMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
RationalMatrix operator-(const RationalMatrix& m);

/// [lhs rhs]; row counts must agree.
RationalMatrix concat_horizontal(const RationalMatrix& lhs,
                                 const RationalMatrix& rhs);

/// Columns [first, first + count).
RationalMatrix column_block(const RationalMatrix& m, std::size_t first,
                            std::size_t count);

/// xᵀ·M as a row vector.
RationalVector left_multiply(std::span<const Rational> x,
                             const RationalMatrix& m);

bool is_zero(std::span<const Rational> v);

}  // namespace ssc
