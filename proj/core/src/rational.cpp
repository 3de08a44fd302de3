#include "ssc/rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "ssc/error.hpp"

namespace ssc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kRaggedRows: return "RaggedRows";
    case ErrorCode::kBadToken: return "BadToken";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kRowMismatch: return "RowMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kWideMatrixRequired: return "WideMatrixRequired";
    case ErrorCode::kWitnessUnavailable: return "WitnessUnavailable";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kSelfLoopForbidden: return "SelfLoopForbidden";
    case ErrorCode::kTooManyFreeEntries: return "TooManyFreeEntries";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kBadNetwork: return "BadNetwork";
  }
  return "Unknown";
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto valid_integer = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    return s.size() > start &&
           std::all_of(s.begin() + static_cast<long>(start), s.end(),
                       [](unsigned char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' ||
      den[0] == '+') {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

RationalMatrix::RationalMatrix(
    std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kRaggedRows, "ragged rational matrix literal");
    }
    for (long v : row) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix product: inner sizes");
  }
  RationalMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& a = lhs(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = -m(i, j);
  return out;
}

RationalMatrix concat_horizontal(const RationalMatrix& lhs,
                                 const RationalMatrix& rhs) {
  if (lhs.rows() != rhs.rows()) {
    throw Error(ErrorCode::kRowMismatch, "concat_horizontal: row counts differ");
  }
  RationalMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j)
      out(i, lhs.cols() + j) = rhs(i, j);
  }
  return out;
}

RationalMatrix column_block(const RationalMatrix& m, std::size_t first,
                            std::size_t count) {
  if (first + count > m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "column_block out of range");
  }
  RationalMatrix out(m.rows(), count);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = m(i, first + j);
  return out;
}

RationalVector left_multiply(std::span<const Rational> x,
                             const RationalMatrix& m) {
  if (x.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "left_multiply: length");
  }
  RationalVector out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(),
                     [](const Rational& r) { return r == 0; });
}

}  // namespace ssc
