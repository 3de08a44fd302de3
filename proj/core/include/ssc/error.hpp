#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ssc {

enum class ErrorCode {
  kEmptyInput,
  kRaggedRows,
  kBadToken,
  kNotSquare,
  kRowMismatch,
  kDimensionMismatch,
  kWideMatrixRequired,
  kWitnessUnavailable,
  kUnknownNode,
  kSelfLoopForbidden,
  kTooManyFreeEntries,
  kZeroVector,
  kBadNetwork,
};

const char* to_string(ErrorCode code);

/// Base exception for every contract violation raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the text readers. `row` and `col` are 0-based positions in the
/// matrix (or edge list); `line` is the 1-based source line.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t row, std::size_t col, std::size_t line,
             std::string token, const std::string& what)
      : Error(code, what),
        row_(row),
        col_(col),
        line_(line),
        token_(std::move(token)) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t row_;
  std::size_t col_;
  std::size_t line_;
  std::string token_;
};

}  // namespace ssc
