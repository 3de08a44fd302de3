#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ssc/rational.hpp"

namespace ssc {

/// Entry of a pattern matrix.
///   kZero      `0`  fixed zero
///   kNonzero   `*`  arbitrary but nonzero
///   kArbitrary `?`  arbitrary, zero allowed
enum class PatternSymbol : std::uint8_t { kZero, kNonzero, kArbitrary };

char to_char(PatternSymbol s);

/// p×q grid of pattern symbols, row-major. Zero-sized matrices can be built
/// programmatically (e.g. an empty right block) but are never parsed.
class PatternMatrix {
 public:
  PatternMatrix() = default;
  PatternMatrix(std::size_t rows, std::size_t cols,
                PatternSymbol fill = PatternSymbol::kZero)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  PatternSymbol operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  PatternSymbol& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }

  std::size_t count(PatternSymbol s) const;

  bool operator==(const PatternMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<PatternSymbol> data_;
};

/// The pair (A, B) of ẋ = Ax + Bu with A ∈ P(A), B ∈ P(B).
class StructuredSystem {
 public:
  /// Throws NotSquare if `a` is not square and RowMismatch if the row counts
  /// of `a` and `b` differ.
  StructuredSystem(PatternMatrix a, PatternMatrix b);

  const PatternMatrix& a() const noexcept { return a_; }
  const PatternMatrix& b() const noexcept { return b_; }
  std::size_t states() const noexcept { return a_.rows(); }
  std::size_t inputs() const noexcept { return b_.cols(); }

 private:
  PatternMatrix a_;
  PatternMatrix b_;
};

/// Rows separated by '\n', tokens `0`, `*`, `?` separated by whitespace.
/// Blank lines are ignored. Errors: EmptyInput, RaggedRows, BadToken.
PatternMatrix parse_pattern(std::string_view text);

/// Reads a combined `[A | B]` listing: each row is `a-tokens | b-tokens`.
StructuredSystem parse_system(std::string_view text);

/// Canonical form: single spaces, '\n' after every row, no trailing blanks.
std::string render_pattern(const PatternMatrix& m);

/// One string per row with no separators, e.g. {"*0*", "00*", "?**"}.
std::vector<std::string> render_compact(const PatternMatrix& m);

/// Ā: off-diagonal entries copied; diagonal 0 ↦ *, anything else ↦ ?.
PatternMatrix modified_diagonal(const PatternMatrix& a);

/// [L R]. R may have zero columns.
PatternMatrix concat_horizontal(const PatternMatrix& lhs,
                                const PatternMatrix& rhs);

/// Every * becomes ?; zeros stay.
PatternMatrix weak_relaxation(const PatternMatrix& m);

/// A member of P(M) drawn deterministically from `seed`. Nonzero entries
/// are uniform over the nonzero integers in [-10, 10]; arbitrary entries are
/// 0 with probability 1/3 and otherwise drawn like a nonzero entry.
RationalMatrix sample_instance(const PatternMatrix& m, std::uint64_t seed);

/// X ∈ P(M). Throws DimensionMismatch when the shapes differ.
bool is_member(const RationalMatrix& x, const PatternMatrix& m);

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed for the `index`-th derived stream of `seed`:
/// mix64(seed ^ mix64(index + 1)). Independent of evaluation order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Small deterministic generator (splitmix64). Unlike the standard
/// distributions its bounded draws are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound) noexcept;

 private:
  std::uint64_t state_;
};

}  // namespace ssc
