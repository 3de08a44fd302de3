#include "ssc/pattern.hpp"

#include <algorithm>
#include <sstream>

#include "ssc/error.hpp"

namespace ssc {
namespace {

struct Row {
  std::vector<std::string> tokens;
  std::size_t line;  // 1-based
};

std::vector<Row> tokenize(std::string_view text) {
  std::vector<Row> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::istringstream in{std::string(text.substr(pos, end - pos))};
    Row row{{}, line_no};
    for (std::string tok; in >> tok;) row.tokens.push_back(std::move(tok));
    if (!row.tokens.empty()) rows.push_back(std::move(row));
    pos = end + 1;
  }
  return rows;
}

PatternSymbol symbol_from_token(const std::string& tok, std::size_t row,
                                std::size_t col, std::size_t line) {
  if (tok == "0") return PatternSymbol::kZero;
  if (tok == "*") return PatternSymbol::kNonzero;
  if (tok == "?") return PatternSymbol::kArbitrary;
  throw ParseError(ErrorCode::kBadToken, row, col, line, tok,
                   "bad token '" + tok + "' at row " + std::to_string(row) +
                       ", column " + std::to_string(col));
}

PatternMatrix build(const std::vector<std::vector<std::string>>& rows,
                    const std::vector<std::size_t>& lines) {
  if (rows.empty()) {
    throw ParseError(ErrorCode::kEmptyInput, 0, 0, 0, "", "empty pattern");
  }
  const std::size_t cols = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ParseError(ErrorCode::kRaggedRows, r, rows[r].size(), lines[r], "",
                       "row " + std::to_string(r) + " has " +
                           std::to_string(rows[r].size()) +
                           " entries, expected " + std::to_string(cols));
    }
  }
  if (cols == 0) {
    throw ParseError(ErrorCode::kEmptyInput, 0, 0, lines.front(), "",
                     "pattern has no columns");
  }
  PatternMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = symbol_from_token(rows[r][c], r, c, lines[r]);
  return m;
}

Rational draw_nonzero(SplitMix64& rng) {
  // 20 values: -10..-1, 1..10
  auto v = static_cast<long>(rng.below(20));
  return Rational(v < 10 ? v - 10 : v - 9);
}

}  // namespace

char to_char(PatternSymbol s) {
  switch (s) {
    case PatternSymbol::kZero: return '0';
    case PatternSymbol::kNonzero: return '*';
    case PatternSymbol::kArbitrary: return '?';
  }
  return '0';
}

std::size_t PatternMatrix::count(PatternSymbol s) const {
  return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), s));
}

StructuredSystem::StructuredSystem(PatternMatrix a, PatternMatrix b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.is_square()) {
    throw Error(ErrorCode::kNotSquare, "A must be square, got " +
                                           std::to_string(a_.rows()) + "x" +
                                           std::to_string(a_.cols()));
  }
  if (a_.rows() != b_.rows()) {
    throw Error(ErrorCode::kRowMismatch, "A has " + std::to_string(a_.rows()) +
                                             " rows but B has " +
                                             std::to_string(b_.rows()));
  }
}

PatternMatrix parse_pattern(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> lines;
  for (auto& row : tokenize(text)) {
    rows.push_back(std::move(row.tokens));
    lines.push_back(row.line);
  }
  return build(rows, lines);
}

StructuredSystem parse_system(std::string_view text) {
  std::vector<std::vector<std::string>> a_rows, b_rows;
  std::vector<std::size_t> lines;
  std::size_t r = 0;
  for (auto& row : tokenize(text)) {
    auto bar = std::find(row.tokens.begin(), row.tokens.end(), "|");
    if (bar == row.tokens.end() || std::find(bar + 1, row.tokens.end(), "|") !=
                                       row.tokens.end()) {
      throw ParseError(ErrorCode::kBadToken, r, 0, row.line, "|",
                       "row " + std::to_string(r) +
                           " needs exactly one '|' separating A from B");
    }
    a_rows.emplace_back(row.tokens.begin(), bar);
    b_rows.emplace_back(bar + 1, row.tokens.end());
    lines.push_back(row.line);
    ++r;
  }
  return StructuredSystem(build(a_rows, lines), build(b_rows, lines));
}

std::string render_pattern(const PatternMatrix& m) {
  std::string out;
  out.reserve(m.rows() * (2 * m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += to_char(m(r, c));
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> render_compact(const PatternMatrix& m) {
  std::vector<std::string> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += to_char(m(r, c));
  return out;
}

PatternMatrix modified_diagonal(const PatternMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kNotSquare, "modified_diagonal needs a square matrix");
  }
  PatternMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out(i, i) = a(i, i) == PatternSymbol::kZero ? PatternSymbol::kNonzero
                                                 : PatternSymbol::kArbitrary;
  }
  return out;
}

PatternMatrix concat_horizontal(const PatternMatrix& lhs,
                                const PatternMatrix& rhs) {
  if (lhs.rows() != rhs.rows()) {
    throw Error(ErrorCode::kRowMismatch, "concat_horizontal: " +
                                             std::to_string(lhs.rows()) +
                                             " vs " + std::to_string(rhs.rows()) +
                                             " rows");
  }
  PatternMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < lhs.cols(); ++c) out(r, c) = lhs(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c)
      out(r, lhs.cols() + c) = rhs(r, c);
  }
  return out;
}

PatternMatrix weak_relaxation(const PatternMatrix& m) {
  PatternMatrix out = m;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) == PatternSymbol::kNonzero)
        out(r, c) = PatternSymbol::kArbitrary;
  return out;
}

RationalMatrix sample_instance(const PatternMatrix& m, std::uint64_t seed) {
  SplitMix64 rng(seed);
  RationalMatrix x(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      switch (m(r, c)) {
        case PatternSymbol::kZero:
          break;
        case PatternSymbol::kNonzero:
          x(r, c) = draw_nonzero(rng);
          break;
        case PatternSymbol::kArbitrary:
          if (rng.below(3) != 0) x(r, c) = draw_nonzero(rng);
          break;
      }
    }
  }
  return x;
}

bool is_member(const RationalMatrix& x, const PatternMatrix& m) {
  if (x.rows() != m.rows() || x.cols() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "is_member: shapes differ");
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) == PatternSymbol::kZero && x(r, c) != 0) return false;
      if (m(r, c) == PatternSymbol::kNonzero && x(r, c) == 0) return false;
    }
  }
  return true;
}

std::uint64_t mix64(std::uint64_t x) noexcept {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(seed ^ mix64(index + 1));
}

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9e3779b97f4a7c15ULL;
  return mix64(state_);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v;
  do {
    v = next();
  } while (v >= limit);
  return v % bound;
}

}  // namespace ssc
