#include "ssc/oracle.hpp"

#include <algorithm>

#include "ssc/error.hpp"

namespace ssc {
namespace {

struct FreeEntry {
  std::size_t matrix;  // index into the list of patterns
  std::size_t row;
  std::size_t col;
  bool nonzero;
};

std::vector<FreeEntry> free_entries(std::span<const PatternMatrix* const> ms) {
  std::vector<FreeEntry> out;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const auto& m = *ms[k];
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (m(r, c) != PatternSymbol::kZero)
          out.push_back({k, r, c, m(r, c) == PatternSymbol::kNonzero});
  }
  return out;
}

// Odometer over the grid; `visit` returns true to stop. Returns the index of
// the assignment that stopped the walk, or the total count if none did.
template <typename Visit>
std::size_t enumerate(std::span<const PatternMatrix* const> patterns,
                      const ValueGrid& grid, Visit&& visit) {
  const auto entries = free_entries(patterns);
  if (entries.size() > kMaxFreeEntries) {
    throw Error(ErrorCode::kTooManyFreeEntries,
                std::to_string(entries.size()) + " free entries exceed the " +
                    std::to_string(kMaxFreeEntries) + "-entry guard");
  }
  std::vector<RationalMatrix> values;
  for (const auto* m : patterns) values.emplace_back(m->rows(), m->cols());
  auto choices = [&](const FreeEntry& e) -> const std::vector<Rational>& {
    return e.nonzero ? grid.nonzero : grid.arbitrary;
  };
  for (const auto& e : entries)
    if (choices(e).empty()) return 0;

  std::vector<std::size_t> digit(entries.size(), 0);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const auto& e = entries[k];
    values[e.matrix](e.row, e.col) = choices(e)[0];
  }
  std::size_t index = 0;
  for (;;) {
    if (visit(values)) return index;
    ++index;
    std::size_t k = entries.size();
    for (;;) {
      if (k == 0) return index;
      --k;
      const auto& e = entries[k];
      const auto& opts = choices(e);
      if (++digit[k] < opts.size()) {
        values[e.matrix](e.row, e.col) = opts[digit[k]];
        break;
      }
      digit[k] = 0;
      values[e.matrix](e.row, e.col) = opts[0];
    }
  }
}

bool fails_kalman(const StructuredSystem& s, const ConcretePair& pair) {
  return is_member(pair.a, s.a()) && is_member(pair.b, s.b()) &&
         !kalman_controllable(pair.a, pair.b);
}

}  // namespace

std::size_t rank_exact(const RationalMatrix& x) {
  const std::size_t rows = x.rows();
  const std::size_t cols = x.cols();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = x(i, j).get_num() * (lcm / x(i, j).get_den());
  }

  mpz_class previous = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[rank][c] * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     previous.get_mpz_t());
      }
      a[i][c] = 0;
    }
    previous = a[rank][c];
    ++rank;
  }
  return rank;
}

RationalMatrix controllability_matrix(const RationalMatrix& a,
                                      const RationalMatrix& b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "controllability matrix: A must be n×n and B n×m");
  }
  RationalMatrix out(n, n * b.cols());
  RationalMatrix block = b;
  for (std::size_t k = 0; k < n; ++k) {
    if (k) block = a * block;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < b.cols(); ++j)
        out(i, k * b.cols() + j) = block(i, j);
  }
  return out;
}

bool kalman_controllable(const RationalMatrix& a, const RationalMatrix& b) {
  return rank_exact(controllability_matrix(a, b)) == a.rows();
}

bool hautus_check(const RationalMatrix& a, const RationalMatrix& b,
                  const Rational& lambda, std::span<const Rational> x) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.rows() != n || x.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch, "hautus_check: shapes");
  }
  if (is_zero(x)) throw Error(ErrorCode::kZeroVector, "hautus_check: x = 0");
  RationalMatrix shifted = a;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
  return is_zero(left_multiply(x, shifted)) && is_zero(left_multiply(x, b));
}

OracleVerdict monte_carlo_ssc(const StructuredSystem& s, std::size_t trials,
                              std::uint64_t seed, bool expected,
                              const std::optional<ConcretePair>& injected) {
  OracleVerdict v;
  v.mode = OracleMode::kMonteCarlo;
  v.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    ConcretePair pair =
        (t == 0 && injected)
            ? *injected
            : ConcretePair{sample_instance(s.a(), derive_seed(seed, 2 * t)),
                           sample_instance(s.b(), derive_seed(seed, 2 * t + 1))};
    if (fails_kalman(s, pair)) {
      v.counterexample = std::move(pair);
      v.counterexample_index = t;
      break;
    }
  }
  v.agrees = expected ? !v.counterexample.has_value()
                      : (v.counterexample.has_value() || !injected);
  return v;
}

ValueGrid ValueGrid::from_list(std::span<const Rational> values) {
  ValueGrid g;
  for (const auto& v : values) {
    if (v != 0 && std::find(g.nonzero.begin(), g.nonzero.end(), v) ==
                      g.nonzero.end()) {
      g.nonzero.push_back(v);
    }
    if (std::find(g.arbitrary.begin(), g.arbitrary.end(), v) ==
        g.arbitrary.end()) {
      g.arbitrary.push_back(v);
    }
  }
  if (std::find(g.arbitrary.begin(), g.arbitrary.end(), Rational(0)) ==
      g.arbitrary.end()) {
    g.arbitrary.insert(g.arbitrary.begin(), Rational(0));
  }
  return g;
}

ValueGrid ValueGrid::standard() {
  return {{-2, -1, 1, 2}, {-1, 0, 1}};
}

OracleVerdict exhaustive_small(const StructuredSystem& s, const ValueGrid& grid,
                               bool expected) {
  const PatternMatrix* patterns[] = {&s.a(), &s.b()};
  OracleVerdict v;
  v.mode = OracleMode::kExhaustive;
  std::size_t stop = enumerate(patterns, grid, [&](const auto& values) {
    if (kalman_controllable(values[0], values[1])) return false;
    v.counterexample = ConcretePair{values[0], values[1]};
    return true;
  });
  v.trials = v.counterexample ? stop + 1 : stop;
  if (v.counterexample) v.counterexample_index = stop;
  v.agrees = !expected || !v.counterexample.has_value();
  return v;
}

std::optional<RationalMatrix> find_rank_deficient_member(const PatternMatrix& m,
                                                         const ValueGrid& grid) {
  const PatternMatrix* patterns[] = {&m};
  std::optional<RationalMatrix> found;
  const std::size_t full = std::min(m.rows(), m.cols());
  enumerate(patterns, grid, [&](const auto& values) {
    if (rank_exact(values[0]) == full) return false;
    found = values[0];
    return true;
  });
  return found;
}

}  // namespace ssc
