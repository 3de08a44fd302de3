#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ssc/pattern.hpp"
#include "ssc/rational.hpp"

namespace ssc {

// Exact-arithmetic ground truth for pattern-level verdicts. Nothing here
// looks at graphs or colorings.

/// Rank by fraction-free (Bareiss) elimination after clearing the
/// denominators of each row.
std::size_t rank_exact(const RationalMatrix& x);

/// [B, AB, …, A^{n-1}B].
RationalMatrix controllability_matrix(const RationalMatrix& a,
                                      const RationalMatrix& b);

/// Kalman rank test. Throws DimensionMismatch.
bool kalman_controllable(const RationalMatrix& a, const RationalMatrix& b);

/// True iff xᵀ(A − λI) = 0 and xᵀB = 0. Throws ZeroVector for x = 0 and
/// DimensionMismatch on inconsistent shapes.
bool hautus_check(const RationalMatrix& a, const RationalMatrix& b,
                  const Rational& lambda, std::span<const Rational> x);

enum class OracleMode { kMonteCarlo, kExhaustive };

struct ConcretePair {
  RationalMatrix a;
  RationalMatrix b;
};

struct OracleVerdict {
  OracleMode mode = OracleMode::kMonteCarlo;
  std::size_t trials = 0;
  /// Verified member of P(A) × P(B) that fails the Kalman test.
  std::optional<ConcretePair> counterexample;
  /// Index of the trial / assignment that produced the counterexample.
  std::optional<std::size_t> counterexample_index;
  /// False only on a contradiction with the supplied pattern verdict: a
  /// counterexample against a positive verdict, or (Monte Carlo with an
  /// injected pair) no counterexample against a negative one. Absence of a
  /// counterexample is never taken as evidence on its own.
  bool agrees = false;
};

/// Kalman-tests `trials` sampled members. Trial t uses the pair
/// sample_instance(A, derive_seed(seed, 2t)), sample_instance(B,
/// derive_seed(seed, 2t + 1)); if `injected` is given it replaces trial 0.
/// The lowest failing trial is reported. Only verified counterexamples
/// (member of the classes and Kalman-uncontrollable) are recorded.
OracleVerdict monte_carlo_ssc(const StructuredSystem& s, std::size_t trials,
                              std::uint64_t seed, bool expected,
                              const std::optional<ConcretePair>& injected = {});

/// Hard cap on free (* or ?) entries for exhaustive enumeration.
inline constexpr std::size_t kMaxFreeEntries = 12;

/// Value grids for exhaustive search. Zero is dropped from `nonzero` and
/// added to `arbitrary` if missing.
struct ValueGrid {
  std::vector<Rational> nonzero;
  std::vector<Rational> arbitrary;

  static ValueGrid from_list(std::span<const Rational> values);
  static ValueGrid standard();  // {±1, ±2} for *, {0, ±1} for ?
};

/// Enumerates every assignment of the grid to the free entries of A then B
/// (row-major, first entry most significant, values in grid order) and
/// Kalman-tests each. Throws TooManyFreeEntries above kMaxFreeEntries.
OracleVerdict exhaustive_small(const StructuredSystem& s, const ValueGrid& grid,
                               bool expected);

/// First member of the grid over P(M) without full row rank, if any.
/// Same enumeration order and guard as exhaustive_small.
std::optional<RationalMatrix> find_rank_deficient_member(const PatternMatrix& m,
                                                         const ValueGrid& grid);

}  // namespace ssc
