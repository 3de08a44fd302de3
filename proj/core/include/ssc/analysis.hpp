#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ssc/graph_color.hpp"
#include "ssc/pattern.hpp"
#include "ssc/rational.hpp"

namespace ssc {

struct AnalysisOptions {
  /// When A has no zero diagonal entry, [A B] has full row rank whenever
  /// [Ā B] does, so a colorable G([Ā B]) settles the first condition too.
  bool use_shortcut = true;
  /// Run the coloring for a condition even when it is implied.
  bool full_traces = false;
  /// Attach an UncontrollabilityWitness to negative verdicts.
  bool with_witness = true;
};

struct ConditionResult {
  bool holds = false;
  /// True when `holds` was inferred rather than computed.
  bool implied = false;
  /// Absent only for an implied condition without full_traces.
  std::optional<ColorTrace> trace;
};

/// (A0, B0) ∈ P(A) × P(B) and x ≠ 0 with xᵀ[A0 − λI  B0] = 0, so (A0, B0)
/// fails the Hautus test at λ.
struct UncontrollabilityWitness {
  RationalMatrix a0;
  RationalMatrix b0;
  Rational lambda;
  RationalVector x;
};

struct AnalysisReport {
  bool verdict = false;
  ConditionResult condition1;  // G([A B]) colorable
  ConditionResult condition2;  // G([Ā B]) colorable
  bool shortcut_used = false;
  std::optional<UncontrollabilityWitness> witness;
};

/// Row and column orders that bring M to the echelon shape
///   [ ⊗ … ⊗  *  0 … 0 ]
///   [ ⊗ … ⊗  ⊗  *  … 0 ]
///   [ ⊗ … ⊗  ⊗  ⊗  … * ]
/// i.e. permuted(r, c) = M(row_perm[r], col_perm[c]) has * at
/// (k, q - p + k) and zeros to its right. Orders are empty unless is_form3.
struct FormThreeResult {
  bool is_form3 = false;
  std::vector<std::size_t> row_perm;
  std::vector<std::size_t> col_perm;
};

/// Strong structural controllability of (A, B): both G([A B]) and G([Ā B])
/// must be colorable.
AnalysisReport strong_controllability(const StructuredSystem& s,
                                      const AnalysisOptions& options = {});

/// Strongly stabilizable iff strongly controllable.
bool strong_stabilizability(const StructuredSystem& s);

/// Concrete uncontrollable member. A failing first condition gives a
/// witness at λ = 0 straight from the rank witness of [A B]. Otherwise the
/// rank witness [Ā0 B0] of [Ā B] is rescaled: α is the smallest positive
/// integer outside {Ā0_ii : A_ii = *}, X is diagonal with X_ii = α / Ā0_ii
/// where Ā_ii = * and 1 elsewhere, and A0 = Ā0·X − αI, λ = −α.
/// Throws WitnessUnavailable when the verdict is positive.
UncontrollabilityWitness uncontrollability_witness(const StructuredSystem& s,
                                                   const AnalysisReport& report);

/// Exact check of every witness invariant.
bool verify_witness(const StructuredSystem& s,
                    const UncontrollabilityWitness& w);

/// Greedy peeling of columns with a single * and zeros elsewhere among the
/// remaining rows. Columns are scanned from the right. Throws
/// WideMatrixRequired when p > q.
FormThreeResult form_three(const PatternMatrix& m);

/// Applies the permutations of a FormThreeResult.
PatternMatrix permute(const PatternMatrix& m,
                      const std::vector<std::size_t>& row_perm,
                      const std::vector<std::size_t>& col_perm);

/// Maximum number of nonzero-pattern entries with no two in a row or
/// column (augmenting paths).
std::size_t term_rank(const PatternMatrix& m);

/// Every state node is reachable from some input node in the graph of
/// [A B] (edge j → i iff entry (i, j) is not a fixed zero).
bool inputs_reach_all_states(const StructuredSystem& s);

/// Weak structural controllability through the {0, ?} relaxation:
/// input reachability plus term rank n of [A' B'].
bool weak_controllability(const StructuredSystem& s);

}  // namespace ssc
