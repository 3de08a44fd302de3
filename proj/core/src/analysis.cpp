#include "ssc/analysis.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "ssc/error.hpp"

namespace ssc {
namespace {

bool has_zero_diagonal(const PatternMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (a(i, i) == PatternSymbol::kZero) return true;
  return false;
}

ConditionResult computed(const PatternMatrix& m) {
  auto r = colorability(m);
  return {r.complete, false, std::move(r.trace)};
}

ColorTrace trace_or_recompute(const ConditionResult& c,
                              const PatternMatrix& m) {
  if (c.trace) return *c.trace;
  return colorability(m).trace;
}

}  // namespace

AnalysisReport strong_controllability(const StructuredSystem& s,
                                      const AnalysisOptions& options) {
  const auto ab = concat_horizontal(s.a(), s.b());
  const auto abar_b = concat_horizontal(modified_diagonal(s.a()), s.b());

  AnalysisReport report;
  report.condition2 = computed(abar_b);
  if (options.use_shortcut && !has_zero_diagonal(s.a()) &&
      report.condition2.holds) {
    report.shortcut_used = true;
    report.condition1.holds = true;
    report.condition1.implied = true;
    if (options.full_traces) report.condition1.trace = colorability(ab).trace;
  } else {
    report.condition1 = computed(ab);
  }
  report.verdict = report.condition1.holds && report.condition2.holds;
  if (!report.verdict && options.with_witness) {
    report.witness = uncontrollability_witness(s, report);
  }
  return report;
}

bool strong_stabilizability(const StructuredSystem& s) {
  return strong_controllability(s, {.with_witness = false}).verdict;
}

UncontrollabilityWitness uncontrollability_witness(
    const StructuredSystem& s, const AnalysisReport& report) {
  if (report.verdict) {
    throw Error(ErrorCode::kWitnessUnavailable,
                "the system is strongly structurally controllable");
  }
  const std::size_t n = s.states();
  const std::size_t m = s.inputs();

  if (!report.condition1.holds) {
    const auto ab = concat_horizontal(s.a(), s.b());
    auto rw = rank_deficiency_witness(ab, trace_or_recompute(report.condition1, ab));
    return {column_block(rw.instance, 0, n), column_block(rw.instance, n, m),
            Rational(0), std::move(rw.left_null)};
  }

  const auto abar = modified_diagonal(s.a());
  const auto abar_b = concat_horizontal(abar, s.b());
  auto rw = rank_deficiency_witness(abar_b,
                                    trace_or_recompute(report.condition2, abar_b));
  RationalMatrix abar0 = column_block(rw.instance, 0, n);

  std::vector<Rational> excluded;
  for (std::size_t i = 0; i < n; ++i)
    if (s.a()(i, i) == PatternSymbol::kNonzero) excluded.push_back(abar0(i, i));
  long alpha_int = 1;
  while (std::find(excluded.begin(), excluded.end(), Rational(alpha_int)) !=
         excluded.end()) {
    ++alpha_int;
  }
  const Rational alpha(alpha_int);

  // A0 = Ā0·X − αI with X diagonal.
  RationalMatrix a0 = abar0;
  for (std::size_t j = 0; j < n; ++j) {
    if (abar(j, j) != PatternSymbol::kNonzero) continue;
    Rational scale = alpha / abar0(j, j);
    for (std::size_t i = 0; i < n; ++i) a0(i, j) *= scale;
  }
  for (std::size_t i = 0; i < n; ++i) a0(i, i) -= alpha;

  return {std::move(a0), column_block(rw.instance, n, m), -alpha,
          std::move(rw.left_null)};
}

bool verify_witness(const StructuredSystem& s,
                    const UncontrollabilityWitness& w) {
  const std::size_t n = s.states();
  if (w.x.size() != n || w.a0.rows() != n || w.a0.cols() != n ||
      w.b0.rows() != n || w.b0.cols() != s.inputs()) {
    return false;
  }
  if (is_zero(w.x)) return false;
  if (!is_member(w.a0, s.a()) || !is_member(w.b0, s.b())) return false;
  RationalMatrix shifted = w.a0;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= w.lambda;
  return is_zero(left_multiply(w.x, shifted)) &&
         is_zero(left_multiply(w.x, w.b0));
}

FormThreeResult form_three(const PatternMatrix& m) {
  const std::size_t p = m.rows();
  const std::size_t q = m.cols();
  if (p > q) {
    throw Error(ErrorCode::kWideMatrixRequired, "Form III needs p <= q");
  }
  std::vector<char> row_left(p, 1), col_left(q, 1);
  std::vector<std::size_t> row_perm(p), col_perm(q);

  for (std::size_t k = p; k-- > 0;) {
    bool found = false;
    for (std::size_t c = q; c-- > 0 && !found;) {
      if (!col_left[c]) continue;
      std::size_t pivot = p;
      bool single = true;
      for (std::size_t r = 0; r < p && single; ++r) {
        if (!row_left[r] || m(r, c) == PatternSymbol::kZero) continue;
        if (m(r, c) == PatternSymbol::kNonzero && pivot == p) {
          pivot = r;
        } else {
          single = false;
        }
      }
      if (single && pivot < p) {
        row_perm[k] = pivot;
        col_perm[q - p + k] = c;
        row_left[pivot] = 0;
        col_left[c] = 0;
        found = true;
      }
    }
    if (!found) return {};
  }
  std::size_t slot = 0;
  for (std::size_t c = 0; c < q; ++c)
    if (col_left[c]) col_perm[slot++] = c;
  return {true, std::move(row_perm), std::move(col_perm)};
}

PatternMatrix permute(const PatternMatrix& m,
                      const std::vector<std::size_t>& row_perm,
                      const std::vector<std::size_t>& col_perm) {
  if (row_perm.size() != m.rows() || col_perm.size() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation sizes");
  }
  PatternMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(r, c) = m(row_perm[r], col_perm[c]);
  return out;
}

std::size_t term_rank(const PatternMatrix& m) {
  const std::size_t none = m.rows();
  std::vector<std::size_t> col_match(m.cols(), none);
  std::vector<char> visited;

  std::function<bool(std::size_t)> augment = [&](std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) == PatternSymbol::kZero || visited[c]) continue;
      visited[c] = 1;
      if (col_match[c] == none || augment(col_match[c])) {
        col_match[c] = r;
        return true;
      }
    }
    return false;
  };

  std::size_t size = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    visited.assign(m.cols(), 0);
    if (augment(r)) ++size;
  }
  return size;
}

bool inputs_reach_all_states(const StructuredSystem& s) {
  const std::size_t n = s.states();
  const auto ab = concat_horizontal(s.a(), s.b());
  std::vector<char> seen(ab.cols(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t u = n; u < ab.cols(); ++u) {
    seen[u] = 1;
    queue.push_back(u);
  }
  while (!queue.empty()) {
    std::size_t j = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (ab(i, j) != PatternSymbol::kZero && !seen[i]) {
        seen[i] = 1;
        queue.push_back(i);
      }
    }
  }
  return std::all_of(seen.begin(), seen.begin() + static_cast<long>(n),
                     [](char v) { return v; });
}

bool weak_controllability(const StructuredSystem& s) {
  StructuredSystem relaxed(weak_relaxation(s.a()), weak_relaxation(s.b()));
  return inputs_reach_all_states(relaxed) &&
         term_rank(concat_horizontal(relaxed.a(), relaxed.b())) ==
             relaxed.states();
}

}  // namespace ssc
