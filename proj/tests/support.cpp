#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ssc::test {

PatternMatrix pat(const std::vector<std::string>& rows) {
  PatternMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      switch (rows[r][c]) {
        case '0': m(r, c) = PatternSymbol::kZero; break;
        case '*': m(r, c) = PatternSymbol::kNonzero; break;
        case '?': m(r, c) = PatternSymbol::kArbitrary; break;
        default: throw std::invalid_argument("bad symbol");
      }
    }
  }
  return m;
}

PatternMatrix random_pattern(SplitMix64& rng, std::size_t p, std::size_t q,
                             unsigned w_zero, unsigned w_star, unsigned w_q) {
  PatternMatrix m(p, q);
  const unsigned total = w_zero + w_star + w_q;
  for (std::size_t r = 0; r < p; ++r)
    for (std::size_t c = 0; c < q; ++c) {
      auto x = rng.below(total);
      m(r, c) = x < w_zero          ? PatternSymbol::kZero
                : x < w_zero + w_star ? PatternSymbol::kNonzero
                                      : PatternSymbol::kArbitrary;
    }
  return m;
}

PatternMatrix pattern_from_index(std::size_t p, std::size_t q,
                                 std::size_t index) {
  PatternMatrix m(p, q);
  for (std::size_t k = 0; k < p * q; ++k) {
    m(k / q, k % q) = static_cast<PatternSymbol>(index % 3);
    index /= 3;
  }
  return m;
}

std::size_t naive_rank(const RationalMatrix& in) {
  RationalMatrix m = in;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(rank, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || m(i, c) == 0) continue;
      Rational f = m(i, c) / m(rank, c);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::vector<bool> naive_black_set(const PatternMatrix& m) {
  const std::size_t q = m.cols();
  std::vector<bool> black(q, false);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < q; ++i) {
      std::size_t white = 0, target = 0;
      for (std::size_t j = 0; j < m.rows(); ++j) {
        if (m(j, i) != PatternSymbol::kZero && !black[j]) {
          ++white;
          target = j;
        }
      }
      if (white == 1 && m(target, i) == PatternSymbol::kNonzero) {
        black[target] = true;
        changed = true;
      }
    }
  }
  return black;
}

bool brute_force_loopy(const Digraph& h, const std::vector<std::size_t>& initial,
                       const std::vector<std::size_t>& banned) {
  const std::size_t n = h.node_count;
  const unsigned full = (1u << n) - 1;
  unsigned start = 0;
  for (auto v : initial) start |= 1u << v;
  std::set<unsigned> seen;
  std::vector<unsigned> stack{start};
  while (!stack.empty()) {
    unsigned s = stack.back();
    stack.pop_back();
    if (s == full) return true;
    if (!seen.insert(s).second) continue;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t white = 0, target = 0;
      for (const auto& e : h.edges)
        if (e.from == i && !(s >> e.to & 1)) {
          ++white;
          target = e.to;
        }
      if (white != 1) continue;
      if (target == i &&
          std::find(banned.begin(), banned.end(), i) != banned.end())
        continue;
      stack.push_back(s | 1u << target);
    }
  }
  return false;
}

std::string data_path(const std::string& name) {
  return std::string(SSC_DATA_DIR) + "/" + name;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ssc::test
