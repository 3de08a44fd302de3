#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace ssc::cli {

/// Process exit codes.
enum Exit : int {
  kAffirmative = 0,
  kNegative = 1,
  kInputError = 2,
  kInconsistent = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

struct SweepRow {
  std::size_t nodes = 0;
  bool qdiag = false;  // false: * family vs TD, true: ?-diagonal vs MZC
  std::size_t cases = 0;
  std::size_t mismatches = 0;
};

/// Every digraph on 1..max_nodes nodes (self-loops only for the * family)
/// with every nonempty leader set, compared against the pattern verdict.
std::vector<SweepRow> sweep_networks(std::size_t max_nodes);

}  // namespace ssc::cli
