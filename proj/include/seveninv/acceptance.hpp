#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace seveninv::acceptance {

struct Result {
  int id = 0;
  std::string title;
  bool checks_ok = false;
  double seconds = 0;
  double limit = 0;
  std::string detail;

  bool pass() const { return checks_ok && seconds < limit; }
  /// "PASS C1 <title> (0.01s, limit 1s): <detail>"
  std::string line() const;
};

constexpr int kCriteria = 8;

/// Runs one criterion. Uses `threads` workers for the sweep criterion.
Result run(int id, unsigned threads);

/// Runs the criteria (all, or just `only`), printing one line each as it
/// finishes. Returns 0 when every criterion passed and 1 otherwise.
int run_battery(std::ostream& out, std::optional<int> only, unsigned threads);

}  // namespace seveninv::acceptance
