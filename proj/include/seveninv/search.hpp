#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "seveninv/errors.hpp"
#include "seveninv/family.hpp"
#include "seveninv/invariants.hpp"

namespace seveninv {

using Cursor = std::array<std::int64_t, 6>;

std::string cursor_str(const Cursor& c);
/// Parses "a1,a2,a3,b1,b2,b3". Throws InputError on malformed text.
Cursor parse_cursor(const std::string& text);

struct SearchConfig {
  std::int64_t max = 0;  // |entry| bound
  std::optional<Rational> target_mu;
  bool homotopy_sphere = false;
  std::optional<SphereClass> sphere_class;  // Milnor or NonMilnor; implies |n| = 1
  std::optional<Cursor> start_after;
  unsigned threads = 1;
};

/// Raised when the sink or flush reports failure. Carries the last row of the
/// last successfully flushed wave.
class SearchIoError : public Error {
 public:
  SearchIoError(std::optional<Cursor> last_written);
  const std::optional<Cursor>& last_written() const noexcept { return last_; }

 private:
  std::optional<Cursor> last_;
};

/// Worker count: SEVEN_INV_THREADS when set, otherwise the hardware count.
unsigned default_threads();

/// Enumerates valid pairs with every |entry| <= max in lexicographic order of
/// (a1, a2, a3, b1, b2, b3). Pairs with n = 0 are skipped. Each report that
/// passes the filters goes to sink in that order. Work is split into blocks of
/// common a-triple; the calling thread is the only one that calls sink, and it
/// calls flush after every wave of blocks. Returns the number of rows emitted.
std::uint64_t stream_search(const SearchConfig& config, const std::function<bool(const InvariantReport&)>& sink,
                            const std::function<bool()>& flush = [] { return true; });

}  // namespace seveninv
