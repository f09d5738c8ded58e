#include "seveninv/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <sstream>
#include <thread>
#include <vector>

#include "seveninv/errors.hpp"

namespace seveninv {

namespace {

std::string io_message(const std::optional<Cursor>& last) {
  if (!last) return "I/O error while writing search output before the first row";
  return "I/O error while writing search output; last row written " + cursor_str(*last) +
         " (resume with --start-after=" + cursor_str(*last) + ")";
}

std::vector<Triple> valid_triples(std::int64_t max) {
  std::vector<std::int64_t> values;
  for (std::int64_t v = -max; v <= max; ++v)
    if (((v % 4) + 4) % 4 == 1) values.push_back(v);
  std::vector<Triple> out;
  for (auto t1 : values)
    for (auto t2 : values)
      for (auto t3 : values) {
        const Triple t{t1, t2, t3};
        if (pair_violations(t, Triple{1, 1, 1}).empty()) out.push_back(t);
      }
  return out;
}

Cursor cursor_of(const ParamPair& p) { return {p.a.t1, p.a.t2, p.a.t3, p.b.t1, p.b.t2, p.b.t3}; }

bool keep(const SearchConfig& c, const InvariantReport& r) {
  const bool sphere = abs(r.n) == 1;
  if ((c.homotopy_sphere || c.sphere_class) && !sphere) return false;
  if (c.sphere_class && classify_mu(r.mu) != *c.sphere_class) return false;
  if (c.target_mu && r.mu != c.target_mu->frac()) return false;
  return true;
}

std::vector<InvariantReport> run_block(const SearchConfig& c, const Triple& a, const std::vector<Triple>& bs) {
  std::vector<InvariantReport> rows;
  for (const Triple& b : bs) {
    const ParamPair p{a, b, true};
    if (c.start_after && cursor_of(p) <= *c.start_after) continue;
    const Integer n = h4_order(p);
    if (n == 0) continue;
    if ((c.homotopy_sphere || c.sphere_class) && abs(n) != 1) continue;
    InvariantReport r = invariant_report(p);
    if (keep(c, r)) rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

std::string cursor_str(const Cursor& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  return os.str();
}

Cursor parse_cursor(const std::string& text) {
  Cursor c{};
  std::istringstream is(text);
  std::string item;
  std::size_t i = 0;
  while (std::getline(is, item, ',')) {
    if (i == c.size()) throw InputError("cursor has more than six entries: '" + text + "'");
    try {
      std::size_t used = 0;
      c[i] = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("malformed cursor entry '" + item + "'");
    }
    ++i;
  }
  if (i != c.size()) throw InputError("cursor needs six entries a1,a2,a3,b1,b2,b3: '" + text + "'");
  return c;
}

SearchIoError::SearchIoError(std::optional<Cursor> last_written)
    : Error(io_message(last_written)), last_(last_written) {}

unsigned default_threads() {
  if (const char* env = std::getenv("SEVEN_INV_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw InputError(std::string("SEVEN_INV_THREADS must be a positive integer, got '") + env + "'");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t stream_search(const SearchConfig& config, const std::function<bool(const InvariantReport&)>& sink,
                            const std::function<bool()>& flush) {
  if (config.max < 0) throw InputError("search bound must be non-negative");
  if (config.max > 200) throw InputError("search bound above 200 is not supported");
  const std::vector<Triple> triples = valid_triples(config.max);
  const unsigned threads = std::max(1u, config.threads);
  const std::size_t wave = std::max<std::size_t>(1, 4 * threads);

  std::uint64_t emitted = 0;
  std::optional<Cursor> committed;
  std::optional<Cursor> last;
  for (std::size_t begin = 0; begin < triples.size(); begin += wave) {
    const std::size_t end = std::min(triples.size(), begin + wave);
    if (config.start_after) {
      const Triple& a = triples[end - 1];
      if (Cursor{a.t1, a.t2, a.t3, config.max + 1, 0, 0} <= *config.start_after) continue;
    }
    std::vector<std::vector<InvariantReport>> blocks(end - begin);
    std::vector<std::exception_ptr> errors(end - begin);
    std::atomic<std::size_t> next{begin};
    auto work = [&] {
      for (std::size_t i = next++; i < end; i = next++) {
        try {
          blocks[i - begin] = run_block(config, triples[i], triples);
        } catch (...) {
          errors[i - begin] = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads && t < end - begin; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      for (const InvariantReport& r : blocks[i]) {
        if (!sink(r)) throw SearchIoError(committed);
        last = cursor_of(r.pair);
        ++emitted;
      }
    }
    if (!flush()) throw SearchIoError(committed);
    committed = last;
  }
  return emitted;
}

}  // namespace seveninv
