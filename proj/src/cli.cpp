#include "seveninv/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "seveninv/acceptance.hpp"
#include "seveninv/errors.hpp"
#include "seveninv/family.hpp"
#include "seveninv/inertia.hpp"
#include "seveninv/report_io.hpp"
#include "seveninv/sampling.hpp"
#include "seveninv/search.hpp"

namespace seveninv::cli {

namespace {

enum class Format { Table, Json, Csv };

struct Options {
  std::string a;
  std::string b;
  std::string format;
  int count = 1;
  std::string stride;
  int random = 0;
  std::int64_t max_q = 25;
  std::uint64_t seed = 1;
  std::int64_t max = 0;
  std::string target_mu;
  bool homotopy_sphere = false;
  bool milnor = false;
  bool non_milnor = false;
  std::string start_after;
  std::string output;
  unsigned threads = 0;
  int criterion = 0;
};

Format parse_format(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (text == "table") return Format::Table;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw InputError("unknown format '" + text + "' (expected table, json or csv)");
}

ParamPair read_pair(const Options& o) {
  if (o.a.empty() || o.b.empty()) throw InputError("both --a and --b are required");
  return validate_pair(Triple::parse(o.a), Triple::parse(o.b));
}

unsigned thread_count(const Options& o) { return o.threads > 0 ? o.threads : default_threads(); }

int cmd_invariants(const Options& o, std::ostream& out) {
  const InvariantReport r = invariant_report(read_pair(o));
  switch (parse_format(o.format, Format::Json)) {
    case Format::Json: out << report_json(r).dump(2) << '\n'; break;
    case Format::Csv: out << csv_header() << '\n' << csv_row(r) << '\n'; break;
    case Format::Table: out << report_table(r); break;
  }
  return 0;
}

int cmd_family(const Options& o, std::ostream& out) {
  std::optional<Integer> stride;
  if (!o.stride.empty()) {
    try {
      stride = Integer(o.stride);
    } catch (const std::invalid_argument&) {
      throw InputError("malformed stride '" + o.stride + "'");
    }
  }
  const CensusReport r = moduli_census(read_pair(o), o.count, stride);
  switch (parse_format(o.format, Format::Json)) {
    case Format::Json: out << census_json(r).dump(2) << '\n'; break;
    case Format::Csv:
      out << "index," << csv_header() << '\n';
      for (std::size_t t = 0; t < r.members.size(); ++t) out << r.indices[t] << ',' << csv_row(r.members[t]) << '\n';
      break;
    case Format::Table: out << census_table(r); break;
  }
  return r.ok() ? 0 : 1;
}

int cmd_verify_oracle(const Options& o, std::ostream& out) {
  const Format format = parse_format(o.format, Format::Table);
  std::vector<ParamPair> pairs;
  if (o.random > 0) {
    if (!o.a.empty() || !o.b.empty()) throw InputError("--random cannot be combined with --a/--b");
    if (o.max_q < 3) throw InputError("--max-q must be >= 3");
    std::mt19937_64 rng(o.seed);
    for (int c = 0; c < o.random; ++c) pairs.push_back(sample_pair(rng, 3, o.max_q, 4 * o.max_q));
  } else {
    pairs.push_back(read_pair(o));
  }
  bool all = true;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const ParamPair& p : pairs) {
    const OracleReport r = oracle_check(p);
    all = all && r.equal;
    if (format == Format::Json) {
      reports.push_back(oracle_json(r));
      continue;
    }
    if (pairs.size() > 1) out << p.str() << ' ';
    out << (r.equal ? "EQUAL " : "MISMATCH ") << r.oracle << (r.equal ? " = " : " != ") << r.closed_form << '\n';
  }
  if (format == Format::Json) out << (pairs.size() == 1 ? reports[0] : reports).dump(2) << '\n';
  return all ? 0 : 1;
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchConfig config;
  config.max = o.max;
  config.homotopy_sphere = o.homotopy_sphere;
  if (!o.target_mu.empty()) config.target_mu = Rational::parse(o.target_mu);
  if (o.milnor) config.sphere_class = SphereClass::Milnor;
  if (o.non_milnor) config.sphere_class = SphereClass::NonMilnor;
  if (!o.start_after.empty()) config.start_after = parse_cursor(o.start_after);
  config.threads = thread_count(o);
  const Format format = parse_format(o.format, Format::Csv);
  if (format == Format::Table) throw InputError("search supports csv and json output");

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::out | std::ios::trunc);
    if (!file) throw SearchIoError(std::nullopt);
    sink = &file;
  }
  if (format == Format::Csv && !config.start_after) *sink << csv_header() << '\n';
  if (!sink->flush()) throw SearchIoError(std::nullopt);
  stream_search(
      config,
      [&](const InvariantReport& r) {
        if (format == Format::Csv) *sink << csv_row(r) << '\n';
        else *sink << report_json(r).dump() << '\n';
        return static_cast<bool>(*sink);
      },
      [&] { return static_cast<bool>(sink->flush()); });
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of 2-connected 7-manifolds M_{a,b} with positive Ricci curvature metrics", "seveninv"};
  app.require_subcommand(1);
  Options o;

  auto add_pair = [&](CLI::App* sub, bool required) {
    auto* a = sub->add_option("--a", o.a, "triple a1,a2,a3 (use --a=-3,-3,1 for negative entries)");
    auto* b = sub->add_option("--b", o.b, "triple b1,b2,b3");
    if (required) {
      a->required();
      b->required();
    }
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  };

  auto* inv = app.add_subcommand("invariants", "print the invariant report of one pair");
  add_pair(inv, true);
  add_format(inv);

  auto* fam = app.add_subcommand("family", "census of family members at a fixed stride");
  add_pair(fam, true);
  fam->add_option("--count", o.count, "number of members")->check(CLI::PositiveNumber);
  fam->add_option("--stride", o.stride, "index stride (default 224 |n| a1^2 b1^2)");
  add_format(fam);

  auto* orc = app.add_subcommand("verify-oracle", "compare the inertia-orbifold oracle with the closed form");
  add_pair(orc, false);
  orc->add_option("--random", o.random, "number of random pairs")->check(CLI::PositiveNumber);
  orc->add_option("--max-q", o.max_q, "bound on |a1|, |b1| for random pairs");
  orc->add_option("--seed", o.seed, "random seed");
  add_format(orc);

  auto* srch = app.add_subcommand("search", "enumerate valid pairs with |entries| <= M");
  srch->add_option("--max", o.max, "entry bound M")->required()->check(CLI::NonNegativeNumber);
  auto* target = srch->add_option("--target-mu", o.target_mu, "keep rows with mu = P/Q mod 1");
  auto* sphere = srch->add_flag("--homotopy-sphere", o.homotopy_sphere, "keep rows with |n| = 1");
  target->excludes(sphere);
  auto* mil = srch->add_flag("--milnor", o.milnor, "keep homotopy spheres with mu in the Milnor set");
  auto* non = srch->add_flag("--non-milnor", o.non_milnor, "keep homotopy spheres with mu outside the Milnor set");
  mil->excludes(non);
  srch->add_option("--start-after", o.start_after, "resume after the row a1,a2,a3,b1,b2,b3");
  srch->add_option("--output", o.output, "write rows to this file instead of stdout");
  srch->add_option("--threads", o.threads, "worker count (default SEVEN_INV_THREADS or hardware)");
  add_format(srch);

  auto* self = app.add_subcommand("selftest", "run the acceptance battery");
  self->add_option("--criterion", o.criterion, "run a single criterion 1-8")->check(CLI::Range(1, acceptance::kCriteria));
  self->add_option("--threads", o.threads, "worker count for the sweep criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*inv) return cmd_invariants(o, out);
    if (*fam) return cmd_family(o, out);
    if (*orc) return cmd_verify_oracle(o, out);
    if (*srch) return cmd_search(o, out);
    if (*self) {
      const std::optional<int> only = o.criterion > 0 ? std::optional<int>(o.criterion) : std::nullopt;
      return acceptance::run_battery(out, only, thread_count(o));
    }
  } catch (const SearchIoError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Unavailable& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantViolation& e) {
    err << "invariant check failed: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace seveninv::cli
