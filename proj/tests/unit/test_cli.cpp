#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "seveninv/cli.hpp"
#include "seveninv/report_io.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "seveninv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = seveninv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, InvariantsJsonForM1) {
  const CliResult r = cli({"invariants", "--a=-3,-3,1", "--b=1,5,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], -1);
  EXPECT_EQ(j["s"]["num"], "-27");
  EXPECT_EQ(j["s"]["den"], "14");
  EXPECT_EQ(j["lk"], "trivial");
  EXPECT_EQ(j["sign_W"], 1);
  EXPECT_TRUE(j["p1"].is_array());
}

TEST(Cli, UnavailableP1SerializesAsNull) {
  const CliResult r = cli({"invariants", "--a=-3,-3,1", "--b=-3,5,-3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out)["p1"].is_null());
}

TEST(Cli, VerifyOracle) {
  const CliResult r = cli({"verify-oracle", "--a=-3,-3,1", "--b=1,1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "EQUAL 1/28 = 1/28\n");
  const CliResult rnd = cli({"verify-oracle", "--random", "2", "--max-q", "7", "--seed", "3"});
  EXPECT_EQ(rnd.code, 0);
  EXPECT_EQ(rnd.out, cli({"verify-oracle", "--random", "2", "--max-q", "7", "--seed", "3"}).out);
}

TEST(Cli, FamilyCensus) {
  const CliResult r = cli({"family", "--a=-3,-3,1", "--b=1,1,1", "--count=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["members"].size(), 3u);
  EXPECT_EQ(j["distinct_abs_s"].size(), 3u);
  EXPECT_TRUE(j["all_pairwise_diffeomorphic"].get<bool>());
  EXPECT_EQ(j["stride"], 2016);
}

TEST(Cli, SearchFiltersAndIsDeterministic) {
  const CliResult all = cli({"search", "--max", "5", "--threads", "1"});
  ASSERT_EQ(all.code, 0);
  EXPECT_EQ(all.out.substr(0, all.out.find('\n')), seveninv::csv_header());
  EXPECT_EQ(all.out, cli({"search", "--max", "5", "--threads", "4"}).out);

  const CliResult spheres = cli({"search", "--max", "5", "--homotopy-sphere"});
  std::istringstream rows(spheres.out);
  std::string line;
  std::getline(rows, line);
  int count = 0;
  while (std::getline(rows, line)) {
    const auto fields = [&] {
      std::vector<std::string> f;
      std::istringstream is(line);
      std::string x;
      while (std::getline(is, x, ',')) f.push_back(x);
      return f;
    }();
    ASSERT_GE(fields.size(), 7u);
    EXPECT_TRUE(fields[6] == "1" || fields[6] == "-1") << line;
    ++count;
  }
  EXPECT_GT(count, 0);

  const CliResult empty = cli({"search", "--max", "0"});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, seveninv::csv_header() + "\n");
}

TEST(Cli, SearchResumesAfterCursor) {
  const CliResult all = cli({"search", "--max", "5"});
  const std::string cursor = "-3,-3,1,1,1,5";
  const CliResult tail = cli({"search", "--max", "5", "--start-after=" + cursor});
  ASSERT_EQ(tail.code, 0);
  const std::size_t at = all.out.find("-3,-3,1,1,1,5,");
  ASSERT_NE(at, std::string::npos);
  EXPECT_EQ(all.out.substr(all.out.find('\n', at) + 1), tail.out);
}

TEST(Cli, NonMilnorSearchAgreesWithMilnorSearch) {
  const CliResult non = cli({"search", "--max", "5", "--non-milnor"});
  const CliResult mil = cli({"search", "--max", "5", "--milnor"});
  const CliResult sph = cli({"search", "--max", "5", "--homotopy-sphere"});
  auto rows = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n') - 1; };
  EXPECT_EQ(rows(non.out) + rows(mil.out), rows(sph.out));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"invariants", "--a=3,3,3", "--b=1,1,1"}).code, 2);
  EXPECT_EQ(cli({"invariants", "--a=-3,-3,1"}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"search", "--max", "5", "--start-after=1,2"}).code, 2);
  EXPECT_EQ(cli({"search", "--max", "3", "--output", "/dev/full"}).code, 1);
  EXPECT_EQ(cli({"family", "--a=-3,-3,1", "--b=-3,5,-3", "--count=2"}).code, 2);
  const CliResult help = cli({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("verify-oracle"), std::string::npos);
}
