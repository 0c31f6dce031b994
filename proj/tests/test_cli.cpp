#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "labyrinth/cli.hpp"
#include "labyrinth/errors.hpp"

using namespace labyrinth;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "labyrinth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(LABYRINTH_GOLDEN_DIR) + "/" + name); }

}  // namespace

TEST(Cli, VersionFlag) {
  const auto r = invoke({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0.3.0"), std::string::npos);
}

TEST(Cli, DeterministicAcrossRuns) {
  const std::vector<std::vector<std::string>> cases = {
      {"unmatter", "table"},
      {"numtheory", "z", "--n", "909"},
      {"bell", "lhv", "--samples", "20000", "--seed", "7"},
      {"beth", "poynting", "--samples", "200", "--seed", "3"},
      {"celestial", "assign"},
  };
  for (const auto& c : cases) {
    const auto a = invoke(c), b = invoke(c);
    EXPECT_EQ(a.code, 0) << c[0] << " " << c[1] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << c[0] << " " << c[1];
  }
}

TEST(Cli, SeedChangesMonteCarlo) {
  const auto a = invoke({"bell", "lhv", "--samples", "2000", "--seed", "1"});
  const auto b = invoke({"bell", "lhv", "--samples", "2000", "--seed", "2"});
  EXPECT_NE(a.out, b.out);
}

TEST(Cli, ReportShape) {
  const auto r = invoke({"numtheory", "z", "--n", "2222"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["meta"]["subcommand"], "numtheory z");
  EXPECT_FALSE(j["meta"].contains("wall_time_s"));
  EXPECT_EQ(j["result"]["z"], 1111);
  const auto timed = nlohmann::json::parse(invoke({"--timing", "numtheory", "z", "--n", "5"}).out);
  EXPECT_TRUE(timed["meta"].contains("wall_time_s"));
}

TEST(Cli, TableFormat) {
  const auto r = invoke({"--format", "table", "unmatter", "count", "--n", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("181398528"), std::string::npos);
  EXPECT_EQ(r.out.find('{'), std::string::npos);
}

TEST(Cli, ValidationErrorsExitTwo) {
  EXPECT_EQ(invoke({"unmatter", "count", "--n", "1"}).code, cli::kValidation);
  EXPECT_EQ(invoke({"numtheory", "magic", "--order", "4"}).code, cli::kValidation);
  EXPECT_EQ(invoke({"bell", "entropy", "--p", "0.5,0.7"}).code, cli::kValidation);
  EXPECT_EQ(invoke({"nosuch"}).code, cli::kValidation);
  EXPECT_EQ(invoke({"--format", "xml", "unmatter", "table"}).code, cli::kValidation);
  const auto bad = invoke({"celestial", "assign", "--table", "/nonexistent/orbits.csv"});
  EXPECT_EQ(bad.code, cli::kValidation);
  EXPECT_FALSE(bad.err.empty());
}

TEST(Cli, NotConvergedFitExitsThreeWithPartialReport) {
  const auto r = invoke({"fractal-fit", "example1"});
  EXPECT_EQ(r.code, cli::kNumerical);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["status"], "not_converged");
  EXPECT_TRUE(j["result"].contains("dim"));
}

TEST(Cli, GoldenFiles) {
  EXPECT_EQ(invoke({"unmatter", "table"}).out, golden("unmatter_table.json"));
  EXPECT_EQ(invoke({"gravity", "bounds"}).out, golden("gravity_bounds.json"));
  EXPECT_EQ(invoke({"fractal-fit", "example1"}).out, golden("fractal_example1.json"));
}

TEST(OrbitCsv, ParsesValidTable) {
  std::istringstream in("name,semimajor_axis_m\nMercury,5.7909e10\nVenus,1.0821e11\n");
  const auto t = cli::parse_orbit_csv(in);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.entries()[1].name, "Venus");
  EXPECT_EQ(t.entries()[0].semimajor_axis, 5.7909e10);
}

TEST(OrbitCsv, HeaderIsLineOne) {
  std::istringstream missing("");
  EXPECT_THROW(cli::parse_orbit_csv(missing), ParseError);
  std::istringstream wrong("planet,axis\nMercury,1\n");
  try {
    cli::parse_orbit_csv(wrong);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
  }
}

TEST(OrbitCsv, BadRowsReportLine) {
  std::istringstream bad_number("name,semimajor_axis_m\nMercury,5e10\nVenus,abc\n");
  try {
    cli::parse_orbit_csv(bad_number);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  std::istringstream extra("name,semimajor_axis_m\nMercury,5e10,7\n");
  EXPECT_THROW(cli::parse_orbit_csv(extra), ParseError);
}

TEST(OrbitCsv, NegativeAxisIsValidationError) {
  std::istringstream neg("name,semimajor_axis_m\nMercury,-1\n");
  try {
    cli::parse_orbit_csv(neg);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "semimajor_axis_m");
  }
  std::istringstream dup("name,semimajor_axis_m\nMercury,1\nMercury,2\n");
  EXPECT_THROW(cli::parse_orbit_csv(dup), ValidationError);
}

TEST(OrbitCsv, FileRoundTripThroughCli) {
  const std::string path = std::string(LABYRINTH_DATA_DIR) + "/inner_planets.csv";
  const auto t = cli::ingest_orbit_csv(path);
  EXPECT_EQ(t.size(), 4u);
  const auto r = invoke({"celestial", "assign", "--table", path});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"]["assignments"][0]["n"], 3);
}
