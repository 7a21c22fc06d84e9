#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cquant_cli/commands.hpp"
#include "cquant_cli/document.hpp"
#include "cquant_cli/io.hpp"

namespace cquant::cli {
namespace {

const std::string kFixtures = CQUANT_FIXTURE_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("cquant_cli_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, UniquantileLine) {
  const Result r = cli({"uniquantile", fixture("line5.csv"), "--p", "1/2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.substr(0, 4), "q=3\n");
}

TEST(Cli, UniquantileCheck) {
  const Result r = cli({"uniquantile", fixture("line5.csv"), "--p", "1/2", "--check"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("q=3 (LP verified)"), std::string::npos);
}

TEST(Cli, UniquantileIntegralNp) {
  const Result r = cli({"uniquantile", temp_file("four.csv", "1\n2\n3\n4\n"), "--p", "1/2"});
  EXPECT_EQ(r.code, kHypothesisViolation);
  EXPECT_NE(r.err.find("not an integer"), std::string::npos);
}

TEST(Cli, UniquantileNudge) {
  const Result r = cli({"uniquantile", temp_file("four.csv", "1\n2\n3\n4\n"), "--p", "1/2", "--nudge"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.substr(0, 4), "q=2\n");
}

TEST(Cli, UniquantileParseError) {
  EXPECT_EQ(cli({"uniquantile", temp_file("bad.csv", "1\nx\n"), "--p", "1/3"}).code, kInputError);
  EXPECT_EQ(cli({"uniquantile", fixture("square.csv"), "--p", "1/3"}).code, kInputError);
  EXPECT_EQ(cli({"uniquantile", fixture("line5.csv"), "--p", "oops"}).code, kInputError);
  EXPECT_EQ(cli({"uniquantile", "/nonexistent/file.csv", "--p", "1/3"}).code, kInputError);
  EXPECT_EQ(cli({"bogus"}).code, kInputError);
}

TEST(Cli, TukeySquare) {
  const Result r = cli({"tukey", fixture("square.csv"), "--p", "3/10"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_FALSE(doc["empty"].get<bool>());
  EXPECT_EQ(doc["vertices"], nlohmann::json::parse(R"([["1/2","1/2"]])"));
}

TEST(Cli, TukeyTriangleEmpty) {
  const Result r = cli({"tukey", fixture("triangle.csv"), "--p", "2/5"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["empty"].get<bool>());
}

TEST(Cli, RegionDiagonalOrthant) {
  const Result r = cli({"region", fixture("diagonal.csv"), "--p", "3/4", "--cone", fixture("orthant2.csv")});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["vertices"], nlohmann::json::parse(R"([["1","1"]])"));
  EXPECT_EQ(doc["rays"], nlohmann::json::parse(R"([["0","1"],["1","0"]])"));
}

TEST(Cli, RegionConeErrorsNameHypothesis) {
  const Result line = cli({"region", fixture("diagonal.csv"), "--p", "3/4", "--cone",
                           temp_file("line_cone.txt", "1,0\n-1,0\n0,1\n")});
  EXPECT_EQ(line.code, kHypothesisViolation);
  EXPECT_NE(line.err.find("free of lines"), std::string::npos);
  const Result flat = cli({"region", fixture("diagonal.csv"), "--p", "3/4", "--cone",
                           temp_file("flat_cone.txt", "1,0\n")});
  EXPECT_EQ(flat.code, kHypothesisViolation);
  EXPECT_NE(flat.err.find("nonempty interior"), std::string::npos);
  const Result boundary = cli({"region", fixture("diagonal.csv"), "--p", "3/4", "--cone",
                               temp_file("boundary_cone.txt", "1,0\n0,1\ninterior: 1,0\n")});
  EXPECT_EQ(boundary.code, kHypothesisViolation);
}

TEST(Cli, RegionIntegralNp) {
  EXPECT_EQ(cli({"region", fixture("diagonal.csv"), "--p", "1/2", "--cone", fixture("orthant2.csv")}).code,
            kHypothesisViolation);
  const Result r =
      cli({"region", fixture("diagonal.csv"), "--p", "1/2", "--cone", fixture("orthant2.csv"), "--nudge"});
  ASSERT_EQ(r.code, kOk);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["input"]["nudged"].get<bool>());
  EXPECT_EQ(doc["input"]["p_requested"], "1/2");
  EXPECT_EQ(doc["input"]["p"], "3/8");
}

TEST(Cli, DocumentRoundTripAndDeterminism) {
  const Result a = cli({"tukey", fixture("square.csv"), "--p", "3/10"});
  const Result b = cli({"tukey", fixture("square.csv"), "--p", "3/10"});
  EXPECT_EQ(a.out, b.out);
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_TRUE(poly_equal(intersect_halfspaces(2, document_halfspaces(doc)), document_polyhedron(doc)));
}

TEST(Cli, PlotWritesCycle) {
  const auto plot = (std::filesystem::temp_directory_path() / "cquant_cli_test_plot.csv").string();
  const auto out = (std::filesystem::temp_directory_path() / "cquant_cli_test_doc.json").string();
  const Result r = cli({"tukey", fixture("square.csv"), "--p", "1/10", "--plot", plot, "--out", out});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(plot);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, "1.0000000000,1.0000000000\n0.0000000000,1.0000000000\n0.0000000000,0.0000000000\n"
                  "1.0000000000,0.0000000000\n");
}

TEST(Cli, Depth) {
  EXPECT_EQ(cli({"depth", fixture("square.csv"), "1/2,1/2"}).out, "2\n");
  EXPECT_EQ(cli({"depth", fixture("square.csv"), "5,5"}).out, "0\n");
  EXPECT_EQ(cli({"depth", fixture("square.csv"), "5"}).code, kInputError);
}

TEST(Cli, VerifySquare) {
  const Result r = cli({"verify", fixture("square.csv"), "--p", "3/10"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("2-D exact oracle: regions equal"), std::string::npos);
  EXPECT_NE(r.out.find("membership sampling"), std::string::npos);
}

TEST(Cli, VerifyWithCone) {
  const Result r = cli({"verify", fixture("diagonal.csv"), "--p", "3/4", "--cone", fixture("orthant2.csv")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("regions equal"), std::string::npos);
}

TEST(Cli, VerifyThreeDimensionalUsesSamplingOnly) {
  const Result r = cli({"verify", temp_file("cube.csv", "0,0,0\n1,0,0\n0,1,0\n0,0,1\n1,1,1\n"), "--p", "3/10",
                        "--trials", "200", "--seed", "9"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.find("2-D exact oracle"), std::string::npos);
  EXPECT_NE(r.out.find("seed 9"), std::string::npos);
}

}  // namespace
}  // namespace cquant::cli
