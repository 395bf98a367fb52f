#include "orad/body_io.hpp"
#include "orad/cli.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace orad;

namespace {

std::string data(const std::string& name) { return std::string(ORAD_DATA_DIR) + "/bodies/" + name; }

std::string read(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::filesystem::path tmp(const std::string& name) { return std::filesystem::temp_directory_path() / ("orad_test_" + name); }

}  // namespace

TEST(RunConfig, RoundTrip) {
  RunConfig c;
  c.seed = 123456789012345ull;
  c.sum_directions = 90;
  c.budget.step_tol = 0.1 + 0.2;
  c.verify_budget.starts = 5;
  c.tolerance = 1e-7;
  c.claims = {"thm-outer", "diff-body"};
  c.phis = {"power:p=1.5", "poly:c1=0.5,c2=0.5"};
  c.dims = {2, 4};
  c.out = "a.txt";
  c.report = "r.txt";
  const RunConfig back = RunConfig::from_text(c.to_text());
  EXPECT_EQ(back, c);
  EXPECT_EQ(back.to_text(), c.to_text());
  EXPECT_EQ(RunConfig::from_text(RunConfig{}.to_text()), RunConfig{});
}

TEST(RunConfig, Validation) {
  RunConfig c;
  c.tolerance = 0.0;
  EXPECT_THROW(c.validate(), DomainError);
  c.tolerance = 1e-6;
  c.budget.starts = 0;
  EXPECT_THROW(c.validate(), DomainError);
  EXPECT_THROW(RunConfig::from_text("seed = x\n"), ParseError);
  EXPECT_THROW(RunConfig::from_text("colour = red\n"), ParseError);
}

TEST(Cli, SumOfSegmentsIsSquare) {
  RunConfig c;
  c.out = tmp("sum.table").string();
  c.sum_directions = 8;
  ASSERT_EQ(cmd_sum(data("seg1.body"), data("seg2.body"), "power:p=1", c), exit_ok);
  std::istringstream is(read(c.out));
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "# u1 u2 h");
  int rows = 0;
  bool diagonal = false;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    double u1, u2, h;
    ls >> u1 >> u2 >> h;
    EXPECT_NEAR(h, std::abs(u1) + std::abs(u2), 1e-12);
    if (std::abs(u1 - u2) < 1e-12 && u1 > 0) {
      diagonal = true;
      EXPECT_NEAR(h, std::sqrt(2.0), 1e-12);
    }
    ++rows;
  }
  EXPECT_EQ(rows, 8);
  EXPECT_TRUE(diagonal);
}

TEST(Cli, BoundaryOfEuclideanSum) {
  RunConfig c;
  c.out = tmp("disc.xy").string();
  ASSERT_EQ(cmd_boundary(data("seg1.body"), data("seg2.body"), "power:p=2", c), exit_ok);
  std::istringstream is(read(c.out));
  int rows = 0;
  std::string first, last, line;
  while (std::getline(is, line)) {
    if (rows == 0) first = line;
    last = line;
    std::istringstream ls(line);
    double x, y;
    ls >> x >> y;
    EXPECT_LE(std::hypot(x, y), 1.0 + 1e-10);
    ++rows;
  }
  EXPECT_EQ(rows, 721);
  EXPECT_EQ(last, first);
}

TEST(Cli, RadiiRowsAndDeterminism) {
  RunConfig c;
  c.budget.starts = 4;
  c.budget.max_iters = 20;
  c.out = tmp("radii.a").string();
  ASSERT_EQ(cmd_radii(data("triangle.body"), {}, true, c), exit_ok);
  const std::string a = read(c.out);
  c.out = tmp("radii.b").string();
  ASSERT_EQ(cmd_radii(data("triangle.body"), {}, true, c), exit_ok);
  EXPECT_EQ(a, read(c.out));
  EXPECT_NE(a.find("outer 1 "), std::string::npos);
  EXPECT_NE(a.find("inner 2 "), std::string::npos);
}

TEST(Cli, VerifyWritesReport) {
  RunConfig c;
  c.claims = {"phi-class"};
  c.report = tmp("phi.report").string();
  EXPECT_EQ(cmd_verify(c), exit_ok);
  EXPECT_NE(read(c.report).find("phi-class/validate/power:p=2.status=pass"), std::string::npos);
}

TEST(Cli, ErrorsSurfaceAsExceptions) {
  RunConfig c;
  c.out = tmp("bad").string();
  EXPECT_THROW(cmd_sum(data("seg1.body"), data("cube3.body"), "power:p=1", c), DomainError);
  EXPECT_THROW(cmd_sum(data("seg1.body"), data("seg2.body"), "power:x=1", c), ParseError);
  EXPECT_THROW(cmd_sum(data("missing.body"), data("seg2.body"), "power:p=1", c), Error);
}
