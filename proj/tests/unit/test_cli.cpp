#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "nfw/csv_io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = nfw::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nfw_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  std::string random_nodes(const std::string& name, int M, unsigned seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    std::ostringstream os;
    os << "x\n";
    for (int j = 0; j < M; ++j) os << nfw::format_double(dist(rng)) << '\n';
    return write(name, os.str());
  }

  fs::path dir_;
};

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_F(CliTest, HelpAndParseErrors) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({}).code, nfw::cli::kConfigError);
  EXPECT_EQ(run({"constants", "--bogus"}).code, nfw::cli::kConfigError);
  EXPECT_EQ(run({"constants", "--window", "kaiser"}).code, nfw::cli::kConfigError);
  EXPECT_EQ(run({"constants", "--window", "sinh", "--sigma", "1.75"}).code, nfw::cli::kConfigError);
  EXPECT_EQ(run({"constants", "--window", "sinh", "--N", "48"}).code, nfw::cli::kConfigError);
  EXPECT_EQ(run({"constants", "--window", "sinh", "--m", "6..2"}).code, nfw::cli::kConfigError);
}

TEST_F(CliTest, ConstantsSchema) {
  const auto r = run({"constants", "--window", "bspline", "--m", "2", "--sigma", "1.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  const std::vector<std::string> header = {"window", "m",  "sigma", "N",    "beta",        "method",
                                           "e_measured_lower", "e_measured_upper", "r_max", "grid", "e_measured"};
  EXPECT_EQ(rows[0], header);
  EXPECT_EQ(rows[1][4], "");
  EXPECT_NEAR(std::stod(rows[1][10]) / 6.8961e-02, 1.0, 0.05);
  EXPECT_LE(std::stod(rows[1][6]), std::stod(rows[1][7]));
}

TEST_F(CliTest, ConstantsSinhSweep) {
  const auto r = run({"constants", "--window", "sinh", "--m", "2..6", "--sigma", "2", "--N", "1024"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  const double published[] = {5.1243e-03, 1.0287e-04, 1.8467e-06, 3.0197e-08, 4.6553e-10};
  ASSERT_EQ(rows.size(), 6u);
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(std::stod(rows[i + 1][10]) / published[i], 1.0, 0.05) << i + 2;
}

TEST_F(CliTest, ConstantsSmallestN) {
  const auto r = run({"constants", "--window", "sinh", "--m", "2", "--sigma", "3", "--N", "2", "--allow-any-sigma",
                      "--method", "both"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(std::isfinite(std::stod(rows[1][10])));
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST_F(CliTest, AnySigmaStillNeedsEvenGrid) {
  EXPECT_EQ(run({"constants", "--window", "sinh", "--m", "2", "--sigma", "1.3", "--N", "16", "--allow-any-sigma"}).code,
            nfw::cli::kConfigError);
}

TEST_F(CliTest, NonpositiveCoefficientExit) {
  const auto r = run({"constants", "--window", "triangular", "--m", "4", "--sigma", "2", "--N", "64"});
  EXPECT_EQ(r.code, nfw::cli::kNonpositiveCoefficient);
  EXPECT_NE(r.err.find("nonpositive"), std::string::npos);
}

TEST_F(CliTest, Determinism) {
  const std::vector<std::string> args = {"constants", "--window", "msinh", "--m", "2..3", "--sigma", "1.25,2",
                                         "--N", "32", "--method", "both"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST_F(CliTest, BoundsTable) {
  const auto r = run({"bounds", "--m", "4", "--sigma", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(rows[0][0], "window");
  EXPECT_EQ(rows[1][0], "bspline");
  bool saw_proxy = false;
  for (const auto& row : rows) {
    if (row[0] == "exp") {
      EXPECT_EQ(row[6], "sinh");
      saw_proxy = true;
    }
  }
  EXPECT_TRUE(saw_proxy);
}

TEST_F(CliTest, TransformConstantPolynomial) {
  const auto coeffs = write("c.csv", "k,re,im\n0,1,0\n");
  const auto nodes = random_nodes("x.csv", 40, 1);
  const auto r = run({"transform", "--window", "sinh", "--m", "4", "--sigma", "2", "--N", "64", "--in-coeffs", coeffs,
                      "--in-nodes", nodes, "--check"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 41u);
  for (std::size_t j = 1; j < rows.size(); ++j) {
    EXPECT_NEAR(std::stod(rows[j][1]), 1.0, 2e-6);
    EXPECT_NEAR(std::stod(rows[j][2]), 0.0, 2e-6);
  }
  EXPECT_NE(r.out.find("ok=1"), std::string::npos);
}

TEST_F(CliTest, TransformCheckPasses) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> dist;
  std::ostringstream os;
  os << "k,re,im\n";
  for (int k = -128; k < 128; ++k) os << k << ',' << dist(rng) << ',' << dist(rng) << '\n';
  const auto coeffs = write("c.csv", os.str());
  const auto nodes = random_nodes("x.csv", 1000, 3);
  const auto out = path("values.csv");
  const auto r = run({"transform", "--window", "mcosh", "--m", "4", "--sigma", "2", "--N", "256", "--in-coeffs",
                      coeffs, "--in-nodes", nodes, "--check", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ok=1"), std::string::npos);
  const auto values = nfw::read_values_file(out);
  EXPECT_EQ(values.size(), 1000u);

  const auto back = run({"adjoint", "--window", "mcosh", "--m", "4", "--sigma", "2", "--N", "256", "--in-values", out,
                         "--in-nodes", nodes, "--check"});
  ASSERT_EQ(back.code, 0) << back.err;
  EXPECT_NE(back.out.find("ok=1"), std::string::npos);
  EXPECT_EQ(parse_csv(back.out).size(), 257u);
}

TEST_F(CliTest, NodeOutsideDomainRejected) {
  const auto coeffs = write("c.csv", "0,1,0\n");
  const auto nodes = write("x.csv", "x\n0.1\n0.5\n");
  const auto r = run({"transform", "--window", "sinh", "--m", "2", "--sigma", "2", "--N", "16", "--in-coeffs", coeffs,
                      "--in-nodes", nodes});
  EXPECT_EQ(r.code, nfw::cli::kConfigError);
  EXPECT_NE(r.err.find("x.csv:3"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingInputFile) {
  const auto r = run({"transform", "--window", "sinh", "--m", "2", "--sigma", "2", "--N", "16", "--in-coeffs",
                      path("none.csv"), "--in-nodes", path("none.csv")});
  EXPECT_EQ(r.code, nfw::cli::kConfigError);
}

TEST_F(CliTest, AdjointSingleNode) {
  const auto values = write("f.csv", "j,re,im\n0,1,0\n");
  const auto nodes = write("x.csv", "0.3\n");
  const auto r = run({"adjoint", "--window", "mcosh", "--m", "4", "--sigma", "2", "--N", "64", "--in-values", values,
                      "--in-nodes", nodes, "--check"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("ok=1"), std::string::npos);
}

TEST_F(CliTest, VerifyRejectsOutOfRangeSigma) {
  EXPECT_EQ(run({"verify", "--kind", "algebraic", "--sigma", "1.0", "--allow-any-sigma"}).code, nfw::cli::kConfigError);
  EXPECT_EQ(run({"verify", "--kind", "bessel", "--sigma", "2.5", "--allow-any-sigma"}).code, nfw::cli::kConfigError);
}

TEST_F(CliTest, VerifySmallSweep) {
  const auto r = run({"verify", "--m", "2..3", "--sigma", "1.5", "--N", "256"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 19u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][7], "1") << rows[i][0];
}

TEST_F(CliTest, FiguresWritesFiles) {
  const auto r = run({"figures", "--sigma", "2", "--m", "2..6", "--N", "64", "--out", dir_.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f1(path("fig1_2.csv"));
  std::ifstream f2(path("fig2_2.csv"));
  ASSERT_TRUE(f1.good());
  ASSERT_TRUE(f2.good());
  std::stringstream s2;
  s2 << f2.rdbuf();
  const auto rows = parse_csv(s2.str());
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0][7], "bound_sinh");
  const double expected = (24.0 * 8.0 + 3.0) * std::exp(-8.0 * std::acos(-1.0) * std::sqrt(0.5));
  EXPECT_NEAR(std::stod(rows[3][7]) / expected, 1.0, 1e-14);
}
