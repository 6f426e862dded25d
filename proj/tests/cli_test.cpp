#include "cli.hpp"

#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = eft::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> split_numbers(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

// Value following "key = " on the line starting with `key`.
double value_after(const std::string& text, const std::string& key) {
  for (const auto& line : lines(text)) {
    if (line.rfind(key + " = ", 0) == 0) return std::stod(line.substr(key.size() + 3));
  }
  ADD_FAILURE() << "no line for " << key << " in:\n" << text;
  return NAN;
}

TEST(Cli, ThresholdTextAndJsonAgree) {
  const auto text = run({"threshold", "--weight", "2"});
  ASSERT_EQ(text.code, eft::cli::kExitOk) << text.err;
  EXPECT_NEAR(value_after(text.out, "q1/q0"), 1.3509323383783696, 1e-9);
  EXPECT_NE(text.out.find("N0 = "), std::string::npos);

  const auto js = run({"--format", "json", "threshold", "--weight", "2"});
  ASSERT_EQ(js.code, eft::cli::kExitOk) << js.err;
  const auto doc = json::parse(js.out);
  EXPECT_EQ(doc["q1_over_q0"].get<double>(), value_after(text.out, "q1/q0"));
  EXPECT_NEAR(doc["level0"].get<double>(), 5.7906, 1e-4);
  EXPECT_EQ(doc["convention"], "sqrtN");
}

TEST(Cli, ThresholdRankAndShifts) {
  const auto r0 = json::parse(run({"--format", "json", "threshold", "--mu", "0.25,0.75"}).out);
  const auto r1 =
      json::parse(run({"--format", "json", "threshold", "--mu", "0.25,0.75", "--rank", "1"}).out);
  EXPECT_NEAR(r1["q0"].get<double>() / r0["q0"].get<double>(), std::exp(0.5), 1e-9);
  EXPECT_FALSE(r0.contains("level0"));
}

TEST(Cli, UsageErrors) {
  const auto odd = run({"threshold", "--weight", "3"});
  EXPECT_EQ(odd.code, eft::cli::kExitError);
  EXPECT_NE(odd.err.find("even"), std::string::npos);
  EXPECT_EQ(run({"threshold"}).code, eft::cli::kExitError);
  EXPECT_EQ(run({"threshold", "--weight", "2", "--mu", "1"}).code, eft::cli::kExitError);
  EXPECT_EQ(run({"--convention", "N", "classify", "-k", "2", "-N", "11"}).code,
            eft::cli::kExitError);
  EXPECT_EQ(run({"verify-tables", "4"}).code, eft::cli::kExitError);
  EXPECT_EQ(run({"no-such-command"}).code, eft::cli::kExitError);
  EXPECT_EQ(run({"--help"}).code, eft::cli::kExitOk);
}

TEST(Cli, Classify) {
  const auto r = run({"classify", "--weight", "4", "--level", "10"});
  ASSERT_EQ(r.code, eft::cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("classification: Unconstrained"), std::string::npos);

  const auto forced = json::parse(run({"--format", "json", "classify", "-k", "2", "-N", "8"}).out);
  EXPECT_EQ(forced["classification"], "ForcedNegativeA2");
  EXPECT_LT(forced["a2_upper_bound"].get<double>(), 0.0);
}

TEST(Cli, Grid) {
  const auto r = run({"grid", "--weights", "2,4", "--max-level", "12"});
  ASSERT_EQ(r.code, eft::cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("x = Impossible"), std::string::npos);
  const auto doc = json::parse(run({"--format", "json", "grid", "--weights", "2", "--max-level", "3"}).out);
  EXPECT_EQ(doc["cells"].size(), 3u);
}

TEST(Cli, VerifyTablesFromFixtures) {
  for (const char* which : {"1", "2", "3"}) {
    const auto r = run({"--mode", "fixture-only", "verify-tables", which});
    EXPECT_EQ(r.code, eft::cli::kExitOk) << which << "\n" << r.out << r.err;
    EXPECT_NE(r.out.find("PASS"), std::string::npos);
  }
  const auto doc = json::parse(run({"--mode", "fixture-only", "--format", "json", "verify-tables", "1"}).out);
  EXPECT_EQ(doc["counts"]["sound"], 90);
  EXPECT_EQ(doc["counts"]["violation"], 0);
}

TEST(Cli, VerifyTablesFlagsDoctoredFixtures) {
  const auto dir = eft::testing::scratch_dir("doctored");
  for (const auto& entry : fs::directory_iterator(eft::testing::fixture_dir())) {
    fs::copy_file(entry.path(), dir / entry.path().filename());
  }
  json table = json::parse(std::ifstream(dir / "table1.json"));
  for (auto& r : table["newforms"]) {
    if (r["label"] == "14.2.a.a") {
      r["a2_sign"] = "positive";
      r["a2_integer"] = 1;
      r["a2_normalized"] = std::sqrt(0.5);
    }
  }
  std::ofstream(dir / "table1.json") << table.dump();
  ::setenv("EFT_FIXTURE_DIR", dir.c_str(), 1);
  const auto r = run({"--mode", "fixture-only", "verify-tables", "1"});
  EXPECT_EQ(r.code, eft::cli::kExitViolation) << r.out << r.err;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ExplicitFormulaResidual) {
  const auto r = run({"--mode", "fixture-only", "--format", "json", "ef-residual", "--label",
                      "11.2.a.a", "--height", "200"});
  ASSERT_EQ(r.code, eft::cli::kExitOk) << r.err;
  const auto doc = json::parse(r.out);
  EXPECT_LE(std::abs(doc["residual"].get<double>()), 0.02);

  const auto off = run({"--mode", "fixture-only", "--convention", "piN", "ef-residual"});
  EXPECT_EQ(off.code, eft::cli::kExitViolation) << off.out;
}

TEST(Cli, PlotCsv) {
  const auto r = run({"plot-digamma"});
  ASSERT_EQ(r.code, eft::cli::kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 602u);
  EXPECT_EQ(rows[0], "t,mu=0,mu=1,mu=4,mu=8");
  double previous_t = -INFINITY;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto v = split_numbers(rows[i]);
    ASSERT_EQ(v.size(), 5u);
    EXPECT_GT(v[0], previous_t);
    previous_t = v[0];
    for (std::size_t j = 2; j < v.size(); ++j) EXPECT_LT(v[j - 1], v[j]) << rows[i];
  }
  EXPECT_NEAR(split_numbers(rows[1])[0], -30.0, 1e-12);
  EXPECT_NEAR(split_numbers(rows.back())[0], 30.0, 1e-9);
}

TEST(Cli, PlotSvgToFile) {
  const auto dir = eft::testing::scratch_dir("plot");
  const auto path = (dir / "digamma.svg").string();
  const auto r = run({"--format", "svg", "plot-digamma", "--output", path});
  ASSERT_EQ(r.code, eft::cli::kExitOk) << r.err;
  std::ifstream in(path);
  const std::string svg((std::istreambuf_iterator<char>(in)), {});
  std::size_t polylines = 0;
  for (auto pos = svg.find("<polyline"); pos != std::string::npos; pos = svg.find("<polyline", pos + 1)) {
    ++polylines;
  }
  EXPECT_EQ(polylines, 4u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);

  const std::string bad = (dir / "missing" / "out.csv").string();
  const auto fail = run({"plot-digamma", "--output", bad});
  EXPECT_EQ(fail.code, eft::cli::kExitError);
  EXPECT_NE(fail.err.find(bad), std::string::npos);
  EXPECT_EQ(run({"plot-digamma", "--step", "0"}).code, eft::cli::kExitError);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"--format", "json", "threshold", "--weight", "6"};
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run({"plot-digamma", "--step", "1"}).out, run({"plot-digamma", "--step", "1"}).out);
}

} // namespace
