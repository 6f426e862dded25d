#include "eft/applications.hpp"
#include "eft/ef_engine.hpp"
#include "eft/lmfdb_client.hpp"

#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace {

using namespace eft;

std::vector<int> range(int lo, int hi) {
  std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

const std::vector<int> kWeights{2, 4, 6, 8, 10, 12};

TEST(ModularForms, ShiftsAndScales) {
  EXPECT_EQ(mu_of_weight(2), (std::array<double, 2>{0.25, 0.75}));
  EXPECT_EQ(mu_of_weight(12), (std::array<double, 2>{2.75, 3.25}));
  EXPECT_THROW(mu_of_weight(3), std::invalid_argument);
  EXPECT_THROW(mu_of_weight(0), std::invalid_argument);

  EXPECT_NEAR(q_of_level(11, QConvention::CalibratedSqrtN), 3.3166248, 1e-7);
  EXPECT_NEAR(q_of_level(11, QConvention::PaperNOverPi), 3.5014087, 1e-7);
  EXPECT_NEAR(q_of_level(11, QConvention::PaperPiN), 34.5575192, 1e-7);
  for (auto c : {QConvention::CalibratedSqrtN, QConvention::PaperNOverPi, QConvention::PaperPiN}) {
    EXPECT_NEAR(level_of_q(q_of_level(37, c), c), 37.0, 1e-12);
    EXPECT_EQ(q_convention_from_string(to_string(c)), c);
  }
  EXPECT_THROW(q_convention_from_string("N"), std::invalid_argument);

  ModularFormContext ctx{4, 10};
  EXPECT_NO_THROW(ctx.validate());
  EXPECT_NEAR(ctx.q_eff(), std::sqrt(10.0), 1e-15);
  EXPECT_THROW((ModularFormContext{4, 0}.validate()), std::invalid_argument);
}

TEST(Grid, ClassificationIsMonotoneInLevelAndWeight) {
  const auto levels = range(1, 40);
  for (auto c : {QConvention::CalibratedSqrtN, QConvention::PaperNOverPi, QConvention::PaperPiN}) {
    const auto grid = predict_grid(kWeights, levels, 0, c);
    for (int k : kWeights) {
      for (std::size_t i = 1; i < levels.size(); ++i) {
        EXPECT_LE(index_of(grid.at(k, levels[i - 1]).classification),
                  index_of(grid.at(k, levels[i]).classification));
      }
    }
    for (int n : levels) {
      for (std::size_t i = 1; i < kWeights.size(); ++i) {
        EXPECT_LE(index_of(grid.at(kWeights[i - 1], n).classification),
                  index_of(grid.at(kWeights[i], n).classification));
      }
    }
    EXPECT_THROW(grid.at(2, 41), std::out_of_range);
  }
}

TEST(Grid, SharesEllTermsBetweenCells) {
  default_ell_cache().clear();
  predict_grid(kWeights, range(1, 15));
  EXPECT_LE(default_ell_cache().evaluations(), 12u);
}

TEST(Grid, KnownCells) {
  const auto grid = predict_grid(kWeights, range(1, 15));
  EXPECT_EQ(grid.at(4, 10).classification, Classification::Unconstrained);
  EXPECT_EQ(grid.at(2, 1).classification, Classification::Impossible);
  EXPECT_EQ(grid.at(2, 5).classification, Classification::Impossible);
  EXPECT_EQ(grid.at(2, 6).classification, Classification::ForcedNegativeA2);
  EXPECT_EQ(grid.at(2, 8).classification, Classification::ForcedNegativeA2);
  EXPECT_EQ(grid.at(2, 11).classification, Classification::Unconstrained);
  EXPECT_NE(grid.at(12, 1).classification, Classification::Impossible);
  EXPECT_THROW(predict_grid(std::vector<int>{}, range(1, 3)), std::invalid_argument);
  EXPECT_THROW(predict_grid(std::vector<int>{2}, std::vector<int>{0}), std::invalid_argument);
}

TEST(Grid, ForcedRanges) {
  const auto grid = predict_grid(kWeights, range(1, 3));
  const auto ranges = forced_ranges(grid);
  ASSERT_EQ(ranges.size(), kWeights.size());
  for (const auto& r : ranges) {
    EXPECT_NEAR(r.q_ratio(), 1.3509323383783696, 1e-9) << r.weight;
    EXPECT_GT(r.q_width(), 0.0);
    EXPECT_NEAR(r.level0, r.q0 * r.q0, 1e-12 * r.level0);
  }
  EXPECT_NEAR(ranges.front().level0, 5.7906, 1e-4);
  EXPECT_NEAR(ranges.front().level1, 10.568, 1e-3);
}

TEST(RankBounds, KnownCurvesAreAboveTheBound) {
  const auto r0 = rank_conductor_bound(0);
  const auto r1 = rank_conductor_bound(1);
  const auto r2 = rank_conductor_bound(2);
  EXPECT_LE(r1.min_conductor_int, 37);
  EXPECT_LE(r2.min_conductor_int, 389);
  EXPECT_EQ(r1.min_conductor_int, 16);
  EXPECT_EQ(r2.min_conductor_int, 43);
  EXPECT_NEAR(r1.min_conductor / r0.min_conductor, std::numbers::e, 1e-9);
  EXPECT_NEAR(r2.min_conductor / r1.min_conductor, std::numbers::e, 1e-9);
  EXPECT_THROW(rank_conductor_bound(-1), std::invalid_argument);
}

// ---------------------------------------------------------------------------

struct FixtureData {
  std::vector<ReferenceCell> reference;
  std::vector<NewformRecord> newforms;
  std::vector<IsogenyClassRecord> rank1;
  std::vector<IsogenyClassRecord> rank2;
};

const FixtureData& fixtures() {
  static const FixtureData data = [] {
    LmfdbClient client(eft::testing::offline_options("applications"));
    return FixtureData{client.reference_table(), client.fixture_newforms(),
                       client.fixture_classes(1), client.fixture_classes(2)};
  }();
  return data;
}

const GridPrediction& table_grid() {
  static const GridPrediction grid = predict_grid(kWeights, range(1, 15));
  return grid;
}

TEST(VerifyTable1, FixtureIsSound) {
  const auto& f = fixtures();
  const auto report = verify_table1(table_grid(), f.reference, f.newforms);
  EXPECT_EQ(report.entries.size(), 90u);
  EXPECT_EQ(report.count(Flag::Sound), 90u);
  EXPECT_TRUE(report.pass());
  ASSERT_EQ(report.claims.size(), 2u);
}

TEST(VerifyTable1, OtherConventions) {
  // N/pi shrinks q below sqrt(N) for N < pi^2 and then rules out forms that
  // exist (the level-1 discriminant form among them). pi N is merely weaker.
  const auto& f = fixtures();
  const auto small = verify_table1(predict_grid(kWeights, range(1, 15), 0, QConvention::PaperNOverPi),
                                   f.reference, f.newforms);
  EXPECT_EQ(small.count(Flag::Violation), 9u);
  EXPECT_FALSE(small.pass());
  const auto large = verify_table1(predict_grid(kWeights, range(1, 15), 0, QConvention::PaperPiN),
                                   f.reference, f.newforms);
  EXPECT_EQ(large.count(Flag::Violation), 0u);
  EXPECT_TRUE(large.pass());
}

TEST(VerifyTable1, DoctoredDataIsFlagged) {
  const auto& f = fixtures();
  auto forms = f.newforms;
  // A form in an Impossible cell.
  forms.push_back(make_newform_record("5.2.a.a", 2, 5, 1, -1));
  auto report = verify_table1(table_grid(), f.reference, forms);
  EXPECT_EQ(report.count(Flag::Violation), 1u);
  EXPECT_FALSE(report.pass());

  // Flip a sign: 14.2.a.a has a(2) = -1, so +1 contradicts the reference.
  forms = f.newforms;
  for (auto& r : forms) {
    if (r.label == "14.2.a.a") r = make_newform_record(r.label, 2, 14, 1, 1);
  }
  report = verify_table1(table_grid(), f.reference, forms);
  EXPECT_EQ(report.count(Flag::Mismatch), 1u);

  // A missing form changes a dimension.
  forms = f.newforms;
  std::erase_if(forms, [](const auto& r) { return r.weight == 12 && r.level == 13; });
  report = verify_table1(table_grid(), f.reference, forms);
  EXPECT_EQ(report.count(Flag::Mismatch), 1u);
}

TEST(VerifyTable1, ForcedCellWithPositiveFormIsAViolation) {
  // 8 and 9 are in the forced window for weight 2 under sqrtN.
  std::vector<ReferenceCell> ref{{2, 9, ""}};
  const auto grid = predict_grid(std::vector<int>{2}, range(1, 15));
  ASSERT_EQ(grid.at(2, 9).classification, Classification::ForcedNegativeA2);
  const std::vector<NewformRecord> forms{make_newform_record("9.2.a.a", 2, 9, 1, 0)};
  const auto report = verify_table1(grid, ref, forms);
  ASSERT_EQ(report.entries.size(), 1u);
  EXPECT_EQ(report.entries[0].flag, Flag::Violation);
}

TEST(VerifyRankClasses, Fixtures) {
  const auto& f = fixtures();
  const auto r1 = verify_rank_classes(rank_conductor_bound(1), f.rank1);
  EXPECT_EQ(r1.entries.size(), 23u);
  EXPECT_TRUE(r1.pass());
  const auto r2 = verify_rank_classes(rank_conductor_bound(2), f.rank2);
  EXPECT_EQ(r2.entries.size(), 10u);
  EXPECT_TRUE(r2.pass());
  for (const auto& c : r2.claims) EXPECT_TRUE(c.holds) << c.name << ": " << c.detail;
}

TEST(VerifyRankClasses, DoctoredDataIsFlagged) {
  std::vector<IsogenyClassRecord> rows{{11, "11.a", 1, 1, true}, {37, "37.b", 0, 2, true}};
  const auto report = verify_rank_classes(rank_conductor_bound(1), rows);
  ASSERT_EQ(report.entries.size(), 2u);
  EXPECT_EQ(report.entries[0].flag, Flag::Violation);
  EXPECT_EQ(report.entries[1].flag, Flag::Mismatch);
  EXPECT_FALSE(report.pass());
}

TEST(Reports, RenderJsonAndText) {
  const auto& f = fixtures();
  const auto report = verify_rank_classes(rank_conductor_bound(2), f.rank2);
  const auto doc = nlohmann::json::parse(render_json(report));
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["entries"].size(), 10u);
  EXPECT_EQ(doc["counts"]["sound"], 10);
  EXPECT_EQ(doc["entries"][0]["key"], "389.a");
  const std::string text = render_text(report);
  EXPECT_NE(text.find("446.a"), std::string::npos);
  EXPECT_NE(text.find("PASS"), std::string::npos);
}

} // namespace
