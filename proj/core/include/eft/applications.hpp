#pragma once

// Modular forms and elliptic curves as inputs to the threshold machinery,
// plus verification of the predictions against tabulated data.

#include "eft/records.hpp"
#include "eft/thresholds.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eft {

/// How a level N becomes the scale Q of the explicit formula.
///   CalibratedSqrtN: Q = sqrt(N)   (default; matches zero data exactly)
///   PaperNOverPi:    Q = N / pi
///   PaperPiN:        Q = pi N
enum class QConvention { CalibratedSqrtN, PaperNOverPi, PaperPiN };

std::string_view to_string(QConvention c) noexcept;
QConvention q_convention_from_string(std::string_view s);

/// {(k-1)/4, (k+1)/4}. Throws std::invalid_argument unless k is even and >= 2.
std::array<double, 2> mu_of_weight(int weight);

double q_of_level(double level, QConvention convention);
/// Inverse of q_of_level.
double level_of_q(double q, QConvention convention);

struct ModularFormContext {
  int weight = 2;
  int level = 1;
  QConvention convention = QConvention::CalibratedSqrtN;

  void validate() const;
  std::array<double, 2> mu() const { return mu_of_weight(weight); }
  double q_eff() const { return q_of_level(level, convention); }
};

struct GridPrediction {
  QConvention convention = QConvention::CalibratedSqrtN;
  int rank = 0;
  std::map<std::pair<int, int>, PredictionOutcome> cells;  // (weight, level)
  std::map<int, ThresholdResult> thresholds;               // by weight

  /// Throws std::out_of_range for a cell outside the grid.
  const PredictionOutcome& at(int weight, int level) const;
};

/// One PredictionOutcome per (weight, level). Weights run in parallel and
/// l-terms are shared between cells of equal weight.
GridPrediction predict_grid(std::span<const int> weights, std::span<const int> levels,
                            int rank = 0, QConvention convention = QConvention::CalibratedSqrtN,
                            const FejerTestFunction& tf = FejerTestFunction{},
                            const QuadratureSpec& spec = {});

/// Extent of the forced-negative window for one weight, in Q and in N.
struct ForcedRange {
  int weight = 0;
  double q0 = 0.0;
  double q1 = 0.0;
  double level0 = 0.0;
  double level1 = 0.0;
  double q_width() const noexcept { return q1 - q0; }
  double q_ratio() const noexcept { return q1 / q0; }
};

std::vector<ForcedRange> forced_ranges(const GridPrediction& grid);

struct RankBound {
  int rank = 0;
  double min_q = 0.0;
  double min_conductor = 0.0;
  std::int64_t min_conductor_int = 1;  // ceil(min_conductor), at least 1
};

/// Smallest conductor compatible with an order-`rank` zero at the centre,
/// for weight-2 data (d = 2, mu = {1/4, 3/4}).
RankBound rank_conductor_bound(int rank, const FejerTestFunction& tf = FejerTestFunction{},
                               const QuadratureSpec& spec = {},
                               QConvention convention = QConvention::CalibratedSqrtN);

enum class Flag { Sound, Violation, Mismatch };

std::string_view to_string(Flag f) noexcept;

struct VerificationEntry {
  std::string key;          // "k=4,N=10" or a class label
  std::string prediction;
  std::string observation;
  std::string expected;     // reference value the observation is matched against
  Flag flag = Flag::Sound;
};

/// A qualitative statement about the data, checked and reported.
struct ClaimCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct VerificationReport {
  std::string title;
  std::vector<VerificationEntry> entries;
  std::vector<ClaimCheck> claims;

  std::size_t count(Flag f) const noexcept;
  /// No VIOLATION and no MISMATCH. Claims are informational.
  bool pass() const noexcept { return count(Flag::Violation) == 0 && count(Flag::Mismatch) == 0; }
};

/// Cell by cell, in (weight, level) order: the data must reproduce the
/// reference entry (MISMATCH otherwise) and must not contradict the grid
/// (VIOLATION: a nonempty Impossible cell, or a rational a(2) >= 0 in a
/// ForcedNegativeA2 cell). Claims cover the weight-2 sign run and the
/// border newforms.
VerificationReport verify_table1(const GridPrediction& grid,
                                 std::span<const ReferenceCell> reference,
                                 std::span<const NewformRecord> newforms);

/// Each class must sit at or above the bound (VIOLATION otherwise) and carry
/// the bound's rank (MISMATCH otherwise). Claims cover the label phenomena.
VerificationReport verify_rank_classes(const RankBound& bound,
                                       std::span<const IsogenyClassRecord> classes);

/// Aligned text table followed by the claims.
std::string render_text(const VerificationReport& report);
/// {"title", "pass", "counts", "entries": [{key, prediction, observation,
/// expected, flag}], "claims": [{name, holds, detail}]}
std::string render_json(const VerificationReport& report);

} // namespace eft
