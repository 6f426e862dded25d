#include "eft/applications.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <set>
#include <stdexcept>

namespace eft {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string_view to_string(QConvention c) noexcept {
  switch (c) {
  case QConvention::CalibratedSqrtN: return "sqrtN";
  case QConvention::PaperNOverPi: return "N/pi";
  case QConvention::PaperPiN: return "piN";
  }
  return "?";
}

QConvention q_convention_from_string(std::string_view s) {
  if (s == "sqrtN" || s == "sqrt" || s == "calibrated") return QConvention::CalibratedSqrtN;
  if (s == "N/pi" || s == "n-over-pi") return QConvention::PaperNOverPi;
  if (s == "piN" || s == "pi-n") return QConvention::PaperPiN;
  throw std::invalid_argument("unknown Q convention '" + std::string(s) +
                              "' (expected sqrtN, N/pi or piN)");
}

std::array<double, 2> mu_of_weight(int weight) {
  if (weight < 2 || weight % 2 != 0) {
    throw std::invalid_argument("weight must be an even integer >= 2, got " +
                                std::to_string(weight));
  }
  return {(weight - 1) / 4.0, (weight + 1) / 4.0};
}

double q_of_level(double level, QConvention convention) {
  switch (convention) {
  case QConvention::CalibratedSqrtN: return std::sqrt(level);
  case QConvention::PaperNOverPi: return level / kPi;
  case QConvention::PaperPiN: return kPi * level;
  }
  return std::sqrt(level);
}

double level_of_q(double q, QConvention convention) {
  switch (convention) {
  case QConvention::CalibratedSqrtN: return q * q;
  case QConvention::PaperNOverPi: return kPi * q;
  case QConvention::PaperPiN: return q / kPi;
  }
  return q * q;
}

void ModularFormContext::validate() const {
  mu_of_weight(weight);
  if (level < 1) throw std::invalid_argument("level must be >= 1");
}

const PredictionOutcome& GridPrediction::at(int weight, int level) const {
  const auto it = cells.find({weight, level});
  if (it == cells.end()) {
    throw std::out_of_range(fmt::format("no prediction for k={}, N={}", weight, level));
  }
  return it->second;
}

GridPrediction predict_grid(std::span<const int> weights, std::span<const int> levels, int rank,
                            QConvention convention, const FejerTestFunction& tf,
                            const QuadratureSpec& spec) {
  if (weights.empty() || levels.empty()) {
    throw std::invalid_argument("predict_grid: weight and level ranges must be non-empty");
  }
  for (int k : weights) mu_of_weight(k);
  for (int n : levels) {
    if (n < 1) throw std::invalid_argument("predict_grid: levels must be >= 1");
  }

  std::vector<std::future<ThresholdResult>> jobs;
  jobs.reserve(weights.size());
  for (int k : weights) {
    jobs.push_back(std::async(std::launch::async, [k, rank, &tf, &spec] {
      const auto mu = mu_of_weight(k);
      return compute_thresholds(2, mu, rank, tf, spec);
    }));
  }

  GridPrediction grid;
  grid.convention = convention;
  grid.rank = rank;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    grid.thresholds[weights[i]] = jobs[i].get();
  }
  for (int k : weights) {
    const ThresholdResult& th = grid.thresholds.at(k);
    for (int n : levels) grid.cells[{k, n}] = classify(q_of_level(n, convention), th, tf);
  }
  return grid;
}

std::vector<ForcedRange> forced_ranges(const GridPrediction& grid) {
  std::vector<ForcedRange> out;
  for (const auto& [k, th] : grid.thresholds) {
    out.push_back({k, th.q0, th.q1, level_of_q(th.q0, grid.convention),
                   level_of_q(th.q1, grid.convention)});
  }
  return out;
}

RankBound rank_conductor_bound(int rank, const FejerTestFunction& tf, const QuadratureSpec& spec,
                               QConvention convention) {
  if (rank < 0) throw std::invalid_argument("rank must be >= 0");
  const auto mu = mu_of_weight(2);
  const ThresholdResult th = compute_thresholds(2, mu, rank, tf, spec);
  RankBound out;
  out.rank = rank;
  out.min_q = th.q0;
  out.min_conductor = level_of_q(th.q0, convention);
  out.min_conductor_int =
      std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(out.min_conductor)));
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Flag f) noexcept {
  switch (f) {
  case Flag::Sound: return "SOUND";
  case Flag::Violation: return "VIOLATION";
  case Flag::Mismatch: return "MISMATCH";
  }
  return "?";
}

std::size_t VerificationReport::count(Flag f) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [f](const auto& e) { return e.flag == f; }));
}

namespace {

char sign_glyph(A2Sign s) {
  switch (s) {
  case A2Sign::Negative: return '-';
  case A2Sign::Zero: return '0';
  case A2Sign::Positive: return '+';
  case A2Sign::NonRational: return '?';
  }
  return '?';
}

std::string describe_prediction(const PredictionOutcome& p) {
  if (!p.a2_upper_bound) return std::string(to_string(p.classification));
  return fmt::format("{} (a2 <= {:.6g})", to_string(p.classification), *p.a2_upper_bound);
}

// "dim 3: -,?(2)" lists each orbit's sign of a(2), with its dimension when > 1.
std::string describe_space(const std::vector<const NewformRecord*>& forms) {
  if (forms.empty()) return "empty";
  int dim = 0;
  std::string signs;
  for (const auto* r : forms) {
    dim += r->dim;
    if (!signs.empty()) signs += ',';
    signs += sign_glyph(r->a2_sign);
    if (r->dim > 1) signs += fmt::format("({})", r->dim);
  }
  return fmt::format("dim {}: {}", dim, signs);
}

bool matches_reference(const ReferenceCell& ref, const std::vector<const NewformRecord*>& forms) {
  if (ref.entry.empty()) return forms.empty();
  if (ref.is_symbol()) {
    const A2Sign want = ref.entry == "neg"   ? A2Sign::Negative
                        : ref.entry == "pos" ? A2Sign::Positive
                                             : A2Sign::Zero;
    return forms.size() == 1 && forms[0]->dim == 1 && forms[0]->a2_sign == want;
  }
  int dim = 0;
  for (const auto* r : forms) dim += r->dim;
  try {
    return dim == std::stoi(ref.entry);
  } catch (const std::exception&) {
    return false;
  }
}

} // namespace

VerificationReport verify_table1(const GridPrediction& grid,
                                 std::span<const ReferenceCell> reference,
                                 std::span<const NewformRecord> newforms) {
  VerificationReport report;
  report.title = fmt::format("a(2) sign table, Q convention {}, rank {}",
                             to_string(grid.convention), grid.rank);

  std::map<std::pair<int, int>, std::vector<const NewformRecord*>> spaces;
  for (const auto& r : newforms) spaces[{r.weight, r.level}].push_back(&r);

  std::vector<ReferenceCell> cells(reference.begin(), reference.end());
  std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) {
    return std::pair(a.weight, a.level) < std::pair(b.weight, b.level);
  });

  for (const auto& ref : cells) {
    const auto& forms = spaces[{ref.weight, ref.level}];
    VerificationEntry e;
    e.key = fmt::format("k={},N={}", ref.weight, ref.level);
    e.observation = describe_space(forms);
    e.expected = ref.entry.empty() ? "empty" : reference_glyph(ref);

    const auto it = grid.cells.find({ref.weight, ref.level});
    bool violation = false;
    if (it == grid.cells.end()) {
      e.prediction = "n/a";
    } else {
      const PredictionOutcome& p = it->second;
      e.prediction = describe_prediction(p);
      if (p.classification == Classification::Impossible) {
        violation = !forms.empty();
      } else if (p.classification == Classification::ForcedNegativeA2) {
        violation = std::any_of(forms.begin(), forms.end(), [](const auto* r) {
          return r->a2_sign == A2Sign::Zero || r->a2_sign == A2Sign::Positive;
        });
      }
    }
    e.flag = violation                          ? Flag::Violation
             : !matches_reference(ref, forms) ? Flag::Mismatch
                                                : Flag::Sound;
    report.entries.push_back(std::move(e));
  }

  // Weight 2: the sign of a(2) for every newform of level <= 21.
  {
    ClaimCheck c;
    c.name = "weight 2: a(2) < 0 for every newform of level N <= 21";
    std::vector<std::string> exceptions;
    int checked = 0;
    for (const auto& r : newforms) {
      if (r.weight != 2 || r.level > 21) continue;
      ++checked;
      if (r.a2_sign != A2Sign::Negative) {
        exceptions.push_back(fmt::format("{} (a(2) {})", r.label,
                                         r.a2_integer ? fmt::format("= {}", *r.a2_integer)
                                                      : std::string("irrational")));
      }
    }
    c.holds = checked > 0 && exceptions.empty();
    c.detail = checked == 0 ? "no weight-2 newforms in the data"
                            : fmt::format("{} newforms checked; exceptions: {}", checked,
                                          exceptions.empty() ? "none"
                                                             : fmt::format("{}", fmt::join(exceptions, ", ")));
    report.claims.push_back(std::move(c));
  }

  // Border: the first nonempty level of each weight in the reference range.
  {
    ClaimCheck c;
    c.name = "most border newforms (first nonempty level per weight) have a(2) < 0";
    std::map<int, int> first_level;
    for (const auto& ref : cells) {
      if (spaces[{ref.weight, ref.level}].empty()) continue;
      first_level.try_emplace(ref.weight, ref.level);
    }
    int negative = 0;
    int total = 0;
    std::vector<std::string> others;
    for (const auto& [k, n] : first_level) {
      for (const auto* r : spaces[{k, n}]) {
        ++total;
        if (r->a2_sign == A2Sign::Negative) {
          ++negative;
        } else {
          others.push_back(fmt::format("{} ({})", r->label, to_string(r->a2_sign)));
        }
      }
    }
    c.holds = total > 0 && 2 * negative > total;
    c.detail = fmt::format("{} of {} negative; others: {}", negative, total,
                           others.empty() ? "none" : fmt::format("{}", fmt::join(others, ", ")));
    report.claims.push_back(std::move(c));
  }
  return report;
}

VerificationReport verify_rank_classes(const RankBound& bound,
                                       std::span<const IsogenyClassRecord> classes) {
  VerificationReport report;
  report.title = fmt::format("rank {} isogeny classes, conductor bound N >= {} ({:.6g})",
                             bound.rank, bound.min_conductor_int, bound.min_conductor);

  std::vector<IsogenyClassRecord> rows(classes.begin(), classes.end());
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return std::pair(a.conductor, a.class_label) < std::pair(b.conductor, b.class_label);
  });

  for (const auto& r : rows) {
    VerificationEntry e;
    e.key = r.class_label;
    e.prediction = fmt::format("N >= {}", bound.min_conductor_int);
    e.observation = fmt::format("N = {}, rank {}, #N = {}{}", r.conductor, r.rank,
                                r.classes_at_conductor, r.tabulated ? "" : ", untabulated");
    e.expected = fmt::format("rank {}", bound.rank);
    e.flag = r.conductor < bound.min_conductor_int ? Flag::Violation
             : r.rank != bound.rank               ? Flag::Mismatch
                                                  : Flag::Sound;
    report.entries.push_back(std::move(e));
  }

  std::vector<const IsogenyClassRecord*> tabulated;
  for (const auto& r : rows) {
    if (r.tabulated && r.rank == bound.rank) tabulated.push_back(&r);
  }

  if (bound.rank == 1) {
    // Conductors with other classes besides a single rank-1 class.
    std::map<int, std::vector<const IsogenyClassRecord*>> by_conductor;
    for (const auto* r : tabulated) by_conductor[r->conductor].push_back(r);
    std::vector<const IsogenyClassRecord*> shared;
    for (const auto& [n, list] : by_conductor) {
      if (list.size() == 1 && list[0]->classes_at_conductor > 1) shared.push_back(list[0]);
    }
    ClaimCheck c;
    c.name = "the first 11 conductors with one rank-1 class among several label it a";
    const std::size_t take = std::min<std::size_t>(11, shared.size());
    std::vector<std::string> labels;
    bool all_a = shared.size() >= 11;
    for (std::size_t i = 0; i < take; ++i) {
      labels.push_back(shared[i]->class_label);
      all_a = all_a && shared[i]->class_letter() == "a";
    }
    c.holds = all_a;
    c.detail = fmt::format("{}", fmt::join(labels, ", "));
    if (shared.size() > 11) c.detail += fmt::format("; next: {}", shared[11]->class_label);
    report.claims.push_back(std::move(c));
  }

  {
    ClaimCheck c;
    std::vector<std::string> other;
    for (const auto* r : tabulated) {
      if (r->class_letter() != "a") other.push_back(r->class_label);
    }
    c.name = fmt::format("tabulated rank-{} classes carry label a", bound.rank);
    c.holds = !tabulated.empty() && other.empty();
    c.detail = fmt::format("{} classes; other labels: {}", tabulated.size(),
                           other.empty() ? "none" : fmt::format("{}", fmt::join(other, ", ")));
    report.claims.push_back(std::move(c));
  }

  if (bound.rank == 2) {
    ClaimCheck c;
    c.name = "rank-2 classes below conductor 1147 carry label a";
    std::vector<std::string> other;
    int checked = 0;
    for (const auto& r : rows) {
      if (r.rank != 2 || r.conductor >= 1147) continue;
      ++checked;
      if (r.class_letter() != "a") other.push_back(r.class_label);
    }
    c.holds = checked > 0 && other.empty();
    c.detail = fmt::format("{} classes checked; other labels: {}", checked,
                           other.empty() ? "none" : fmt::format("{}", fmt::join(other, ", ")));
    report.claims.push_back(std::move(c));
  }
  return report;
}

} // namespace eft
