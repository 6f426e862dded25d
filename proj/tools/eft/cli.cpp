#include "cli.hpp"

#include "eft/applications.hpp"
#include "eft/ef_engine.hpp"
#include "eft/errors.hpp"
#include "eft/lmfdb_client.hpp"
#include "eft/special_fn.hpp"
#include "eft/test_fn.hpp"
#include "eft/thresholds.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

namespace eft::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv, Svg };

struct Config {
  double delta = FejerTestFunction::kDefaultDelta;
  double tolerance = 1e-8;
  std::string convention = "sqrtN";
  std::string mode = "live";
  std::string cache_dir;
  std::string format = "text";

  QuadratureSpec spec() const {
    QuadratureSpec s;
    s.tolerance = tolerance;
    s.validate();
    return s;
  }
  FejerTestFunction test_function() const { return FejerTestFunction(delta); }
  QConvention q_convention() const { return q_convention_from_string(convention); }
  DataMode data_mode() const { return data_mode_from_string(mode); }
  Format output_format() const {
    if (format == "text") return Format::Text;
    if (format == "json") return Format::Json;
    if (format == "csv") return Format::Csv;
    if (format == "svg") return Format::Svg;
    throw std::invalid_argument("unknown format '" + format + "'");
  }
  ClientOptions client_options() const {
    ClientOptions o = ClientOptions::from_environment();
    if (!cache_dir.empty()) o.cache_dir = cache_dir;
    return o;
  }
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

std::string num(double x) { return fmt::format("{}", x); }

std::string num_list(const std::vector<double>& xs) {
  std::vector<std::string> parts;
  for (double x : xs) parts.push_back(num(x));
  return "[" + fmt::format("{}", fmt::join(parts, ", ")) + "]";
}

// --- threshold -------------------------------------------------------------

struct ThresholdArgs {
  std::optional<int> weight;
  std::vector<double> mu;
  int rank = 0;
};

int cmd_threshold(const Config& cfg, const ThresholdArgs& a, std::ostream& out) {
  if (a.weight && !a.mu.empty()) throw UsageError("give either --weight or --mu, not both");
  if (!a.weight && a.mu.empty()) throw UsageError("one of --weight or --mu is required");
  if (a.rank < 0) throw UsageError("--rank must be >= 0");
  std::vector<double> mu;
  if (a.weight) {
    if (*a.weight < 2 || *a.weight % 2 != 0) {
      throw UsageError(fmt::format("--weight must be an even integer >= 2, got {}", *a.weight));
    }
    const auto m = mu_of_weight(*a.weight);
    mu.assign(m.begin(), m.end());
  } else {
    mu = a.mu;
  }
  const auto tf = cfg.test_function();
  const ThresholdResult th =
      compute_thresholds(static_cast<int>(mu.size()), mu, a.rank, tf, cfg.spec());
  const QConvention conv = cfg.q_convention();
  const bool conductors = a.weight.has_value();

  if (cfg.output_format() == Format::Json) {
    json doc{{"degree", th.degree},
             {"mu", mu},
             {"rank", th.rank},
             {"delta", tf.delta()},
             {"tolerance", cfg.tolerance},
             {"ell_terms", th.ell_terms},
             {"q0", th.q0},
             {"q1", th.q1},
             {"log_q0", th.log_q0},
             {"log_q1", th.log_q1},
             {"q1_over_q0", th.q1 / th.q0}};
    if (a.weight) doc["weight"] = *a.weight;
    if (conductors) {
      doc["convention"] = std::string(to_string(conv));
      doc["level0"] = level_of_q(th.q0, conv);
      doc["level1"] = level_of_q(th.q1, conv);
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << fmt::format("degree {}, mu = {}, rank {}, delta = {}, tolerance = {}\n", th.degree,
                     num_list(mu), th.rank, num(tf.delta()), num(cfg.tolerance));
  for (std::size_t j = 0; j < mu.size(); ++j) {
    out << fmt::format("l({}) = {}\n", num(mu[j]), num(th.ell_terms[j]));
  }
  out << fmt::format("q0 = {} (log q0 = {})\n", num(th.q0), num(th.log_q0));
  out << fmt::format("q1 = {} (log q1 = {})\n", num(th.q1), num(th.log_q1));
  out << fmt::format("q1/q0 = {}\n", num(th.q1 / th.q0));
  if (conductors) {
    out << fmt::format("conductor thresholds ({}): N0 = {}, N1 = {}\n", to_string(conv),
                       num(level_of_q(th.q0, conv)), num(level_of_q(th.q1, conv)));
  }
  return kExitOk;
}

// --- classify --------------------------------------------------------------

struct ClassifyArgs {
  int weight = 2;
  int level = 1;
  int rank = 0;
};

int cmd_classify(const Config& cfg, const ClassifyArgs& a, std::ostream& out) {
  if (a.weight < 2 || a.weight % 2 != 0) {
    throw UsageError(fmt::format("--weight must be an even integer >= 2, got {}", a.weight));
  }
  if (a.level < 1) throw UsageError("--level must be >= 1");
  if (a.rank < 0) throw UsageError("--rank must be >= 0");
  const auto tf = cfg.test_function();
  const QConvention conv = cfg.q_convention();
  const auto mu = mu_of_weight(a.weight);
  const double q = q_of_level(a.level, conv);
  const PredictionOutcome p = classify(q, 2, mu, a.rank, tf, cfg.spec());
  const double scale = std::pow(2.0, 0.5 * (a.weight - 1));

  if (cfg.output_format() == Format::Json) {
    json doc{{"weight", a.weight},
             {"level", a.level},
             {"rank", a.rank},
             {"convention", std::string(to_string(conv))},
             {"q_eff", q},
             {"q0", p.thresholds.q0},
             {"q1", p.thresholds.q1},
             {"classification", std::string(to_string(p.classification))}};
    if (p.a2_upper_bound) {
      doc["a2_upper_bound"] = *p.a2_upper_bound;
      doc["a2_upper_bound_integral"] = *p.a2_upper_bound * scale;
    } else {
      doc["a2_upper_bound"] = nullptr;
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << fmt::format("k = {}, N = {}, rank {}, Q = {} ({})\n", a.weight, a.level, a.rank, num(q),
                     to_string(conv));
  out << fmt::format("q0 = {}, q1 = {}\n", num(p.thresholds.q0), num(p.thresholds.q1));
  out << fmt::format("classification: {}\n", to_string(p.classification));
  if (p.a2_upper_bound) {
    out << fmt::format("a(2)/2^((k-1)/2) <= {} (a(2) <= {})\n", num(*p.a2_upper_bound),
                       num(*p.a2_upper_bound * scale));
  }
  return kExitOk;
}

// --- grid ------------------------------------------------------------------

struct GridArgs {
  std::vector<int> weights{2, 4, 6, 8, 10, 12};
  int max_level = 15;
  int rank = 0;
};

char cell_glyph(Classification c) {
  switch (c) {
  case Classification::Impossible: return 'x';
  case Classification::ForcedNegativeA2: return 'n';
  case Classification::Unconstrained: return '.';
  }
  return '?';
}

int cmd_grid(const Config& cfg, const GridArgs& a, std::ostream& out) {
  if (a.max_level < 1) throw UsageError("--max-level must be >= 1");
  for (int k : a.weights) {
    if (k < 2 || k % 2 != 0) throw UsageError(fmt::format("weight {} is not even and >= 2", k));
  }
  std::vector<int> levels(static_cast<std::size_t>(a.max_level));
  std::iota(levels.begin(), levels.end(), 1);
  const auto tf = cfg.test_function();
  const GridPrediction grid =
      predict_grid(a.weights, levels, a.rank, cfg.q_convention(), tf, cfg.spec());
  const auto ranges = forced_ranges(grid);

  if (cfg.output_format() == Format::Json) {
    json doc{{"convention", std::string(to_string(grid.convention))},
             {"rank", grid.rank},
             {"cells", json::array()},
             {"ranges", json::array()}};
    for (const auto& [key, p] : grid.cells) {
      json cell{{"weight", key.first},
                {"level", key.second},
                {"q_eff", p.q_eff},
                {"classification", std::string(to_string(p.classification))}};
      cell["a2_upper_bound"] = p.a2_upper_bound ? json(*p.a2_upper_bound) : json(nullptr);
      doc["cells"].push_back(std::move(cell));
    }
    for (const auto& r : ranges) {
      doc["ranges"].push_back({{"weight", r.weight},
                               {"q0", r.q0},
                               {"q1", r.q1},
                               {"level0", r.level0},
                               {"level1", r.level1},
                               {"q_width", r.q_width()},
                               {"q_ratio", r.q_ratio()}});
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << fmt::format("prediction grid, Q convention {}, rank {}\n", to_string(grid.convention),
                     grid.rank);
  out << "x = Impossible, n = ForcedNegativeA2, . = Unconstrained\n";
  out << "  k \\ N ";
  for (int n : levels) out << fmt::format("{:>3}", n);
  out << "\n";
  for (int k : a.weights) {
    out << fmt::format("{:>7}", k);
    for (int n : levels) out << fmt::format("{:>3}", cell_glyph(grid.at(k, n).classification));
    out << "\n";
  }
  for (const auto& r : ranges) {
    out << fmt::format("k = {}: q0 = {}, q1 = {}, q1 - q0 = {}, q1/q0 = {}, N0 = {}, N1 = {}\n",
                       r.weight, num(r.q0), num(r.q1), num(r.q_width()), num(r.q_ratio()),
                       num(r.level0), num(r.level1));
  }
  return kExitOk;
}

// --- verify-tables ---------------------------------------------------------

int cmd_verify(const Config& cfg, int which, std::ostream& out) {
  LmfdbClient client(cfg.client_options());
  const DataMode mode = cfg.data_mode();
  const auto tf = cfg.test_function();
  VerificationReport report;

  if (which == 1) {
    const auto reference = client.reference_table();
    std::vector<int> weights;
    std::vector<int> levels;
    for (const auto& c : reference) {
      if (std::find(weights.begin(), weights.end(), c.weight) == weights.end()) {
        weights.push_back(c.weight);
      }
      if (std::find(levels.begin(), levels.end(), c.level) == levels.end()) {
        levels.push_back(c.level);
      }
    }
    std::sort(weights.begin(), weights.end());
    std::sort(levels.begin(), levels.end());
    std::vector<NewformRecord> newforms;
    auto add = [&](int k, int n) {
      auto forms = client.fetch_newforms(k, n, mode);
      newforms.insert(newforms.end(), forms.begin(), forms.end());
    };
    for (int k : weights) {
      for (int n : levels) add(k, n);
    }
    for (int n = levels.back() + 1; n <= 21; ++n) add(2, n);
    const GridPrediction grid =
        predict_grid(weights, levels, 0, cfg.q_convention(), tf, cfg.spec());
    report = verify_table1(grid, reference, newforms);
  } else if (which == 2 || which == 3) {
    const int rank = which - 1;
    const RankBound bound = rank_conductor_bound(rank, tf, cfg.spec(), cfg.q_convention());
    const auto listed = client.fixture_classes(rank);
    std::vector<int> conductors;
    for (const auto& r : listed) {
      if (std::find(conductors.begin(), conductors.end(), r.conductor) == conductors.end()) {
        conductors.push_back(r.conductor);
      }
    }
    std::vector<IsogenyClassRecord> classes;
    for (int n : conductors) {
      for (auto r : client.fetch_isogeny_classes(n, mode)) {
        if (r.rank != rank) continue;
        const auto it = std::find_if(listed.begin(), listed.end(), [&](const auto& l) {
          return l.class_label == r.class_label;
        });
        r.tabulated = it != listed.end() && it->tabulated;
        classes.push_back(std::move(r));
      }
    }
    report = verify_rank_classes(bound, classes);
  } else {
    throw UsageError(fmt::format("verify-tables expects 1, 2 or 3, got {}", which));
  }

  out << (cfg.output_format() == Format::Json ? render_json(report) + "\n" : render_text(report));
  return report.pass() ? kExitOk : kExitViolation;
}

// --- ef-residual -----------------------------------------------------------

struct ResidualArgs {
  std::string label = "11.2.a.a";
  double height = 200.0;
};

int cmd_residual(const Config& cfg, const ResidualArgs& a, std::ostream& out) {
  if (!(a.height > 0.0)) throw UsageError("--height must be positive");
  LmfdbClient client(cfg.client_options());
  const DataMode mode = cfg.data_mode();
  const ZerosRecord zeros = client.fetch_zeros(a.label, mode);
  const std::string newform = zeros.newform_label.empty() ? a.label : zeros.newform_label;
  const CoefficientRecord coeffs = client.fetch_coefficients(newform, mode);
  const QConvention conv = cfg.q_convention();
  const double q = q_of_level(zeros.level, conv);
  const auto mu = mu_of_weight(zeros.weight);
  const auto tf = cfg.test_function();

  const ResidualReport r = explicit_formula_residual(
      q, mu, CoefficientData::from_newform(coeffs.coefficients, zeros.weight),
      ZeroList::from_positive(zeros.positive_ordinates, zeros.analytic_rank,
                              zeros.completeness_height),
      tf, a.height, cfg.spec());
  const bool ok = r.within_budget();

  if (cfg.output_format() == Format::Json) {
    json doc{{"lfunction_label", zeros.lfunction_label},
             {"newform_label", newform},
             {"convention", std::string(to_string(conv))},
             {"q_eff", q},
             {"height", r.height},
             {"zeros_used", r.zeros_used},
             {"lhs_truncated", r.lhs_truncated},
             {"rhs", r.rhs},
             {"residual", r.residual()},
             {"tail_bound", r.tail_bound},
             {"quadrature_budget", r.quadrature_budget},
             {"within_budget", ok}};
    out << doc.dump(2) << "\n";
  } else {
    out << fmt::format("{} ({}), Q = {} ({}), height {}\n", zeros.lfunction_label, newform, num(q),
                       to_string(conv), num(r.height));
    out << fmt::format("zeros used: {}\n", r.zeros_used);
    out << fmt::format("truncated zero sum = {}\n", num(r.lhs_truncated));
    out << fmt::format("right side = {}\n", num(r.rhs));
    out << fmt::format("residual = {}\n", num(r.residual()));
    out << fmt::format("tail bound = {}, quadrature budget = {}\n", num(r.tail_bound),
                       num(r.quadrature_budget));
    out << fmt::format("{}\n", ok ? "within budget" : "VIOLATION: residual exceeds budget");
  }
  return ok ? kExitOk : kExitViolation;
}

// --- plot-digamma ----------------------------------------------------------

struct PlotArgs {
  std::vector<double> mu{0.0, 1.0, 4.0, 8.0};
  double t_min = -30.0;
  double t_max = 30.0;
  double step = 0.1;
  std::string output;
};

struct Series {
  std::vector<double> t;
  std::vector<std::vector<double>> values;  // one row per t
};

Series sample(const PlotArgs& a) {
  if (!(a.step > 0.0)) throw UsageError("--step must be positive");
  if (!(a.t_max >= a.t_min)) throw UsageError("--t-max must be >= --t-min");
  if (a.mu.empty()) throw UsageError("--mu needs at least one value");
  for (double m : a.mu) {
    if (!(m >= 0.0)) throw UsageError("--mu values must be >= 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((a.t_max - a.t_min) / a.step + 1e-9)) + 1;
  Series s;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = a.t_min + static_cast<double>(i) * a.step;
    s.t.push_back(t);
    std::vector<double> row;
    for (double m : a.mu) row.push_back(digamma_re({0.25 + m, 0.5 * t}));
    s.values.push_back(std::move(row));
  }
  return s;
}

std::string render_csv(const PlotArgs& a, const Series& s) {
  std::string out = "t";
  for (double m : a.mu) out += fmt::format(",mu={}", m);
  out += "\n";
  for (std::size_t i = 0; i < s.t.size(); ++i) {
    out += fmt::format("{:.10g}", s.t[i]);
    for (double v : s.values[i]) out += "," + num(v);
    out += "\n";
  }
  return out;
}

std::string render_svg(const PlotArgs& a, const Series& s) {
  constexpr double kWidth = 800, kHeight = 500, kLeft = 60, kRight = 120, kTop = 30,
                   kBottom = 50;
  static constexpr const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                            "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  double lo = s.values.front().front();
  double hi = lo;
  for (const auto& row : s.values) {
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  if (hi == lo) hi = lo + 1.0;
  const double t0 = s.t.front();
  const double t1 = s.t.back() > t0 ? s.t.back() : t0 + 1.0;
  auto x_of = [&](double t) { return kLeft + (t - t0) / (t1 - t0) * (kWidth - kLeft - kRight); };
  auto y_of = [&](double v) { return kTop + (hi - v) / (hi - lo) * (kHeight - kTop - kBottom); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      kWidth, kHeight, kWidth, kHeight);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += fmt::format(
      "<g stroke=\"black\" stroke-width=\"1\">"
      "<line x1=\"{0:.2f}\" y1=\"{1:.2f}\" x2=\"{2:.2f}\" y2=\"{1:.2f}\"/>"
      "<line x1=\"{0:.2f}\" y1=\"{3:.2f}\" x2=\"{0:.2f}\" y2=\"{1:.2f}\"/></g>\n",
      kLeft, kHeight - kBottom, kWidth - kRight, kTop);
  out += fmt::format(
      "<g font-family=\"sans-serif\" font-size=\"12\">"
      "<text x=\"{:.2f}\" y=\"{:.2f}\">t = {:.6g}</text>"
      "<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">t = {:.6g}</text>"
      "<text x=\"4\" y=\"{:.2f}\">{:.4g}</text>"
      "<text x=\"4\" y=\"{:.2f}\">{:.4g}</text></g>\n",
      kLeft, kHeight - kBottom + 20, t0, kWidth - kRight, kHeight - kBottom + 20, t1, kTop + 4,
      hi, kHeight - kBottom, lo);
  for (std::size_t j = 0; j < a.mu.size(); ++j) {
    const char* color = kColors[j % std::size(kColors)];
    std::string points;
    for (std::size_t i = 0; i < s.t.size(); ++i) {
      if (i) points += ' ';
      points += fmt::format("{:.2f},{:.2f}", x_of(s.t[i]), y_of(s.values[i][j]));
    }
    out += fmt::format(
        "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n", color,
        points);
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"12\" "
        "fill=\"{}\">mu = {}</text>\n",
        kWidth - kRight + 10, kTop + 20.0 * static_cast<double>(j + 1), color, a.mu[j]);
  }
  out += "</svg>\n";
  return out;
}

int cmd_plot(const Config& cfg, const PlotArgs& a, std::ostream& out) {
  const Format f = cfg.format == "text" ? Format::Csv : cfg.output_format();
  if (f != Format::Csv && f != Format::Svg) {
    throw UsageError("plot-digamma writes csv or svg");
  }
  const Series s = sample(a);
  const std::string body = f == Format::Csv ? render_csv(a, s) : render_svg(a, s);
  if (a.output.empty() || a.output == "-") {
    out << body;
    return kExitOk;
  }
  std::ofstream file(a.output, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + a.output + " for writing");
  file << body;
  file.close();
  if (!file) throw std::runtime_error("failed writing " + a.output);
  out << fmt::format("wrote {} rows x {} columns to {}\n", s.t.size(), a.mu.size() + 1, a.output);
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit-formula thresholds for L-functions", "eft"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--delta", cfg.delta, "Test-function width Delta (default 1/(2 pi))")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tolerance, "Absolute quadrature tolerance")
      ->check(CLI::PositiveNumber);
  app.add_option("--convention", cfg.convention, "Level-to-Q map: sqrtN, N/pi or piN")
      ->check(CLI::IsMember({"sqrtN", "N/pi", "piN"}));
  app.add_option("--mode", cfg.mode, "Data source: live, cache-only or fixture-only")
      ->check(CLI::IsMember({"live", "cache-only", "fixture-only"}));
  app.add_option("--cache-dir", cfg.cache_dir, "Response cache directory");
  app.add_option("--format", cfg.format, "Output format: text, json, csv or svg")
      ->check(CLI::IsMember({"text", "json", "csv", "svg"}));

  ThresholdArgs threshold;
  std::optional<int> threshold_weight;
  auto* th = app.add_subcommand("threshold", "Existence and forced-sign thresholds Q0 < Q1");
  th->add_option("--weight,-k", threshold_weight, "Even weight k >= 2 (mu = (k-1)/4, (k+1)/4)");
  th->add_option("--mu", threshold.mu, "Gamma shifts mu_j (comma separated)")
      ->delimiter(',');
  th->add_option("--rank,-r", threshold.rank, "Order of the central zero");

  ClassifyArgs classify_args;
  auto* cl = app.add_subcommand("classify", "Classify one (weight, level)");
  cl->add_option("--weight,-k", classify_args.weight, "Even weight k >= 2")->required();
  cl->add_option("--level,-N", classify_args.level, "Level N >= 1")->required();
  cl->add_option("--rank,-r", classify_args.rank, "Order of the central zero");

  GridArgs grid_args;
  auto* gr = app.add_subcommand("grid", "Classify a weight x level grid");
  gr->add_option("--weights", grid_args.weights, "Even weights (comma separated)")
      ->delimiter(',');
  gr->add_option("--max-level", grid_args.max_level, "Levels 1..N");
  gr->add_option("--rank,-r", grid_args.rank, "Order of the central zero");

  int which = 0;
  auto* vt = app.add_subcommand("verify-tables", "Check predictions against tabulated data");
  vt->add_option("table", which, "1: a(2) signs, 2: rank-1 classes, 3: rank-2 classes")
      ->required();

  ResidualArgs residual_args;
  auto* ef = app.add_subcommand("ef-residual", "Explicit formula against stored zeros");
  ef->add_option("--label", residual_args.label, "Newform or L-function label");
  ef->add_option("--height", residual_args.height, "Zero-sum truncation height");

  PlotArgs plot_args;
  auto* pd = app.add_subcommand("plot-digamma", "Sample Re psi(1/4 + mu + i t/2)");
  pd->add_option("--mu", plot_args.mu, "Shifts mu (comma separated)")->delimiter(',');
  pd->add_option("--t-min", plot_args.t_min, "Left end of the t range");
  pd->add_option("--t-max", plot_args.t_max, "Right end of the t range");
  pd->add_option("--step", plot_args.step, "Sampling step");
  pd->add_option("--output,-o", plot_args.output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (th->parsed()) {
      threshold.weight = threshold_weight;
      return cmd_threshold(cfg, threshold, out);
    }
    if (cl->parsed()) return cmd_classify(cfg, classify_args, out);
    if (gr->parsed()) return cmd_grid(cfg, grid_args, out);
    if (vt->parsed()) return cmd_verify(cfg, which, out);
    if (ef->parsed()) return cmd_residual(cfg, residual_args, out);
    if (pd->parsed()) return cmd_plot(cfg, plot_args, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

} // namespace eft::cli
