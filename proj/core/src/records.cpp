#include "eft/records.hpp"

#include "json_support.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eft {

std::string_view to_string(A2Sign s) noexcept {
  switch (s) {
  case A2Sign::Negative: return "negative";
  case A2Sign::Zero: return "zero";
  case A2Sign::Positive: return "positive";
  case A2Sign::NonRational: return "nonrational";
  }
  return "?";
}

A2Sign a2_sign_from_string(std::string_view s) {
  if (s == "negative") return A2Sign::Negative;
  if (s == "zero") return A2Sign::Zero;
  if (s == "positive") return A2Sign::Positive;
  if (s == "nonrational") return A2Sign::NonRational;
  throw std::invalid_argument("unknown a2 sign '" + std::string(s) + "'");
}

void NewformRecord::validate() const {
  if (weight < 1 || level < 1 || dim < 1) {
    throw std::invalid_argument("newform " + label + ": weight, level and dim must be >= 1");
  }
  if (a2_sign == A2Sign::NonRational) {
    if (a2_integer || a2_normalized) {
      throw std::invalid_argument("newform " + label + ": non-rational a(2) carries a value");
    }
    return;
  }
  if (a2_normalized) {
    const double v = *a2_normalized;
    const bool ok = (a2_sign == A2Sign::Negative && v < 0) ||
                    (a2_sign == A2Sign::Zero && v == 0) ||
                    (a2_sign == A2Sign::Positive && v > 0);
    if (!ok) throw std::invalid_argument("newform " + label + ": a2_sign disagrees with a(2)");
  }
}

NewformRecord make_newform_record(std::string label, int weight, int level, int dim,
                                  std::optional<std::int64_t> a2_integer) {
  NewformRecord r;
  r.label = std::move(label);
  r.weight = weight;
  r.level = level;
  r.dim = dim;
  if (a2_integer) {
    r.a2_integer = a2_integer;
    r.a2_normalized = static_cast<double>(*a2_integer) / std::pow(2.0, 0.5 * (weight - 1));
    r.a2_sign = *a2_integer < 0 ? A2Sign::Negative
                                : (*a2_integer == 0 ? A2Sign::Zero : A2Sign::Positive);
  } else {
    r.a2_sign = A2Sign::NonRational;
  }
  return r;
}

std::string IsogenyClassRecord::class_letter() const {
  const auto dot = class_label.find('.');
  return dot == std::string::npos ? std::string{} : class_label.substr(dot + 1);
}

void IsogenyClassRecord::validate() const {
  const auto dot = class_label.find('.');
  if (dot == std::string::npos || class_label.substr(0, dot) != std::to_string(conductor)) {
    throw std::invalid_argument("isogeny class '" + class_label +
                                "' does not start with its conductor " +
                                std::to_string(conductor));
  }
  if (rank < 0 || classes_at_conductor < 1) {
    throw std::invalid_argument("isogeny class '" + class_label + "' has invalid counts");
  }
}

void ZerosRecord::validate() const {
  for (std::size_t i = 0; i < positive_ordinates.size(); ++i) {
    const double g = positive_ordinates[i];
    if (!(g > 0.0) || g > completeness_height) {
      throw std::invalid_argument("zeros of " + lfunction_label + ": ordinate out of range");
    }
    if (i > 0 && g < positive_ordinates[i - 1]) {
      throw std::invalid_argument("zeros of " + lfunction_label + ": not sorted");
    }
  }
}

std::string reference_glyph(const ReferenceCell& cell) {
  if (cell.entry == "neg") return "•";
  if (cell.entry == "pos") return "◦";
  if (cell.entry == "zero") return "−";
  return cell.entry;
}

// ---------------------------------------------------------------------------

void to_json(json& j, const NewformRecord& r) {
  j = json{{"label", r.label}, {"weight", r.weight}, {"level", r.level},
           {"dim", r.dim},     {"a2_sign", std::string(to_string(r.a2_sign))}};
  if (r.a2_integer) j["a2_integer"] = *r.a2_integer;
  if (r.a2_normalized) j["a2_normalized"] = *r.a2_normalized;
}

void from_json(const json& j, NewformRecord& r) {
  r.label = j.at("label").get<std::string>();
  r.weight = j.at("weight").get<int>();
  r.level = j.at("level").get<int>();
  r.dim = j.at("dim").get<int>();
  r.a2_sign = a2_sign_from_string(j.at("a2_sign").get<std::string>());
  r.a2_integer.reset();
  r.a2_normalized.reset();
  if (j.contains("a2_integer")) r.a2_integer = j.at("a2_integer").get<std::int64_t>();
  if (j.contains("a2_normalized")) r.a2_normalized = j.at("a2_normalized").get<double>();
  r.validate();
}

void to_json(json& j, const IsogenyClassRecord& r) {
  j = json{{"conductor", r.conductor},
           {"class_label", r.class_label},
           {"rank", r.rank},
           {"classes_at_conductor", r.classes_at_conductor},
           {"tabulated", r.tabulated}};
}

void from_json(const json& j, IsogenyClassRecord& r) {
  r.conductor = j.at("conductor").get<int>();
  r.class_label = j.at("class_label").get<std::string>();
  r.rank = j.at("rank").get<int>();
  r.classes_at_conductor = j.at("classes_at_conductor").get<int>();
  r.tabulated = j.value("tabulated", true);
  r.validate();
}

void to_json(json& j, const ZerosRecord& r) {
  j = json{{"lfunction_label", r.lfunction_label},
           {"newform_label", r.newform_label},
           {"degree", r.degree},
           {"weight", r.weight},
           {"level", r.level},
           {"analytic_rank", r.analytic_rank},
           {"sign", r.sign},
           {"completeness_height", r.completeness_height},
           {"positive_ordinates", r.positive_ordinates}};
}

void from_json(const json& j, ZerosRecord& r) {
  r.lfunction_label = j.at("lfunction_label").get<std::string>();
  r.newform_label = j.value("newform_label", std::string{});
  r.degree = j.value("degree", 2);
  r.weight = j.value("weight", 2);
  r.level = j.value("level", 1);
  r.analytic_rank = j.value("analytic_rank", 0);
  r.sign = j.value("sign", 1);
  r.completeness_height = j.at("completeness_height").get<double>();
  r.positive_ordinates = j.at("positive_ordinates").get<std::vector<double>>();
  r.validate();
}

void to_json(json& j, const CoefficientRecord& r) {
  j = json{{"newform_label", r.newform_label},
           {"weight", r.weight},
           {"level", r.level},
           {"dirichlet_coefficients", r.coefficients}};
}

void from_json(const json& j, CoefficientRecord& r) {
  r.newform_label = j.at("newform_label").get<std::string>();
  r.weight = j.value("weight", 2);
  r.level = j.value("level", 1);
  r.coefficients = j.at("dirichlet_coefficients").get<std::vector<std::int64_t>>();
}

void to_json(json& j, const ReferenceCell& c) {
  j = json{{"weight", c.weight}, {"level", c.level}, {"entry", c.entry}};
}

void from_json(const json& j, ReferenceCell& c) {
  c.weight = j.at("weight").get<int>();
  c.level = j.at("level").get<int>();
  c.entry = j.at("entry").get<std::string>();
}

// ---------------------------------------------------------------------------

std::string newforms_to_json(std::span<const NewformRecord> records) {
  return json(std::vector<NewformRecord>(records.begin(), records.end())).dump();
}

std::vector<NewformRecord> newforms_from_json(std::string_view text) {
  return json::parse(text).get<std::vector<NewformRecord>>();
}

std::string classes_to_json(std::span<const IsogenyClassRecord> records) {
  return json(std::vector<IsogenyClassRecord>(records.begin(), records.end())).dump();
}

std::vector<IsogenyClassRecord> classes_from_json(std::string_view text) {
  return json::parse(text).get<std::vector<IsogenyClassRecord>>();
}

std::string zeros_to_json(const ZerosRecord& record) { return json(record).dump(); }

ZerosRecord zeros_from_json(std::string_view text) { return json::parse(text).get<ZerosRecord>(); }

std::string coefficients_to_json(const CoefficientRecord& record) { return json(record).dump(); }

CoefficientRecord coefficients_from_json(std::string_view text) {
  return json::parse(text).get<CoefficientRecord>();
}

} // namespace eft
