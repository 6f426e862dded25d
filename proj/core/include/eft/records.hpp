#pragma once

// Plain records served by LmfdbClient and consumed by the verification code.
// JSON (de)serialisation lives behind string-based functions so that the
// public headers do not depend on a JSON library.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eft {

enum class A2Sign { Negative, Zero, Positive, NonRational };

std::string_view to_string(A2Sign s) noexcept;
A2Sign a2_sign_from_string(std::string_view s);

struct NewformRecord {
  std::string label;  // e.g. "11.2.a.a"
  int weight = 0;
  int level = 0;
  int dim = 1;        // degree of the coefficient field of the Galois orbit
  A2Sign a2_sign = A2Sign::NonRational;
  std::optional<std::int64_t> a2_integer;  // arithmetic normalisation
  std::optional<double> a2_normalized;     // a2_integer / 2^((k-1)/2)

  /// Throws std::invalid_argument when a2_sign disagrees with the values.
  void validate() const;
  bool operator==(const NewformRecord&) const = default;
};

/// Builds a record from an orbit dimension and, when rational, the integer a(2).
NewformRecord make_newform_record(std::string label, int weight, int level, int dim,
                                  std::optional<std::int64_t> a2_integer);

struct IsogenyClassRecord {
  int conductor = 0;
  std::string class_label;  // e.g. "37.a"
  int rank = 0;
  int classes_at_conductor = 1;
  bool tabulated = true;    // false for rows kept only as context

  /// The letter(s) after the dot, e.g. "a".
  std::string class_letter() const;
  /// Throws std::invalid_argument if the label prefix is not the conductor.
  void validate() const;
  bool operator==(const IsogenyClassRecord&) const = default;
};

struct ZerosRecord {
  std::string lfunction_label;
  std::string newform_label;
  int degree = 2;
  int weight = 2;
  int level = 1;
  int analytic_rank = 0;
  int sign = 1;
  double completeness_height = 0.0;
  std::vector<double> positive_ordinates;

  /// Sorted, positive and no larger than completeness_height.
  void validate() const;
  bool operator==(const ZerosRecord&) const = default;
};

struct CoefficientRecord {
  std::string newform_label;
  int weight = 2;
  int level = 1;
  std::vector<std::int64_t> coefficients;  // a(1), a(2), ... integer normalisation

  bool operator==(const CoefficientRecord&) const = default;
};

/// One printed cell of the reference sign table: "" (empty space), "neg",
/// "pos", "zero" (one newform with that sign of a(2)) or a dimension.
struct ReferenceCell {
  int weight = 0;
  int level = 0;
  std::string entry;

  bool is_symbol() const noexcept { return entry == "neg" || entry == "pos" || entry == "zero"; }
  bool operator==(const ReferenceCell&) const = default;
};

/// Printable glyph for a reference entry: "•", "◦", "−", the number, or "".
std::string reference_glyph(const ReferenceCell& cell);

// JSON round trips (arrays of records).
std::string newforms_to_json(std::span<const NewformRecord> records);
std::vector<NewformRecord> newforms_from_json(std::string_view text);
std::string classes_to_json(std::span<const IsogenyClassRecord> records);
std::vector<IsogenyClassRecord> classes_from_json(std::string_view text);
std::string zeros_to_json(const ZerosRecord& record);
ZerosRecord zeros_from_json(std::string_view text);
std::string coefficients_to_json(const CoefficientRecord& record);
CoefficientRecord coefficients_from_json(std::string_view text);

} // namespace eft
