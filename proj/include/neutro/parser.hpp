#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "neutro/protocol.hpp"
#include "neutro/tif.hpp"

namespace neutro {

enum class FailureKind { Garbled, Truncated, OutOfRange, MissingField, ConstraintViolated };

const char* to_string(FailureKind k);
std::optional<FailureKind> failure_kind_from_string(std::string_view s);

struct ValidScalar {
  ScalarTif value;
  // The probability-constrained strategy records sum violations instead of
  // discarding the row; downstream aggregates need the numbers either way.
  bool s2_constraint_violated = false;
};
struct ValidBinary {
  BinaryEstimate value;
};
struct ValidTensor {
  TensorEvaluation value;
};
struct ValidFreeText {
  std::string text;
};
struct ParseFailure {
  FailureKind kind = FailureKind::Garbled;
  std::string detail;  // names the offending field or byte offset
};

using ParseOutcome =
    std::variant<ValidScalar, ValidBinary, ValidTensor, ValidFreeText, ParseFailure>;

bool is_valid(const ParseOutcome& o);
std::string parse_status(const ParseOutcome& o);  // "ok" or the failure kind token

/// First balanced top-level {...} span. Walks from the first '{' tracking
/// depth with string awareness, so markdown fences and surrounding prose
/// fall away. Returns nothing when no balanced object exists (including
/// objects cut off mid-stream).
std::optional<std::string_view> extract_json_span(std::string_view text);

/// Total over arbitrary byte strings; never throws. Shape requirements per
/// strategy:
///   S1/S2: numeric keys T, I, F in [0,1]; S2 flags |T+I+F-1| > 0.01
///   S3:    numeric keys P_yes, P_no in [0,1] summing to 1 within 1e-6
///   S4:    S1 shape plus losses: >= 1 objects with what/why/severity
///   S5:    free text, always valid
/// Unknown extra keys are ignored.
ParseOutcome parse_trial(std::string_view text, Strategy strategy);

/// One model x stimulus x strategy x repetition outcome; the row type of
/// every archive. Derived quantities are accessors so the "present iff the
/// outcome carries a scalar" invariant holds by construction.
struct TrialRecord {
  std::string model;
  std::string provider;
  std::string stimulus;
  std::string category;
  Strategy strategy = Strategy::S1_Neutrosophic;
  int rep = 1;  // 1-based
  ParseOutcome outcome = ParseFailure{};
  std::string raw_text;

  /// Scalar triple: direct for S1/S2/S4, entropy-derived for S3.
  std::optional<ScalarTif> tif() const;
  std::optional<double> sum() const;
  std::optional<bool> hyper_truth() const;
  /// Loss list for valid tensor outcomes, nullptr otherwise.
  const std::vector<LossDeclaration>* losses() const;
  /// Free text for valid S5 outcomes.
  const std::string* free_text() const;
};

}  // namespace neutro
