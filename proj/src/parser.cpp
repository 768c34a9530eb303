#include "neutro/parser.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

namespace neutro {

using nlohmann::json;

const char* to_string(FailureKind k) {
  switch (k) {
    case FailureKind::Garbled: return "garbled";
    case FailureKind::Truncated: return "truncated";
    case FailureKind::OutOfRange: return "out_of_range";
    case FailureKind::MissingField: return "missing_field";
    case FailureKind::ConstraintViolated: return "constraint_violated";
  }
  return "garbled";
}

std::optional<FailureKind> failure_kind_from_string(std::string_view s) {
  if (s == "garbled") return FailureKind::Garbled;
  if (s == "truncated") return FailureKind::Truncated;
  if (s == "out_of_range") return FailureKind::OutOfRange;
  if (s == "missing_field") return FailureKind::MissingField;
  if (s == "constraint_violated") return FailureKind::ConstraintViolated;
  return std::nullopt;
}

bool is_valid(const ParseOutcome& o) {
  return !std::holds_alternative<ParseFailure>(o);
}

std::string parse_status(const ParseOutcome& o) {
  if (const auto* f = std::get_if<ParseFailure>(&o)) return to_string(f->kind);
  return "ok";
}

std::optional<std::string_view> extract_json_span(std::string_view text) {
  const size_t open = text.find('{');
  if (open == std::string_view::npos) return std::nullopt;
  int depth = 0;
  bool in_string = false;
  bool escaped = false;
  for (size_t pos = open; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return text.substr(open, pos - open + 1);
    }
  }
  return std::nullopt;  // opened but never balanced
}

namespace {

ParseFailure fail(FailureKind kind, std::string detail) {
  return ParseFailure{kind, std::move(detail)};
}

// Reads a required numeric field in [0,1]; on failure fills `err`.
std::optional<double> unit_field(const json& obj, const char* key, ParseFailure& err) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    err = fail(FailureKind::MissingField, std::string("missing key ") + key);
    return std::nullopt;
  }
  if (!it->is_number()) {
    err = fail(FailureKind::MissingField, std::string(key) + " is not numeric");
    return std::nullopt;
  }
  const double v = it->get<double>();
  if (!(v >= 0.0 && v <= 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s = %g outside [0,1]", key, v);
    err = fail(FailureKind::OutOfRange, buf);
    return std::nullopt;
  }
  return v;
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

ParseOutcome parse_structured(std::string_view text, Strategy strategy) {
  const auto span = extract_json_span(text);
  if (!span) {
    if (text.find('{') != std::string_view::npos) {
      return fail(FailureKind::Truncated, "unbalanced braces");
    }
    return fail(FailureKind::Garbled, "no JSON object found");
  }
  json obj;
  try {
    obj = json::parse(*span);
  } catch (const json::parse_error& e) {
    return fail(FailureKind::Garbled, e.what());
  }
  if (!obj.is_object()) {
    return fail(FailureKind::Garbled, "top-level JSON is not an object");
  }

  ParseFailure err;
  if (strategy == Strategy::S3_EntropyDerived) {
    const auto p_yes = unit_field(obj, "P_yes", err);
    if (!p_yes) return err;
    const auto p_no = unit_field(obj, "P_no", err);
    if (!p_no) return err;
    if (std::fabs(*p_yes + *p_no - 1.0) > 1e-6) {
      char buf[96];
      std::snprintf(buf, sizeof(buf), "P_yes + P_no = %.8f, must equal 1.0",
                    *p_yes + *p_no);
      return fail(FailureKind::ConstraintViolated, buf);
    }
    return ValidBinary{BinaryEstimate{*p_yes, *p_no}};
  }

  const auto t = unit_field(obj, "T", err);
  if (!t) return err;
  const auto i = unit_field(obj, "I", err);
  if (!i) return err;
  const auto f = unit_field(obj, "F", err);
  if (!f) return err;
  const ScalarTif tif{*t, *i, *f};

  switch (strategy) {
    case Strategy::S1_Neutrosophic:
      return ValidScalar{tif, false};
    case Strategy::S2_Probabilistic:
      return ValidScalar{tif, std::fabs(sum(tif) - 1.0) > 0.01};
    case Strategy::S4_TensorLosses: {
      const auto it = obj.find("losses");
      if (it == obj.end() || !it->is_array()) {
        return fail(FailureKind::MissingField, "missing losses array");
      }
      if (it->empty()) {
        return fail(FailureKind::MissingField, "losses empty");
      }
      TensorEvaluation tensor;
      tensor.scalar = tif;
      for (size_t n = 0; n < it->size(); ++n) {
        const json& item = (*it)[n];
        const std::string where = "losses[" + std::to_string(n) + "]";
        if (!item.is_object()) {
          return fail(FailureKind::MissingField, where + " is not an object");
        }
        LossDeclaration loss;
        if (!item.contains("what") || !item["what"].is_string()) {
          return fail(FailureKind::MissingField, where + ".what missing");
        }
        loss.what = trimmed(item["what"].get<std::string>());
        if (loss.what.empty()) {
          return fail(FailureKind::MissingField, where + ".what empty");
        }
        if (!item.contains("why") || !item["why"].is_string()) {
          return fail(FailureKind::MissingField, where + ".why missing");
        }
        loss.why = item["why"].get<std::string>();
        if (!item.contains("severity") || !item["severity"].is_number()) {
          return fail(FailureKind::MissingField, where + ".severity missing");
        }
        loss.severity = item["severity"].get<double>();
        if (!(loss.severity >= 0.0 && loss.severity <= 1.0)) {
          return fail(FailureKind::OutOfRange, where + ".severity outside [0,1]");
        }
        tensor.losses.push_back(std::move(loss));
      }
      return ValidTensor{std::move(tensor)};
    }
    default:
      return fail(FailureKind::Garbled, "unexpected strategy");
  }
}

}  // namespace

ParseOutcome parse_trial(std::string_view text, Strategy strategy) {
  if (strategy == Strategy::S5_Ablation) {
    return ValidFreeText{std::string(text)};
  }
  return parse_structured(text, strategy);
}

std::optional<ScalarTif> TrialRecord::tif() const {
  if (const auto* s = std::get_if<ValidScalar>(&outcome)) return s->value;
  if (const auto* b = std::get_if<ValidBinary>(&outcome)) return s3_to_tif(b->value);
  if (const auto* t = std::get_if<ValidTensor>(&outcome)) return t->value.scalar;
  return std::nullopt;
}

std::optional<double> TrialRecord::sum() const {
  const auto s = tif();
  if (!s) return std::nullopt;
  return neutro::sum(*s);
}

std::optional<bool> TrialRecord::hyper_truth() const {
  const auto s = tif();
  if (!s) return std::nullopt;
  return is_hyper_truth(*s);
}

const std::vector<LossDeclaration>* TrialRecord::losses() const {
  if (const auto* t = std::get_if<ValidTensor>(&outcome)) return &t->value.losses;
  return nullptr;
}

const std::string* TrialRecord::free_text() const {
  if (const auto* t = std::get_if<ValidFreeText>(&outcome)) return &t->text;
  return nullptr;
}

}  // namespace neutro
