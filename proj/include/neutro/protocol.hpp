#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace neutro {

/// The five prompt strategies. Closed set; each maps to exactly one
/// template and one expected response shape.
enum class Strategy {
  S1_Neutrosophic,
  S2_Probabilistic,
  S3_EntropyDerived,
  S4_TensorLosses,
  S5_Ablation,
};

constexpr Strategy kAllStrategies[] = {
    Strategy::S1_Neutrosophic, Strategy::S2_Probabilistic,
    Strategy::S3_EntropyDerived, Strategy::S4_TensorLosses,
    Strategy::S5_Ablation};

const char* strategy_id(Strategy s);  // "S1" .. "S5"
std::optional<Strategy> strategy_from_id(std::string_view id);

enum class StimulusSet { Original, Tautology };

struct StimulusSpec {
  std::string id;         // stable join key used across archives
  std::string category;   // e.g. "Paradox (Logical)"
  std::string statement;  // exact text, substituted verbatim into prompts
  StimulusSet set = StimulusSet::Original;
};

struct PromptPair {
  std::string system;
  std::string user;
};

/// Builds the system/user pair for a strategy with the statement
/// substituted inside double quotes. Byte-identical across calls; the
/// golden files under tests/data/golden_prompts pin every pair.
/// Throws std::invalid_argument for an empty statement.
PromptPair build_prompt(Strategy strategy, std::string_view statement);

/// The five original stimuli followed by the three tautology controls.
const std::vector<StimulusSpec>& stimulus_registry();

/// Lookup by id; nullptr when unknown.
const StimulusSpec* find_stimulus(std::string_view id);

}  // namespace neutro
