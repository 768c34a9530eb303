#include "neutro/protocol.hpp"

#include <stdexcept>

namespace neutro {

const char* strategy_id(Strategy s) {
  switch (s) {
    case Strategy::S1_Neutrosophic: return "S1";
    case Strategy::S2_Probabilistic: return "S2";
    case Strategy::S3_EntropyDerived: return "S3";
    case Strategy::S4_TensorLosses: return "S4";
    case Strategy::S5_Ablation: return "S5";
  }
  return "S1";
}

std::optional<Strategy> strategy_from_id(std::string_view id) {
  if (id == "S1") return Strategy::S1_Neutrosophic;
  if (id == "S2") return Strategy::S2_Probabilistic;
  if (id == "S3") return Strategy::S3_EntropyDerived;
  if (id == "S4") return Strategy::S4_TensorLosses;
  if (id == "S5") return Strategy::S5_Ablation;
  return std::nullopt;
}

namespace {

// Prompt templates. "{statement}" is the only substitution point; the
// replacement is wrapped in plain double quotes by the templates below.
// Statements in scope contain no double quotes, so no escaping happens.

constexpr std::string_view kS1System =
    "You are an expert in Neutrosophic Logic. You evaluate statements using "
    "three INDEPENDENT dimensions: Truth (T), Indeterminacy (I), and Falsity "
    "(F), each on [0.0, 1.0]. These dimensions are NOT constrained to sum to "
    "1.0. A statement can be simultaneously partially true AND partially "
    "false AND partially indeterminate. Respond with ONLY a JSON object, no "
    "other text.";

constexpr std::string_view kS1User =
    "Evaluate this statement on three independent dimensions:\n"
    "\n"
    "Statement: \"{statement}\"\n"
    "\n"
    "- Truth (T): To what degree is this statement true? [0.0 to 1.0]\n"
    "- Indeterminacy (I): To what degree is the truth value unknown, "
    "undetermined, or inherently uncertain? [0.0 to 1.0]\n"
    "- Falsity (F): To what degree is this statement false? [0.0 to 1.0]\n"
    "\n"
    "T, I, and F are independent. They need NOT sum to 1.0.\n"
    "\n"
    "Respond with ONLY: {\"T\": , \"I\": , \"F\": }";

constexpr std::string_view kS2System =
    "You are a probabilistic classifier. You assign probabilities to three "
    "mutually exclusive categories that MUST sum to exactly 1.0. Respond "
    "with ONLY a JSON object, no other text.";

constexpr std::string_view kS2User =
    "Classify this statement into three mutually exclusive categories whose "
    "probabilities sum to 1.0:\n"
    "\n"
    "Statement: \"{statement}\"\n"
    "\n"
    "- T (True): Probability the statement is true\n"
    "- I (Uncertain): Probability the truth value is unknown or undetermined\n"
    "- F (False): Probability the statement is false\n"
    "\n"
    "CONSTRAINT: T + I + F must equal 1.0\n"
    "\n"
    "Respond with ONLY: {\"T\": , \"I\": , \"F\": }";

constexpr std::string_view kS3System =
    "You are a binary truth estimator. You estimate the probability that a "
    "statement is true (YES) versus false (NO). The two probabilities must "
    "sum to 1.0. Respond with ONLY a JSON object, no other text.";

constexpr std::string_view kS3User =
    "Estimate the probability that this statement is true versus false:\n"
    "\n"
    "Statement: \"{statement}\"\n"
    "\n"
    "- P_yes: Probability the statement is true [0.0 to 1.0]\n"
    "- P_no: Probability the statement is false [0.0 to 1.0]\n"
    "\n"
    "CONSTRAINT: P_yes + P_no must equal 1.0\n"
    "\n"
    "Respond with ONLY: {\"P_yes\": , \"P_no\": }";

constexpr std::string_view kS4System =
    "You are an expert in Neutrosophic Logic and epistemic honesty. You "
    "evaluate statements using three INDEPENDENT dimensions: Truth (T), "
    "Indeterminacy (I), and Falsity (F), each on [0.0, 1.0]. These "
    "dimensions are NOT constrained to sum to 1.0. Crucially, you must also "
    "declare your LOSSES: what you cannot evaluate, what limits your "
    "assessment, and why your indeterminacy value is what it is. Respond "
    "with ONLY a JSON object, no other text.";

constexpr std::string_view kS4User =
    "Evaluate this statement on three independent dimensions, and declare "
    "what you cannot evaluate:\n"
    "\n"
    "Statement: \"{statement}\"\n"
    "\n"
    "- Truth (T): To what degree is this statement true? [0.0 to 1.0]\n"
    "- Indeterminacy (I): To what degree is the truth value unknown, "
    "undetermined, or inherently uncertain? [0.0 to 1.0]\n"
    "- Falsity (F): To what degree is this statement false? [0.0 to 1.0]\n"
    "- losses: A list of objects, each with:\n"
    "  - \"what\": What you cannot evaluate (brief description)\n"
    "  - \"why\": Why this limits your assessment\n"
    "  - \"severity\": How much this affects your evaluation [0.0 to 1.0]\n"
    "\n"
    "T, I, and F are independent. They need NOT sum to 1.0. You MUST declare "
    "at least one loss. Honesty about limits is required.\n"
    "\n"
    "Respond with ONLY: {\"T\": , \"I\": , \"F\": , \"losses\": [{\"what\": "
    "\"\", \"why\": \"\", \"severity\": }, ...]}";

// The ablation keeps the quoted statement and a single instruction; no
// scoring apparatus of any kind, and an empty system message.
constexpr std::string_view kS5User =
    "Statement: \"{statement}\"\n"
    "\n"
    "Identify any limitations, uncertainties, or difficulties in determining "
    "whether this statement is true or false.";

std::string substitute(std::string_view tpl, std::string_view statement) {
  constexpr std::string_view kSlot = "{statement}";
  std::string out;
  out.reserve(tpl.size() + statement.size());
  const size_t at = tpl.find(kSlot);
  out.append(tpl.substr(0, at));
  out.append(statement);
  out.append(tpl.substr(at + kSlot.size()));
  return out;
}

}  // namespace

PromptPair build_prompt(Strategy strategy, std::string_view statement) {
  if (statement.empty()) {
    throw std::invalid_argument("build_prompt: empty statement");
  }
  switch (strategy) {
    case Strategy::S1_Neutrosophic:
      return {std::string(kS1System), substitute(kS1User, statement)};
    case Strategy::S2_Probabilistic:
      return {std::string(kS2System), substitute(kS2User, statement)};
    case Strategy::S3_EntropyDerived:
      return {std::string(kS3System), substitute(kS3User, statement)};
    case Strategy::S4_TensorLosses:
      return {std::string(kS4System), substitute(kS4User, statement)};
    case Strategy::S5_Ablation:
      return {std::string(), substitute(kS5User, statement)};
  }
  throw std::invalid_argument("build_prompt: unknown strategy");
}

const std::vector<StimulusSpec>& stimulus_registry() {
  static const std::vector<StimulusSpec> kRegistry = {
      {"paradox", "Paradox (Logical)", "This sentence is false.",
       StimulusSet::Original},
      {"ignorance", "Ignorance (Epistemic)",
       "The number of stars in the universe is even.", StimulusSet::Original},
      {"vagueness", "Vagueness (Fuzzy)",
       "John is 1.75 meters tall, therefore John is tall.",
       StimulusSet::Original},
      {"contradiction", "Contradiction (Ethical)",
       "Lying to save an innocent life is morally right and wrong at the "
       "same time.",
       StimulusSet::Original},
      {"contingency", "Contingency (Future)",
       "It will rain in New York tomorrow.", StimulusSet::Original},
      {"taut_math", "Tautology (Mathematical)", "2+2=4",
       StimulusSet::Tautology},
      {"taut_definitional", "Tautology (Definitional)",
       "All bachelors are unmarried", StimulusSet::Tautology},
      {"taut_logical", "Tautology (Logical)",
       "It is raining or it is not raining", StimulusSet::Tautology},
  };
  return kRegistry;
}

const StimulusSpec* find_stimulus(std::string_view id) {
  for (const auto& s : stimulus_registry()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

}  // namespace neutro
