#pragma once

#include <string>
#include <vector>

namespace neutro {

/// Truth / Indeterminacy / Falsity degrees, each on [0,1]. The components
/// are independent: no sum-to-one constraint is enforced here.
struct ScalarTif {
  double t = 0.0;
  double i = 0.0;
  double f = 0.0;

  friend bool operator==(const ScalarTif&, const ScalarTif&) = default;
};

/// Binary truth estimate; p_yes + p_no must equal 1.0 within 1e-6
/// (enforced by the parser, not by this type).
struct BinaryEstimate {
  double p_yes = 0.0;
  double p_no = 0.0;
};

/// One declared loss: what cannot be evaluated, why, and how severely
/// that limits the assessment.
struct LossDeclaration {
  std::string what;
  std::string why;
  double severity = 0.0;

  friend bool operator==(const LossDeclaration&, const LossDeclaration&) = default;
};

/// Scalar triple plus its ordered loss declarations.
struct TensorEvaluation {
  ScalarTif scalar;
  std::vector<LossDeclaration> losses;

  friend bool operator==(const TensorEvaluation&, const TensorEvaluation&) = default;
};

enum class EpistemicPosition { Saturation, BalancedConflict, Absorption, Other };

const char* to_string(EpistemicPosition p);

/// t + i + f, evaluated left to right. Range [0, 3] for valid inputs.
double sum(const ScalarTif& s);

/// Strictly greater than 1.0, no epsilon: inputs are parsed short decimals,
/// and the probability-constrained strategy must report a 0% rate.
bool is_hyper_truth(const ScalarTif& s);

/// Binary Shannon entropy in bits, 0*log2(0) == 0 convention. Result in [0,1].
/// Throws std::domain_error for p_yes outside [0,1].
double entropy_indeterminacy(double p_yes);

/// (t, i, f) = (p_yes, H(p_yes), p_no), so the sum is 1 + H and every
/// p_yes strictly inside (0,1) is hyper-true by construction.
ScalarTif s3_to_tif(const BinaryEstimate& b);

/// Template match against the three canonical positions, checked in order
/// Saturation (0.5, 1.0, 0.5) -> BalancedConflict (0.5, 0.5, 0.5) ->
/// Absorption (0.0, 1.0, 0.0), each within tol per component; anything
/// else is Other. The templates are disjoint for tol < 0.25.
/// Throws std::domain_error unless 0 <= tol < 0.25.
EpistemicPosition classify_position(const ScalarTif& s, double tol = 0.05);

}  // namespace neutro
