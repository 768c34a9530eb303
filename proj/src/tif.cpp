#include "neutro/tif.hpp"

#include <cmath>
#include <stdexcept>

namespace neutro {

const char* to_string(EpistemicPosition p) {
  switch (p) {
    case EpistemicPosition::Saturation: return "saturation";
    case EpistemicPosition::BalancedConflict: return "balanced_conflict";
    case EpistemicPosition::Absorption: return "absorption";
    case EpistemicPosition::Other: return "other";
  }
  return "other";
}

double sum(const ScalarTif& s) { return s.t + s.i + s.f; }

bool is_hyper_truth(const ScalarTif& s) { return sum(s) > 1.0; }

double entropy_indeterminacy(double p_yes) {
  if (!(p_yes >= 0.0 && p_yes <= 1.0)) {
    throw std::domain_error("entropy_indeterminacy: p_yes outside [0,1]");
  }
  if (p_yes == 0.0 || p_yes == 1.0) return 0.0;
  const double q = 1.0 - p_yes;
  return -(p_yes * std::log2(p_yes) + q * std::log2(q));
}

ScalarTif s3_to_tif(const BinaryEstimate& b) {
  return ScalarTif{b.p_yes, entropy_indeterminacy(b.p_yes), b.p_no};
}

namespace {

bool near(double value, double target, double tol) {
  return std::fabs(value - target) <= tol;
}

}  // namespace

EpistemicPosition classify_position(const ScalarTif& s, double tol) {
  if (!(tol >= 0.0 && tol < 0.25)) {
    throw std::domain_error("classify_position: tol outside [0, 0.25)");
  }
  if (near(s.t, 0.5, tol) && near(s.i, 1.0, tol) && near(s.f, 0.5, tol)) {
    return EpistemicPosition::Saturation;
  }
  if (near(s.t, 0.5, tol) && near(s.i, 0.5, tol) && near(s.f, 0.5, tol)) {
    return EpistemicPosition::BalancedConflict;
  }
  if (s.t <= tol && s.f <= tol && s.i >= 1.0 - tol) {
    return EpistemicPosition::Absorption;
  }
  return EpistemicPosition::Other;
}

}  // namespace neutro
