#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "neutro/lexicon.hpp"
#include "neutro/parser.hpp"

namespace neutro {

// ------------------------------------------------------------------ basics

struct RateResult {
  double fraction = 0.0;
  int numerator = 0;
  int denominator = 0;
};

/// Hyper-truth fraction over valid records passing `filter` (pass {} for
/// no filter). Denominator counts parse-valid records only. Throws
/// std::domain_error on an empty denominator.
RateResult hyper_truth_rate(std::span<const TrialRecord> records,
                            const std::function<bool(const TrialRecord&)>& filter = {});

double mean(std::span<const double> values);
double sample_variance(std::span<const double> values);  // n-1 denominator

/// Sample standard deviation divided by mean. Throws std::domain_error
/// for n < 2 or zero mean.
double coefficient_of_variation(std::span<const double> values);

/// |t_a - t_b| + |i_a - i_b| + |f_a - f_b|; bounded by 3.
double manhattan_distance(const ScalarTif& a, const ScalarTif& b);

// ------------------------------------------------------------ text overlap

/// Lowercase; every character outside letters/digits/apostrophes splits;
/// set semantics (no counts, no stemming). Stopword dropping is available
/// for tokenizer calibration only and defaults off.
std::set<std::string> tokenize_loss_text(std::string_view text,
                                         bool drop_stopwords = false);

/// |a n b| / |a u b|; both sets empty compares as identical (1.0).
double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

// ------------------------------------------------------------- aggregates

struct CellAggregate {
  std::string model;
  std::string stimulus;
  Strategy strategy = Strategy::S1_Neutrosophic;
  ScalarTif mean_tif;  // over valid reps only
  double mean_sum = 0.0;
  double hyper_fraction = 0.0;
  int valid_reps = 0;
  ScalarTif modal_tif;  // most frequent exact triple
  int modal_multiplicity = 0;
};

/// Aggregates the records of one model x stimulus x strategy cell. Modal
/// ties break toward the lowest sum, then lexicographic (t, i, f).
CellAggregate aggregate_cell(std::span<const TrialRecord> cell_records);

struct JaccardMatrix {
  std::vector<std::string> phenomena;  // ordered
  std::vector<std::vector<double>> values;
  std::vector<std::string> excluded;  // phenomena with zero valid reps
};

/// Symmetric matrix of loss-vocabulary Jaccard similarities for one model.
/// Vocabularies pool the "what" tokens across the model's valid reps per
/// phenomenon.
JaccardMatrix pairwise_jaccard_matrix(std::string_view model,
                                      std::span<const TrialRecord> records,
                                      std::span<const std::string> phenomena,
                                      bool drop_stopwords = false);

struct SeverityProfile {
  std::string stimulus;
  double mean_severity = 0.0;   // over all declared losses
  double losses_per_rep = 0.0;  // total losses / valid reps
  std::vector<double> per_response_max;
  int valid_reps = 0;
  int total_losses = 0;
};

SeverityProfile severity_profile(std::span<const TrialRecord> phenomenon_records);

// ------------------------------------------------------------ correlation

enum class ResidualMode { None, ByStimulus, ByStimulusThenModel };
const char* to_string(ResidualMode m);

/// One-way fixed effects: subtracts each group's mean from its members.
std::vector<double> residualize(std::span<const double> values,
                                std::span<const std::string> groups);

struct CorrelationReport {
  double pearson_r = 0.0;
  double spearman_rho = 0.0;
  double p_pearson = 1.0;  // two-sided, t approximation with n-2 df
  double p_spearman = 1.0;
  int n = 0;
  ResidualMode mode = ResidualMode::None;
};

/// Pearson product-moment plus Spearman on average ranks (ties averaged).
/// Residual modes mean-center by stimulus, then optionally by model,
/// before correlating; p-values keep n-2 df in every mode. Throws
/// std::domain_error for n < 3 or zero variance on either side.
CorrelationReport correlate(std::span<const double> xs, std::span<const double> ys,
                            ResidualMode mode = ResidualMode::None,
                            std::span<const std::string> stimulus_labels = {},
                            std::span<const std::string> model_labels = {});

double pearson(std::span<const double> xs, std::span<const double> ys);
std::vector<double> average_ranks(std::span<const double> values);
double t_approx_p_value(double r, int n);

// ----------------------------------------------------------------- themes

std::set<std::string> tag_themes(std::span<const LossDeclaration> losses,
                                 const ThemeLexicon& lexicon);
std::set<std::string> tag_themes(std::string_view free_text,
                                 const ThemeLexicon& lexicon);

struct ConvergenceSummary {
  int universal_theme_count = 0;           // present in every model, pooled over reps
  std::vector<std::string> universal_themes;
  double mean_pairwise_jaccard = 0.0;      // same-stimulus model pairs, averaged
  double cross_stimulus_jaccard = 0.0;     // different-stimulus model pairs
  double specificity_statistic = 0.0;      // same minus cross
  double permutation_p = -1.0;             // filled by the permutation variant
  struct StimulusBreakdown {
    std::string stimulus;
    double mean_pairwise_jaccard = 0.0;
    std::map<std::string, std::set<std::string>> model_themes;
  };
  std::vector<StimulusBreakdown> per_stimulus;
};

/// Cross-model theme agreement over valid S4 records. `every_rep_strict`
/// switches universal counting from any-rep to every-rep presence.
/// Throws std::domain_error with fewer than two models.
ConvergenceSummary theme_convergence(std::span<const TrialRecord> s4_records,
                                     const ThemeLexicon& lexicon,
                                     bool every_rep_strict = false);

/// p = (1 + #{permuted >= observed}) / (1 + permutations), shuffling the
/// loss -> stimulus assignment within each model and recomputing the
/// specificity statistic. Substream per permutation index is fixed by
/// `seed`, so results are reproducible and parallelizable.
ConvergenceSummary theme_convergence_with_permutation(
    std::span<const TrialRecord> s4_records, const ThemeLexicon& lexicon,
    int permutations, uint64_t seed, bool every_rep_strict = false);

/// Generic permutation p-value; `regenerate` draws one shuffled statistic
/// from the rng it is handed.
double permutation_test(double observed,
                        const std::function<double(std::mt19937_64&)>& regenerate,
                        int permutations, uint64_t seed);

// ------------------------------------------------------------ loss corpus

struct LossOverlap {
  int unique_descriptions = 0;
  int total_descriptions = 0;
  // Unordered stimulus pairs with exact-description Jaccard.
  std::vector<std::tuple<std::string, std::string, double>> pairwise;
};

/// Descriptions are "what" fields normalized by trim + case-fold only.
LossOverlap cross_stimulus_loss_overlap(std::span<const TrialRecord> s4_records);

struct GroupLossStats {
  double mean_i = 0.0;
  double mean_max_severity = 0.0;
  double losses_per_rep = 0.0;
  int n = 0;
};

GroupLossStats loss_stats(std::span<const TrialRecord> s4_records);

struct TautologyComparison {
  GroupLossStats original;
  GroupLossStats tautology;
  double i_ratio = 0.0;
  double max_severity_ratio = 0.0;
  double losses_per_rep_ratio = 0.0;
};

TautologyComparison tautology_comparison(std::span<const TrialRecord> original,
                                         std::span<const TrialRecord> tautology);

// --------------------------------------------------------------- ablation

struct AblationOverlap {
  struct ModelRow {
    std::string model;
    std::map<std::string, int> theme_response_counts;  // responses containing theme
    int responses = 0;
    double overlap_fraction = 0.0;  // reference themes found / reference size
  };
  std::vector<ModelRow> per_model;
  std::vector<std::string> extra_themes;  // found themes outside the reference set
  std::map<std::string, double> extra_theme_response_fraction;
};

/// Theme coverage of free-text records against the reference theme list.
/// Throws std::domain_error on an empty corpus or empty reference.
AblationOverlap ablation_overlap(std::span<const TrialRecord> s5_records,
                                 const ThemeLexicon& lexicon,
                                 std::span<const std::string> reference_themes);

// --------------------------------------------------------------- variance

struct VarianceCompression {
  double var_s1s3 = 0.0;
  double var_s4 = 0.0;
  double ratio = 0.0;
  bool infinite = false;  // zero variance on the S4 side
};

VarianceCompression variance_compression(std::span<const double> s1s3_i_values,
                                         std::span<const double> s4_i_values);

}  // namespace neutro
