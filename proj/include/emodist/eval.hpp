// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emodist/classifiers.hpp"
#include "emodist/document.hpp"
#include "emodist/ensemble.hpp"
#include "emodist/lexicon.hpp"
#include "emodist/metrics.hpp"

namespace emodist {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Deterministic stratified holdout. Per-class test counts are
/// round(class_count * test_fraction).
std::pair<std::vector<Document>, std::vector<Document>>
stratified_split(const std::vector<Document>& docs, double test_fraction, std::uint64_t seed);

/// Stratified k-fold partition of the corpus, stored as per-fold test index
/// lists. Folds partition the corpus; per-class fold sizes differ by at most
/// one document.
struct FoldPlan {
    std::vector<std::vector<std::uint32_t>> test_indices;

    std::size_t n_folds() const { return test_indices.size(); }
    /// Complement of fold's test set, in original corpus order.
    std::vector<std::uint32_t> train_indices(std::size_t fold, std::size_t n_docs) const;
};

FoldPlan make_folds(const std::vector<Document>& docs, int k, std::uint64_t seed);

enum class TrainingSource : std::uint8_t { Auto, Manual, Both };

std::string_view to_string(TrainingSource s);

struct ExperimentSpec {
    TrainingSource training_source = TrainingSource::Manual;
    bool preprocess_on = true;
    bool single_emoji_only = false;
    std::vector<ClassifierKind> classifiers = {ClassifierKind::SVM, ClassifierKind::MNB,
                                               ClassifierKind::RF};
    std::vector<CombineRule> rules = {CombineRule::Average, CombineRule::Product,
                                      CombineRule::Maximum, CombineRule::Minimum};
    int n_folds = 5;
    /// When > 0, replaces cross-validation with one stratified holdout of
    /// this test fraction (the single-split protocol).
    double fixed_split = 0.0;
    std::uint64_t seed = kDefaultSeed;
};

/// Flat `key = value` format; unknown keys are errors. Missing keys keep the
/// defaults above, with default_seed substituted for an absent seed.
ExperimentSpec parse_experiment_spec(std::string_view content, const std::string& origin,
                                     std::uint64_t default_seed = kDefaultSeed);
ExperimentSpec load_experiment_spec(const std::string& path,
                                    std::uint64_t default_seed = kDefaultSeed);

struct TrainConfig {
    double mnb_alpha = 1.0;
    double svm_lambda = 1e-4;
    int svm_epochs = 20;
    int rf_trees = 100;
    std::size_t min_df = 1;
};

/// One evaluated system (an individual classifier or a combining rule):
/// per-fold metrics plus the average row. The mean's scalar fields are the
/// arithmetic mean over folds; its confusion matrix is the sum.
struct SystemResult {
    std::string name;
    std::vector<Metrics> folds;
    Metrics mean;
};

struct ArmResult {
    TrainingSource source; // Auto or Manual
    std::size_t train_size = 0;
    std::vector<SystemResult> systems;
};

struct ExperimentReport {
    ExperimentSpec spec;
    std::size_t manual_size = 0;
    std::size_t auto_size = 0; // after labeling and filtering
    std::vector<std::size_t> fold_test_sizes;
    std::vector<ArmResult> arms;
};

/// Runs the full grid: folds the manual corpus, trains per the spec (the
/// Auto arm trains on the emoji-labeled corpus, the Manual arm on the fold's
/// manual training portion), and evaluates every classifier and rule on the
/// same rotating manual test set.
ExperimentReport run_experiment(const ExperimentSpec& spec,
                                const std::vector<Document>& auto_source_docs,
                                const std::vector<Document>& manual_docs, const Lexicon* lex,
                                const PreprocessConfig& preprocess_config,
                                const TrainConfig& train_config = {});

/// Human-readable tables, percentages with two decimals.
std::string render_report(const ExperimentReport& report);

/// The table plus a machine-readable JSON block; what `experiment` writes.
std::string report_to_file_text(const ExperimentReport& report);

std::string report_to_json_string(const ExperimentReport& report);

} // namespace emodist
