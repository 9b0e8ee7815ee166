// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "emodist/emotion.hpp"
#include "emodist/features.hpp"

namespace emodist {

enum class ClassifierKind : std::uint8_t { MNB, SVM, RF };

std::string_view to_string(ClassifierKind k);
std::optional<ClassifierKind> parse_classifier_kind(std::string_view name);

/// Multinomial Naive Bayes with Laplace smoothing; feature weights act as
/// fractional counts. Each log-likelihood row exponentiates-and-sums to 1.
struct MnbParams {
    std::array<double, kNumCategories> log_prior{};
    std::array<std::vector<double>, kNumCategories> log_likelihood;
    double alpha = 1.0;
};

/// Four one-vs-rest linear classifiers; margins go through a softmax to
/// produce the probability distribution.
struct SvmParams {
    std::array<std::vector<double>, kNumCategories> weights;
    std::array<double, kNumCategories> bias{};
    double lambda = 1e-4;
    int epochs = 20;
};

struct RfNode {
    std::int32_t feature = -1; // -1 marks a leaf
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::array<double, kNumCategories> counts{}; // leaf class counts
};

struct RfTree {
    std::vector<RfNode> nodes; // nodes[0] is the root
};

struct RfParams {
    std::vector<RfTree> trees;
    /// Out-of-bag accuracy measured during training; -1 when no sample was
    /// ever out of bag.
    double oob_accuracy = -1.0;
};

struct TrainedModel {
    std::uint32_t n_features = 0;
    std::uint64_t seed = 0;
    std::variant<MnbParams, SvmParams, RfParams> params;

    ClassifierKind kind() const { return static_cast<ClassifierKind>(params.index()); }
};

TrainedModel train_mnb(const std::vector<SparseVector>& X, const std::vector<EmotionCategory>& y,
                       std::uint32_t n_features, double alpha = 1.0);

/// Stochastic subgradient descent with step 1/(lambda*t); one shuffled pass
/// over the data per epoch, all seeded and reproducible.
TrainedModel train_svm(const std::vector<SparseVector>& X, const std::vector<EmotionCategory>& y,
                       std::uint32_t n_features, double lambda, int epochs, std::uint64_t seed);

/// Gini-impurity CART trees on bootstrap samples, ceil(sqrt(V)) candidate
/// features per split, grown until pure or fewer than 2 samples.
TrainedModel train_rf(const std::vector<SparseVector>& X, const std::vector<EmotionCategory>& y,
                      std::uint32_t n_features, int n_trees, std::uint64_t seed);

/// Valid probability distribution for any model kind. Throws when x refers
/// to features outside the model's space.
ProbDist predict_proba(const TrainedModel& model, const SparseVector& x);

/// Argmax of predict_proba, ties broken by category order.
EmotionCategory predict(const TrainedModel& model, const SparseVector& x);

} // namespace emodist
