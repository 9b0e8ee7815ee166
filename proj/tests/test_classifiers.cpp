// Apache License, Version 2.0, refer to LICENSE.txt
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "emodist/classifiers.hpp"
#include "emodist/rng.hpp"

using namespace emodist;

namespace {

SparseVector sv(std::initializer_list<std::pair<std::uint32_t, double>> items) {
    SparseVector v;
    v.items.assign(items.begin(), items.end());
    return v;
}

// Independent Bayes-rule evaluator: direct probability arithmetic, no logs,
// no sharing with the MNB implementation.
ProbDist brute_force_posterior(const std::vector<SparseVector>& X,
                               const std::vector<EmotionCategory>& y, std::uint32_t n_features,
                               double alpha, const SparseVector& query) {
    std::array<double, kNumCategories> prior{};
    std::array<std::vector<double>, kNumCategories> weight;
    std::array<double, kNumCategories> class_weight{};
    for (auto& row : weight)
        row.assign(n_features, 0.0);
    for (std::size_t i = 0; i < X.size(); ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        prior[c] += 1.0;
        for (const auto& [idx, w] : X[i].items) {
            weight[c][idx] += w;
            class_weight[c] += w;
        }
    }
    ProbDist posterior{};
    double total = 0.0;
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        double p = prior[c] / static_cast<double>(X.size());
        for (const auto& [idx, w] : query.items) {
            const double cond =
                (weight[c][idx] + alpha) / (class_weight[c] + alpha * n_features);
            p *= std::pow(cond, w);
        }
        posterior[c] = p;
        total += p;
    }
    for (double& p : posterior)
        p /= total;
    return posterior;
}

// full multiclass one-vs-rest objective: sum of lambda/2 ||w||^2 + mean hinge
double svm_objective(const SvmParams& params, const std::vector<SparseVector>& X,
                     const std::vector<EmotionCategory>& y, double lambda) {
    double objective = 0.0;
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        double reg = 0.0;
        for (double w : params.weights[c])
            reg += w * w;
        double hinge = 0.0;
        for (std::size_t i = 0; i < X.size(); ++i) {
            double margin = params.bias[c];
            for (const auto& [idx, v] : X[i].items)
                margin += params.weights[c][idx] * v;
            const double label = static_cast<std::size_t>(y[i]) == c ? 1.0 : -1.0;
            hinge += std::max(0.0, 1.0 - label * margin);
        }
        objective += lambda / 2.0 * reg + hinge / static_cast<double>(X.size());
    }
    return objective;
}

} // namespace

TEST_CASE("MNB smoothing matches the hand computation") {
    // 2 classes, 1 doc each, vocab {a,b}, raw counts, alpha 1:
    // P(a|c1) = (1+1)/(1+2) = 2/3
    const std::vector<SparseVector> X = {sv({{0, 1.0}}), sv({{1, 1.0}})};
    const std::vector<EmotionCategory> y = {EmotionCategory::Anger, EmotionCategory::Disgust};
    const TrainedModel model = train_mnb(X, y, 2, 1.0);
    const auto& params = std::get<MnbParams>(model.params);
    CHECK(std::exp(params.log_likelihood[0][0]) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(std::exp(params.log_likelihood[0][1]) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(std::exp(params.log_prior[0]) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("MNB likelihood rows are distributions over the vocabulary") {
    SplitMix64 rng(61);
    std::vector<SparseVector> X;
    std::vector<EmotionCategory> y;
    for (int i = 0; i < 20; ++i) {
        SparseVector x;
        for (std::uint32_t f = 0; f < 6; ++f)
            if (rng.below(2))
                x.items.emplace_back(f, 0.1 + rng.unit());
        X.push_back(x);
        y.push_back(static_cast<EmotionCategory>(rng.below(4)));
    }
    const TrainedModel model = train_mnb(X, y, 6, 0.5);
    const auto& params = std::get<MnbParams>(model.params);
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        double sum = 0.0;
        for (double ll : params.log_likelihood[c])
            sum += std::exp(ll);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("single-class MNB predicts that class with certainty") {
    const std::vector<SparseVector> X = {sv({{0, 1.0}}), sv({{1, 2.0}})};
    const std::vector<EmotionCategory> y = {EmotionCategory::Joy, EmotionCategory::Joy};
    const TrainedModel model = train_mnb(X, y, 2, 1.0);
    const ProbDist p = predict_proba(model, sv({{0, 1.0}}));
    CHECK(p[static_cast<std::size_t>(EmotionCategory::Joy)] == doctest::Approx(1.0));
    CHECK(predict(model, sv({{1, 1.0}})) == EmotionCategory::Joy);
}

TEST_CASE("MNB equals the enumerated Bayes posterior on small instances") {
    SplitMix64 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
        const std::uint32_t vocab = 1 + rng.below(5);
        const std::size_t n_docs = 1 + rng.below(8);
        std::vector<SparseVector> X;
        std::vector<EmotionCategory> y;
        for (std::size_t d = 0; d < n_docs; ++d) {
            SparseVector x;
            for (std::uint32_t f = 0; f < vocab; ++f)
                if (rng.below(2))
                    x.items.emplace_back(f, 1.0 + rng.below(3));
            X.push_back(x);
            y.push_back(static_cast<EmotionCategory>(rng.below(4)));
        }
        const double alpha = 0.5 + rng.unit();
        const TrainedModel model = train_mnb(X, y, vocab, alpha);
        SparseVector query;
        for (std::uint32_t f = 0; f < vocab; ++f)
            if (rng.below(2))
                query.items.emplace_back(f, 1.0 + rng.below(2));
        const ProbDist fast = predict_proba(model, query);
        const ProbDist slow = brute_force_posterior(X, y, vocab, alpha, query);
        for (std::size_t c = 0; c < kNumCategories; ++c)
            CHECK(fast[c] == doctest::Approx(slow[c]).epsilon(1e-9));
    }
}

TEST_CASE("empty vector into MNB returns the class priors") {
    const std::vector<SparseVector> X = {sv({{0, 1.0}}), sv({{0, 1.0}}), sv({{1, 1.0}})};
    const std::vector<EmotionCategory> y = {EmotionCategory::Anger, EmotionCategory::Anger,
                                            EmotionCategory::Joy};
    const TrainedModel model = train_mnb(X, y, 2, 1.0);
    const ProbDist p = predict_proba(model, SparseVector{});
    CHECK(p[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(p[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("SVM separates two point clouds") {
    std::vector<SparseVector> X;
    std::vector<EmotionCategory> y;
    for (int i = 0; i < 20; ++i) {
        X.push_back(sv({{0, 1.0}}));
        y.push_back(EmotionCategory::Anger);
        X.push_back(sv({{1, 1.0}}));
        y.push_back(EmotionCategory::Joy);
    }
    const TrainedModel model = train_svm(X, y, 2, 1e-4, 20, 7);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < X.size(); ++i)
        correct += predict(model, X[i]) == y[i];
    CHECK(correct == X.size());
}

TEST_CASE("SVM training is bit-deterministic in the seed") {
    SplitMix64 rng(81);
    std::vector<SparseVector> X;
    std::vector<EmotionCategory> y;
    for (int i = 0; i < 40; ++i) {
        SparseVector x;
        for (std::uint32_t f = 0; f < 8; ++f)
            if (rng.below(2))
                x.items.emplace_back(f, rng.unit());
        X.push_back(x);
        y.push_back(static_cast<EmotionCategory>(rng.below(4)));
    }
    const TrainedModel a = train_svm(X, y, 8, 1e-3, 5, 42);
    const TrainedModel b = train_svm(X, y, 8, 1e-3, 5, 42);
    const auto& pa = std::get<SvmParams>(a.params);
    const auto& pb = std::get<SvmParams>(b.params);
    CHECK(pa.weights == pb.weights);
    CHECK(pa.bias == pb.bias);
    const TrainedModel c = train_svm(X, y, 8, 1e-3, 5, 43);
    CHECK(std::get<SvmParams>(c.params).weights != pa.weights);
}

TEST_CASE("training reduces the hinge objective below the zero-weight value") {
    SplitMix64 rng(91);
    std::vector<SparseVector> X;
    std::vector<EmotionCategory> y;
    for (int i = 0; i < 80; ++i) {
        const auto cls = static_cast<std::size_t>(rng.below(4));
        SparseVector x;
        // class-indicative feature plus noise
        x.items.emplace_back(static_cast<std::uint32_t>(cls), 0.8 + 0.2 * rng.unit());
        const std::uint32_t noise = 4 + rng.below(4);
        x.items.emplace_back(noise, 0.3 * rng.unit());
        X.push_back(x);
        y.push_back(static_cast<EmotionCategory>(cls));
    }
    const double lambda = 1e-3;
    const TrainedModel model = train_svm(X, y, 8, lambda, 20, 5);
    const double zero_objective = static_cast<double>(kNumCategories); // hinge = 1 everywhere
    CHECK(svm_objective(std::get<SvmParams>(model.params), X, y, lambda) <= zero_objective);
}

TEST_CASE("SVM rejects degenerate input") {
    const std::vector<SparseVector> X = {sv({{0, 1.0}}), sv({{1, 1.0}})};
    CHECK_THROWS_AS(train_svm(X, {EmotionCategory::Joy, EmotionCategory::Joy}, 2, 1e-4, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(train_svm({}, {}, 2, 1e-4, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(
        train_svm(X, {EmotionCategory::Joy, EmotionCategory::Anger}, 2, 0.0, 10, 1),
        std::invalid_argument);
}

TEST_CASE("one-sample forest predicts that sample's class") {
    const TrainedModel model =
        train_rf({sv({{0, 1.0}})}, {EmotionCategory::Disgust}, 2, 1, 3);
    CHECK(predict(model, sv({{0, 1.0}})) == EmotionCategory::Disgust);
    CHECK(predict(model, SparseVector{}) == EmotionCategory::Disgust);
}

TEST_CASE("forests are deterministic in the seed") {
    SplitMix64 rng(101);
    std::vector<SparseVector> X;
    std::vector<EmotionCategory> y;
    for (int i = 0; i < 60; ++i) {
        SparseVector x;
        for (std::uint32_t f = 0; f < 10; ++f)
            if (rng.below(2))
                x.items.emplace_back(f, rng.unit());
        X.push_back(x);
        y.push_back(static_cast<EmotionCategory>(rng.below(4)));
    }
    const TrainedModel a = train_rf(X, y, 10, 15, 11);
    const TrainedModel b = train_rf(X, y, 10, 15, 11);
    const auto& ta = std::get<RfParams>(a.params);
    const auto& tb = std::get<RfParams>(b.params);
    REQUIRE(ta.trees.size() == tb.trees.size());
    for (std::size_t t = 0; t < ta.trees.size(); ++t) {
        REQUIRE(ta.trees[t].nodes.size() == tb.trees[t].nodes.size());
        for (std::size_t n = 0; n < ta.trees[t].nodes.size(); ++n) {
            CHECK(ta.trees[t].nodes[n].feature == tb.trees[t].nodes[n].feature);
            CHECK(ta.trees[t].nodes[n].threshold == tb.trees[t].nodes[n].threshold);
            CHECK(ta.trees[t].nodes[n].counts == tb.trees[t].nodes[n].counts);
        }
    }
    CHECK(ta.oob_accuracy == tb.oob_accuracy);
}

TEST_CASE("forest learns a 4-class XOR-like synthetic (OOB floor)") {
    SplitMix64 rng(111);
    std::vector<SparseVector> X;
    std::vector<EmotionCategory> y;
    for (int i = 0; i < 200; ++i) {
        const std::uint32_t b0 = rng.below(2), b1 = rng.below(2);
        SparseVector x;
        x.items.emplace_back(0, b0 ? 0.9 + 0.1 * rng.unit() : 0.1 * rng.unit());
        x.items.emplace_back(1, b1 ? 0.9 + 0.1 * rng.unit() : 0.1 * rng.unit());
        x.items.emplace_back(2 + rng.below(4), rng.unit()); // noise feature
        X.push_back(x);
        y.push_back(static_cast<EmotionCategory>(b0 * 2 + b1));
    }
    const TrainedModel model = train_rf(X, y, 6, 50, 9);
    const double oob = std::get<RfParams>(model.params).oob_accuracy;
    // observed 1.0 on this fixed instance when first run; floor kept at the
    // contract level
    CHECK(oob > 0.8);
}

TEST_CASE("probability outputs are valid distributions for every model kind") {
    SplitMix64 rng(121);
    std::vector<SparseVector> X;
    std::vector<EmotionCategory> y;
    for (int i = 0; i < 50; ++i) {
        SparseVector x;
        for (std::uint32_t f = 0; f < 9; ++f)
            if (rng.below(2))
                x.items.emplace_back(f, rng.unit());
        X.push_back(x);
        y.push_back(static_cast<EmotionCategory>(rng.below(4)));
    }
    const TrainedModel models[] = {
        train_mnb(X, y, 9, 1.0),
        train_svm(X, y, 9, 1e-4, 5, 3),
        train_rf(X, y, 9, 10, 3),
    };
    for (const TrainedModel& model : models) {
        for (int trial = 0; trial < 400; ++trial) {
            SparseVector x;
            for (std::uint32_t f = 0; f < 9; ++f)
                if (rng.below(3) == 0)
                    x.items.emplace_back(f, rng.unit());
            const ProbDist p = predict_proba(model, x);
            CHECK(is_valid_dist(p));
            CHECK(predict(model, x) == argmax_category(p));
        }
    }
}

TEST_CASE("argmax tie-breaks follow category order") {
    CHECK(argmax_category({0.7, 0.1, 0.1, 0.1}) == EmotionCategory::Anger);
    CHECK(argmax_category({0.25, 0.25, 0.25, 0.25}) == EmotionCategory::Anger);
    CHECK(argmax_category({0.1, 0.4, 0.4, 0.1}) == EmotionCategory::Disgust);
}

TEST_CASE("positive scaling of SVM margins never changes the argmax") {
    SplitMix64 rng(131);
    std::vector<SparseVector> X;
    std::vector<EmotionCategory> y;
    for (int i = 0; i < 40; ++i) {
        SparseVector x;
        for (std::uint32_t f = 0; f < 6; ++f)
            if (rng.below(2))
                x.items.emplace_back(f, rng.unit());
        X.push_back(x);
        y.push_back(static_cast<EmotionCategory>(rng.below(4)));
    }
    const TrainedModel model = train_svm(X, y, 6, 1e-3, 5, 17);
    for (const double scale : {0.25, 3.0, 17.5}) {
        TrainedModel scaled = model;
        auto& params = std::get<SvmParams>(scaled.params);
        for (std::size_t c = 0; c < kNumCategories; ++c) {
            for (double& w : params.weights[c])
                w *= scale;
            params.bias[c] *= scale;
        }
        for (int trial = 0; trial < 50; ++trial) {
            SparseVector x;
            for (std::uint32_t f = 0; f < 6; ++f)
                if (rng.below(3) == 0)
                    x.items.emplace_back(f, rng.unit());
            CHECK(predict(model, x) == predict(scaled, x));
        }
    }
}

TEST_CASE("dimension mismatches are rejected") {
    const std::vector<SparseVector> X = {sv({{0, 1.0}}), sv({{1, 1.0}})};
    const std::vector<EmotionCategory> y = {EmotionCategory::Anger, EmotionCategory::Joy};
    const TrainedModel model = train_mnb(X, y, 2, 1.0);
    CHECK_THROWS_AS(predict_proba(model, sv({{5, 1.0}})), std::invalid_argument);
    CHECK_THROWS_AS(train_mnb(X, y, 1, 1.0), std::invalid_argument);
}
