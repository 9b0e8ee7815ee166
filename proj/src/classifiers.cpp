// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

#include "emodist/rng.hpp"

namespace emodist {

namespace {

void check_training_input(const std::vector<SparseVector>& X,
                          const std::vector<EmotionCategory>& y, std::uint32_t n_features) {
    if (X.empty())
        throw std::invalid_argument("empty training set");
    if (X.size() != y.size())
        throw std::invalid_argument("feature/label count mismatch");
    for (const SparseVector& x : X)
        for (const auto& [idx, w] : x.items)
            if (idx >= n_features)
                throw std::invalid_argument("feature index out of range for this vocabulary");
}

void check_dimensions(const TrainedModel& model, const SparseVector& x) {
    if (!x.items.empty() && x.items.back().first >= model.n_features)
        throw std::invalid_argument("input vector does not match the model's vocabulary");
}

double sparse_dot(const std::vector<double>& w, const SparseVector& x) {
    double s = 0.0;
    for (const auto& [idx, v] : x.items)
        s += w[idx] * v;
    return s;
}

ProbDist softmax(const std::array<double, kNumCategories>& scores) {
    double mx = scores[0];
    for (double s : scores)
        mx = std::max(mx, s);
    ProbDist p{};
    double sum = 0.0;
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        p[c] = std::exp(scores[c] - mx);
        sum += p[c];
    }
    for (double& v : p)
        v /= sum;
    return p;
}

// ---- random forest internals ----

// O(1) feature lookup; falls back to binary search on the sparse rows when a
// dense cache would be too large.
class FeatureAccess {
  public:
    FeatureAccess(const std::vector<SparseVector>& X, std::uint32_t n_features)
        : X_(X), n_features_(n_features) {
        const std::size_t cells = X.size() * static_cast<std::size_t>(n_features);
        if (n_features > 0 && cells <= kMaxDenseCells) {
            dense_.assign(cells, 0.0);
            for (std::size_t i = 0; i < X.size(); ++i)
                for (const auto& [idx, w] : X[i].items)
                    dense_[i * n_features + idx] = w;
        }
    }

    double value(std::size_t sample, std::uint32_t feature) const {
        if (!dense_.empty())
            return dense_[sample * n_features_ + feature];
        const auto& items = X_[sample].items;
        auto it = std::lower_bound(items.begin(), items.end(), feature,
                                   [](const auto& p, std::uint32_t f) { return p.first < f; });
        return (it != items.end() && it->first == feature) ? it->second : 0.0;
    }

  private:
    static constexpr std::size_t kMaxDenseCells = 1u << 23; // 64 MB of doubles
    const std::vector<SparseVector>& X_;
    std::uint32_t n_features_;
    std::vector<double> dense_;
};

std::array<double, kNumCategories> class_counts(const std::vector<std::uint32_t>& samples,
                                                const std::vector<EmotionCategory>& y) {
    std::array<double, kNumCategories> counts{};
    for (std::uint32_t s : samples)
        counts[static_cast<std::size_t>(y[s])] += 1.0;
    return counts;
}

double gini(const std::array<double, kNumCategories>& counts, double total) {
    if (total <= 0.0)
        return 0.0;
    double sq = 0.0;
    for (double c : counts)
        sq += c * c;
    return 1.0 - sq / (total * total);
}

// k distinct feature indices from [0, n), ascending (Floyd's sampling).
std::vector<std::uint32_t> sample_features(std::uint32_t n, std::uint32_t k, SplitMix64& rng) {
    std::set<std::uint32_t> chosen;
    for (std::uint32_t j = n - k; j < n; ++j) {
        const std::uint32_t t = rng.below(j + 1);
        if (!chosen.insert(t).second)
            chosen.insert(j);
    }
    return {chosen.begin(), chosen.end()};
}

struct BestSplit {
    std::uint32_t feature = 0;
    double threshold = 0.0;
    double impurity = std::numeric_limits<double>::infinity();
    bool found = false;
};

class TreeBuilder {
  public:
    TreeBuilder(const FeatureAccess& access, const std::vector<EmotionCategory>& y,
                std::uint32_t n_features, std::uint32_t max_features, SplitMix64& rng)
        : access_(access), y_(y), n_features_(n_features), max_features_(max_features), rng_(rng) {}

    RfTree build(std::vector<std::uint32_t> samples) {
        RfTree tree;
        grow(std::move(samples), tree);
        return tree;
    }

  private:
    std::int32_t grow(std::vector<std::uint32_t> samples, RfTree& tree) {
        const auto counts = class_counts(samples, y_);
        const double total = static_cast<double>(samples.size());
        const std::int32_t node_id = static_cast<std::int32_t>(tree.nodes.size());
        tree.nodes.push_back(RfNode{});

        bool pure = false;
        for (double c : counts)
            if (c == total)
                pure = true;
        if (pure || samples.size() < 2) {
            tree.nodes[node_id].counts = counts;
            return node_id;
        }

        const BestSplit split = find_split(samples, counts, total);
        if (!split.found) {
            tree.nodes[node_id].counts = counts;
            return node_id;
        }

        std::vector<std::uint32_t> left, right;
        left.reserve(samples.size());
        right.reserve(samples.size());
        for (std::uint32_t s : samples)
            (access_.value(s, split.feature) <= split.threshold ? left : right).push_back(s);
        samples.clear();
        samples.shrink_to_fit();

        tree.nodes[node_id].feature = static_cast<std::int32_t>(split.feature);
        tree.nodes[node_id].threshold = split.threshold;
        const std::int32_t l = grow(std::move(left), tree);
        const std::int32_t r = grow(std::move(right), tree);
        tree.nodes[node_id].left = l;
        tree.nodes[node_id].right = r;
        return node_id;
    }

    BestSplit find_split(const std::vector<std::uint32_t>& samples,
                         const std::array<double, kNumCategories>& node_counts, double total) {
        BestSplit best;
        const auto features = sample_features(n_features_, max_features_, rng_);
        std::vector<std::pair<double, EmotionCategory>> values;
        values.reserve(samples.size());
        for (std::uint32_t f : features) {
            values.clear();
            for (std::uint32_t s : samples)
                values.emplace_back(access_.value(s, f), y_[s]);
            std::sort(values.begin(), values.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            if (values.front().first == values.back().first)
                continue; // constant feature at this node

            std::array<double, kNumCategories> left_counts{};
            double left_total = 0.0;
            for (std::size_t i = 0; i + 1 < values.size(); ++i) {
                left_counts[static_cast<std::size_t>(values[i].second)] += 1.0;
                left_total += 1.0;
                if (values[i].first == values[i + 1].first)
                    continue;
                std::array<double, kNumCategories> right_counts{};
                for (std::size_t c = 0; c < kNumCategories; ++c)
                    right_counts[c] = node_counts[c] - left_counts[c];
                const double right_total = total - left_total;
                const double impurity = (left_total / total) * gini(left_counts, left_total) +
                                        (right_total / total) * gini(right_counts, right_total);
                if (impurity < best.impurity) {
                    best.impurity = impurity;
                    best.feature = f;
                    best.threshold = values[i].first + (values[i + 1].first - values[i].first) / 2.0;
                    best.found = true;
                }
            }
        }
        return best;
    }

    const FeatureAccess& access_;
    const std::vector<EmotionCategory>& y_;
    std::uint32_t n_features_;
    std::uint32_t max_features_;
    SplitMix64& rng_;
};

const RfNode& descend(const RfTree& tree, const SparseVector& x) {
    const RfNode* node = &tree.nodes[0];
    while (node->feature >= 0) {
        double v = 0.0;
        const auto f = static_cast<std::uint32_t>(node->feature);
        auto it = std::lower_bound(x.items.begin(), x.items.end(), f,
                                   [](const auto& p, std::uint32_t fi) { return p.first < fi; });
        if (it != x.items.end() && it->first == f)
            v = it->second;
        node = &tree.nodes[v <= node->threshold ? node->left : node->right];
    }
    return *node;
}

ProbDist leaf_distribution(const RfNode& leaf) {
    double total = 0.0;
    for (double c : leaf.counts)
        total += c;
    ProbDist p{};
    for (std::size_t c = 0; c < kNumCategories; ++c)
        p[c] = leaf.counts[c] / total;
    return p;
}

} // namespace

std::string_view to_string(ClassifierKind k) {
    switch (k) {
    case ClassifierKind::MNB: return "mnb";
    case ClassifierKind::SVM: return "svm";
    case ClassifierKind::RF: return "rf";
    }
    return "?";
}

std::optional<ClassifierKind> parse_classifier_kind(std::string_view name) {
    if (name == "mnb") return ClassifierKind::MNB;
    if (name == "svm") return ClassifierKind::SVM;
    if (name == "rf") return ClassifierKind::RF;
    return std::nullopt;
}

TrainedModel train_mnb(const std::vector<SparseVector>& X, const std::vector<EmotionCategory>& y,
                       std::uint32_t n_features, double alpha) {
    check_training_input(X, y, n_features);
    if (alpha <= 0.0)
        throw std::invalid_argument("alpha must be > 0");

    MnbParams params;
    params.alpha = alpha;
    std::array<double, kNumCategories> doc_counts{};
    std::array<std::vector<double>, kNumCategories> term_weight;
    std::array<double, kNumCategories> total_weight{};
    for (auto& row : term_weight)
        row.assign(n_features, 0.0);

    for (std::size_t i = 0; i < X.size(); ++i) {
        const auto c = static_cast<std::size_t>(y[i]);
        doc_counts[c] += 1.0;
        for (const auto& [idx, w] : X[i].items) {
            term_weight[c][idx] += w;
            total_weight[c] += w;
        }
    }

    const double n_docs = static_cast<double>(X.size());
    const double v = static_cast<double>(n_features);
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        params.log_prior[c] = doc_counts[c] > 0.0
                                  ? std::log(doc_counts[c] / n_docs)
                                  : -std::numeric_limits<double>::infinity();
        params.log_likelihood[c].resize(n_features);
        const double denom = total_weight[c] + alpha * v;
        for (std::uint32_t t = 0; t < n_features; ++t)
            params.log_likelihood[c][t] = std::log((term_weight[c][t] + alpha) / denom);
    }

    TrainedModel model;
    model.n_features = n_features;
    model.seed = 0;
    model.params = std::move(params);
    return model;
}

TrainedModel train_svm(const std::vector<SparseVector>& X, const std::vector<EmotionCategory>& y,
                       std::uint32_t n_features, double lambda, int epochs, std::uint64_t seed) {
    check_training_input(X, y, n_features);
    if (lambda <= 0.0)
        throw std::invalid_argument("lambda must be > 0");
    if (epochs < 1)
        throw std::invalid_argument("epochs must be >= 1");
    {
        std::set<EmotionCategory> present(y.begin(), y.end());
        if (present.size() < 2)
            throw std::invalid_argument("SVM training needs at least two classes");
    }

    SvmParams params;
    params.lambda = lambda;
    params.epochs = epochs;

    const std::size_t n = X.size();
    std::vector<std::uint32_t> order(n);
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        SplitMix64 rng(mix_seed(seed, c));
        // w is kept as scale * v so the regularization shrink is O(1)
        std::vector<double> v(n_features, 0.0);
        double scale = 1.0;
        double bias = 0.0;
        std::uint64_t t = 0;
        std::iota(order.begin(), order.end(), 0u);
        for (int epoch = 0; epoch < epochs; ++epoch) {
            shuffle(order, rng);
            for (std::uint32_t i : order) {
                ++t;
                const double eta = 1.0 / (lambda * static_cast<double>(t));
                const double label =
                    static_cast<std::size_t>(y[i]) == c ? 1.0 : -1.0;
                const double margin = label * (scale * sparse_dot(v, X[i]) + bias);
                const double shrink = 1.0 - eta * lambda; // = 1 - 1/t
                if (shrink == 0.0) {
                    std::fill(v.begin(), v.end(), 0.0);
                    scale = 1.0;
                } else {
                    scale *= shrink;
                }
                if (margin < 1.0) {
                    const double step = eta * label / scale;
                    for (const auto& [idx, val] : X[i].items)
                        v[idx] += step * val;
                    bias += eta * label;
                }
            }
        }
        params.weights[c].assign(n_features, 0.0);
        for (std::uint32_t f = 0; f < n_features; ++f)
            params.weights[c][f] = scale * v[f];
        params.bias[c] = bias;
    }

    TrainedModel model;
    model.n_features = n_features;
    model.seed = seed;
    model.params = std::move(params);
    return model;
}

TrainedModel train_rf(const std::vector<SparseVector>& X, const std::vector<EmotionCategory>& y,
                      std::uint32_t n_features, int n_trees, std::uint64_t seed) {
    check_training_input(X, y, n_features);
    if (n_trees < 1)
        throw std::invalid_argument("n_trees must be >= 1");

    const std::size_t n = X.size();
    const FeatureAccess access(X, n_features);
    const auto max_features = static_cast<std::uint32_t>(std::max(
        1.0, std::ceil(std::sqrt(static_cast<double>(n_features)))));

    RfParams params;
    params.trees.reserve(n_trees);

    std::vector<ProbDist> oob_votes(n, ProbDist{});
    std::vector<std::uint32_t> oob_counts(n, 0);
    std::vector<char> in_bag(n);

    for (int tree_idx = 0; tree_idx < n_trees; ++tree_idx) {
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(tree_idx)));
        std::vector<std::uint32_t> bootstrap(n);
        std::fill(in_bag.begin(), in_bag.end(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            bootstrap[i] = rng.below(static_cast<std::uint32_t>(n));
            in_bag[bootstrap[i]] = 1;
        }
        TreeBuilder builder(access, y, n_features, std::min(max_features, n_features), rng);
        params.trees.push_back(builder.build(std::move(bootstrap)));

        const RfTree& tree = params.trees.back();
        for (std::size_t i = 0; i < n; ++i) {
            if (in_bag[i])
                continue;
            const ProbDist p = leaf_distribution(descend(tree, X[i]));
            for (std::size_t c = 0; c < kNumCategories; ++c)
                oob_votes[i][c] += p[c];
            ++oob_counts[i];
        }
    }

    std::size_t evaluated = 0, correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (oob_counts[i] == 0)
            continue;
        ++evaluated;
        if (argmax_category(oob_votes[i]) == y[i])
            ++correct;
    }
    params.oob_accuracy =
        evaluated > 0 ? static_cast<double>(correct) / static_cast<double>(evaluated) : -1.0;

    TrainedModel model;
    model.n_features = n_features;
    model.seed = seed;
    model.params = std::move(params);
    return model;
}

ProbDist predict_proba(const TrainedModel& model, const SparseVector& x) {
    check_dimensions(model, x);
    if (const auto* mnb = std::get_if<MnbParams>(&model.params)) {
        std::array<double, kNumCategories> log_posterior = mnb->log_prior;
        for (std::size_t c = 0; c < kNumCategories; ++c)
            for (const auto& [idx, w] : x.items)
                log_posterior[c] += w * mnb->log_likelihood[c][idx];
        // classes with -inf prior keep probability exactly 0 through softmax
        double mx = -std::numeric_limits<double>::infinity();
        for (double s : log_posterior)
            mx = std::max(mx, s);
        ProbDist p{};
        double sum = 0.0;
        for (std::size_t c = 0; c < kNumCategories; ++c) {
            p[c] = std::isinf(log_posterior[c]) ? 0.0 : std::exp(log_posterior[c] - mx);
            sum += p[c];
        }
        for (double& v : p)
            v /= sum;
        return p;
    }
    if (const auto* svm = std::get_if<SvmParams>(&model.params)) {
        std::array<double, kNumCategories> margins{};
        for (std::size_t c = 0; c < kNumCategories; ++c)
            margins[c] = sparse_dot(svm->weights[c], x) + svm->bias[c];
        return softmax(margins);
    }
    const auto& rf = std::get<RfParams>(model.params);
    ProbDist p{};
    for (const RfTree& tree : rf.trees) {
        const ProbDist leaf = leaf_distribution(descend(tree, x));
        for (std::size_t c = 0; c < kNumCategories; ++c)
            p[c] += leaf[c];
    }
    const double n_trees = static_cast<double>(rf.trees.size());
    for (double& v : p)
        v /= n_trees;
    return p;
}

EmotionCategory predict(const TrainedModel& model, const SparseVector& x) {
    return argmax_category(predict_proba(model, x));
}

} // namespace emodist
