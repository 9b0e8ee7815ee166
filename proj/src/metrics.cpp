// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/metrics.hpp"

#include <stdexcept>

namespace emodist {

Metrics compute_metrics(const std::vector<EmotionCategory>& gold,
                        const std::vector<EmotionCategory>& predicted) {
    if (gold.size() != predicted.size())
        throw std::invalid_argument("gold/predicted length mismatch");
    if (gold.empty())
        throw std::invalid_argument("cannot compute metrics on zero documents");

    Metrics m;
    m.total = gold.size();
    for (std::size_t i = 0; i < gold.size(); ++i)
        ++m.confusion[static_cast<std::size_t>(gold[i])][static_cast<std::size_t>(predicted[i])];

    std::uint64_t trace = 0;
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        std::uint64_t tp = m.confusion[c][c];
        std::uint64_t gold_count = 0, pred_count = 0;
        for (std::size_t j = 0; j < kNumCategories; ++j) {
            gold_count += m.confusion[c][j];
            pred_count += m.confusion[j][c];
        }
        trace += tp;
        m.precision[c] = pred_count > 0 ? static_cast<double>(tp) / static_cast<double>(pred_count) : 0.0;
        m.recall[c] = gold_count > 0 ? static_cast<double>(tp) / static_cast<double>(gold_count) : 0.0;
        const double pr = m.precision[c] + m.recall[c];
        m.f1[c] = pr > 0.0 ? 2.0 * m.precision[c] * m.recall[c] / pr : 0.0;

        const double weight = static_cast<double>(gold_count) / static_cast<double>(m.total);
        m.weighted_precision += weight * m.precision[c];
        m.weighted_recall += weight * m.recall[c];
        m.weighted_f1 += weight * m.f1[c];
    }
    m.accuracy = static_cast<double>(trace) / static_cast<double>(m.total);
    return m;
}

} // namespace emodist
