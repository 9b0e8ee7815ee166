// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "emodist/emotion.hpp"

namespace emodist {

struct Metrics {
    /// confusion[gold][predicted]
    std::array<std::array<std::uint64_t, kNumCategories>, kNumCategories> confusion{};
    std::array<double, kNumCategories> precision{};
    std::array<double, kNumCategories> recall{};
    std::array<double, kNumCategories> f1{};
    double weighted_precision = 0.0;
    double weighted_recall = 0.0; // equals accuracy in single-label multiclass
    double weighted_f1 = 0.0;
    double accuracy = 0.0;
    std::uint64_t total = 0;
};

/// Per-class precision/recall/F1 (0 when undefined), weighted averages using
/// gold class frequencies, accuracy = confusion trace / total.
Metrics compute_metrics(const std::vector<EmotionCategory>& gold,
                        const std::vector<EmotionCategory>& predicted);

} // namespace emodist
