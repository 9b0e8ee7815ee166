// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace emodist {

/// The closed four-class label set. The declaration order defines the
/// canonical total order (Anger < Disgust < Joy < Sadness) used for
/// deterministic iteration and tie-breaking everywhere in the toolkit.
enum class EmotionCategory : std::uint8_t {
    Anger = 0,
    Disgust = 1,
    Joy = 2,
    Sadness = 3,
};

inline constexpr std::size_t kNumCategories = 4;

inline constexpr std::array<EmotionCategory, kNumCategories> kAllCategories = {
    EmotionCategory::Anger,
    EmotionCategory::Disgust,
    EmotionCategory::Joy,
    EmotionCategory::Sadness,
};

std::string_view to_string(EmotionCategory c);

/// Case-insensitive parse; anything outside the four-class set is rejected.
std::optional<EmotionCategory> parse_category(std::string_view name);

/// Throwing variant for file loaders that must report unknown labels.
EmotionCategory parse_category_or_throw(std::string_view name);

/// Probability distribution over the four categories, indexed by
/// static_cast<size_t>(EmotionCategory). The interchange type between
/// classifiers and the ensemble.
using ProbDist = std::array<double, kNumCategories>;

/// Sums to 1 within tol, all entries nonnegative.
bool is_valid_dist(const ProbDist& p, double tol = 1e-9);

/// First index attaining the maximum, i.e. ties break by category order.
std::size_t argmax_index(const ProbDist& p);

inline EmotionCategory argmax_category(const ProbDist& p) {
    return static_cast<EmotionCategory>(argmax_index(p));
}

} // namespace emodist
