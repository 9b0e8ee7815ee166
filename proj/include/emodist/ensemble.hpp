// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "emodist/emotion.hpp"

namespace emodist {

enum class CombineRule : std::uint8_t { Average, Product, Maximum, Minimum };

inline constexpr std::array<CombineRule, 4> kAllRules = {
    CombineRule::Average, CombineRule::Product, CombineRule::Maximum, CombineRule::Minimum};

std::string_view to_string(CombineRule r);
std::optional<CombineRule> parse_rule(std::string_view name);

struct CombinedResult {
    /// Per-class combined score; unnormalized (only Average sums to 1).
    std::array<double, kNumCategories> scores{};
    EmotionCategory label;
};

/// Per-class mean / product / max / min across the input distributions,
/// then argmax with category-order tie-break. Throws on an empty list.
CombinedResult combine(const std::vector<ProbDist>& dists, CombineRule rule);

} // namespace emodist
