// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/emotion.hpp"

#include <cctype>
#include <stdexcept>

namespace emodist {

std::string_view to_string(EmotionCategory c) {
    switch (c) {
    case EmotionCategory::Anger: return "anger";
    case EmotionCategory::Disgust: return "disgust";
    case EmotionCategory::Joy: return "joy";
    case EmotionCategory::Sadness: return "sadness";
    }
    return "?";
}

std::optional<EmotionCategory> parse_category(std::string_view name) {
    std::string lower;
    lower.reserve(name.size());
    for (char ch : name)
        lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    if (lower == "anger") return EmotionCategory::Anger;
    if (lower == "disgust") return EmotionCategory::Disgust;
    if (lower == "joy") return EmotionCategory::Joy;
    if (lower == "sadness") return EmotionCategory::Sadness;
    return std::nullopt;
}

EmotionCategory parse_category_or_throw(std::string_view name) {
    auto c = parse_category(name);
    if (!c)
        throw std::runtime_error("unknown emotion category: \"" + std::string(name) +
                                 "\" (expected one of anger, disgust, joy, sadness)");
    return *c;
}

bool is_valid_dist(const ProbDist& p, double tol) {
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0))
            return false;
        sum += v;
    }
    return sum >= 1.0 - tol && sum <= 1.0 + tol;
}

std::size_t argmax_index(const ProbDist& p) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[best])
            best = i;
    return best;
}

} // namespace emodist
