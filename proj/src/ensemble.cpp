// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/ensemble.hpp"

#include <algorithm>
#include <stdexcept>

namespace emodist {

std::string_view to_string(CombineRule r) {
    switch (r) {
    case CombineRule::Average: return "average";
    case CombineRule::Product: return "product";
    case CombineRule::Maximum: return "maximum";
    case CombineRule::Minimum: return "minimum";
    }
    return "?";
}

std::optional<CombineRule> parse_rule(std::string_view name) {
    if (name == "average") return CombineRule::Average;
    if (name == "product") return CombineRule::Product;
    if (name == "maximum") return CombineRule::Maximum;
    if (name == "minimum") return CombineRule::Minimum;
    return std::nullopt;
}

CombinedResult combine(const std::vector<ProbDist>& dists, CombineRule rule) {
    if (dists.empty())
        throw std::invalid_argument("cannot combine an empty list of distributions");

    CombinedResult result;
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        double score = 0.0;
        switch (rule) {
        case CombineRule::Average: {
            double sum = 0.0;
            for (const ProbDist& p : dists)
                sum += p[c];
            score = sum / static_cast<double>(dists.size());
            break;
        }
        case CombineRule::Product: {
            score = 1.0;
            for (const ProbDist& p : dists)
                score *= p[c];
            break;
        }
        case CombineRule::Maximum: {
            score = dists.front()[c];
            for (const ProbDist& p : dists)
                score = std::max(score, p[c]);
            break;
        }
        case CombineRule::Minimum: {
            score = dists.front()[c];
            for (const ProbDist& p : dists)
                score = std::min(score, p[c]);
            break;
        }
        }
        result.scores[c] = score;
    }

    std::size_t best = 0;
    for (std::size_t c = 1; c < kNumCategories; ++c)
        if (result.scores[c] > result.scores[best])
            best = c;
    result.label = static_cast<EmotionCategory>(best);
    return result;
}

} // namespace emodist
