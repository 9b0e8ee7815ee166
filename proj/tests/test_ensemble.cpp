// Apache License, Version 2.0, refer to LICENSE.txt
#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "emodist/ensemble.hpp"
#include "emodist/rng.hpp"

using namespace emodist;

namespace {

// Independent brute-force evaluator for the four rules. Kept deliberately
// separate from the implementation; both accumulate in input order so the
// comparison can be exact.
struct OracleResult {
    std::array<double, kNumCategories> scores{};
    std::size_t label = 0;
};

OracleResult oracle_combine(const std::vector<ProbDist>& dists, CombineRule rule) {
    OracleResult r;
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        double acc;
        switch (rule) {
        case CombineRule::Average: {
            acc = 0.0;
            for (const auto& d : dists)
                acc += d[c];
            acc /= static_cast<double>(dists.size());
            break;
        }
        case CombineRule::Product: {
            acc = 1.0;
            for (const auto& d : dists)
                acc *= d[c];
            break;
        }
        case CombineRule::Maximum: {
            acc = 0.0;
            for (const auto& d : dists)
                if (d[c] > acc)
                    acc = d[c];
            break;
        }
        default: {
            acc = 2.0;
            for (const auto& d : dists)
                if (d[c] < acc)
                    acc = d[c];
            break;
        }
        }
        r.scores[c] = acc;
    }
    for (std::size_t c = 1; c < kNumCategories; ++c)
        if (r.scores[c] > r.scores[r.label])
            r.label = c;
    return r;
}

ProbDist random_dist(SplitMix64& rng) {
    ProbDist p{};
    double sum = 0.0;
    for (double& v : p) {
        v = rng.unit() + 1e-6;
        sum += v;
    }
    for (double& v : p)
        v /= sum;
    return p;
}

} // namespace

TEST_CASE("a single classifier reduces to its own argmax under every rule") {
    SplitMix64 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        const ProbDist p = random_dist(rng);
        for (CombineRule rule : kAllRules)
            CHECK(combine({p}, rule).label == argmax_category(p));
    }
}

TEST_CASE("the worked three-classifier example picks the expected classes") {
    const std::vector<ProbDist> dists = {
        {0.9, 0.05, 0.03, 0.02},
        {0.1, 0.45, 0.25, 0.2},
        {0.1, 0.5, 0.25, 0.15},
    };
    const auto avg = combine(dists, CombineRule::Average);
    CHECK(avg.label == EmotionCategory::Anger);
    CHECK(avg.scores[0] == doctest::Approx(0.366666666).epsilon(1e-6));
    CHECK(avg.scores[1] == doctest::Approx(0.333333333).epsilon(1e-6));

    const auto prod = combine(dists, CombineRule::Product);
    CHECK(prod.label == EmotionCategory::Disgust);
    CHECK(prod.scores[1] == doctest::Approx(0.01125).epsilon(1e-9));
    CHECK(prod.scores[0] == doctest::Approx(0.009).epsilon(1e-9));

    const auto mx = combine(dists, CombineRule::Maximum);
    CHECK(mx.label == EmotionCategory::Anger);
    CHECK(mx.scores[0] == 0.9);

    const auto mn = combine(dists, CombineRule::Minimum);
    CHECK(mn.label == EmotionCategory::Anger);
    CHECK(mn.scores[0] == doctest::Approx(0.1));
    CHECK(mn.scores[1] == doctest::Approx(0.05));
}

TEST_CASE("every rule matches the brute-force oracle exactly") {
    SplitMix64 rng(2);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<ProbDist> dists;
        const std::size_t n = 1 + rng.below(4);
        for (std::size_t i = 0; i < n; ++i)
            dists.push_back(random_dist(rng));
        for (CombineRule rule : kAllRules) {
            const CombinedResult got = combine(dists, rule);
            const OracleResult want = oracle_combine(dists, rule);
            CHECK(got.scores == want.scores); // bitwise
            CHECK(static_cast<std::size_t>(got.label) == want.label);
        }
    }
}

TEST_CASE("permuting the classifier list never changes the scores") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 250; ++trial) {
        std::vector<ProbDist> dists;
        const std::size_t n = 2 + rng.below(3);
        for (std::size_t i = 0; i < n; ++i)
            dists.push_back(random_dist(rng));
        std::vector<ProbDist> shuffled = dists;
        shuffle(shuffled, rng);
        for (CombineRule rule : kAllRules) {
            const auto a = combine(dists, rule);
            const auto b = combine(shuffled, rule);
            CHECK(a.label == b.label);
            for (std::size_t c = 0; c < kNumCategories; ++c)
                CHECK(a.scores[c] == doctest::Approx(b.scores[c]).epsilon(1e-12));
        }
    }
}

TEST_CASE("unanimous winners survive every rule") {
    SplitMix64 rng(4);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto winner = static_cast<std::size_t>(rng.below(4));
        std::vector<ProbDist> dists;
        const std::size_t n = 2 + rng.below(3);
        for (std::size_t i = 0; i < n; ++i) {
            ProbDist p = random_dist(rng);
            // force the winner strictly on top, keep a valid distribution
            const std::size_t current = argmax_index(p);
            if (current != winner)
                std::swap(p[current], p[winner]);
            bool strict = true;
            for (std::size_t c = 0; c < kNumCategories; ++c)
                if (c != winner && p[c] >= p[winner])
                    strict = false;
            if (!strict)
                continue;
            dists.push_back(p);
        }
        if (dists.size() < 2)
            continue;
        for (CombineRule rule : kAllRules)
            CHECK(static_cast<std::size_t>(combine(dists, rule).label) == winner);
    }
}

TEST_CASE("a zero probability annihilates the product score") {
    const std::vector<ProbDist> dists = {
        {0.0, 0.5, 0.25, 0.25},
        {0.9, 0.04, 0.03, 0.03},
    };
    const auto r = combine(dists, CombineRule::Product);
    CHECK(r.scores[0] == 0.0);
    CHECK(r.label == EmotionCategory::Disgust);
}

TEST_CASE("combining an empty list is an error") {
    CHECK_THROWS_AS(combine({}, CombineRule::Average), std::invalid_argument);
}

TEST_CASE("combined score ties break by category order") {
    const std::vector<ProbDist> dists = {{0.25, 0.25, 0.25, 0.25}, {0.25, 0.25, 0.25, 0.25}};
    for (CombineRule rule : kAllRules)
        CHECK(combine(dists, rule).label == EmotionCategory::Anger);
}

TEST_CASE("rule names round-trip") {
    for (CombineRule rule : kAllRules)
        CHECK(parse_rule(to_string(rule)) == rule);
    CHECK(!parse_rule("median"));
}
