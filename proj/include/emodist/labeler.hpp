// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "emodist/document.hpp"
#include "emodist/lexicon.hpp"

namespace emodist {

/// Accumulated score magnitude per category; categories without emojis in
/// the text stay at 0.
using EmotionScoreTable = std::array<double, kNumCategories>;

/// Sums |score| of every emoji occurrence into that emoji's category.
EmotionScoreTable score_emotions(const Document& doc, const Lexicon& lex);

/// Argmax of score_emotions. Ties among the maxima are broken uniformly at
/// random with a generator derived from (seed, doc.id), so the choice is
/// reproducible per document. Returns nullopt when all totals are zero.
std::optional<EmotionCategory> auto_label(const Document& doc, const Lexicon& lex,
                                          std::uint64_t seed);

struct AutoCorpusOptions {
    bool single_emoji_only = false;
    /// Remove the labeling emojis from the kept texts so the label signal
    /// cannot leak into the features. Off resembles training on raw text.
    bool strip_emojis = true;
};

/// Keeps the labelable documents, applies the options, marks provenance Auto.
std::vector<Document> build_auto_corpus(const std::vector<Document>& docs, const Lexicon& lex,
                                        std::uint64_t seed, const AutoCorpusOptions& opt = {});

} // namespace emodist
