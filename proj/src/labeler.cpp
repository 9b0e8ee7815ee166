// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/labeler.hpp"

#include <cmath>

#include "emodist/rng.hpp"

namespace emodist {

EmotionScoreTable score_emotions(const Document& doc, const Lexicon& lex) {
    EmotionScoreTable totals{};
    for (const EmojiEntry& e : extract_emojis(doc.raw_text, lex))
        totals[static_cast<std::size_t>(e.category)] += std::abs(e.score);
    return totals;
}

std::optional<EmotionCategory> auto_label(const Document& doc, const Lexicon& lex,
                                          std::uint64_t seed) {
    const EmotionScoreTable totals = score_emotions(doc, lex);
    double best = 0.0;
    for (double v : totals)
        best = std::max(best, v);
    if (best <= 0.0)
        return std::nullopt;
    std::vector<std::size_t> tied;
    for (std::size_t i = 0; i < totals.size(); ++i)
        if (totals[i] == best)
            tied.push_back(i);
    if (tied.size() == 1)
        return static_cast<EmotionCategory>(tied.front());
    SplitMix64 rng(mix_seed(seed, fnv1a64(doc.id)));
    return static_cast<EmotionCategory>(tied[rng.below(static_cast<std::uint32_t>(tied.size()))]);
}

std::vector<Document> build_auto_corpus(const std::vector<Document>& docs, const Lexicon& lex,
                                        std::uint64_t seed, const AutoCorpusOptions& opt) {
    std::vector<Document> corpus;
    for (const Document& doc : docs) {
        const auto label = auto_label(doc, lex, seed);
        if (!label)
            continue;
        if (opt.single_emoji_only && extract_emojis(doc.raw_text, lex).size() != 1)
            continue;
        Document kept = doc;
        kept.auto_label = label;
        kept.provenance = Provenance::Auto;
        if (opt.strip_emojis)
            kept.raw_text = strip_emojis(kept.raw_text, lex);
        corpus.push_back(std::move(kept));
    }
    return corpus;
}

} // namespace emodist
