// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/synth.hpp"

#include <set>
#include <stdexcept>

#include "emodist/rng.hpp"
#include "emodist/utf8.hpp"

namespace emodist {

namespace {

// Plain Arabic letters only, so normalization is the identity on clean words
// and corruption (alef variants, elongation, tatweel) is exactly undone by
// the pipeline. Bare alef is listed twice to boost its frequency.
const std::u32string kAlphabet =
    U"ابتثجحخدذرزسش"
    U"صضطظعغفقكلمنه"
    U"ويا";

constexpr char32_t kAlef = 0x0627;
constexpr char32_t kTatweel = 0x0640;
const std::u32string kAlefVariants = U"أإآ";

// Words never contain adjacent repeats, so collapse_repeats is the identity
// on clean words and elongations collapse back to a single letter.
std::u32string random_word(SplitMix64& rng) {
    const std::size_t len = 3 + rng.below(4); // 3..6
    std::u32string word;
    while (word.size() < len) {
        const char32_t ch = kAlphabet[rng.below(static_cast<std::uint32_t>(kAlphabet.size()))];
        if (!word.empty() && word.back() == ch)
            continue;
        word.push_back(ch);
    }
    return word;
}

std::vector<std::u32string> make_vocabulary(std::size_t vocab_size, SplitMix64& rng) {
    std::set<std::u32string> seen;
    std::vector<std::u32string> words;
    while (words.size() < vocab_size) {
        std::u32string w = random_word(rng);
        if (seen.insert(w).second)
            words.push_back(std::move(w));
    }
    return words;
}

std::u32string corrupt_word(const std::u32string& word, SplitMix64& rng) {
    std::u32string out = word;
    switch (rng.below(3)) {
    case 0: { // elongate one letter to a run of 3..5
        const std::size_t pos = rng.below(static_cast<std::uint32_t>(out.size()));
        const std::size_t extra = 2 + rng.below(3);
        out.insert(pos, extra, out[pos]);
        break;
    }
    case 1: { // swap a bare alef for a hamza/madda variant
        std::vector<std::size_t> alefs;
        for (std::size_t i = 0; i < out.size(); ++i)
            if (out[i] == kAlef)
                alefs.push_back(i);
        if (!alefs.empty()) {
            const std::size_t pos = alefs[rng.below(static_cast<std::uint32_t>(alefs.size()))];
            out[pos] = kAlefVariants[rng.below(3)];
        } else {
            const std::size_t pos = rng.below(static_cast<std::uint32_t>(out.size()));
            const std::size_t extra = 2 + rng.below(3);
            out.insert(pos, extra, out[pos]);
        }
        break;
    }
    default: { // tatweel stretch inside the word
        const std::size_t pos = 1 + rng.below(static_cast<std::uint32_t>(out.size() - 1));
        out.insert(pos, 1, kTatweel);
        break;
    }
    }
    return out;
}

} // namespace

std::vector<Document> make_synth_corpus(const SynthOptions& opt, const Lexicon* lex) {
    if (opt.vocab_size < kNumCategories)
        throw std::invalid_argument("vocab_size must be at least the number of classes");
    if (opt.doc_len_min < 1 || opt.doc_len_max < opt.doc_len_min)
        throw std::invalid_argument("bad document length range");
    if (opt.emojis_max > 0 && (!lex || lex->empty()))
        throw std::invalid_argument("emoji injection needs a non-empty lexicon");

    SplitMix64 vocab_rng(mix_seed(opt.vocab_seed != 0 ? opt.vocab_seed : opt.seed, 0xA11CE));
    const auto vocab = make_vocabulary(opt.vocab_size, vocab_rng);

    // class slices: word i belongs to class i % 4
    std::array<std::vector<std::uint32_t>, kNumCategories> slices;
    for (std::uint32_t i = 0; i < vocab.size(); ++i)
        slices[i % kNumCategories].push_back(i);

    std::array<std::vector<const EmojiEntry*>, kNumCategories> emoji_by_class;
    if (lex)
        for (const EmojiEntry& e : lex->entries())
            emoji_by_class[static_cast<std::size_t>(e.category)].push_back(&e);
    if (opt.emojis_max > 0)
        for (std::size_t c = 0; c < kNumCategories; ++c)
            if (emoji_by_class[c].empty())
                throw std::invalid_argument("lexicon has no emoji for class " +
                                            std::string(to_string(static_cast<EmotionCategory>(c))));

    std::vector<Document> docs;
    docs.reserve(opt.n_docs);
    for (std::size_t d = 0; d < opt.n_docs; ++d) {
        SplitMix64 rng(mix_seed(opt.seed, 0xD0C000 + d));
        const auto true_class = static_cast<std::size_t>(rng.below(kNumCategories));

        const std::size_t len =
            opt.doc_len_min +
            rng.below(static_cast<std::uint32_t>(opt.doc_len_max - opt.doc_len_min + 1));
        std::u32string text;
        for (std::size_t w = 0; w < len; ++w) {
            std::uint32_t word_idx;
            if (rng.unit() < opt.class_affinity) {
                const auto& slice = slices[true_class];
                word_idx = slice[rng.below(static_cast<std::uint32_t>(slice.size()))];
            } else {
                word_idx = rng.below(static_cast<std::uint32_t>(vocab.size()));
            }
            std::u32string word = vocab[word_idx];
            if (opt.corrupt_rate > 0.0 && rng.unit() < opt.corrupt_rate)
                word = corrupt_word(word, rng);
            if (!text.empty())
                text.push_back(U' ');
            text += word;
        }

        const std::size_t n_emojis =
            opt.emojis_max == 0
                ? 0
                : opt.emojis_min + rng.below(static_cast<std::uint32_t>(
                                       opt.emojis_max - opt.emojis_min + 1));
        for (std::size_t e = 0; e < n_emojis; ++e) {
            std::size_t emoji_class = true_class;
            if (rng.unit() >= opt.emoji_affinity)
                emoji_class = (true_class + 1 + rng.below(kNumCategories - 1)) % kNumCategories;
            const auto& pool = emoji_by_class[emoji_class];
            const EmojiEntry* entry = pool[rng.below(static_cast<std::uint32_t>(pool.size()))];
            text.push_back(U' ');
            text += entry->codepoints;
        }

        std::size_t label = true_class;
        if (opt.label_noise > 0.0 && rng.unit() < opt.label_noise)
            label = (true_class + 1 + rng.below(kNumCategories - 1)) % kNumCategories;

        Document doc;
        doc.id = opt.id_prefix + "-" + std::to_string(d);
        doc.raw_text = utf8::encode(text);
        doc.gold_label = static_cast<EmotionCategory>(label);
        doc.provenance = Provenance::Manual;
        docs.push_back(std::move(doc));
    }
    return docs;
}

} // namespace emodist
