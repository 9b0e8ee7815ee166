// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emodist/document.hpp"
#include "emodist/lexicon.hpp"

namespace emodist {

/// Class-conditional unigram generator used by the acceptance experiments in
/// place of a live tweet crawl. Each class owns a slice of the vocabulary;
/// documents draw words mostly from their class slice. Optional knobs add
/// label noise, elongation/alef-variant corruption (undone by the
/// preprocessing pipeline) and emoji injection for the auto labeler.
struct SynthOptions {
    std::size_t n_docs = 100;
    std::size_t vocab_size = 300;
    std::size_t doc_len_min = 8;
    std::size_t doc_len_max = 16;
    /// Probability that a word is drawn from the document's class slice
    /// rather than uniformly from the whole vocabulary.
    double class_affinity = 0.7;
    /// Probability that the recorded gold label is flipped to another class.
    double label_noise = 0.0;
    /// Per-token probability of surface corruption (letter elongation to 3+
    /// repeats, alef-variant substitution, tatweel insertion).
    double corrupt_rate = 0.0;
    /// Number of emojis injected per document (uniform in the range);
    /// requires a lexicon when emojis_max > 0.
    std::size_t emojis_min = 0;
    std::size_t emojis_max = 0;
    /// Probability an injected emoji comes from the document's class.
    double emoji_affinity = 0.9;
    std::uint64_t seed = 0;
    /// Seed for the generated word list alone; 0 means "use seed". Two
    /// corpora with the same vocab_seed but different seeds share a word
    /// population while drawing different documents (train/test pairs).
    std::uint64_t vocab_seed = 0;
    std::string id_prefix = "syn";
};

std::vector<Document> make_synth_corpus(const SynthOptions& opt, const Lexicon* lex = nullptr);

} // namespace emodist
