// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace emodist {

/// Ordered sequence of UTF-8 tokens; never contains an empty token.
using TokenList = std::vector<std::string>;

/// Prefix/suffix inventory for the light stemmer. At most one prefix and one
/// suffix are removed per token, longest match first, and only while the
/// remaining stem keeps at least min_stem_len scalar values.
struct AffixTable {
    std::vector<std::u32string> prefixes; // sorted longest first
    std::vector<std::u32string> suffixes;
    std::size_t min_stem_len = 2;

    /// Sorts longest-first (ties lexicographic), removes duplicates, rejects
    /// empty affixes and min_stem_len < 2.
    void canonicalize();
};

struct PreprocessConfig {
    bool strip_trailing_hashtags = false;
    bool collapse_repeats = false;
    bool normalize = false;
    bool strip_diacritics = true; // sub-flag of normalize
    bool remove_stopwords = false;
    bool light_stem = false;

    std::set<std::string> stopwords; // pre-normalized UTF-8 tokens
    AffixTable affixes;

    /// Every step disabled: preprocess() degenerates to tokenize().
    static PreprocessConfig all_off() { return PreprocessConfig{}; }

    /// All five steps enabled with the default Arabic stopword list and
    /// affix table.
    static PreprocessConfig defaults();
};

/// Removes the maximal all-hashtag suffix of the tweet. Hashtags at the
/// beginning or middle are kept with '#' removed and '_' turned into spaces
/// so their words stay in the text. A leading run of hashtags is never
/// treated as a trailing suffix.
std::string remove_trailing_hashtags(std::string_view text);

/// Every run of more than two identical scalar values becomes one
/// occurrence; runs of length <= 2 are untouched.
std::string collapse_repeats(std::string_view text);

/// Alef variants to bare alef, teh marbuta to heh; optionally strips tatweel
/// and the Arabic diacritics U+064B..U+0652.
std::string normalize(std::string_view text, bool strip_diacritics = true);

std::string light_stem(std::string_view token, const AffixTable& affixes);

/// Splits on Unicode whitespace and strips leading/trailing punctuation from
/// each token; internal punctuation is kept.
TokenList tokenize(std::string_view text);

TokenList remove_stopwords(const TokenList& tokens, const std::set<std::string>& stopwords);

/// The full pipeline, applied in this order: trailing-hashtag removal,
/// repeat collapsing, normalization, tokenization, stopword removal,
/// per-token light stemming. Each step is gated by its config flag.
TokenList preprocess(std::string_view text, const PreprocessConfig& config);

/// Stopword file: one token per line, UTF-8, '#' comments. Entries are
/// normalized at load so comparison happens in normalized space.
std::set<std::string> load_stopwords(const std::string& path);

/// Affix file: "[prefixes]" / "[suffixes]" sections with one affix per line,
/// plus "min_stem_len = N".
AffixTable load_affix_table(const std::string& path);

const std::set<std::string>& default_stopwords();
const AffixTable& default_affix_table();

} // namespace emodist
