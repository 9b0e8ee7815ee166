// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "emodist/emotion.hpp"

namespace emodist {

/// One scored emoji. The codepoint sequence may span several scalar values
/// (flags, keycaps, pre-composed ZWJ sequences).
struct EmojiEntry {
    std::u32string codepoints;
    EmotionCategory category;
    int score; // signed, magnitude 1..5, never 0

    bool operator==(const EmojiEntry&) const = default;
};

class Lexicon {
  public:
    Lexicon() = default;

    /// Validates and indexes the entries; duplicate codepoint sequences and
    /// out-of-range scores are rejected.
    static Lexicon from_entries(std::vector<EmojiEntry> entries);

    const EmojiEntry* find(std::u32string_view codepoints) const;

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::size_t longest_len() const { return longest_; }

    /// Entries in canonical (codepoint-sorted) order.
    const std::vector<EmojiEntry>& entries() const { return entries_; }

    bool operator==(const Lexicon& other) const { return entries_ == other.entries_; }

  private:
    std::vector<EmojiEntry> entries_;
    std::map<std::u32string, std::size_t, std::less<>> index_;
    std::size_t longest_ = 0;
};

/// Loads the TSV lexicon format: three tab-separated fields per line — the
/// emoji itself (literal or space-separated U+XXXX codepoints), the category
/// name (case-insensitive) and the signed score. '#' lines are comments.
Lexicon load_lexicon(const std::string& path);

/// Canonical TSV form (U+XXXX codepoints, lowercase category). Loading the
/// result yields an equal Lexicon.
void save_lexicon(const Lexicon& lex, const std::string& path);

Lexicon parse_lexicon(std::string_view content, const std::string& origin = "<memory>");
std::string lexicon_to_tsv(const Lexicon& lex);

/// Every lexicon match in left-to-right text order, repeats included. Greedy
/// longest match at each position; skin-tone modifiers, variation selectors
/// and ZWJ continuations after a match are consumed without altering it.
std::vector<EmojiEntry> extract_emojis(std::string_view text, const Lexicon& lex);

/// Removes every extract_emojis match (and its consumed modifiers); all other
/// characters are preserved in order.
std::string strip_emojis(std::string_view text, const Lexicon& lex);

} // namespace emodist
