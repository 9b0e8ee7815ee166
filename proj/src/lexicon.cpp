// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/lexicon.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "emodist/utf8.hpp"

namespace emodist {

namespace {

constexpr char32_t kZwj = 0x200D;
constexpr char32_t kVariationSelector = 0xFE0F;

bool is_skin_tone(char32_t cp) { return cp >= 0x1F3FB && cp <= 0x1F3FF; }

[[noreturn]] void fail(const std::string& origin, std::size_t line_no, const std::string& what) {
    throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + what);
}

// Accepts "U+1F602" or "U+1F468 U+200D U+1F469"; returns false if the field
// is not in codepoint notation (then it is treated as a literal emoji).
bool parse_codepoint_field(const std::string& field, std::u32string& out) {
    std::istringstream ss(field);
    std::string part;
    std::u32string cps;
    while (ss >> part) {
        if (part.size() < 3 || (part[0] != 'U' && part[0] != 'u') || part[1] != '+')
            return false;
        char32_t cp = 0;
        for (std::size_t i = 2; i < part.size(); ++i) {
            const char c = part[i];
            int digit;
            if (c >= '0' && c <= '9') digit = c - '0';
            else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
            else return false;
            cp = cp * 16 + static_cast<char32_t>(digit);
            if (cp > 0x10FFFF)
                return false;
        }
        cps.push_back(cp);
    }
    if (cps.empty())
        return false;
    out = std::move(cps);
    return true;
}

// Greedy longest lexicon match at position i, plus trailing skin-tone
// modifiers, variation selectors and ZWJ continuations. Returns the matched
// entry (or nullptr) and advances `end` past everything consumed.
const EmojiEntry* match_at(const std::u32string& text, std::size_t i, const Lexicon& lex,
                           std::size_t& end) {
    const std::size_t remaining = text.size() - i;
    const std::size_t max_len = std::min(lex.longest_len(), remaining);
    for (std::size_t len = max_len; len >= 1; --len) {
        const EmojiEntry* e = lex.find(std::u32string_view(text).substr(i, len));
        if (!e)
            continue;
        std::size_t j = i + len;
        while (j < text.size()) {
            const char32_t cp = text[j];
            if (is_skin_tone(cp) || cp == kVariationSelector) {
                ++j;
            } else if (cp == kZwj) {
                ++j;
                if (j < text.size())
                    ++j; // the joined element itself
            } else {
                break;
            }
        }
        end = j;
        return e;
    }
    return nullptr;
}

} // namespace

Lexicon Lexicon::from_entries(std::vector<EmojiEntry> entries) {
    Lexicon lex;
    std::sort(entries.begin(), entries.end(),
              [](const EmojiEntry& a, const EmojiEntry& b) { return a.codepoints < b.codepoints; });
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const EmojiEntry& e = entries[i];
        if (e.codepoints.empty())
            throw std::runtime_error("lexicon entry with empty codepoint sequence");
        if (e.score == 0 || e.score < -5 || e.score > 5)
            throw std::runtime_error("lexicon score out of range [-5,+5]\\{0}: " +
                                     std::to_string(e.score));
        if (i > 0 && entries[i - 1].codepoints == e.codepoints)
            throw std::runtime_error("duplicate lexicon entry: " + utf8::encode(e.codepoints));
        lex.longest_ = std::max(lex.longest_, e.codepoints.size());
    }
    lex.entries_ = std::move(entries);
    for (std::size_t i = 0; i < lex.entries_.size(); ++i)
        lex.index_.emplace(lex.entries_[i].codepoints, i);
    return lex;
}

const EmojiEntry* Lexicon::find(std::u32string_view codepoints) const {
    auto it = index_.find(codepoints);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

Lexicon parse_lexicon(std::string_view content, const std::string& origin) {
    std::vector<EmojiEntry> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = content.size();
        std::string line(content.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;

        const std::size_t t1 = line.find('\t');
        const std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        if (t1 == std::string::npos || t2 == std::string::npos)
            fail(origin, line_no, "expected three tab-separated fields");
        const std::string emoji_field = line.substr(0, t1);
        const std::string category_field = line.substr(t1 + 1, t2 - t1 - 1);
        const std::string score_field = line.substr(t2 + 1);

        std::u32string cps;
        if (!parse_codepoint_field(emoji_field, cps)) {
            cps = utf8::decode(emoji_field);
            if (cps.empty())
                fail(origin, line_no, "empty emoji field");
        }
        auto category = parse_category(category_field);
        if (!category)
            fail(origin, line_no, "unknown category \"" + category_field + "\"");
        int score = 0;
        try {
            std::size_t consumed = 0;
            score = std::stoi(score_field, &consumed);
            if (consumed != score_field.size())
                throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            fail(origin, line_no, "malformed score \"" + score_field + "\"");
        }
        if (score == 0 || score < -5 || score > 5)
            fail(origin, line_no, "score " + std::to_string(score) +
                                      " outside the AFINN range [-5,+5] (0 not allowed)");
        for (const EmojiEntry& prev : entries)
            if (prev.codepoints == cps)
                fail(origin, line_no, "duplicate entry " + emoji_field);
        entries.push_back(EmojiEntry{std::move(cps), *category, score});
    }
    return Lexicon::from_entries(std::move(entries));
}

Lexicon load_lexicon(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open lexicon file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    // tolerate a UTF-8 BOM
    if (content.size() >= 3 && content.compare(0, 3, "\xEF\xBB\xBF") == 0)
        content.erase(0, 3);
    return parse_lexicon(content, path);
}

std::string lexicon_to_tsv(const Lexicon& lex) {
    std::string out;
    for (const EmojiEntry& e : lex.entries()) {
        std::string cps;
        for (char32_t cp : e.codepoints) {
            char buf[16];
            std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(cp));
            if (!cps.empty())
                cps.push_back(' ');
            cps += buf;
        }
        out += cps;
        out.push_back('\t');
        out += to_string(e.category);
        out.push_back('\t');
        out += std::to_string(e.score);
        out.push_back('\n');
    }
    return out;
}

void save_lexicon(const Lexicon& lex, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write lexicon file: " + path);
    out << lexicon_to_tsv(lex);
}

std::vector<EmojiEntry> extract_emojis(std::string_view text, const Lexicon& lex) {
    std::vector<EmojiEntry> occurrences;
    if (lex.empty())
        return occurrences;
    const std::u32string cps = utf8::decode(text);
    std::size_t i = 0;
    while (i < cps.size()) {
        std::size_t end = i;
        if (const EmojiEntry* e = match_at(cps, i, lex, end)) {
            occurrences.push_back(*e);
            i = end;
        } else {
            ++i;
        }
    }
    return occurrences;
}

std::string strip_emojis(std::string_view text, const Lexicon& lex) {
    if (lex.empty())
        return std::string(text);
    const std::u32string cps = utf8::decode(text);
    std::u32string kept;
    kept.reserve(cps.size());
    std::size_t i = 0;
    while (i < cps.size()) {
        std::size_t end = i;
        if (match_at(cps, i, lex, end)) {
            i = end;
        } else {
            kept.push_back(cps[i]);
            ++i;
        }
    }
    return utf8::encode(kept);
}

} // namespace emodist
