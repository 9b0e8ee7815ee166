// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <string>
#include <string_view>

namespace emodist::utf8 {

/// Decodes UTF-8 into Unicode scalar values. Invalid byte sequences are
/// replaced with U+FFFD so the function is total on arbitrary input.
std::u32string decode(std::string_view s);

std::string encode(std::u32string_view s);

void append(std::string& out, char32_t cp);

/// Unicode whitespace (White_Space property, the code points that occur in
/// practice in short social-media text).
bool is_whitespace(char32_t cp);

/// Unicode general category P (punctuation). Covers the ASCII, Latin-1,
/// Arabic, general-punctuation, CJK and fullwidth ranges; symbol categories
/// (currency signs, math operators, emoji) are deliberately not included.
bool is_punctuation(char32_t cp);

} // namespace emodist::utf8
