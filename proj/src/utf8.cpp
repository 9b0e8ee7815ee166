// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/utf8.hpp"

#include <cstdint>

namespace emodist::utf8 {

namespace {
constexpr char32_t kReplacement = 0xFFFD;
} // namespace

std::u32string decode(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    const auto n = s.size();
    while (i < n) {
        const auto b0 = static_cast<unsigned char>(s[i]);
        if (b0 < 0x80) {
            out.push_back(b0);
            ++i;
            continue;
        }
        int len;
        char32_t cp;
        if ((b0 & 0xE0) == 0xC0) {
            len = 2;
            cp = b0 & 0x1F;
        } else if ((b0 & 0xF0) == 0xE0) {
            len = 3;
            cp = b0 & 0x0F;
        } else if ((b0 & 0xF8) == 0xF0) {
            len = 4;
            cp = b0 & 0x07;
        } else {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        if (i + len > n) {
            out.push_back(kReplacement);
            ++i;
            continue;
        }
        bool ok = true;
        for (int k = 1; k < len; ++k) {
            const auto b = static_cast<unsigned char>(s[i + k]);
            if ((b & 0xC0) != 0x80) {
                ok = false;
                break;
            }
            cp = (cp << 6) | (b & 0x3F);
        }
        // reject overlong forms, surrogates and out-of-range values
        if (ok) {
            if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
                (cp >= 0xD800 && cp <= 0xDFFF))
                ok = false;
        }
        if (ok) {
            out.push_back(cp);
            i += len;
        } else {
            out.push_back(kReplacement);
            ++i;
        }
    }
    return out;
}

void append(std::string& out, char32_t cp) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))
        cp = kReplacement;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode(std::u32string_view s) {
    std::string out;
    out.reserve(s.size() * 2);
    for (char32_t cp : s)
        append(out, cp);
    return out;
}

bool is_whitespace(char32_t cp) {
    switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
        return true;
    default:
        return cp >= 0x2000 && cp <= 0x200A;
    }
}

bool is_punctuation(char32_t cp) {
    // ASCII: ! " # % & ' ( ) * , - . / : ; ? @ [ \ ] _ { }
    if (cp < 0x80) {
        switch (cp) {
        case '!': case '"': case '#': case '%': case '&': case '\'':
        case '(': case ')': case '*': case ',': case '-': case '.':
        case '/': case ':': case ';': case '?': case '@': case '[':
        case '\\': case ']': case '_': case '{': case '}':
            return true;
        default:
            return false;
        }
    }
    // Latin-1
    if (cp == 0xA1 || cp == 0xA7 || cp == 0xAB || cp == 0xB6 || cp == 0xB7 ||
        cp == 0xBB || cp == 0xBF)
        return true;
    // Arabic punctuation
    if (cp == 0x060C || cp == 0x060D || cp == 0x061B || cp == 0x061E ||
        cp == 0x061F || (cp >= 0x066A && cp <= 0x066D) || cp == 0x06D4)
        return true;
    // General punctuation (dashes, quotes, daggers, ellipsis, ...)
    if ((cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x2043) ||
        (cp >= 0x2045 && cp <= 0x2051) || (cp >= 0x2053 && cp <= 0x205E))
        return true;
    // CJK symbols and fullwidth forms
    if ((cp >= 0x3001 && cp <= 0x3003) || (cp >= 0x3008 && cp <= 0x3011) ||
        (cp >= 0x3014 && cp <= 0x301F) || cp == 0x30FB)
        return true;
    if ((cp >= 0xFE50 && cp <= 0xFE52) || (cp >= 0xFE54 && cp <= 0xFE61) ||
        cp == 0xFE63 || cp == 0xFE68 || (cp >= 0xFE6A && cp <= 0xFE6B))
        return true;
    if ((cp >= 0xFF01 && cp <= 0xFF03) || (cp >= 0xFF05 && cp <= 0xFF0A) ||
        (cp >= 0xFF0C && cp <= 0xFF0F) || cp == 0xFF1A || cp == 0xFF1B ||
        cp == 0xFF1F || cp == 0xFF20 || (cp >= 0xFF3B && cp <= 0xFF3D) ||
        cp == 0xFF3F || cp == 0xFF5B || cp == 0xFF5D ||
        (cp >= 0xFF5F && cp <= 0xFF65))
        return true;
    return false;
}

} // namespace emodist::utf8
