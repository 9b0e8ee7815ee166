// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/preprocess.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "emodist/utf8.hpp"

namespace emodist {

namespace {

constexpr char32_t kHash = U'#';
constexpr char32_t kUnderscore = U'_';
constexpr char32_t kTatweel = 0x0640;

bool is_diacritic(char32_t cp) { return cp >= 0x064B && cp <= 0x0652; }

struct Span {
    std::size_t begin;
    std::size_t end;
};

std::vector<Span> whitespace_spans(const std::u32string& cps) {
    std::vector<Span> spans;
    std::size_t i = 0;
    while (i < cps.size()) {
        while (i < cps.size() && utf8::is_whitespace(cps[i]))
            ++i;
        if (i >= cps.size())
            break;
        const std::size_t begin = i;
        while (i < cps.size() && !utf8::is_whitespace(cps[i]))
            ++i;
        spans.push_back({begin, i});
    }
    return spans;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r'))
        ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
        --e;
    return s.substr(b, e - b);
}

std::set<std::string> parse_stopwords(std::string_view content) {
    std::set<std::string> words;
    std::istringstream in{std::string(content)};
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        words.insert(normalize(line));
    }
    return words;
}

AffixTable parse_affix_table(std::string_view content, const std::string& origin) {
    AffixTable table;
    enum class Section { None, Prefixes, Suffixes } section = Section::None;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        if (line == "[prefixes]") {
            section = Section::Prefixes;
            continue;
        }
        if (line == "[suffixes]") {
            section = Section::Suffixes;
            continue;
        }
        if (line.rfind("min_stem_len", 0) == 0) {
            const std::size_t eq = line.find('=');
            if (eq == std::string::npos)
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": expected min_stem_len = N");
            table.min_stem_len = static_cast<std::size_t>(std::stoul(trim(line.substr(eq + 1))));
            continue;
        }
        const std::u32string affix = utf8::decode(line);
        switch (section) {
        case Section::Prefixes: table.prefixes.push_back(affix); break;
        case Section::Suffixes: table.suffixes.push_back(affix); break;
        case Section::None:
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": affix outside of [prefixes]/[suffixes] section");
        }
    }
    table.canonicalize();
    return table;
}

// Sorted longest-first so the first match is the greedy one.
void sort_affixes(std::vector<std::u32string>& affixes) {
    std::sort(affixes.begin(), affixes.end(), [](const std::u32string& a, const std::u32string& b) {
        if (a.size() != b.size())
            return a.size() > b.size();
        return a < b;
    });
    affixes.erase(std::unique(affixes.begin(), affixes.end()), affixes.end());
}

const char* kDefaultStopwordText = R"(من
في
على
الى
عن
مع
عند
عندما
حتى
اذا
الا
ان
او
ثم
بل
لا
لم
لن
لو
ما
هل
قد
كل
بعض
غير
بين
فوق
تحت
امام
خلف
حول
دون
سوى
منذ
مثل
بعد
قبل
كيف
اين
متى
لماذا
ماذا
هذا
هذه
ذلك
تلك
هؤلاء
هنا
هناك
هو
هي
هم
هن
هما
انا
انت
انتم
انتن
نحن
الذي
التي
الذين
اللاتي
اللواتي
كان
كانت
كانوا
كنت
كنا
يكون
تكون
اكون
سوف
اصبح
اصبحت
ليس
ليست
ليسوا
كما
لكن
لان
لدى
لدي
اذ
حيث
اي
ايضا
فقط
جدا
الان
اليوم
امس
غدا
عليه
عليها
عليهم
اليه
اليها
اليك
منه
منها
منهم
فيه
فيها
فيهم
به
بها
بهم
له
لها
لهم
لك
لكم
لنا
لي
معه
معها
معهم
معي
عنه
عنها
عنهم
نفسه
نفسها
انفسهم
خلال
ضد
عبر
حين
بينما
حينما
كذلك
هكذا
بسبب
نحو
ضمن
اثناء
تجاه
حسب
مقابل
وراء
اسفل
اعلى
يمكن
كانا
اما
الا
كلا
كلتا
ذو
ذات
ذلكم
اولئك
عليك
فيما
مما
ممن
عما
بمن
لمن
انه
انها
انهم
لانه
لانها
وهو
وهي
وهم
حوالي
تقريبا
ربما
بلى
نعم
كلما
حينئذ
عندئذ
انذاك
قليلا
كثيرا
دائما
ابدا
احيانا
بعدما
قبلما
ريثما
طالما
لولا
لئلا
كي
لكي
اذن
اه
يا
ايها
ايتها
السبت
الاحد
الاثنين
الثلاثاء
الاربعاء
الخميس
الجمعه
يناير
فبراير
مارس
ابريل
مايو
يونيو
يوليو
اغسطس
سبتمبر
اكتوبر
نوفمبر
ديسمبر
محرم
صفر
رجب
شعبان
رمضان
شوال
)";

const char* kDefaultAffixText = R"([prefixes]
وال
بال
كال
فال
ال
لل
و
ف
ب
ك
ل

[suffixes]
هما
كما
تين
ات
ان
ون
ين
ها
هم
هن
كم
كن
نا
ني
ه
ة
ي
ا
ت

min_stem_len = 2
)";

} // namespace

void AffixTable::canonicalize() {
    for (const auto& list : {prefixes, suffixes})
        for (const auto& a : list)
            if (a.empty())
                throw std::runtime_error("affix table contains an empty affix");
    if (min_stem_len < 2)
        throw std::runtime_error("min_stem_len must be >= 2");
    sort_affixes(prefixes);
    sort_affixes(suffixes);
}

PreprocessConfig PreprocessConfig::defaults() {
    PreprocessConfig c;
    c.strip_trailing_hashtags = true;
    c.collapse_repeats = true;
    c.normalize = true;
    c.strip_diacritics = true;
    c.remove_stopwords = true;
    c.light_stem = true;
    c.stopwords = default_stopwords();
    c.affixes = default_affix_table();
    return c;
}

std::string remove_trailing_hashtags(std::string_view text) {
    const std::u32string cps = utf8::decode(text);
    const std::vector<Span> tokens = whitespace_spans(cps);
    if (tokens.empty())
        return std::string(text);

    auto is_hashtag = [&](const Span& s) { return cps[s.begin] == kHash; };

    // Leading hashtags are part of the sentence; they are never removable.
    std::size_t lead = 0;
    while (lead < tokens.size() && is_hashtag(tokens[lead]))
        ++lead;
    // Maximal all-hashtag suffix after the protected leading run.
    std::size_t cut_token = tokens.size();
    while (cut_token > lead && is_hashtag(tokens[cut_token - 1]))
        --cut_token;

    const std::size_t cut =
        cut_token == tokens.size() ? cps.size() : tokens[cut_token - 1].end;

    // kept hashtag tokens turn into plain words; everything else is verbatim
    std::u32string out;
    out.reserve(cut);
    std::size_t pos = 0;
    for (std::size_t t = 0; t < cut_token; ++t) {
        const Span& s = tokens[t];
        out.append(cps, pos, s.begin - pos);
        if (is_hashtag(s)) {
            for (std::size_t i = s.begin; i < s.end; ++i) {
                if (cps[i] == kHash)
                    continue;
                out.push_back(cps[i] == kUnderscore ? U' ' : cps[i]);
            }
        } else {
            out.append(cps, s.begin, s.end - s.begin);
        }
        pos = s.end;
    }
    out.append(cps, pos, cut - pos);
    return utf8::encode(out);
}

std::string collapse_repeats(std::string_view text) {
    const std::u32string cps = utf8::decode(text);
    std::u32string out;
    out.reserve(cps.size());
    std::size_t i = 0;
    while (i < cps.size()) {
        std::size_t run = 1;
        while (i + run < cps.size() && cps[i + run] == cps[i])
            ++run;
        const std::size_t keep = run > 2 ? 1 : run;
        out.append(keep, cps[i]);
        i += run;
    }
    return utf8::encode(out);
}

std::string normalize(std::string_view text, bool strip_diacritics) {
    const std::u32string cps = utf8::decode(text);
    std::u32string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        switch (cp) {
        case 0x0622: // alef with madda
        case 0x0623: // alef with hamza above
        case 0x0625: // alef with hamza below
            out.push_back(0x0627);
            continue;
        case 0x0629: // teh marbuta -> heh
            out.push_back(0x0647);
            continue;
        default:
            break;
        }
        if (strip_diacritics && (cp == kTatweel || is_diacritic(cp)))
            continue;
        out.push_back(cp);
    }
    return utf8::encode(out);
}

std::string light_stem(std::string_view token, const AffixTable& affixes) {
    std::u32string stem = utf8::decode(token);
    for (const std::u32string& p : affixes.prefixes) {
        if (stem.size() >= p.size() + affixes.min_stem_len &&
            stem.compare(0, p.size(), p) == 0) {
            stem.erase(0, p.size());
            break;
        }
    }
    for (const std::u32string& s : affixes.suffixes) {
        if (stem.size() >= s.size() + affixes.min_stem_len &&
            stem.compare(stem.size() - s.size(), s.size(), s) == 0) {
            stem.erase(stem.size() - s.size());
            break;
        }
    }
    return utf8::encode(stem);
}

TokenList tokenize(std::string_view text) {
    const std::u32string cps = utf8::decode(text);
    TokenList tokens;
    for (const Span& s : whitespace_spans(cps)) {
        std::size_t b = s.begin, e = s.end;
        while (b < e && utf8::is_punctuation(cps[b]))
            ++b;
        while (e > b && utf8::is_punctuation(cps[e - 1]))
            --e;
        if (b < e)
            tokens.push_back(utf8::encode(std::u32string_view(cps).substr(b, e - b)));
    }
    return tokens;
}

TokenList remove_stopwords(const TokenList& tokens, const std::set<std::string>& stopwords) {
    TokenList kept;
    kept.reserve(tokens.size());
    for (const std::string& t : tokens)
        if (!stopwords.contains(t))
            kept.push_back(t);
    return kept;
}

TokenList preprocess(std::string_view text, const PreprocessConfig& config) {
    std::string t(text);
    if (config.strip_trailing_hashtags)
        t = remove_trailing_hashtags(t);
    if (config.collapse_repeats)
        t = collapse_repeats(t);
    if (config.normalize)
        t = normalize(t, config.strip_diacritics);
    TokenList tokens = tokenize(t);
    if (config.remove_stopwords)
        tokens = remove_stopwords(tokens, config.stopwords);
    if (config.light_stem)
        for (std::string& tok : tokens)
            tok = light_stem(tok, config.affixes);
    return tokens;
}

std::set<std::string> load_stopwords(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open stopword file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    if (content.size() >= 3 && content.compare(0, 3, "\xEF\xBB\xBF") == 0)
        content.erase(0, 3);
    return parse_stopwords(content);
}

AffixTable load_affix_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open affix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    if (content.size() >= 3 && content.compare(0, 3, "\xEF\xBB\xBF") == 0)
        content.erase(0, 3);
    return parse_affix_table(content, path);
}

const std::set<std::string>& default_stopwords() {
    static const std::set<std::string> words = parse_stopwords(kDefaultStopwordText);
    return words;
}

const AffixTable& default_affix_table() {
    static const AffixTable table = parse_affix_table(kDefaultAffixText, "<builtin>");
    return table;
}

} // namespace emodist
