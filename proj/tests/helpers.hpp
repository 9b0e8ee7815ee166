// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <unistd.h>

#include "emodist/lexicon.hpp"
#include "emodist/utf8.hpp"

namespace testutil {

inline std::string cp(std::initializer_list<char32_t> codepoints) {
    std::string out;
    for (char32_t c : codepoints)
        emodist::utf8::append(out, c);
    return out;
}

inline std::string cp(char32_t codepoint) { return cp({codepoint}); }

/// Unique scratch directory under the system temp dir, removed on scope exit.
class TempDir {
  public:
    TempDir() {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("emodist-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    std::filesystem::path path_;
};

inline void write_file(const std::string& path, std::string_view content) {
    std::ofstream f(path, std::ios::binary);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

/// Small lexicon used across tests: one emoji per category plus one extra
/// joy emoji, scores chosen so the category argmax cases are easy to state.
inline emodist::Lexicon toy_lexicon() {
    using emodist::EmotionCategory;
    return emodist::Lexicon::from_entries({
        {U"\U0001F621", EmotionCategory::Anger, -5},   // enraged face
        {U"\U0001F922", EmotionCategory::Disgust, -3}, // nauseated face
        {U"\U0001F60A", EmotionCategory::Joy, 3},      // smiling face
        {U"❤", EmotionCategory::Joy, 3},          // red heart
        {U"\U0001F494", EmotionCategory::Sadness, -3}, // broken heart
        {U"\U0001F62D", EmotionCategory::Sadness, -4}, // loudly crying
    });
}

} // namespace testutil
