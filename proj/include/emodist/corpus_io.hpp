// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <string>
#include <vector>

#include "emodist/document.hpp"

namespace emodist {

/// Corpus file: one record per line, `id<TAB>label-or-"-"<TAB>provenance-or-"-"<TAB>text`,
/// UTF-8, '#' comment lines. The text field is everything after the third
/// tab. A record whose provenance is "-" is manual when a label is present,
/// unlabeled otherwise.
std::vector<Document> load_corpus(const std::string& path);
std::vector<Document> parse_corpus(std::string_view content, const std::string& origin = "<memory>");

void save_corpus(const std::vector<Document>& docs, const std::string& path);
std::string corpus_to_text(const std::vector<Document>& docs);

/// One scored prediction per document.
struct Prediction {
    std::string id;
    EmotionCategory label;
    ProbDist probs;
};

/// Predictions file: `id<TAB>label<TAB>p_anger<TAB>p_disgust<TAB>p_joy<TAB>p_sadness`,
/// probabilities printed with 6 decimals.
std::vector<Prediction> load_predictions(const std::string& path);
void save_predictions(const std::vector<Prediction>& preds, const std::string& path);

} // namespace emodist
