// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <string>
#include <vector>

#include "emodist/classifiers.hpp"
#include "emodist/preprocess.hpp"

namespace emodist {

inline constexpr int kModelFormatVersion = 1;

/// Everything needed to reproduce predictions: the preprocessing snapshot,
/// the fitted vocabulary and one or more trained models. Serialization is
/// canonical, so saving a loaded artifact reproduces the file byte for byte.
struct ModelArtifact {
    int version = kModelFormatVersion;
    std::uint64_t seed = 0;
    std::size_t min_df = 1;
    PreprocessConfig preprocess;
    Vocabulary vocab;
    std::vector<TrainedModel> models;
};

void save_model(const ModelArtifact& artifact, const std::string& path);

/// Verifies the header version and content checksum before parsing.
ModelArtifact load_model(const std::string& path);

std::string model_to_bytes(const ModelArtifact& artifact);
ModelArtifact model_from_bytes(std::string_view bytes, const std::string& origin = "<memory>");

const TrainedModel* find_model(const ModelArtifact& artifact, ClassifierKind kind);

} // namespace emodist
