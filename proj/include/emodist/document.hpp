// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <optional>
#include <string>

#include "emodist/emotion.hpp"

namespace emodist {

enum class Provenance : std::uint8_t { Manual, Auto, Unlabeled };

std::string_view to_string(Provenance p);
std::optional<Provenance> parse_provenance(std::string_view name);

/// One text record. provenance == Manual implies gold_label is set,
/// provenance == Auto implies auto_label is set.
struct Document {
    std::string id;
    std::string raw_text;
    std::optional<EmotionCategory> gold_label;
    std::optional<EmotionCategory> auto_label;
    Provenance provenance = Provenance::Unlabeled;

    /// The label a trainer should use, respecting provenance.
    std::optional<EmotionCategory> training_label() const {
        return provenance == Provenance::Auto ? auto_label : gold_label;
    }
};

} // namespace emodist
