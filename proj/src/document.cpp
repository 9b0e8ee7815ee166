// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/document.hpp"

namespace emodist {

std::string_view to_string(Provenance p) {
    switch (p) {
    case Provenance::Manual: return "manual";
    case Provenance::Auto: return "auto";
    case Provenance::Unlabeled: return "unlabeled";
    }
    return "?";
}

std::optional<Provenance> parse_provenance(std::string_view name) {
    if (name == "manual") return Provenance::Manual;
    if (name == "auto") return Provenance::Auto;
    if (name == "unlabeled") return Provenance::Unlabeled;
    return std::nullopt;
}

} // namespace emodist
