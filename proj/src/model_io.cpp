// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/model_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "emodist/rng.hpp"
#include "emodist/utf8.hpp"

namespace emodist {

namespace {

using json = nlohmann::ordered_json;

// JSON has no +-inf; absent-class MNB priors are log 0. Encode non-finite
// values as strings so the round trip is exact.
json encode_double(double v) {
    if (std::isfinite(v))
        return v;
    if (std::isnan(v))
        return "nan";
    return v > 0 ? "inf" : "-inf";
}

double decode_double(const json& j) {
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        throw std::runtime_error("unexpected numeric string \"" + s + "\"");
    }
    return j.get<double>();
}

json affixes_to_json(const AffixTable& t) {
    json j;
    json prefixes = json::array(), suffixes = json::array();
    for (const auto& a : t.prefixes)
        prefixes.push_back(utf8::encode(a));
    for (const auto& a : t.suffixes)
        suffixes.push_back(utf8::encode(a));
    j["prefixes"] = std::move(prefixes);
    j["suffixes"] = std::move(suffixes);
    j["min_stem_len"] = t.min_stem_len;
    return j;
}

AffixTable affixes_from_json(const json& j) {
    AffixTable t;
    for (const auto& a : j.at("prefixes"))
        t.prefixes.push_back(utf8::decode(a.get_ref<const std::string&>()));
    for (const auto& a : j.at("suffixes"))
        t.suffixes.push_back(utf8::decode(a.get_ref<const std::string&>()));
    t.min_stem_len = j.at("min_stem_len").get<std::size_t>();
    t.canonicalize();
    return t;
}

json preprocess_to_json(const PreprocessConfig& c) {
    json j;
    j["strip_trailing_hashtags"] = c.strip_trailing_hashtags;
    j["collapse_repeats"] = c.collapse_repeats;
    j["normalize"] = c.normalize;
    j["strip_diacritics"] = c.strip_diacritics;
    j["remove_stopwords"] = c.remove_stopwords;
    j["light_stem"] = c.light_stem;
    j["stopwords"] = json::array();
    for (const auto& w : c.stopwords) // std::set iterates in sorted order
        j["stopwords"].push_back(w);
    j["affixes"] = affixes_to_json(c.affixes);
    return j;
}

PreprocessConfig preprocess_from_json(const json& j) {
    PreprocessConfig c;
    c.strip_trailing_hashtags = j.at("strip_trailing_hashtags").get<bool>();
    c.collapse_repeats = j.at("collapse_repeats").get<bool>();
    c.normalize = j.at("normalize").get<bool>();
    c.strip_diacritics = j.at("strip_diacritics").get<bool>();
    c.remove_stopwords = j.at("remove_stopwords").get<bool>();
    c.light_stem = j.at("light_stem").get<bool>();
    for (const auto& w : j.at("stopwords"))
        c.stopwords.insert(w.get<std::string>());
    c.affixes = affixes_from_json(j.at("affixes"));
    return c;
}

json double_vector_to_json(const std::vector<double>& v) {
    json arr = json::array();
    for (double x : v)
        arr.push_back(encode_double(x));
    return arr;
}

std::vector<double> double_vector_from_json(const json& j) {
    std::vector<double> v;
    v.reserve(j.size());
    for (const auto& x : j)
        v.push_back(decode_double(x));
    return v;
}

json model_to_json(const TrainedModel& m) {
    json j;
    j["kind"] = to_string(m.kind());
    j["n_features"] = m.n_features;
    j["seed"] = m.seed;
    if (const auto* mnb = std::get_if<MnbParams>(&m.params)) {
        j["alpha"] = mnb->alpha;
        json prior = json::array();
        for (double p : mnb->log_prior)
            prior.push_back(encode_double(p));
        j["log_prior"] = std::move(prior);
        json rows = json::array();
        for (const auto& row : mnb->log_likelihood)
            rows.push_back(double_vector_to_json(row));
        j["log_likelihood"] = std::move(rows);
    } else if (const auto* svm = std::get_if<SvmParams>(&m.params)) {
        j["lambda"] = svm->lambda;
        j["epochs"] = svm->epochs;
        json bias = json::array();
        for (double b : svm->bias)
            bias.push_back(encode_double(b));
        j["bias"] = std::move(bias);
        json rows = json::array();
        for (const auto& row : svm->weights)
            rows.push_back(double_vector_to_json(row));
        j["weights"] = std::move(rows);
    } else {
        const auto& rf = std::get<RfParams>(m.params);
        j["oob_accuracy"] = encode_double(rf.oob_accuracy);
        json trees = json::array();
        for (const RfTree& tree : rf.trees) {
            json nodes = json::array();
            for (const RfNode& n : tree.nodes) {
                json counts = json::array();
                for (double c : n.counts)
                    counts.push_back(c);
                nodes.push_back(json::array(
                    {n.feature, encode_double(n.threshold), n.left, n.right, std::move(counts)}));
            }
            trees.push_back(std::move(nodes));
        }
        j["trees"] = std::move(trees);
    }
    return j;
}

TrainedModel model_from_json(const json& j) {
    TrainedModel m;
    m.n_features = j.at("n_features").get<std::uint32_t>();
    m.seed = j.at("seed").get<std::uint64_t>();
    const auto kind = parse_classifier_kind(j.at("kind").get<std::string>());
    if (!kind)
        throw std::runtime_error("unknown classifier kind in model file");
    switch (*kind) {
    case ClassifierKind::MNB: {
        MnbParams p;
        p.alpha = j.at("alpha").get<double>();
        const auto& prior = j.at("log_prior");
        for (std::size_t c = 0; c < kNumCategories; ++c)
            p.log_prior[c] = decode_double(prior.at(c));
        const auto& rows = j.at("log_likelihood");
        for (std::size_t c = 0; c < kNumCategories; ++c)
            p.log_likelihood[c] = double_vector_from_json(rows.at(c));
        m.params = std::move(p);
        break;
    }
    case ClassifierKind::SVM: {
        SvmParams p;
        p.lambda = j.at("lambda").get<double>();
        p.epochs = j.at("epochs").get<int>();
        const auto& bias = j.at("bias");
        for (std::size_t c = 0; c < kNumCategories; ++c)
            p.bias[c] = decode_double(bias.at(c));
        const auto& rows = j.at("weights");
        for (std::size_t c = 0; c < kNumCategories; ++c)
            p.weights[c] = double_vector_from_json(rows.at(c));
        m.params = std::move(p);
        break;
    }
    case ClassifierKind::RF: {
        RfParams p;
        p.oob_accuracy = decode_double(j.at("oob_accuracy"));
        for (const auto& tree_json : j.at("trees")) {
            RfTree tree;
            for (const auto& node_json : tree_json) {
                RfNode n;
                n.feature = node_json.at(0).get<std::int32_t>();
                n.threshold = decode_double(node_json.at(1));
                n.left = node_json.at(2).get<std::int32_t>();
                n.right = node_json.at(3).get<std::int32_t>();
                const auto& counts = node_json.at(4);
                for (std::size_t c = 0; c < kNumCategories; ++c)
                    n.counts[c] = counts.at(c).get<double>();
                tree.nodes.push_back(n);
            }
            p.trees.push_back(std::move(tree));
        }
        m.params = std::move(p);
        break;
    }
    }
    return m;
}

} // namespace

std::string model_to_bytes(const ModelArtifact& artifact) {
    json j;
    j["format"] = "emodist-model";
    j["version"] = artifact.version;
    j["seed"] = artifact.seed;
    j["min_df"] = artifact.min_df;
    j["preprocess"] = preprocess_to_json(artifact.preprocess);
    json vocab;
    vocab["n_docs"] = artifact.vocab.n_docs();
    vocab["terms"] = artifact.vocab.terms();
    vocab["dfs"] = artifact.vocab.dfs();
    j["vocabulary"] = std::move(vocab);
    json models = json::array();
    for (const TrainedModel& m : artifact.models)
        models.push_back(model_to_json(m));
    j["models"] = std::move(models);

    const std::string payload = j.dump();
    char header[64];
    std::snprintf(header, sizeof(header), "emodist-model %d %016llx\n", artifact.version,
                  static_cast<unsigned long long>(fnv1a64(payload)));
    return std::string(header) + payload + "\n";
}

ModelArtifact model_from_bytes(std::string_view bytes, const std::string& origin) {
    const std::size_t eol = bytes.find('\n');
    if (eol == std::string_view::npos)
        throw std::runtime_error(origin + ": not a model file (missing header)");
    const std::string header(bytes.substr(0, eol));
    char magic[32];
    int version = 0;
    unsigned long long checksum = 0;
    if (std::sscanf(header.c_str(), "%31s %d %llx", magic, &version, &checksum) != 3 ||
        std::string(magic) != "emodist-model")
        throw std::runtime_error(origin + ": not a model file (bad header)");
    if (version != kModelFormatVersion)
        throw std::runtime_error(origin + ": model format version " + std::to_string(version) +
                                 " is not supported (expected " +
                                 std::to_string(kModelFormatVersion) + ")");

    std::string_view payload = bytes.substr(eol + 1);
    if (!payload.empty() && payload.back() == '\n')
        payload.remove_suffix(1);
    if (fnv1a64(payload) != checksum)
        throw std::runtime_error(origin + ": model file is corrupted (checksum mismatch)");

    json j;
    try {
        j = json::parse(payload);
    } catch (const std::exception& e) {
        throw std::runtime_error(origin + ": model file is corrupted: " + e.what());
    }

    ModelArtifact artifact;
    artifact.version = j.at("version").get<int>();
    artifact.seed = j.at("seed").get<std::uint64_t>();
    artifact.min_df = j.at("min_df").get<std::size_t>();
    artifact.preprocess = preprocess_from_json(j.at("preprocess"));
    artifact.vocab = Vocabulary::from_parts(j.at("vocabulary").at("terms").get<std::vector<std::string>>(),
                                            j.at("vocabulary").at("dfs").get<std::vector<std::uint32_t>>(),
                                            j.at("vocabulary").at("n_docs").get<std::size_t>());
    for (const auto& mj : j.at("models"))
        artifact.models.push_back(model_from_json(mj));
    return artifact;
}

void save_model(const ModelArtifact& artifact, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write model file: " + path);
    const std::string bytes = model_to_bytes(artifact);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw std::runtime_error("failed writing model file: " + path);
}

ModelArtifact load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open model file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return model_from_bytes(buf.str(), path);
}

const TrainedModel* find_model(const ModelArtifact& artifact, ClassifierKind kind) {
    for (const TrainedModel& m : artifact.models)
        if (m.kind() == kind)
            return &m;
    return nullptr;
}

} // namespace emodist
