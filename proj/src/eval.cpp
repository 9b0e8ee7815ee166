// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "emodist/labeler.hpp"
#include "emodist/rng.hpp"

namespace emodist {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::vector<std::uint32_t>> indices_by_class(const std::vector<Document>& docs) {
    std::vector<std::vector<std::uint32_t>> by_class(kNumCategories);
    for (std::size_t i = 0; i < docs.size(); ++i) {
        if (!docs[i].gold_label)
            throw std::invalid_argument("document \"" + docs[i].id + "\" has no gold label");
        by_class[static_cast<std::size_t>(*docs[i].gold_label)].push_back(
            static_cast<std::uint32_t>(i));
    }
    return by_class;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r'))
        ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
        --e;
    return s.substr(b, e - b);
}

bool parse_bool(const std::string& value, const std::string& origin, std::size_t line_no) {
    if (value == "true" || value == "on" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "off" || value == "0" || value == "no")
        return false;
    throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": bad boolean \"" + value +
                             "\"");
}

std::vector<std::string> split_csv(const std::string& value) {
    std::vector<std::string> parts;
    std::istringstream ss(value);
    std::string part;
    while (std::getline(ss, part, ','))
        if (!trim(part).empty())
            parts.push_back(trim(part));
    return parts;
}

Metrics mean_metrics(const std::vector<Metrics>& folds) {
    Metrics mean;
    const double k = static_cast<double>(folds.size());
    for (const Metrics& m : folds) {
        for (std::size_t c = 0; c < kNumCategories; ++c) {
            mean.precision[c] += m.precision[c] / k;
            mean.recall[c] += m.recall[c] / k;
            mean.f1[c] += m.f1[c] / k;
            for (std::size_t j = 0; j < kNumCategories; ++j)
                mean.confusion[c][j] += m.confusion[c][j];
        }
        mean.weighted_precision += m.weighted_precision / k;
        mean.weighted_recall += m.weighted_recall / k;
        mean.weighted_f1 += m.weighted_f1 / k;
        mean.accuracy += m.accuracy / k;
        mean.total += m.total;
    }
    return mean;
}

std::string percent(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v * 100.0);
    return buf;
}

json metrics_to_json(const Metrics& m) {
    json j;
    j["accuracy"] = m.accuracy;
    j["weighted_precision"] = m.weighted_precision;
    j["weighted_recall"] = m.weighted_recall;
    j["weighted_f1"] = m.weighted_f1;
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        json per_class;
        per_class["precision"] = m.precision[c];
        per_class["recall"] = m.recall[c];
        per_class["f1"] = m.f1[c];
        j[std::string(to_string(static_cast<EmotionCategory>(c)))] = std::move(per_class);
    }
    json confusion = json::array();
    for (const auto& row : m.confusion)
        confusion.push_back(row);
    j["confusion"] = std::move(confusion);
    j["total"] = m.total;
    return j;
}

struct FoldData {
    std::uint32_t vocab_size = 0;
    std::vector<SparseVector> X_train;
    std::vector<EmotionCategory> y_train;
    std::vector<SparseVector> X_test;
    std::vector<EmotionCategory> y_test;
};

EmotionCategory require_training_label(const Document& doc) {
    const auto label = doc.training_label();
    if (!label)
        throw std::invalid_argument("training document \"" + doc.id + "\" has no usable label");
    return *label;
}

FoldData featurize_fold(const std::vector<const Document*>& train,
                        const std::vector<const Document*>& test,
                        const PreprocessConfig& config, std::size_t min_df) {
    std::vector<TokenList> train_tokens;
    train_tokens.reserve(train.size());
    FoldData data;
    data.y_train.reserve(train.size());
    for (const Document* doc : train) {
        train_tokens.push_back(preprocess(doc->raw_text, config));
        data.y_train.push_back(require_training_label(*doc));
    }
    // TF-IDF statistics come from the training side only
    const Vocabulary vocab = Vocabulary::fit(train_tokens, min_df);
    data.vocab_size = static_cast<std::uint32_t>(vocab.size());
    data.X_train.reserve(train.size());
    for (const TokenList& tokens : train_tokens)
        data.X_train.push_back(transform(tokens, vocab));
    data.X_test.reserve(test.size());
    data.y_test.reserve(test.size());
    for (const Document* doc : test) {
        data.X_test.push_back(transform(preprocess(doc->raw_text, config), vocab));
        if (!doc->gold_label)
            throw std::invalid_argument("test document \"" + doc->id + "\" has no gold label");
        data.y_test.push_back(*doc->gold_label);
    }
    return data;
}

} // namespace

std::vector<std::uint32_t> FoldPlan::train_indices(std::size_t fold, std::size_t n_docs) const {
    std::vector<char> in_test(n_docs, 0);
    for (std::uint32_t i : test_indices[fold])
        in_test[i] = 1;
    std::vector<std::uint32_t> train;
    train.reserve(n_docs - test_indices[fold].size());
    for (std::uint32_t i = 0; i < n_docs; ++i)
        if (!in_test[i])
            train.push_back(i);
    return train;
}

namespace {

std::vector<std::uint32_t> stratified_test_indices(const std::vector<Document>& docs,
                                                   double test_fraction, std::uint64_t seed) {
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw std::invalid_argument("test_fraction must be in (0, 1)");
    auto by_class = indices_by_class(docs);
    std::vector<std::uint32_t> test;
    for (std::size_t c = 0; c < by_class.size(); ++c) {
        auto& indices = by_class[c];
        if (indices.empty())
            continue;
        if (indices.size() < 2)
            throw std::invalid_argument(
                "stratified_split needs at least 2 documents per present class; class " +
                std::string(to_string(static_cast<EmotionCategory>(c))) + " has " +
                std::to_string(indices.size()));
        SplitMix64 rng(mix_seed(seed, c));
        shuffle(indices, rng);
        const auto n_test = static_cast<std::size_t>(
            std::lround(static_cast<double>(indices.size()) * test_fraction));
        test.insert(test.end(), indices.begin(), indices.begin() + n_test);
    }
    std::sort(test.begin(), test.end());
    return test;
}

} // namespace

std::pair<std::vector<Document>, std::vector<Document>>
stratified_split(const std::vector<Document>& docs, double test_fraction, std::uint64_t seed) {
    std::vector<char> in_test(docs.size(), 0);
    for (std::uint32_t i : stratified_test_indices(docs, test_fraction, seed))
        in_test[i] = 1;
    std::vector<Document> train, test;
    for (std::size_t i = 0; i < docs.size(); ++i)
        (in_test[i] ? test : train).push_back(docs[i]);
    return {std::move(train), std::move(test)};
}

FoldPlan make_folds(const std::vector<Document>& docs, int k, std::uint64_t seed) {
    if (k < 2)
        throw std::invalid_argument("k must be >= 2");
    auto by_class = indices_by_class(docs);
    for (std::size_t c = 0; c < by_class.size(); ++c)
        if (!by_class[c].empty() && by_class[c].size() < static_cast<std::size_t>(k))
            throw std::invalid_argument(
                "k exceeds the size of class " +
                std::string(to_string(static_cast<EmotionCategory>(c))) + " (" +
                std::to_string(by_class[c].size()) + " documents)");

    FoldPlan plan;
    plan.test_indices.assign(static_cast<std::size_t>(k), {});
    for (std::size_t c = 0; c < by_class.size(); ++c) {
        auto& indices = by_class[c];
        SplitMix64 rng(mix_seed(seed, c));
        shuffle(indices, rng);
        for (std::size_t i = 0; i < indices.size(); ++i)
            plan.test_indices[i % static_cast<std::size_t>(k)].push_back(indices[i]);
    }
    for (auto& fold : plan.test_indices)
        std::sort(fold.begin(), fold.end());
    return plan;
}

std::string_view to_string(TrainingSource s) {
    switch (s) {
    case TrainingSource::Auto: return "auto";
    case TrainingSource::Manual: return "manual";
    case TrainingSource::Both: return "both";
    }
    return "?";
}

ExperimentSpec parse_experiment_spec(std::string_view content, const std::string& origin,
                                     std::uint64_t default_seed) {
    ExperimentSpec spec;
    spec.seed = default_seed;
    std::istringstream in{std::string(content)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                     ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "training_source") {
            if (value == "auto") spec.training_source = TrainingSource::Auto;
            else if (value == "manual") spec.training_source = TrainingSource::Manual;
            else if (value == "both") spec.training_source = TrainingSource::Both;
            else
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": bad training_source \"" + value + "\"");
        } else if (key == "preprocess") {
            spec.preprocess_on = parse_bool(value, origin, line_no);
        } else if (key == "single_emoji_only") {
            spec.single_emoji_only = parse_bool(value, origin, line_no);
        } else if (key == "classifiers") {
            spec.classifiers.clear();
            for (const std::string& name : split_csv(value)) {
                const auto kind = parse_classifier_kind(name);
                if (!kind)
                    throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                             ": unknown classifier \"" + name + "\"");
                spec.classifiers.push_back(*kind);
            }
            if (spec.classifiers.empty())
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": classifiers list is empty");
        } else if (key == "rules") {
            spec.rules.clear();
            if (value != "none") {
                for (const std::string& name : split_csv(value)) {
                    if (name == "all") {
                        spec.rules.assign(kAllRules.begin(), kAllRules.end());
                        continue;
                    }
                    const auto rule = parse_rule(name);
                    if (!rule)
                        throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                                 ": unknown rule \"" + name + "\"");
                    spec.rules.push_back(*rule);
                }
            }
        } else if (key == "n_folds") {
            spec.n_folds = std::stoi(value);
        } else if (key == "fixed_split") {
            spec.fixed_split = std::stod(value);
            if (!(spec.fixed_split > 0.0 && spec.fixed_split < 1.0))
                throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                         ": fixed_split must be in (0, 1)");
        } else if (key == "seed") {
            spec.seed = std::stoull(value);
        } else {
            throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": unknown key \"" +
                                     key + "\"");
        }
    }
    return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path, std::uint64_t default_seed) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open experiment spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_spec(buf.str(), path, default_seed);
}

ExperimentReport run_experiment(const ExperimentSpec& spec,
                                const std::vector<Document>& auto_source_docs,
                                const std::vector<Document>& manual_docs, const Lexicon* lex,
                                const PreprocessConfig& preprocess_config,
                                const TrainConfig& train_config) {
    if (manual_docs.empty())
        throw std::invalid_argument("manual corpus is empty");
    if (spec.classifiers.empty())
        throw std::invalid_argument("no classifiers requested");

    const bool want_auto = spec.training_source != TrainingSource::Manual;
    const bool want_manual = spec.training_source != TrainingSource::Auto;

    ExperimentReport report;
    report.spec = spec;
    report.manual_size = manual_docs.size();

    const PreprocessConfig config =
        spec.preprocess_on ? preprocess_config : PreprocessConfig::all_off();

    std::vector<Document> auto_corpus;
    if (want_auto) {
        if (!lex)
            throw std::invalid_argument("the auto arm needs an emoji lexicon");
        AutoCorpusOptions opt;
        opt.single_emoji_only = spec.single_emoji_only;
        auto_corpus = build_auto_corpus(auto_source_docs, *lex, spec.seed, opt);
        if (auto_corpus.empty())
            throw std::invalid_argument("auto-labeling produced an empty training corpus");
        report.auto_size = auto_corpus.size();
        // a training document must never appear in a manual test fold
        std::set<std::string_view> manual_ids;
        for (const Document& d : manual_docs)
            manual_ids.insert(d.id);
        for (const Document& d : auto_corpus)
            if (manual_ids.contains(d.id))
                throw std::logic_error("auto corpus shares document id \"" + d.id +
                                       "\" with the manual corpus");
    }

    FoldPlan plan;
    if (spec.fixed_split > 0.0)
        plan.test_indices.push_back(
            stratified_test_indices(manual_docs, spec.fixed_split, spec.seed));
    else
        plan = make_folds(manual_docs, spec.n_folds, spec.seed);
    for (const auto& fold : plan.test_indices)
        report.fold_test_sizes.push_back(fold.size());

    std::vector<TrainingSource> arms;
    if (want_auto)
        arms.push_back(TrainingSource::Auto);
    if (want_manual)
        arms.push_back(TrainingSource::Manual);

    for (const TrainingSource arm : arms) {
        ArmResult arm_result;
        arm_result.source = arm;
        std::vector<std::vector<Metrics>> classifier_folds(spec.classifiers.size());
        std::vector<std::vector<Metrics>> rule_folds(spec.rules.size());

        for (std::size_t f = 0; f < plan.n_folds(); ++f) {
            std::vector<const Document*> test_docs;
            for (std::uint32_t i : plan.test_indices[f])
                test_docs.push_back(&manual_docs[i]);
            std::vector<const Document*> train_docs;
            if (arm == TrainingSource::Auto) {
                for (const Document& d : auto_corpus)
                    train_docs.push_back(&d);
            } else {
                for (std::uint32_t i : plan.train_indices(f, manual_docs.size()))
                    train_docs.push_back(&manual_docs[i]);
            }
            arm_result.train_size = train_docs.size();

            const FoldData data =
                featurize_fold(train_docs, test_docs, config, train_config.min_df);

            std::vector<TrainedModel> models;
            models.reserve(spec.classifiers.size());
            for (std::size_t m = 0; m < spec.classifiers.size(); ++m) {
                const std::uint64_t model_seed =
                    mix_seed(mix_seed(spec.seed, f), static_cast<std::uint64_t>(spec.classifiers[m]));
                switch (spec.classifiers[m]) {
                case ClassifierKind::MNB:
                    models.push_back(train_mnb(data.X_train, data.y_train, data.vocab_size,
                                               train_config.mnb_alpha));
                    break;
                case ClassifierKind::SVM:
                    models.push_back(train_svm(data.X_train, data.y_train, data.vocab_size,
                                               train_config.svm_lambda, train_config.svm_epochs,
                                               model_seed));
                    break;
                case ClassifierKind::RF:
                    models.push_back(train_rf(data.X_train, data.y_train, data.vocab_size,
                                              train_config.rf_trees, model_seed));
                    break;
                }
            }

            // evaluate individual classifiers and the combining rules on the
            // same per-document distributions
            std::vector<std::vector<ProbDist>> dists(models.size());
            for (std::size_t m = 0; m < models.size(); ++m) {
                dists[m].reserve(data.X_test.size());
                for (const SparseVector& x : data.X_test)
                    dists[m].push_back(predict_proba(models[m], x));
            }
            for (std::size_t m = 0; m < models.size(); ++m) {
                std::vector<EmotionCategory> predicted;
                predicted.reserve(data.X_test.size());
                for (const ProbDist& p : dists[m])
                    predicted.push_back(argmax_category(p));
                classifier_folds[m].push_back(compute_metrics(data.y_test, predicted));
            }
            for (std::size_t r = 0; r < spec.rules.size(); ++r) {
                std::vector<EmotionCategory> predicted;
                predicted.reserve(data.X_test.size());
                std::vector<ProbDist> doc_dists(models.size());
                for (std::size_t i = 0; i < data.X_test.size(); ++i) {
                    for (std::size_t m = 0; m < models.size(); ++m)
                        doc_dists[m] = dists[m][i];
                    predicted.push_back(combine(doc_dists, spec.rules[r]).label);
                }
                rule_folds[r].push_back(compute_metrics(data.y_test, predicted));
            }
        }

        for (std::size_t m = 0; m < spec.classifiers.size(); ++m) {
            SystemResult sys;
            sys.name = to_string(spec.classifiers[m]);
            sys.folds = std::move(classifier_folds[m]);
            sys.mean = mean_metrics(sys.folds);
            arm_result.systems.push_back(std::move(sys));
        }
        for (std::size_t r = 0; r < spec.rules.size(); ++r) {
            SystemResult sys;
            sys.name = to_string(spec.rules[r]);
            sys.folds = std::move(rule_folds[r]);
            sys.mean = mean_metrics(sys.folds);
            arm_result.systems.push_back(std::move(sys));
        }
        report.arms.push_back(std::move(arm_result));
    }
    return report;
}

std::string render_report(const ExperimentReport& report) {
    std::ostringstream out;
    out << "experiment: training_source=" << to_string(report.spec.training_source)
        << " preprocess=" << (report.spec.preprocess_on ? "on" : "off")
        << " single_emoji_only=" << (report.spec.single_emoji_only ? "true" : "false");
    if (report.spec.fixed_split > 0.0) {
        char frac[32];
        std::snprintf(frac, sizeof(frac), "%g", report.spec.fixed_split);
        out << " fixed_split=" << frac;
    } else {
        out << " n_folds=" << report.spec.n_folds;
    }
    out << " seed=" << report.spec.seed << "\n";
    out << "manual corpus: " << report.manual_size << " docs";
    if (report.auto_size > 0)
        out << "; auto corpus: " << report.auto_size << " docs";
    out << "\n";

    for (const ArmResult& arm : report.arms) {
        out << "\n== training on " << to_string(arm.source) << " labels (" << arm.train_size
            << " docs per fold) ==\n";
        for (const SystemResult& sys : arm.systems) {
            out << "\n[" << sys.name << "]\n";
            out << "fold      accuracy  w-prec    w-recall  w-f1\n";
            for (std::size_t f = 0; f < sys.folds.size(); ++f) {
                const Metrics& m = sys.folds[f];
                char row[128];
                std::snprintf(row, sizeof(row), "%-10zu%-10s%-10s%-10s%-10s\n", f + 1,
                              percent(m.accuracy).c_str(), percent(m.weighted_precision).c_str(),
                              percent(m.weighted_recall).c_str(), percent(m.weighted_f1).c_str());
                out << row;
            }
            char row[128];
            std::snprintf(row, sizeof(row), "%-10s%-10s%-10s%-10s%-10s\n", "avg",
                          percent(sys.mean.accuracy).c_str(),
                          percent(sys.mean.weighted_precision).c_str(),
                          percent(sys.mean.weighted_recall).c_str(),
                          percent(sys.mean.weighted_f1).c_str());
            out << row;
        }
    }
    return out.str();
}

std::string report_to_json_string(const ExperimentReport& report) {
    json j;
    j["training_source"] = to_string(report.spec.training_source);
    j["preprocess"] = report.spec.preprocess_on;
    j["single_emoji_only"] = report.spec.single_emoji_only;
    j["n_folds"] = report.spec.n_folds;
    j["fixed_split"] = report.spec.fixed_split;
    j["seed"] = report.spec.seed;
    j["manual_size"] = report.manual_size;
    j["auto_size"] = report.auto_size;
    j["fold_test_sizes"] = report.fold_test_sizes;
    json arms = json::array();
    for (const ArmResult& arm : report.arms) {
        json aj;
        aj["source"] = to_string(arm.source);
        aj["train_size"] = arm.train_size;
        json systems = json::array();
        for (const SystemResult& sys : arm.systems) {
            json sj;
            sj["name"] = sys.name;
            json folds = json::array();
            for (const Metrics& m : sys.folds)
                folds.push_back(metrics_to_json(m));
            sj["folds"] = std::move(folds);
            sj["mean"] = metrics_to_json(sys.mean);
            systems.push_back(std::move(sj));
        }
        aj["systems"] = std::move(systems);
        arms.push_back(std::move(aj));
    }
    j["arms"] = std::move(arms);
    return j.dump();
}

std::string report_to_file_text(const ExperimentReport& report) {
    return render_report(report) + "\n--- machine-readable ---\n" +
           report_to_json_string(report) + "\n";
}

} // namespace emodist
