// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "emodist/corpus_io.hpp"
#include "emodist/eval.hpp"
#include "emodist/labeler.hpp"
#include "emodist/model_io.hpp"
#include "emodist/rng.hpp"
#include "emodist/synth.hpp"

namespace emodist {

namespace {

std::uint64_t default_seed_from_env() {
    const char* env = std::getenv("EMODIST_SEED");
    if (!env || !*env)
        return kDefaultSeed;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw std::runtime_error(std::string("EMODIST_SEED is not a number: \"") + env + "\"");
    return v;
}

struct PreprocOptions {
    bool off = false;
    bool no_hashtags = false;
    bool no_collapse = false;
    bool no_normalize = false;
    bool keep_diacritics = false;
    bool no_stopwords = false;
    bool no_stem = false;
    std::string stopwords_path;
    std::string affixes_path;

    void add_flags(CLI::App* cmd) {
        cmd->add_flag("--preprocess-off", off, "Disable the whole preprocessing pipeline");
        cmd->add_flag("--no-hashtag-strip", no_hashtags, "Keep trailing hashtags");
        cmd->add_flag("--no-collapse", no_collapse, "Keep elongated letter runs");
        cmd->add_flag("--no-normalize", no_normalize, "Skip letter normalization");
        cmd->add_flag("--keep-diacritics", keep_diacritics,
                      "Normalize letters but keep diacritics and tatweel");
        cmd->add_flag("--no-stopwords", no_stopwords, "Skip stopword removal");
        cmd->add_flag("--no-stem", no_stem, "Skip light stemming");
        cmd->add_option("--stopwords", stopwords_path, "Stopword list file (default: built-in)");
        cmd->add_option("--affixes", affixes_path, "Affix table file (default: built-in)");
    }

    PreprocessConfig build() const {
        if (off)
            return PreprocessConfig::all_off();
        PreprocessConfig c = PreprocessConfig::defaults();
        c.strip_trailing_hashtags = !no_hashtags;
        c.collapse_repeats = !no_collapse;
        c.normalize = !no_normalize;
        c.strip_diacritics = !keep_diacritics;
        c.remove_stopwords = !no_stopwords;
        c.light_stem = !no_stem;
        if (!stopwords_path.empty())
            c.stopwords = load_stopwords(stopwords_path);
        if (!affixes_path.empty())
            c.affixes = load_affix_table(affixes_path);
        return c;
    }
};

struct HyperOptions {
    TrainConfig tc;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--mnb-alpha", tc.mnb_alpha, "MNB smoothing (default 1.0)");
        cmd->add_option("--svm-lambda", tc.svm_lambda, "SVM regularization (default 1e-4)");
        cmd->add_option("--svm-epochs", tc.svm_epochs, "SVM training epochs (default 20)");
        cmd->add_option("--rf-trees", tc.rf_trees, "Random forest size (default 100)");
        cmd->add_option("--min-df", tc.min_df, "Minimum document frequency (default 1)");
    }
};

std::vector<ClassifierKind> parse_classifier_list(const std::string& csv) {
    std::vector<ClassifierKind> kinds;
    std::istringstream ss(csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name.empty())
            continue;
        const auto kind = parse_classifier_kind(name);
        if (!kind)
            throw std::runtime_error("unknown classifier \"" + name +
                                     "\" (expected mnb, svm or rf)");
        kinds.push_back(*kind);
    }
    if (kinds.empty())
        throw std::runtime_error("empty classifier list");
    return kinds;
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write file: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f)
        throw std::runtime_error("failed writing file: " + path);
}

std::string render_metrics(const Metrics& m) {
    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "documents: %llu\naccuracy: %.2f%%\nweighted precision/recall/f1: "
                  "%.2f%% / %.2f%% / %.2f%%\n",
                  static_cast<unsigned long long>(m.total), m.accuracy * 100.0,
                  m.weighted_precision * 100.0, m.weighted_recall * 100.0, m.weighted_f1 * 100.0);
    out << buf;
    out << "class      precision recall    f1\n";
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        std::snprintf(buf, sizeof(buf), "%-10s %-9.2f %-9.2f %-9.2f\n",
                      std::string(to_string(static_cast<EmotionCategory>(c))).c_str(),
                      m.precision[c] * 100.0, m.recall[c] * 100.0, m.f1[c] * 100.0);
        out << buf;
    }
    out << "confusion (rows gold, cols predicted):\n";
    for (std::size_t c = 0; c < kNumCategories; ++c) {
        std::snprintf(buf, sizeof(buf), "%-10s %6llu %6llu %6llu %6llu\n",
                      std::string(to_string(static_cast<EmotionCategory>(c))).c_str(),
                      static_cast<unsigned long long>(m.confusion[c][0]),
                      static_cast<unsigned long long>(m.confusion[c][1]),
                      static_cast<unsigned long long>(m.confusion[c][2]),
                      static_cast<unsigned long long>(m.confusion[c][3]));
        out << buf;
    }
    return out.str();
}

std::string insert_rule_in_path(const std::string& path, std::string_view rule) {
    const std::size_t slash = path.find_last_of('/');
    const std::size_t dot = path.find_last_of('.');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
        return path + "." + std::string(rule);
    return path.substr(0, dot) + "." + std::string(rule) + path.substr(dot);
}

// ---- subcommand payloads ----

struct LabelAutoArgs {
    std::string corpus, lexicon, out;
    std::uint64_t seed = 0;
    bool single_emoji_only = false;
    bool keep_emojis = false;
};

int run_label_auto(const LabelAutoArgs& a, std::ostream& out) {
    const Lexicon lex = load_lexicon(a.lexicon);
    const std::vector<Document> docs = load_corpus(a.corpus);
    AutoCorpusOptions opt;
    opt.single_emoji_only = a.single_emoji_only;
    opt.strip_emojis = !a.keep_emojis;
    const std::vector<Document> corpus = build_auto_corpus(docs, lex, a.seed, opt);
    save_corpus(corpus, a.out);
    out << "auto-labeled " << corpus.size() << " of " << docs.size() << " documents -> " << a.out
        << "\n";
    return 0;
}

struct PreprocessArgs {
    std::string corpus, out_path;
    PreprocOptions preproc;
};

int run_preprocess(const PreprocessArgs& a, std::ostream& out) {
    const PreprocessConfig config = a.preproc.build();
    const std::vector<Document> docs = load_corpus(a.corpus);
    std::string dump;
    for (const Document& doc : docs) {
        dump += doc.id;
        dump.push_back('\t');
        const TokenList tokens = preprocess(doc.raw_text, config);
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i > 0)
                dump.push_back(' ');
            dump += tokens[i];
        }
        dump.push_back('\n');
    }
    if (a.out_path.empty())
        out << dump;
    else
        write_text_file(a.out_path, dump);
    return 0;
}

struct TrainArgs {
    std::string corpus, out;
    std::string classifiers = "svm,mnb,rf";
    std::uint64_t seed = 0;
    PreprocOptions preproc;
    HyperOptions hyper;
};

int run_train(const TrainArgs& a, std::ostream& out) {
    const std::vector<Document> docs = load_corpus(a.corpus);
    if (docs.empty())
        throw std::runtime_error("training corpus is empty");
    const PreprocessConfig config = a.preproc.build();

    std::vector<TokenList> token_lists;
    std::vector<EmotionCategory> labels;
    token_lists.reserve(docs.size());
    for (const Document& doc : docs) {
        const auto label = doc.training_label();
        if (!label)
            throw std::runtime_error("document \"" + doc.id + "\" has no usable training label");
        token_lists.push_back(preprocess(doc.raw_text, config));
        labels.push_back(*label);
    }

    ModelArtifact artifact;
    artifact.seed = a.seed;
    artifact.min_df = a.hyper.tc.min_df;
    artifact.preprocess = config;
    artifact.vocab = Vocabulary::fit(token_lists, a.hyper.tc.min_df);
    const auto n_features = static_cast<std::uint32_t>(artifact.vocab.size());

    std::vector<SparseVector> X;
    X.reserve(token_lists.size());
    for (const TokenList& tokens : token_lists)
        X.push_back(transform(tokens, artifact.vocab));

    for (const ClassifierKind kind : parse_classifier_list(a.classifiers)) {
        const std::uint64_t model_seed = mix_seed(a.seed, static_cast<std::uint64_t>(kind));
        switch (kind) {
        case ClassifierKind::MNB:
            artifact.models.push_back(train_mnb(X, labels, n_features, a.hyper.tc.mnb_alpha));
            break;
        case ClassifierKind::SVM:
            artifact.models.push_back(train_svm(X, labels, n_features, a.hyper.tc.svm_lambda,
                                                a.hyper.tc.svm_epochs, model_seed));
            break;
        case ClassifierKind::RF:
            artifact.models.push_back(
                train_rf(X, labels, n_features, a.hyper.tc.rf_trees, model_seed));
            break;
        }
    }
    save_model(artifact, a.out);
    out << "trained " << artifact.models.size() << " model(s) on " << docs.size()
        << " documents, vocabulary " << artifact.vocab.size() << " terms -> " << a.out << "\n";
    return 0;
}

struct PredictArgs {
    std::string model, corpus, out;
    std::string classifier;
};

int run_predict(const PredictArgs& a, std::ostream& out) {
    const ModelArtifact artifact = load_model(a.model);
    const TrainedModel* model = nullptr;
    if (!a.classifier.empty()) {
        const auto kind = parse_classifier_kind(a.classifier);
        if (!kind)
            throw std::runtime_error("unknown classifier \"" + a.classifier + "\"");
        model = find_model(artifact, *kind);
        if (!model)
            throw std::runtime_error("model file has no " + a.classifier + " model");
    } else if (artifact.models.size() == 1) {
        model = &artifact.models.front();
    } else {
        std::string kinds;
        for (const TrainedModel& m : artifact.models)
            kinds += " " + std::string(to_string(m.kind()));
        throw std::runtime_error("model file holds several models (" + kinds +
                                 " ); pick one with --classifier");
    }

    const std::vector<Document> docs = load_corpus(a.corpus);
    std::vector<Prediction> preds;
    preds.reserve(docs.size());
    for (const Document& doc : docs) {
        const SparseVector x = transform(preprocess(doc.raw_text, artifact.preprocess), artifact.vocab);
        Prediction p;
        p.id = doc.id;
        p.probs = predict_proba(*model, x);
        p.label = argmax_category(p.probs);
        preds.push_back(std::move(p));
    }
    save_predictions(preds, a.out);
    out << "predicted " << preds.size() << " documents with " << to_string(model->kind()) << " -> "
        << a.out << "\n";
    return 0;
}

struct EvaluateArgs {
    std::string predictions, gold, json_out;
};

int run_evaluate(const EvaluateArgs& a, std::ostream& out) {
    const std::vector<Prediction> preds = load_predictions(a.predictions);
    const std::vector<Document> gold_docs = load_corpus(a.gold);
    std::map<std::string_view, EmotionCategory> gold_by_id;
    for (const Document& doc : gold_docs) {
        if (!doc.gold_label)
            throw std::runtime_error("gold document \"" + doc.id + "\" has no label");
        gold_by_id.emplace(doc.id, *doc.gold_label);
    }
    if (preds.size() != gold_docs.size())
        throw std::runtime_error("predictions cover " + std::to_string(preds.size()) +
                                 " documents but the gold corpus has " +
                                 std::to_string(gold_docs.size()));
    std::vector<EmotionCategory> gold, predicted;
    for (const Prediction& p : preds) {
        auto it = gold_by_id.find(p.id);
        if (it == gold_by_id.end())
            throw std::runtime_error("prediction for unknown document id \"" + p.id + "\"");
        gold.push_back(it->second);
        predicted.push_back(p.label);
    }
    const Metrics m = compute_metrics(gold, predicted);
    out << render_metrics(m);
    if (!a.json_out.empty()) {
        std::ostringstream js;
        char buf[256];
        std::snprintf(buf, sizeof(buf),
                      "{\"accuracy\":%.9f,\"weighted_precision\":%.9f,"
                      "\"weighted_recall\":%.9f,\"weighted_f1\":%.9f,\"total\":%llu}\n",
                      m.accuracy, m.weighted_precision, m.weighted_recall, m.weighted_f1,
                      static_cast<unsigned long long>(m.total));
        js << buf;
        write_text_file(a.json_out, js.str());
    }
    return 0;
}

struct CombineArgs {
    std::vector<std::string> inputs;
    std::string rule = "average";
    std::string out;
};

int run_combine(const CombineArgs& a, std::ostream& out) {
    if (a.inputs.size() < 2)
        throw std::runtime_error("combine needs at least two prediction files");
    std::vector<std::vector<Prediction>> all;
    for (const std::string& path : a.inputs)
        all.push_back(load_predictions(path));
    for (std::size_t i = 1; i < all.size(); ++i) {
        if (all[i].size() != all[0].size())
            throw std::runtime_error("prediction files differ in length");
        for (std::size_t d = 0; d < all[i].size(); ++d)
            if (all[i][d].id != all[0][d].id)
                throw std::runtime_error("prediction files disagree on document order at id \"" +
                                         all[i][d].id + "\"");
    }

    std::vector<CombineRule> rules;
    if (a.rule == "all") {
        rules.assign(kAllRules.begin(), kAllRules.end());
    } else {
        const auto rule = parse_rule(a.rule);
        if (!rule)
            throw std::runtime_error("unknown rule \"" + a.rule +
                                     "\" (average, product, maximum, minimum or all)");
        rules.push_back(*rule);
    }

    for (const CombineRule rule : rules) {
        std::vector<Prediction> combined;
        combined.reserve(all[0].size());
        std::vector<ProbDist> dists(all.size());
        for (std::size_t d = 0; d < all[0].size(); ++d) {
            for (std::size_t i = 0; i < all.size(); ++i)
                dists[i] = all[i][d].probs;
            const CombinedResult r = combine(dists, rule);
            Prediction p;
            p.id = all[0][d].id;
            p.label = r.label;
            // scores are renormalized so the output stays a loadable
            // predictions file; positive scaling preserves the argmax
            double total = 0.0;
            for (double s : r.scores)
                total += s;
            if (total > 0.0) {
                for (std::size_t c = 0; c < kNumCategories; ++c)
                    p.probs[c] = r.scores[c] / total;
            } else {
                p.probs.fill(1.0 / kNumCategories);
            }
            combined.push_back(std::move(p));
        }
        const std::string path =
            rules.size() == 1 ? a.out : insert_rule_in_path(a.out, to_string(rule));
        save_predictions(combined, path);
        out << "combined " << all.size() << " classifiers with " << to_string(rule) << " -> "
            << path << "\n";
    }
    return 0;
}

struct ExperimentArgs {
    std::string spec_path, manual, auto_path, lexicon, out;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double fixed_split = 0.0;
    bool fixed_split_given = false;
    PreprocOptions preproc;
    HyperOptions hyper;
};

int run_experiment_cmd(const ExperimentArgs& a, std::ostream& out) {
    ExperimentSpec spec = load_experiment_spec(a.spec_path, default_seed_from_env());
    if (a.seed_given)
        spec.seed = a.seed;
    if (a.fixed_split_given) {
        if (!(a.fixed_split > 0.0 && a.fixed_split < 1.0))
            throw std::runtime_error("--fixed-split must be in (0, 1)");
        spec.fixed_split = a.fixed_split;
    }

    const std::vector<Document> manual = load_corpus(a.manual);
    std::vector<Document> auto_docs;
    Lexicon lex;
    const Lexicon* lex_ptr = nullptr;
    if (spec.training_source != TrainingSource::Manual) {
        if (a.auto_path.empty() || a.lexicon.empty())
            throw std::runtime_error("this experiment needs --auto and --lexicon");
        auto_docs = load_corpus(a.auto_path);
        lex = load_lexicon(a.lexicon);
        lex_ptr = &lex;
    }

    const ExperimentReport report =
        run_experiment(spec, auto_docs, manual, lex_ptr, a.preproc.build(), a.hyper.tc);
    out << render_report(report);
    if (!a.out.empty()) {
        write_text_file(a.out, report_to_file_text(report));
        out << "\nreport written to " << a.out << "\n";
    }
    return 0;
}

struct SynthArgs {
    SynthOptions opt;
    std::string out, lexicon;
};

int run_synth(const SynthArgs& a, std::ostream& out) {
    Lexicon lex;
    const Lexicon* lex_ptr = nullptr;
    if (!a.lexicon.empty()) {
        lex = load_lexicon(a.lexicon);
        lex_ptr = &lex;
    }
    const std::vector<Document> docs = make_synth_corpus(a.opt, lex_ptr);
    save_corpus(docs, a.out);
    out << "generated " << docs.size() << " documents -> " << a.out << "\n";
    return 0;
}

} // namespace

int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trains and evaluates four-class emotion classifiers from "
                 "emoji-labeled and manually labeled short texts",
                 "emodist"};
    app.require_subcommand(0, 1);

    std::uint64_t env_seed = kDefaultSeed;
    try {
        env_seed = default_seed_from_env();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    LabelAutoArgs label_args;
    label_args.seed = env_seed;
    auto* label_cmd = app.add_subcommand("label-auto", "Label a corpus from its emojis");
    label_cmd->add_option("--corpus", label_args.corpus, "Input corpus file")->required();
    label_cmd->add_option("--lexicon", label_args.lexicon, "Emoji lexicon TSV")->required();
    label_cmd->add_option("--out", label_args.out, "Output corpus file")->required();
    label_cmd->add_option("--seed", label_args.seed, "Tie-break seed");
    label_cmd->add_flag("--single-emoji-only", label_args.single_emoji_only,
                        "Keep only single-emoji documents");
    label_cmd->add_flag("--keep-emojis", label_args.keep_emojis,
                        "Do not strip the labeling emojis from the text");

    PreprocessArgs preprocess_args;
    auto* preprocess_cmd = app.add_subcommand("preprocess", "Dump preprocessed tokens");
    preprocess_cmd->add_option("--corpus", preprocess_args.corpus, "Input corpus file")->required();
    preprocess_cmd->add_option("--out", preprocess_args.out_path, "Output file (default stdout)");
    preprocess_args.preproc.add_flags(preprocess_cmd);

    TrainArgs train_args;
    train_args.seed = env_seed;
    auto* train_cmd = app.add_subcommand("train", "Train classifiers into a model file");
    train_cmd->add_option("--corpus", train_args.corpus, "Labeled training corpus")->required();
    train_cmd->add_option("--out", train_args.out, "Output model file")->required();
    train_cmd->add_option("--classifiers", train_args.classifiers,
                          "Comma-separated subset of svm,mnb,rf (default all)");
    train_cmd->add_option("--seed", train_args.seed, "Training seed");
    train_args.preproc.add_flags(train_cmd);
    train_args.hyper.add_flags(train_cmd);

    PredictArgs predict_args;
    auto* predict_cmd = app.add_subcommand("predict", "Predict a corpus with a trained model");
    predict_cmd->add_option("--model", predict_args.model, "Model file")->required();
    predict_cmd->add_option("--corpus", predict_args.corpus, "Corpus to predict")->required();
    predict_cmd->add_option("--out", predict_args.out, "Output predictions file")->required();
    predict_cmd->add_option("--classifier", predict_args.classifier,
                            "Which model to use when the file holds several");

    EvaluateArgs evaluate_args;
    auto* evaluate_cmd = app.add_subcommand("evaluate", "Score predictions against gold labels");
    evaluate_cmd->add_option("--predictions", evaluate_args.predictions, "Predictions file")
        ->required();
    evaluate_cmd->add_option("--gold", evaluate_args.gold, "Gold-labeled corpus")->required();
    evaluate_cmd->add_option("--json-out", evaluate_args.json_out, "Write summary metrics as JSON");

    CombineArgs combine_args;
    auto* combine_cmd = app.add_subcommand("combine", "Combine prediction files with a fixed rule");
    combine_cmd->add_option("--rule", combine_args.rule,
                            "average, product, maximum, minimum or all");
    combine_cmd->add_option("--out", combine_args.out, "Output predictions file")->required();
    combine_cmd->add_option("inputs", combine_args.inputs, "Prediction files to combine")
        ->required()
        ->expected(-2);

    ExperimentArgs experiment_args;
    auto* experiment_cmd =
        app.add_subcommand("experiment", "Run a cross-validated training-source experiment");
    experiment_cmd->add_option("--spec", experiment_args.spec_path, "Experiment spec file")
        ->required();
    experiment_cmd->add_option("--manual", experiment_args.manual, "Manually labeled corpus")
        ->required();
    experiment_cmd->add_option("--auto", experiment_args.auto_path,
                               "Emoji-bearing corpus for the auto arm");
    experiment_cmd->add_option("--lexicon", experiment_args.lexicon, "Emoji lexicon TSV");
    experiment_cmd->add_option("--out", experiment_args.out, "Report file");
    auto* exp_seed_opt =
        experiment_cmd->add_option("--seed", experiment_args.seed, "Overrides the spec file seed");
    auto* exp_split_opt = experiment_cmd->add_option(
        "--fixed-split", experiment_args.fixed_split,
        "Use one stratified holdout with this test fraction instead of k-fold CV");
    experiment_args.preproc.add_flags(experiment_cmd);
    experiment_args.hyper.add_flags(experiment_cmd);

    SynthArgs synth_args;
    synth_args.opt.seed = env_seed;
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus");
    synth_cmd->add_option("--out", synth_args.out, "Output corpus file")->required();
    synth_cmd->add_option("--docs", synth_args.opt.n_docs, "Number of documents (default 100)");
    synth_cmd->add_option("--vocab", synth_args.opt.vocab_size, "Vocabulary size (default 300)");
    synth_cmd->add_option("--doc-len-min", synth_args.opt.doc_len_min, "Min words per document");
    synth_cmd->add_option("--doc-len-max", synth_args.opt.doc_len_max, "Max words per document");
    synth_cmd->add_option("--affinity", synth_args.opt.class_affinity,
                          "Probability of drawing from the class slice (default 0.7)");
    synth_cmd->add_option("--noise", synth_args.opt.label_noise, "Label flip probability");
    synth_cmd->add_option("--corrupt", synth_args.opt.corrupt_rate,
                          "Per-token elongation/alef corruption probability");
    synth_cmd->add_option("--emojis-min", synth_args.opt.emojis_min, "Min injected emojis");
    synth_cmd->add_option("--emojis-max", synth_args.opt.emojis_max, "Max injected emojis");
    synth_cmd->add_option("--emoji-affinity", synth_args.opt.emoji_affinity,
                          "Probability an injected emoji matches the class (default 0.9)");
    synth_cmd->add_option("--lexicon", synth_args.lexicon, "Lexicon for emoji injection");
    synth_cmd->add_option("--id-prefix", synth_args.opt.id_prefix, "Document id prefix");
    synth_cmd->add_option("--seed", synth_args.opt.seed, "Generator seed");
    synth_cmd->add_option("--vocab-seed", synth_args.opt.vocab_seed,
                          "Word-list seed; share it across corpora that must "
                          "draw from the same vocabulary (default: --seed)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const CLI::App* target = &app;
        auto subs = target->get_subcommands();
        while (!subs.empty()) {
            target = subs[0];
            subs = target->get_subcommands();
        }
        out << target->help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(label_cmd))
            return run_label_auto(label_args, out);
        if (app.got_subcommand(preprocess_cmd))
            return run_preprocess(preprocess_args, out);
        if (app.got_subcommand(train_cmd))
            return run_train(train_args, out);
        if (app.got_subcommand(predict_cmd))
            return run_predict(predict_args, out);
        if (app.got_subcommand(evaluate_cmd))
            return run_evaluate(evaluate_args, out);
        if (app.got_subcommand(combine_cmd))
            return run_combine(combine_args, out);
        if (app.got_subcommand(experiment_cmd)) {
            experiment_args.seed_given = exp_seed_opt->count() > 0;
            experiment_args.fixed_split_given = exp_split_opt->count() > 0;
            return run_experiment_cmd(experiment_args, out);
        }
        if (app.got_subcommand(synth_cmd))
            return run_synth(synth_args, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    out << app.help();
    return 2;
}

} // namespace emodist
