// Apache License, Version 2.0, refer to LICENSE.txt
#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "emodist/cli.hpp"
#include "emodist/corpus_io.hpp"
#include "emodist/ensemble.hpp"
#include "emodist/lexicon.hpp"
#include "helpers.hpp"

using namespace emodist;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli_main(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

const std::string kDataDir = EMODIST_DATA_DIR;

} // namespace

TEST_CASE("unknown subcommands and flags exit 2 with usage text") {
    const CliResult r = run_cli({"frobnicate"});
    CHECK(r.code == 2);
    CHECK(r.err.find("Usage") != std::string::npos);
    const CliResult r2 = run_cli({"synth", "--no-such-flag"});
    CHECK(r2.code == 2);
    const CliResult r3 = run_cli({});
    CHECK(r3.code == 2);
    CHECK(r3.out.find("Usage") != std::string::npos);
}

TEST_CASE("help exits 0, including per-subcommand help") {
    CHECK(run_cli({"--help"}).code == 0);
    const CliResult r = run_cli({"train", "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--corpus") != std::string::npos);
}

TEST_CASE("missing input files exit 1 with a diagnostic") {
    const CliResult r =
        run_cli({"preprocess", "--corpus", "/nonexistent/nowhere.tsv"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error:") != std::string::npos);
}

TEST_CASE("synth then label-auto produces a clean auto corpus") {
    testutil::TempDir dir;
    const std::string raw = dir.file("raw.tsv");
    const std::string labeled = dir.file("auto.tsv");
    const std::string lexicon = kDataDir + "/lexicon.tsv";

    CHECK(run_cli({"synth", "--out", raw, "--docs", "50", "--vocab", "40", "--emojis-min", "1",
                   "--emojis-max", "2", "--lexicon", lexicon, "--seed", "5"})
              .code == 0);
    CHECK(run_cli({"label-auto", "--corpus", raw, "--lexicon", lexicon, "--out", labeled,
                   "--seed", "5"})
              .code == 0);

    const Lexicon lex = load_lexicon(lexicon);
    const auto docs = load_corpus(labeled);
    CHECK(docs.size() == 50);
    for (const Document& d : docs) {
        CHECK(d.provenance == Provenance::Auto);
        CHECK(d.auto_label.has_value());
        CHECK(extract_emojis(d.raw_text, lex).empty());
    }
}

TEST_CASE("train, predict and evaluate chain together") {
    testutil::TempDir dir;
    const std::string corpus = dir.file("corpus.tsv");
    const std::string model = dir.file("model.emodist");
    const std::string preds = dir.file("preds.tsv");

    REQUIRE(run_cli({"synth", "--out", corpus, "--docs", "80", "--vocab", "50", "--seed", "9"})
                .code == 0);
    REQUIRE(run_cli({"train", "--corpus", corpus, "--out", model, "--classifiers", "mnb",
                     "--seed", "9"})
                .code == 0);
    const CliResult p =
        run_cli({"predict", "--model", model, "--corpus", corpus, "--out", preds});
    REQUIRE(p.code == 0);

    const CliResult e = run_cli({"evaluate", "--predictions", preds, "--gold", corpus});
    CHECK(e.code == 0);
    CHECK(e.out.find("accuracy:") != std::string::npos);

    // training corpus predicted on itself should beat chance comfortably
    const auto loaded = load_predictions(preds);
    const auto gold = load_corpus(corpus);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < loaded.size(); ++i)
        correct += loaded[i].label == *gold[i].gold_label;
    CHECK(static_cast<double>(correct) / loaded.size() > 0.5);
}

TEST_CASE("predict needs --classifier when the artifact holds several models") {
    testutil::TempDir dir;
    const std::string corpus = dir.file("corpus.tsv");
    const std::string model = dir.file("model.emodist");
    REQUIRE(run_cli({"synth", "--out", corpus, "--docs", "40", "--vocab", "30", "--seed", "2"})
                .code == 0);
    REQUIRE(run_cli({"train", "--corpus", corpus, "--out", model, "--classifiers", "mnb,svm",
                     "--svm-epochs", "3", "--seed", "2"})
                .code == 0);
    const CliResult no_pick =
        run_cli({"predict", "--model", model, "--corpus", corpus, "--out", dir.file("p.tsv")});
    CHECK(no_pick.code == 1);
    CHECK(no_pick.err.find("--classifier") != std::string::npos);
    CHECK(run_cli({"predict", "--model", model, "--corpus", corpus, "--out", dir.file("p.tsv"),
                   "--classifier", "svm"})
              .code == 0);
}

TEST_CASE("combine applies each rule and matches the library on labels") {
    testutil::TempDir dir;
    const std::string corpus = dir.file("corpus.tsv");
    const std::string model = dir.file("model.emodist");
    REQUIRE(run_cli({"synth", "--out", corpus, "--docs", "60", "--vocab", "40", "--seed", "3"})
                .code == 0);
    REQUIRE(run_cli({"train", "--corpus", corpus, "--out", model, "--svm-epochs", "3",
                     "--rf-trees", "10", "--seed", "3"})
                .code == 0);
    std::vector<std::string> pred_files;
    for (const std::string kind : {"mnb", "svm", "rf"}) {
        const std::string path = dir.file(kind + ".tsv");
        REQUIRE(run_cli({"predict", "--model", model, "--corpus", corpus, "--out", path,
                         "--classifier", kind})
                    .code == 0);
        pred_files.push_back(path);
    }
    const std::string combined = dir.file("combined.tsv");
    const CliResult r = run_cli({"combine", "--rule", "all", "--out", combined, pred_files[0],
                                 pred_files[1], pred_files[2]});
    REQUIRE(r.code == 0);

    std::vector<std::vector<Prediction>> inputs;
    for (const std::string& f : pred_files)
        inputs.push_back(load_predictions(f));
    for (const CombineRule rule : kAllRules) {
        const std::string path = dir.file("combined." + std::string(to_string(rule)) + ".tsv");
        const auto output = load_predictions(path);
        REQUIRE(output.size() == inputs[0].size());
        for (std::size_t d = 0; d < output.size(); ++d) {
            const std::vector<ProbDist> dists = {inputs[0][d].probs, inputs[1][d].probs,
                                                 inputs[2][d].probs};
            CHECK(output[d].label == combine(dists, rule).label);
        }
    }
}

TEST_CASE("the experiment subcommand is reproducible byte for byte") {
    testutil::TempDir dir;
    const std::string manual = dir.file("manual.tsv");
    const std::string spec = dir.file("spec.txt");
    REQUIRE(run_cli({"synth", "--out", manual, "--docs", "60", "--vocab", "40", "--seed", "6"})
                .code == 0);
    testutil::write_file(spec, "training_source = manual\nclassifiers = mnb\nrules = none\n"
                               "n_folds = 3\nseed = 13\n");
    const std::string r1 = dir.file("r1.txt"), r2 = dir.file("r2.txt");
    REQUIRE(run_cli({"experiment", "--spec", spec, "--manual", manual, "--out", r1}).code == 0);
    REQUIRE(run_cli({"experiment", "--spec", spec, "--manual", manual, "--out", r2}).code == 0);
    const std::string a = testutil::read_file(r1);
    CHECK(a == testutil::read_file(r2));
    CHECK(a.find("machine-readable") != std::string::npos);
    CHECK(a.find("[mnb]") != std::string::npos);
}

TEST_CASE("preprocess dumps id + tokens to stdout") {
    testutil::TempDir dir;
    const std::string corpus = dir.file("c.tsv");
    testutil::write_file(corpus, "t1\t-\t-\tمبروووووك #يوم_سعيد\n");
    const CliResult r = run_cli({"preprocess", "--corpus", corpus});
    CHECK(r.code == 0);
    CHECK(r.out == "t1\tمبروك\n");
    // all flags off degenerates to tokenize, which still trims the edge '#'
    const CliResult raw = run_cli({"preprocess", "--corpus", corpus, "--preprocess-off"});
    CHECK(raw.out == "t1\tمبروووووك يوم_سعيد\n");
}

TEST_CASE("EMODIST_SEED steers defaults and the flag wins over it") {
    testutil::TempDir dir;
    ::setenv("EMODIST_SEED", "777", 1);
    const std::string a = dir.file("a.tsv"), b = dir.file("b.tsv"), c = dir.file("c.tsv");
    REQUIRE(run_cli({"synth", "--out", a, "--docs", "10", "--vocab", "20"}).code == 0);
    REQUIRE(run_cli({"synth", "--out", b, "--docs", "10", "--vocab", "20"}).code == 0);
    REQUIRE(run_cli({"synth", "--out", c, "--docs", "10", "--vocab", "20", "--seed", "778"})
                .code == 0);
    ::unsetenv("EMODIST_SEED");
    CHECK(testutil::read_file(a) == testutil::read_file(b));
    CHECK(testutil::read_file(a) != testutil::read_file(c));

    ::setenv("EMODIST_SEED", "not-a-number", 1);
    const CliResult bad = run_cli({"synth", "--out", dir.file("d.tsv"), "--docs", "5"});
    ::unsetenv("EMODIST_SEED");
    CHECK(bad.code == 1);
}
