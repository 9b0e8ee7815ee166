// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/corpus_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace emodist {

namespace {

[[noreturn]] void fail(const std::string& origin, std::size_t line_no, const std::string& what) {
    throw std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + what);
}

std::string read_file(const std::string& path, const char* what) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(std::string("cannot open ") + what + " file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    if (content.size() >= 3 && content.compare(0, 3, "\xEF\xBB\xBF") == 0)
        content.erase(0, 3);
    return content;
}

void write_file(const std::string& path, std::string_view content, const char* what) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(std::string("cannot write ") + what + " file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw std::runtime_error(std::string("failed writing ") + what + " file: " + path);
}

} // namespace

std::vector<Document> parse_corpus(std::string_view content, const std::string& origin) {
    std::vector<Document> docs;
    std::set<std::string> ids;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t eol = content.find('\n', pos);
        if (eol == std::string_view::npos) {
            if (pos == content.size())
                break;
            eol = content.size();
        }
        std::string line(content.substr(pos, eol - pos));
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;

        const std::size_t t1 = line.find('\t');
        const std::size_t t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
        const std::size_t t3 = t2 == std::string::npos ? std::string::npos : line.find('\t', t2 + 1);
        if (t3 == std::string::npos)
            fail(origin, line_no, "expected id<TAB>label<TAB>provenance<TAB>text");

        Document doc;
        doc.id = line.substr(0, t1);
        const std::string label_field = line.substr(t1 + 1, t2 - t1 - 1);
        const std::string prov_field = line.substr(t2 + 1, t3 - t2 - 1);
        doc.raw_text = line.substr(t3 + 1);

        if (doc.id.empty())
            fail(origin, line_no, "empty document id");
        if (doc.raw_text.empty())
            fail(origin, line_no, "empty document text");
        if (!ids.insert(doc.id).second)
            fail(origin, line_no, "duplicate document id \"" + doc.id + "\"");

        std::optional<EmotionCategory> label;
        if (label_field != "-") {
            label = parse_category(label_field);
            if (!label)
                fail(origin, line_no, "unknown label \"" + label_field + "\"");
        }
        if (prov_field == "-") {
            doc.provenance = label ? Provenance::Manual : Provenance::Unlabeled;
        } else {
            const auto prov = parse_provenance(prov_field);
            if (!prov)
                fail(origin, line_no, "unknown provenance \"" + prov_field + "\"");
            doc.provenance = *prov;
        }
        switch (doc.provenance) {
        case Provenance::Manual:
            if (!label)
                fail(origin, line_no, "manual record without a label");
            doc.gold_label = label;
            break;
        case Provenance::Auto:
            if (!label)
                fail(origin, line_no, "auto record without a label");
            doc.auto_label = label;
            break;
        case Provenance::Unlabeled:
            doc.gold_label = label;
            break;
        }
        docs.push_back(std::move(doc));
    }
    return docs;
}

std::vector<Document> load_corpus(const std::string& path) {
    return parse_corpus(read_file(path, "corpus"), path);
}

std::string corpus_to_text(const std::vector<Document>& docs) {
    std::string out;
    for (const Document& doc : docs) {
        if (doc.raw_text.find('\n') != std::string::npos ||
            doc.raw_text.find('\r') != std::string::npos)
            throw std::invalid_argument("document text may not contain line breaks: id " + doc.id);
        const auto label = doc.provenance == Provenance::Auto ? doc.auto_label : doc.gold_label;
        out += doc.id;
        out.push_back('\t');
        out += label ? std::string(to_string(*label)) : "-";
        out.push_back('\t');
        out += to_string(doc.provenance);
        out.push_back('\t');
        out += doc.raw_text;
        out.push_back('\n');
    }
    return out;
}

void save_corpus(const std::vector<Document>& docs, const std::string& path) {
    write_file(path, corpus_to_text(docs), "corpus");
}

std::vector<Prediction> load_predictions(const std::string& path) {
    const std::string content = read_file(path, "predictions");
    std::vector<Prediction> preds;
    std::istringstream in(content);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream fields(line);
        Prediction p;
        std::string label_field;
        if (!std::getline(fields, p.id, '\t') || !std::getline(fields, label_field, '\t'))
            fail(path, line_no, "expected id<TAB>label<TAB>p_anger..p_sadness");
        p.label = parse_category_or_throw(label_field);
        double sum = 0.0;
        for (std::size_t c = 0; c < kNumCategories; ++c) {
            std::string prob_field;
            if (!std::getline(fields, prob_field, '\t'))
                fail(path, line_no, "missing probability column");
            try {
                p.probs[c] = std::stod(prob_field);
            } catch (const std::exception&) {
                fail(path, line_no, "malformed probability \"" + prob_field + "\"");
            }
            if (p.probs[c] < 0.0 || p.probs[c] > 1.0)
                fail(path, line_no, "probability outside [0,1]");
            sum += p.probs[c];
        }
        // 6-decimal rounding can move the sum slightly off 1
        if (std::abs(sum - 1.0) > 1e-4)
            fail(path, line_no, "probabilities do not sum to 1");
        preds.push_back(std::move(p));
    }
    return preds;
}

void save_predictions(const std::vector<Prediction>& preds, const std::string& path) {
    std::string out;
    char buf[32];
    for (const Prediction& p : preds) {
        out += p.id;
        out.push_back('\t');
        out += to_string(p.label);
        for (std::size_t c = 0; c < kNumCategories; ++c) {
            std::snprintf(buf, sizeof(buf), "%.6f", p.probs[c]);
            out.push_back('\t');
            out += buf;
        }
        out.push_back('\n');
    }
    write_file(path, out, "predictions");
}

} // namespace emodist
