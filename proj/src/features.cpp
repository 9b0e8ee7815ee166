// Apache License, Version 2.0, refer to LICENSE.txt
#include "emodist/features.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace emodist {

Vocabulary Vocabulary::fit(const std::vector<TokenList>& docs, std::size_t min_df) {
    if (docs.empty())
        throw std::invalid_argument("cannot fit a vocabulary on an empty corpus");
    if (min_df < 1)
        throw std::invalid_argument("min_df must be >= 1");

    std::map<std::string, std::uint32_t> df;
    for (const TokenList& doc : docs) {
        std::set<std::string_view> seen;
        for (const std::string& t : doc)
            seen.insert(t);
        for (std::string_view t : seen)
            ++df[std::string(t)];
    }

    Vocabulary vocab;
    vocab.n_docs_ = docs.size();
    for (const auto& [term, count] : df) { // std::map iterates lexicographically
        if (count < min_df)
            continue;
        vocab.index_.emplace(term, static_cast<std::uint32_t>(vocab.terms_.size()));
        vocab.terms_.push_back(term);
        vocab.dfs_.push_back(count);
    }
    return vocab;
}

Vocabulary Vocabulary::from_parts(std::vector<std::string> terms, std::vector<std::uint32_t> dfs,
                                  std::size_t n_docs) {
    if (terms.size() != dfs.size())
        throw std::invalid_argument("vocabulary terms/dfs size mismatch");
    Vocabulary vocab;
    vocab.n_docs_ = n_docs;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0 && !(terms[i - 1] < terms[i]))
            throw std::invalid_argument("vocabulary terms must be sorted and unique");
        if (dfs[i] < 1 || dfs[i] > n_docs)
            throw std::invalid_argument("vocabulary df out of range");
        vocab.index_.emplace(terms[i], static_cast<std::uint32_t>(i));
    }
    vocab.terms_ = std::move(terms);
    vocab.dfs_ = std::move(dfs);
    return vocab;
}

std::optional<std::uint32_t> Vocabulary::index_of(std::string_view term) const {
    auto it = index_.find(term);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

double Vocabulary::idf(std::uint32_t index) const {
    return std::log((1.0 + static_cast<double>(n_docs_)) / (1.0 + static_cast<double>(dfs_[index]))) +
           1.0;
}

double SparseVector::l2_norm() const {
    double sq = 0.0;
    for (const auto& [idx, w] : items)
        sq += w * w;
    return std::sqrt(sq);
}

SparseVector transform(const TokenList& tokens, const Vocabulary& vocab) {
    std::map<std::uint32_t, double> tf;
    for (const std::string& t : tokens)
        if (auto idx = vocab.index_of(t))
            tf[*idx] += 1.0;

    SparseVector vec;
    vec.items.reserve(tf.size());
    double sq = 0.0;
    for (const auto& [idx, count] : tf) {
        const double w = count * vocab.idf(idx);
        vec.items.emplace_back(idx, w);
        sq += w * w;
    }
    if (sq > 0.0) {
        const double inv = 1.0 / std::sqrt(sq);
        for (auto& [idx, w] : vec.items)
            w *= inv;
    }
    return vec;
}

} // namespace emodist
