// Apache License, Version 2.0, refer to LICENSE.txt
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emodist/preprocess.hpp"

namespace emodist {

/// Term -> dense index map with per-term document frequencies. Indices are
/// assigned lexicographically so fitting is deterministic.
class Vocabulary {
  public:
    Vocabulary() = default;

    /// Keeps exactly the terms whose document frequency reaches min_df.
    /// Throws on an empty corpus or min_df < 1.
    static Vocabulary fit(const std::vector<TokenList>& docs, std::size_t min_df = 1);

    /// Rebuilds from serialized parts; terms must be sorted and unique.
    static Vocabulary from_parts(std::vector<std::string> terms, std::vector<std::uint32_t> dfs,
                                 std::size_t n_docs);

    std::optional<std::uint32_t> index_of(std::string_view term) const;
    std::size_t size() const { return terms_.size(); }
    std::size_t n_docs() const { return n_docs_; }
    std::uint32_t df(std::uint32_t index) const { return dfs_[index]; }
    const std::string& term(std::uint32_t index) const { return terms_[index]; }
    const std::vector<std::string>& terms() const { return terms_; }
    const std::vector<std::uint32_t>& dfs() const { return dfs_; }

    /// Smoothed inverse document frequency: ln((1 + N) / (1 + df)) + 1.
    double idf(std::uint32_t index) const;

    bool operator==(const Vocabulary& other) const {
        return terms_ == other.terms_ && dfs_ == other.dfs_ && n_docs_ == other.n_docs_;
    }

  private:
    std::vector<std::string> terms_; // lexicographic
    std::vector<std::uint32_t> dfs_;
    std::map<std::string, std::uint32_t, std::less<>> index_;
    std::size_t n_docs_ = 0;
};

/// TF-IDF featurized document: (index, weight) pairs with strictly
/// increasing indices and positive weights.
struct SparseVector {
    std::vector<std::pair<std::uint32_t, double>> items;

    double l2_norm() const;
    bool empty() const { return items.empty(); }

    bool operator==(const SparseVector&) const = default;
};

/// Raw term frequency times smoothed idf, L2-normalized. Out-of-vocabulary
/// tokens are ignored; an all-OOV document yields the empty vector.
SparseVector transform(const TokenList& tokens, const Vocabulary& vocab);

} // namespace emodist
