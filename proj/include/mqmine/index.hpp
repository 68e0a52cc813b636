#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "mqmine/corpus.hpp"

namespace mqmine {

/// Lowercased search terms: runs of ASCII letters/digits and non-ASCII bytes.
std::vector<std::string> analyze_terms(std::string_view text);

const std::vector<std::string>& default_stopwords();

struct NumericEntry {
    std::string unit_key;
    double value = 0;   // nearest double, used for range predicates
    std::string exact;  // standardized decimal string
    std::optional<std::string> property;  // normalized
    std::uint32_t sentence = 0;  // index into IndexDoc::sentences
};

struct IndexDoc {
    std::string doc_id;
    std::vector<std::string> sentences;  // one per record, in record order
    std::vector<NumericEntry> entries;
    std::uint32_t length = 0;  // token count
};

struct Query {
    std::vector<std::string> terms;  // combined conjunctively
    std::optional<std::string> unit;
    std::optional<double> vmin;  // inclusive; requires unit
    std::optional<double> vmax;  // inclusive; requires unit
    std::optional<std::string> property;  // compared after normalize_property
    std::size_t page = 1;  // 1-based
    std::size_t page_size = 10;
    std::size_t top_k = 10;

    /// Throws QueryError for a range without a unit, non-finite bounds or page 0.
    void validate() const;
};

/// A document passes the unit/range/property filters when one of its
/// numeric entries satisfies all of them at once.
bool entry_matches(const NumericEntry& e, const Query& q);

struct Hit {
    std::string doc_id;
    double score = 0;
    /// Sentences with query terms (wrapped in <em></em>); without terms,
    /// the sentence of the first entry passing the filters.
    std::vector<std::string> snippets;
};

struct ValueBound {
    double value = 0;
    std::string exact;
};

using FacetCounts = std::vector<std::pair<std::string, std::size_t>>;  // count desc, then key

struct SearchResult {
    std::size_t total = 0;
    std::vector<Hit> hits;
    FacetCounts units;       // docs per unit over the filtered set, '%' excluded
    FacetCounts properties;  // docs per property among entries passing the unit/range filter
    std::optional<ValueBound> min;  // only with a unit filter
    std::optional<ValueBound> max;
    FacetCounts top_terms;

    nlohmann::ordered_json to_json() const;
};

class Index {
public:
    Index() = default;

    /// Records are grouped by doc_id in order of first appearance. A repeated
    /// (doc_id, sentence_index) pair throws ConflictError.
    static Index build(const std::vector<ExtractionRecord>& records);

    SearchResult search(const Query& q) const;
    /// Document-frequency terms over the filtered set; stopwords and terms
    /// shorter than two characters or without letters are left out.
    FacetCounts top_terms(const Query& filters, std::size_t k) const;
    /// Unit facet table over the whole index.
    FacetCounts unit_facets() const;

    /// Writes manifest.bin, docs.bin, postings.bin and numeric.bin.
    void persist(const std::string& dir) const;
    /// Throws LoadError for missing, truncated or foreign files.
    static Index load(const std::string& dir);

    std::size_t size() const noexcept { return docs_.size(); }
    const std::vector<IndexDoc>& documents() const noexcept { return docs_; }

private:
    struct Posting {
        std::uint32_t doc;
        std::vector<std::uint32_t> positions;
    };
    struct NumericPosting {
        double value;
        std::uint32_t doc;
        std::uint32_t entry;
    };

    void finalize();
    std::vector<std::uint32_t> candidates(const Query& q) const;
    double bm25(std::uint32_t doc, const std::vector<std::string>& terms) const;

    std::vector<IndexDoc> docs_;
    std::map<std::string, std::vector<Posting>> postings_;
    std::vector<std::string> unit_table_;
    std::vector<std::vector<NumericPosting>> numeric_;  // parallel to unit_table_, sorted by value
    double avg_length_ = 0;
};

}  // namespace mqmine
