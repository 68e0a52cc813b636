#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mqmine/corpus.hpp"
#include "mqmine/span.hpp"

namespace mqmine {

/// Seeded mt19937_64. The bounded draws are written out here because the
/// standard distributions may differ between library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();
    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    long long between(long long lo, long long hi);
    /// Uniform in [0, 1).
    double uniform();
    bool chance(double p);

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

private:
    std::mt19937_64 engine_;
};

struct GoldQuantity {
    std::string value;     // standardized decimal string
    std::string unit_key;  // canonical key
    Span span;             // bytes of the (possibly corrupted) sentence text
    std::optional<std::string> property;
};

struct LabeledSentence {
    std::string text;
    std::vector<GoldQuantity> gold_mqs;
    /// Property of the first quantity that has one.
    std::optional<std::string> gold_property;
    std::vector<std::string> transform_ids;
    std::string template_id;
};

/// Corruption transform ids, in the order they are applied.
const std::vector<std::string>& corruption_transforms();

/// Applies one corruption transform to every applicable site of `text`.
/// Unknown ids throw Error.
std::string apply_transform(std::string_view id, std::string_view text, Rng& rng);

/// Labeled sentences from the template grammar. Every transform is applied
/// to a sentence independently with probability `corruption_prob`.
/// Throws RangeError when corruption_prob is outside [0, 1].
std::vector<LabeledSentence> synth_corpus(std::uint64_t seed, std::size_t n_sentences, double corruption_prob);

struct DocumentCorpusOptions {
    std::size_t n_docs = 1000;
    std::size_t planted_docs = 0;  // documents carrying the U/mL planted measurements
    std::size_t sentences_per_doc = 3;
};

struct PlantedMeasurement {
    std::string doc_id;
    std::string value;
    std::string property;
};

struct DocumentCorpus {
    std::vector<Document> documents;
    std::vector<PlantedMeasurement> planted;
    /// Topic of each document, parallel to `documents`.
    std::vector<std::string> topics;
};

/// Multi-sentence documents drawn from a handful of topics; every document
/// has at least one measured quantity. Planted documents each contain one
/// "U/mL" measurement, the first two of which are 0.001 and 10000, with
/// "penicillin" as the most common property.
DocumentCorpus synth_documents(std::uint64_t seed, const DocumentCorpusOptions& options);

}  // namespace mqmine
