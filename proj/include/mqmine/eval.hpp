#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mqmine/corpus.hpp"
#include "mqmine/synth.hpp"

namespace mqmine {

enum class Extractor { MQE, MPE };

std::string_view to_string(Extractor e);
/// Accepts "MQ"/"MQE" and "MP"/"MPE" in any case; throws Error otherwise.
Extractor parse_extractor(std::string_view text);

struct Interval {
    double lower = 0;
    double upper = 1;
};

/// Exact binomial (Clopper-Pearson) interval for k successes in n trials.
/// Throws RangeError when n == 0 or k > n.
Interval clopper_pearson(std::size_t k, std::size_t n, double confidence = 0.95);

struct EvalReport {
    Extractor extractor = Extractor::MQE;
    std::size_t n = 0;  // sentences scored
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::optional<double> precision;  // absent when tp + fp == 0
    std::optional<double> recall;     // absent when tp + fn == 0
    std::optional<Interval> precision_ci;
    std::optional<Interval> recall_ci;

    nlohmann::ordered_json to_json() const;
    std::string to_table() const;
};

/// One predicted quantity with its span in the raw sentence text.
struct PredictedQuantity {
    std::string value;
    std::string unit_key;
    Span span;
    std::optional<std::string> property;  // normalized
};

using SentencePrediction = std::vector<PredictedQuantity>;

/// Runs `pipeline` on one raw sentence and maps spans back to raw bytes.
SentencePrediction predict(const Pipeline& pipeline, std::string_view raw_sentence);

enum class SamplePredicate { has_number, has_mq };

/// Indices of `n` sentences drawn uniformly without replacement from those
/// satisfying `predicate`, in draw order. Throws SizeError when fewer than
/// `n` sentences qualify.
std::vector<std::size_t> sample_sentences(const std::vector<std::string>& sentences, SamplePredicate predicate,
                                          std::size_t n, std::uint64_t seed, const Pipeline& pipeline);

/// Greedy matching per sentence. A quantity matches when value, unit key and
/// span overlap all agree; a property counts for the quantity it is bound to.
/// Throws Error if the two lists differ in length.
EvalReport score(const std::vector<std::vector<GoldQuantity>>& gold, const std::vector<SentencePrediction>& predicted,
                 Extractor mode);

/// Predicts every sentence and scores it against its labels.
EvalReport evaluate(const std::vector<LabeledSentence>& sentences, Extractor mode, const Pipeline& pipeline);

struct Floors {
    std::optional<double> precision;
    std::optional<double> recall;
};

/// False when a configured floor is violated or its metric is undefined.
bool meets_floors(const EvalReport& report, const Floors& floors);

}  // namespace mqmine
