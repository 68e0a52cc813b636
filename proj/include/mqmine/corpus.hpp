#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "mqmine/mpe.hpp"
#include "mqmine/mqe.hpp"
#include "mqmine/normalize.hpp"
#include "mqmine/postag.hpp"
#include "mqmine/span.hpp"
#include "mqmine/units.hpp"

namespace mqmine {

struct Document {
    std::string id;
    std::string text;
};

struct CorpusError {
    std::string path;
    std::string message;
};

struct CorpusReadResult {
    std::vector<Document> documents;
    std::vector<CorpusError> errors;
};

/// Regular files under `root`, recursively, in lexicographic order of their
/// relative paths. Files that are unreadable or look binary (NUL bytes)
/// produce an error entry; invalid UTF-8 is replaced with U+FFFD.
/// Throws LoadError when `root` is not a readable directory.
CorpusReadResult read_corpus(const std::string& root);
void for_each_document(const std::string& root, const std::function<void(Document&&)>& on_document,
                       const std::function<void(const CorpusError&)>& on_error);

struct RecordQuantity {
    std::string value;
    std::optional<std::string> error;
    std::string unit_key;
    std::string unit_display;
    Span span;

    friend bool operator==(const RecordQuantity&, const RecordQuantity&) = default;
};

struct RecordProperty {
    std::string text;
    std::size_t mq_index = 0;
    std::string pattern_id;
    Span span;

    friend bool operator==(const RecordProperty&, const RecordProperty&) = default;
};

/// One sentence with at least one quantity. Spans are byte offsets into
/// sentence_text, which is the normalized sentence.
struct ExtractionRecord {
    std::string doc_id;
    std::size_t sentence_index = 0;
    std::string sentence_text;
    std::vector<RecordQuantity> mqs;
    std::vector<RecordProperty> properties;

    friend bool operator==(const ExtractionRecord&, const ExtractionRecord&) = default;
};

nlohmann::ordered_json to_json(const ExtractionRecord& record);
/// Throws ParseError on missing or mistyped fields.
ExtractionRecord record_from_json(const nlohmann::json& j);
std::string to_jsonl_line(const ExtractionRecord& record);
std::vector<ExtractionRecord> read_records(std::istream& in);
std::vector<ExtractionRecord> read_records_file(const std::string& path);

struct PipelineStats {
    std::size_t documents = 0;
    std::size_t sentences = 0;
    std::size_t mqs = 0;
    std::size_t properties = 0;
    std::size_t failed_sentences = 0;
    std::map<std::string, std::size_t> rejections;

    void merge(const PipelineStats& other);
};

/// Everything extracted from one normalized sentence.
struct SentenceAnalysis {
    std::vector<MeasuredQuantity> mqs;
    std::vector<MeasuredProperty> properties;
    std::vector<RejectionReason> rejections;
    std::vector<TaggedToken> tagged;
    std::vector<NPChunk> chunks;
};

class Pipeline {
public:
    Pipeline();
    Pipeline(const UnitCatalog& catalog, const Tagger& tagger, PropertyExtractor properties,
             const RewriteTable& rewrite = RewriteTable::builtin());

    /// `sentence` must already be normalized.
    SentenceAnalysis analyze_sentence(std::string_view sentence) const;
    /// Normalizes then analyzes a single snippet treated as one sentence.
    SentenceAnalysis analyze_text(std::string_view raw) const;

    std::vector<ExtractionRecord> run(const Document& doc, PipelineStats* stats = nullptr) const;
    /// Documents are processed on `threads` workers; output keeps document order.
    std::vector<ExtractionRecord> run_all(const std::vector<Document>& docs, unsigned threads = 0,
                                          PipelineStats* stats = nullptr) const;

    const QuantityExtractor& quantities() const noexcept { return mqe_; }
    const Tagger& tagger() const noexcept { return *tagger_; }
    const RewriteTable& rewrite_table() const noexcept { return *rewrite_; }

private:
    QuantityExtractor mqe_;
    const Tagger* tagger_;
    PropertyExtractor mpe_;
    const RewriteTable* rewrite_;
};

/// Runs the default pipeline.
std::vector<ExtractionRecord> run_pipeline(const Document& doc);

RecordQuantity to_record(const MeasuredQuantity& mq);

}  // namespace mqmine
