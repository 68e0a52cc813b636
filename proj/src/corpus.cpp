#include "mqmine/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "mqmine/error.hpp"
#include "mqmine/utf8.hpp"

namespace fs = std::filesystem;

namespace mqmine {

namespace {

std::vector<fs::path> list_files(const fs::path& root) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) throw LoadError("not a directory: " + root.string());
    std::vector<fs::path> files;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw LoadError("cannot read directory " + root.string() + ": " + ec.message());
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
        if (ec) break;
        if (it->is_regular_file(ec)) files.push_back(fs::relative(it->path(), root, ec));
    }
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.generic_string() < b.generic_string();
    });
    return files;
}

}  // namespace

void for_each_document(const std::string& root, const std::function<void(Document&&)>& on_document,
                       const std::function<void(const CorpusError&)>& on_error) {
    const fs::path base(root);
    for (const auto& rel : list_files(base)) {
        const std::string id = rel.generic_string();
        std::ifstream in(base / rel, std::ios::binary);
        if (!in) {
            on_error({id, "cannot open file"});
            continue;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        if (in.bad()) {
            on_error({id, "read failure"});
            continue;
        }
        std::string bytes = ss.str();
        if (bytes.find('\0') != std::string::npos) {
            on_error({id, "binary content"});
            continue;
        }
        on_document({id, utf8::sanitize(bytes)});
    }
}

CorpusReadResult read_corpus(const std::string& root) {
    CorpusReadResult r;
    for_each_document(
        root, [&](Document&& d) { r.documents.push_back(std::move(d)); },
        [&](const CorpusError& e) { r.errors.push_back(e); });
    return r;
}

nlohmann::ordered_json to_json(const ExtractionRecord& r) {
    nlohmann::ordered_json j;
    j["doc_id"] = r.doc_id;
    j["sentence_index"] = r.sentence_index;
    j["sentence_text"] = r.sentence_text;
    auto mqs = nlohmann::ordered_json::array();
    for (const auto& q : r.mqs) {
        nlohmann::ordered_json m;
        m["value"] = q.value;
        m["error"] = q.error ? nlohmann::ordered_json(*q.error) : nlohmann::ordered_json(nullptr);
        m["unit_key"] = q.unit_key;
        m["unit_display"] = q.unit_display;
        m["span"] = {q.span.begin, q.span.end};
        mqs.push_back(std::move(m));
    }
    j["mqs"] = std::move(mqs);
    auto props = nlohmann::ordered_json::array();
    for (const auto& p : r.properties) {
        nlohmann::ordered_json m;
        m["text"] = p.text;
        m["mq_index"] = p.mq_index;
        m["pattern_id"] = p.pattern_id;
        m["span"] = {p.span.begin, p.span.end};
        props.push_back(std::move(m));
    }
    j["properties"] = std::move(props);
    return j;
}

namespace {

Span span_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
        throw ParseError("span must be [begin, end]");
    Span s{j[0].get<std::size_t>(), j[1].get<std::size_t>()};
    if (s.end < s.begin) throw ParseError("reversed span");
    return s;
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

std::string string_field(const nlohmann::json& j, const char* name) {
    const auto& v = field(j, name);
    if (!v.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
    return v.get<std::string>();
}

}  // namespace

ExtractionRecord record_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("record must be an object");
    ExtractionRecord r;
    r.doc_id = string_field(j, "doc_id");
    const auto& idx = field(j, "sentence_index");
    if (!idx.is_number_unsigned()) throw ParseError("sentence_index must be a non-negative integer");
    r.sentence_index = idx.get<std::size_t>();
    r.sentence_text = string_field(j, "sentence_text");
    const auto& mqs = field(j, "mqs");
    if (!mqs.is_array()) throw ParseError("mqs must be an array");
    for (const auto& m : mqs) {
        RecordQuantity q;
        q.value = string_field(m, "value");
        if (!Decimal::parse(q.value)) throw ParseError("bad value '" + q.value + "'");
        const auto& err = field(m, "error");
        if (!err.is_null()) {
            if (!err.is_string()) throw ParseError("error must be a string or null");
            q.error = err.get<std::string>();
        }
        q.unit_key = string_field(m, "unit_key");
        q.unit_display = string_field(m, "unit_display");
        q.span = span_from_json(field(m, "span"));
        r.mqs.push_back(std::move(q));
    }
    const auto& props = field(j, "properties");
    if (!props.is_array()) throw ParseError("properties must be an array");
    for (const auto& m : props) {
        RecordProperty p;
        p.text = string_field(m, "text");
        const auto& mi = field(m, "mq_index");
        if (!mi.is_number_unsigned()) throw ParseError("mq_index must be a non-negative integer");
        p.mq_index = mi.get<std::size_t>();
        if (p.mq_index >= r.mqs.size()) throw ParseError("property refers to a missing mq");
        p.pattern_id = string_field(m, "pattern_id");
        p.span = span_from_json(field(m, "span"));
        r.properties.push_back(std::move(p));
    }
    return r;
}

std::string to_jsonl_line(const ExtractionRecord& record) { return to_json(record).dump(); }

std::vector<ExtractionRecord> read_records(std::istream& in) {
    std::vector<ExtractionRecord> out;
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back(record_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(e.what(), n);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), n);
        }
    }
    return out;
}

std::vector<ExtractionRecord> read_records_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open " + path);
    return read_records(in);
}

void PipelineStats::merge(const PipelineStats& o) {
    documents += o.documents;
    sentences += o.sentences;
    mqs += o.mqs;
    properties += o.properties;
    failed_sentences += o.failed_sentences;
    for (const auto& [k, v] : o.rejections) rejections[k] += v;
}

RecordQuantity to_record(const MeasuredQuantity& mq) {
    RecordQuantity q;
    q.value = mq.standardized.value.to_string();
    if (mq.standardized.error_abs) q.error = mq.standardized.error_abs->to_string();
    q.unit_key = mq.unit_key();
    q.unit_display = display_string(mq.unit);
    q.span = mq.span;
    return q;
}

Pipeline::Pipeline() : Pipeline(UnitCatalog::builtin(), Tagger::builtin(), PropertyExtractor{}) {}

Pipeline::Pipeline(const UnitCatalog& catalog, const Tagger& tagger, PropertyExtractor properties,
                   const RewriteTable& rewrite)
    : mqe_(catalog), tagger_(&tagger), mpe_(std::move(properties)), rewrite_(&rewrite) {}

SentenceAnalysis Pipeline::analyze_sentence(std::string_view sentence) const {
    SentenceAnalysis a;
    auto detailed = mqe_.extract_detailed(sentence);
    a.mqs = std::move(detailed.accepted);
    for (auto& [cand, reason] : detailed.rejected) a.rejections.push_back(std::move(reason));
    if (a.mqs.empty()) return a;
    std::vector<Span> spans;
    spans.reserve(a.mqs.size());
    for (const auto& m : a.mqs) spans.push_back(m.span);
    a.tagged = tagger_->tag(tokenize(sentence, spans));
    a.chunks = chunk_np(a.tagged, sentence);
    a.properties = mpe_.extract(a.tagged, a.chunks, sentence);
    return a;
}

SentenceAnalysis Pipeline::analyze_text(std::string_view raw) const {
    auto nt = normalize_chars(raw, *rewrite_);
    return analyze_sentence(nt.text);
}

std::vector<ExtractionRecord> Pipeline::run(const Document& doc, PipelineStats* stats) const {
    std::vector<ExtractionRecord> out;
    PipelineStats local;
    local.documents = 1;
    const auto nt = normalize_chars(doc.text, *rewrite_);
    const auto sentences = segment_sentences(nt);
    for (std::size_t s = 0; s < sentences.size(); ++s) {
        ++local.sentences;
        const std::string_view text = std::string_view(nt.text).substr(sentences[s].begin, sentences[s].size());
        SentenceAnalysis a;
        try {
            a = analyze_sentence(text);
        } catch (const std::exception&) {
            ++local.failed_sentences;
            continue;
        }
        for (const auto& r : a.rejections) ++local.rejections[std::string(to_string(r.rule_id))];
        if (a.mqs.empty()) continue;
        ExtractionRecord rec;
        rec.doc_id = doc.id;
        rec.sentence_index = s;
        rec.sentence_text = std::string(text);
        for (auto& mq : a.mqs) {
            mq.sentence_index = s;
            rec.mqs.push_back(to_record(mq));
        }
        for (const auto& p : a.properties) rec.properties.push_back({p.property_text, p.mq_index, p.pattern_id, p.np_span});
        local.mqs += rec.mqs.size();
        local.properties += rec.properties.size();
        out.push_back(std::move(rec));
    }
    if (stats) stats->merge(local);
    return out;
}

std::vector<ExtractionRecord> Pipeline::run_all(const std::vector<Document>& docs, unsigned threads,
                                                PipelineStats* stats) const {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, docs.size())));
    std::vector<std::vector<ExtractionRecord>> per_doc(docs.size());
    std::vector<PipelineStats> per_worker(threads);
    std::atomic<std::size_t> next{0};
    auto work = [&](unsigned w) {
        for (std::size_t i = next++; i < docs.size(); i = next++) per_doc[i] = run(docs[i], &per_worker[w]);
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    std::vector<ExtractionRecord> out;
    for (auto& v : per_doc)
        for (auto& r : v) out.push_back(std::move(r));
    if (stats)
        for (const auto& s : per_worker) stats->merge(s);
    return out;
}

std::vector<ExtractionRecord> run_pipeline(const Document& doc) {
    static const Pipeline pipeline;
    return pipeline.run(doc);
}

}  // namespace mqmine
