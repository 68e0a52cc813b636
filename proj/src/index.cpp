#include "mqmine/index.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "mqmine/decimal.hpp"
#include "mqmine/error.hpp"
#include "mqmine/resources.hpp"

namespace fs = std::filesystem;

namespace mqmine {

namespace {

bool term_byte(unsigned char c) { return std::isalnum(c) || c >= 0x80; }

struct TermSpan {
    std::string term;
    std::size_t begin;
    std::size_t end;
};

std::vector<TermSpan> term_spans(std::string_view text) {
    std::vector<TermSpan> out;
    for (std::size_t i = 0; i < text.size();) {
        if (!term_byte(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        const auto b = i;
        std::string t;
        while (i < text.size() && term_byte(static_cast<unsigned char>(text[i]))) {
            t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i]))));
            ++i;
        }
        out.push_back({std::move(t), b, i});
    }
    return out;
}

bool has_letter(std::string_view t) {
    return std::any_of(t.begin(), t.end(), [](char c) {
        const auto u = static_cast<unsigned char>(c);
        return std::isalpha(u) || u >= 0x80;
    });
}

void sort_facets(FacetCounts& f) {
    std::sort(f.begin(), f.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
}

FacetCounts to_facets(const std::map<std::string, std::size_t>& counts) {
    FacetCounts f(counts.begin(), counts.end());
    sort_facets(f);
    return f;
}

bool decimal_less(const std::string& a, const std::string& b) {
    auto da = Decimal::parse(a), db = Decimal::parse(b);
    if (da && db) return *da < *db;
    return a < b;
}

}  // namespace

std::vector<std::string> analyze_terms(std::string_view text) {
    std::vector<std::string> out;
    for (auto& t : term_spans(text)) out.push_back(std::move(t.term));
    return out;
}

const std::vector<std::string>& default_stopwords() {
    static const std::vector<std::string> words = [] {
        std::vector<std::string> w;
        std::istringstream in{std::string(resource("stopwords.txt"))};
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            w.push_back(line);
        }
        std::sort(w.begin(), w.end());
        return w;
    }();
    return words;
}

void Query::validate() const {
    if ((vmin || vmax) && !unit) throw QueryError("a value range requires a unit filter");
    if ((vmin && !std::isfinite(*vmin)) || (vmax && !std::isfinite(*vmax)))
        throw QueryError("range bounds must be finite numbers");
    if (page == 0) throw QueryError("page numbers start at 1");
}

bool entry_matches(const NumericEntry& e, const Query& q) {
    if (q.unit && e.unit_key != *q.unit) return false;
    if (q.vmin && e.value < *q.vmin) return false;
    if (q.vmax && e.value > *q.vmax) return false;
    if (q.property && (!e.property || *e.property != normalize_property(*q.property))) return false;
    return true;
}

nlohmann::ordered_json SearchResult::to_json() const {
    nlohmann::ordered_json j;
    j["total"] = total;
    auto hits_json = nlohmann::ordered_json::array();
    for (const auto& h : hits) {
        nlohmann::ordered_json hj;
        hj["doc_id"] = h.doc_id;
        hj["score"] = h.score;
        hj["snippets"] = h.snippets;
        hits_json.push_back(std::move(hj));
    }
    j["hits"] = std::move(hits_json);
    auto facet_object = [](const FacetCounts& f) {
        auto o = nlohmann::ordered_json::object();
        for (const auto& [k, n] : f) o[k] = n;
        return o;
    };
    j["facets"]["units"] = facet_object(units);
    j["facets"]["properties"] = facet_object(properties);
    auto bound = [](const std::optional<ValueBound>& b) {
        return b ? nlohmann::ordered_json(b->value) : nlohmann::ordered_json(nullptr);
    };
    auto exact = [](const std::optional<ValueBound>& b) {
        return b ? nlohmann::ordered_json(b->exact) : nlohmann::ordered_json(nullptr);
    };
    j["range"]["min"] = bound(min);
    j["range"]["max"] = bound(max);
    j["range"]["min_exact"] = exact(min);
    j["range"]["max_exact"] = exact(max);
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [t, n] : top_terms) terms.push_back({{"term", t}, {"count", n}});
    j["top_terms"] = std::move(terms);
    return j;
}

Index Index::build(const std::vector<ExtractionRecord>& records) {
    Index idx;
    std::unordered_map<std::string, std::uint32_t> doc_of;
    std::set<std::pair<std::string, std::size_t>> seen;
    std::vector<std::uint32_t> next_position;
    for (const auto& r : records) {
        if (!seen.emplace(r.doc_id, r.sentence_index).second)
            throw ConflictError("duplicate record for " + r.doc_id + " sentence " + std::to_string(r.sentence_index));
        auto [it, fresh] = doc_of.emplace(r.doc_id, static_cast<std::uint32_t>(idx.docs_.size()));
        if (fresh) {
            idx.docs_.push_back({r.doc_id, {}, {}, 0});
            next_position.push_back(0);
        }
        const auto d = it->second;
        auto& doc = idx.docs_[d];
        doc.sentences.push_back(r.sentence_text);
        for (const auto& t : analyze_terms(r.sentence_text)) {
            auto& plist = idx.postings_[t];
            if (plist.empty() || plist.back().doc != d) plist.push_back({d, {}});
            plist.back().positions.push_back(next_position[d]++);
        }
        doc.length = next_position[d];
        std::vector<std::optional<std::string>> props(r.mqs.size());
        for (const auto& p : r.properties)
            if (p.mq_index < props.size() && !props[p.mq_index]) props[p.mq_index] = normalize_property(p.text);
        for (std::size_t i = 0; i < r.mqs.size(); ++i) {
            const auto& q = r.mqs[i];
            auto dec = Decimal::parse(q.value);
            if (!dec) throw ParseError("bad value '" + q.value + "' in " + r.doc_id);
            doc.entries.push_back(
                {q.unit_key, dec->to_double(), q.value, props[i], static_cast<std::uint32_t>(doc.sentences.size() - 1)});
        }
    }
    // Postings of one term can arrive out of document order when a
    // document's records are not contiguous.
    for (auto& [term, plist] : idx.postings_) {
        std::stable_sort(plist.begin(), plist.end(), [](const Posting& a, const Posting& b) { return a.doc < b.doc; });
        std::vector<Posting> merged;
        for (auto& p : plist) {
            if (!merged.empty() && merged.back().doc == p.doc) {
                auto& pos = merged.back().positions;
                pos.insert(pos.end(), p.positions.begin(), p.positions.end());
            } else {
                merged.push_back(std::move(p));
            }
        }
        plist = std::move(merged);
    }
    std::set<std::string> units;
    for (const auto& d : idx.docs_)
        for (const auto& e : d.entries) units.insert(e.unit_key);
    idx.unit_table_.assign(units.begin(), units.end());
    idx.numeric_.assign(idx.unit_table_.size(), {});
    for (std::uint32_t d = 0; d < idx.docs_.size(); ++d) {
        const auto& entries = idx.docs_[d].entries;
        for (std::uint32_t e = 0; e < entries.size(); ++e) {
            const auto u = std::lower_bound(idx.unit_table_.begin(), idx.unit_table_.end(), entries[e].unit_key) -
                           idx.unit_table_.begin();
            idx.numeric_[static_cast<std::size_t>(u)].push_back({entries[e].value, d, e});
        }
    }
    for (auto& list : idx.numeric_)
        std::sort(list.begin(), list.end(), [](const NumericPosting& a, const NumericPosting& b) {
            if (a.value != b.value) return a.value < b.value;
            return a.doc != b.doc ? a.doc < b.doc : a.entry < b.entry;
        });
    idx.finalize();
    return idx;
}

void Index::finalize() {
    double total = 0;
    for (const auto& d : docs_) total += d.length;
    avg_length_ = docs_.empty() ? 0 : total / static_cast<double>(docs_.size());
}

std::vector<std::uint32_t> Index::candidates(const Query& q) const {
    std::vector<std::uint32_t> set;
    bool restricted = false;
    std::vector<std::string> terms;
    for (const auto& raw : q.terms)
        for (auto& t : analyze_terms(raw)) terms.push_back(std::move(t));
    if (!terms.empty()) {
        restricted = true;
        // Intersect from the rarest term.
        std::vector<const std::vector<Posting>*> lists;
        for (const auto& t : terms) {
            auto it = postings_.find(t);
            if (it == postings_.end()) return {};
            lists.push_back(&it->second);
        }
        std::sort(lists.begin(), lists.end(), [](auto* a, auto* b) { return a->size() < b->size(); });
        for (const auto& p : *lists[0]) set.push_back(p.doc);
        for (std::size_t i = 1; i < lists.size() && !set.empty(); ++i) {
            std::vector<std::uint32_t> next;
            auto it = lists[i]->begin();
            for (auto d : set) {
                it = std::lower_bound(it, lists[i]->end(), d, [](const Posting& p, std::uint32_t v) { return p.doc < v; });
                if (it != lists[i]->end() && it->doc == d) next.push_back(d);
            }
            set = std::move(next);
        }
    }
    if (q.unit || q.property) {
        std::vector<std::uint32_t> filtered;
        if (q.unit) {
            auto u = std::lower_bound(unit_table_.begin(), unit_table_.end(), *q.unit);
            if (u == unit_table_.end() || *u != *q.unit) return {};
            const auto& list = numeric_[static_cast<std::size_t>(u - unit_table_.begin())];
            auto lo = q.vmin ? std::lower_bound(list.begin(), list.end(), *q.vmin,
                                                [](const NumericPosting& p, double v) { return p.value < v; })
                             : list.begin();
            auto hi = q.vmax ? std::upper_bound(list.begin(), list.end(), *q.vmax,
                                                [](double v, const NumericPosting& p) { return v < p.value; })
                             : list.end();
            for (auto it = lo; it < hi; ++it)
                if (entry_matches(docs_[it->doc].entries[it->entry], q)) filtered.push_back(it->doc);
            std::sort(filtered.begin(), filtered.end());
            filtered.erase(std::unique(filtered.begin(), filtered.end()), filtered.end());
        } else {
            for (std::uint32_t d = 0; d < docs_.size(); ++d)
                for (const auto& e : docs_[d].entries)
                    if (entry_matches(e, q)) {
                        filtered.push_back(d);
                        break;
                    }
        }
        if (restricted) {
            std::vector<std::uint32_t> both;
            std::set_intersection(set.begin(), set.end(), filtered.begin(), filtered.end(), std::back_inserter(both));
            set = std::move(both);
        } else {
            set = std::move(filtered);
        }
        restricted = true;
    }
    if (!restricted) {
        set.resize(docs_.size());
        for (std::uint32_t d = 0; d < docs_.size(); ++d) set[d] = d;
    }
    return set;
}

double Index::bm25(std::uint32_t doc, const std::vector<std::string>& terms) const {
    constexpr double k1 = 1.2, b = 0.75;
    const auto n = static_cast<double>(docs_.size());
    const double norm = avg_length_ > 0 ? static_cast<double>(docs_[doc].length) / avg_length_ : 0;
    double score = 0;
    for (const auto& t : terms) {
        auto it = postings_.find(t);
        if (it == postings_.end()) continue;
        const auto& list = it->second;
        auto p = std::lower_bound(list.begin(), list.end(), doc, [](const Posting& x, std::uint32_t v) { return x.doc < v; });
        if (p == list.end() || p->doc != doc) continue;
        const auto df = static_cast<double>(list.size());
        const auto tf = static_cast<double>(p->positions.size());
        const double idf = std::log(1 + (n - df + 0.5) / (df + 0.5));
        score += idf * tf * (k1 + 1) / (tf + k1 * (1 - b + b * norm));
    }
    return score;
}

namespace {

std::string highlight(std::string_view sentence, const std::set<std::string>& terms) {
    std::string out;
    std::size_t last = 0;
    for (const auto& s : term_spans(sentence)) {
        if (!terms.count(s.term)) continue;
        out.append(sentence.substr(last, s.begin - last));
        out += "<em>";
        out.append(sentence.substr(s.begin, s.end - s.begin));
        out += "</em>";
        last = s.end;
    }
    out.append(sentence.substr(last));
    return out;
}

}  // namespace

FacetCounts Index::top_terms(const Query& filters, std::size_t k) const {
    if (k == 0) return {};
    Query q = filters;
    q.validate();
    const auto set = candidates(q);
    const auto& stop = default_stopwords();
    std::unordered_set<std::uint32_t> in_set(set.begin(), set.end());
    FacetCounts counts;
    for (const auto& [term, list] : postings_) {
        if (term.size() < 2 || !has_letter(term) || std::binary_search(stop.begin(), stop.end(), term)) continue;
        std::size_t n = 0;
        if (in_set.size() == docs_.size())
            n = list.size();
        else
            for (const auto& p : list) n += in_set.count(p.doc);
        if (n) counts.emplace_back(term, n);
    }
    sort_facets(counts);
    if (counts.size() > k) counts.resize(k);
    return counts;
}

FacetCounts Index::unit_facets() const { return search(Query{}).units; }

SearchResult Index::search(const Query& q) const {
    q.validate();
    SearchResult r;
    const auto set = candidates(q);
    r.total = set.size();

    std::vector<std::string> terms;
    for (const auto& raw : q.terms)
        for (auto& t : analyze_terms(raw)) terms.push_back(std::move(t));
    std::vector<std::pair<double, std::uint32_t>> ranked;
    ranked.reserve(set.size());
    for (auto d : set) ranked.emplace_back(terms.empty() ? 0.0 : bm25(d, terms), d);
    const auto first = std::min(ranked.size(), (q.page - 1) * q.page_size);
    const auto last = std::min(ranked.size(), first + q.page_size);
    auto order = [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return docs_[a.second].doc_id < docs_[b.second].doc_id;
    };
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(last), ranked.end(), order);
    const std::set<std::string> term_set(terms.begin(), terms.end());
    for (auto i = first; i < last; ++i) {
        const auto& doc = docs_[ranked[i].second];
        Hit h{doc.doc_id, ranked[i].first, {}};
        for (const auto& s : doc.sentences) {
            if (h.snippets.size() == 3) break;
            const auto spans = term_spans(s);
            const bool relevant =
                std::any_of(spans.begin(), spans.end(), [&](const TermSpan& t) { return term_set.count(t.term) > 0; });
            if (relevant) h.snippets.push_back(highlight(s, term_set));
        }
        if (h.snippets.empty() && !doc.sentences.empty()) {
            std::uint32_t s = 0;
            for (const auto& e : doc.entries)
                if (entry_matches(e, q)) {
                    s = e.sentence;
                    break;
                }
            h.snippets.push_back(doc.sentences[s]);
        }
        r.hits.push_back(std::move(h));
    }

    Query unit_range = q;
    unit_range.property.reset();
    std::map<std::string, std::size_t> units, props;
    for (auto d : set) {
        std::set<std::string_view> du, dp;
        for (const auto& e : docs_[d].entries) {
            if (e.unit_key != "%") du.insert(e.unit_key);
            if (e.property && entry_matches(e, unit_range)) dp.insert(*e.property);
            if (q.unit && entry_matches(e, q)) {
                if (!r.min || e.value < r.min->value || (e.value == r.min->value && decimal_less(e.exact, r.min->exact)))
                    r.min = ValueBound{e.value, e.exact};
                if (!r.max || e.value > r.max->value || (e.value == r.max->value && decimal_less(r.max->exact, e.exact)))
                    r.max = ValueBound{e.value, e.exact};
            }
        }
        for (auto u : du) ++units[std::string(u)];
        for (auto p : dp) ++props[std::string(p)];
    }
    r.units = to_facets(units);
    r.properties = to_facets(props);
    r.top_terms = top_terms(q, q.top_k);
    return r;
}

// Persistence: little-endian fixed-width integers, IEEE doubles, and
// length-prefixed UTF-8 strings.

namespace {

constexpr std::uint32_t kFormatVersion = 1;

class Writer {
public:
    void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
    }
    void f64(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        u64(bits);
    }
    void str(std::string_view s) {
        u32(static_cast<std::uint32_t>(s.size()));
        buf_.append(s);
    }
    void magic(const char (&m)[5]) { buf_.append(m, 4); }

    void save(const fs::path& path) const {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        out.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
        if (!out) throw Error("cannot write " + path.string());
    }

private:
    std::string buf_;
};

class Reader {
public:
    explicit Reader(const fs::path& path) : name_(path.filename().string()) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw LoadError("missing index file " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        buf_ = ss.str();
    }

    std::uint8_t u8() {
        need(1);
        return static_cast<std::uint8_t>(buf_[pos_++]);
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<std::uint8_t>(buf_[pos_++])) << (8 * i);
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<std::uint8_t>(buf_[pos_++])) << (8 * i);
        return v;
    }
    double f64() {
        const auto bits = u64();
        double v;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }
    std::string str() {
        const auto n = u32();
        need(n);
        std::string s = buf_.substr(pos_, n);
        pos_ += n;
        return s;
    }
    void magic(const char (&m)[5]) {
        need(4);
        if (buf_.compare(pos_, 4, m, 4) != 0) throw LoadError(name_ + ": not an mqmine index file");
        pos_ += 4;
    }
    /// Guards counts read from the file before they size an allocation.
    std::size_t count(std::size_t min_bytes_each) {
        const auto n = u32();
        if (min_bytes_each && n > (buf_.size() - pos_) / min_bytes_each) fail();
        return n;
    }
    void finish() const {
        if (pos_ != buf_.size()) throw LoadError(name_ + ": trailing bytes");
    }

private:
    void need(std::size_t n) const {
        if (buf_.size() - pos_ < n) fail();
    }
    [[noreturn]] void fail() const { throw LoadError(name_ + ": truncated or corrupt"); }

    std::string name_;
    std::string buf_;
    std::size_t pos_ = 0;
};

}  // namespace

void Index::persist(const std::string& dir) const {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir)) throw Error("cannot create index directory " + dir);
    const fs::path base(dir);

    Writer manifest;
    manifest.magic("MQIX");
    manifest.u32(kFormatVersion);
    manifest.u64(docs_.size());
    manifest.u64(postings_.size());
    manifest.u32(static_cast<std::uint32_t>(unit_table_.size()));
    for (const auto& u : unit_table_) manifest.str(u);
    manifest.save(base / "manifest.bin");

    Writer docs;
    docs.magic("MQDC");
    for (const auto& d : docs_) {
        docs.str(d.doc_id);
        docs.u32(d.length);
        docs.u32(static_cast<std::uint32_t>(d.sentences.size()));
        for (const auto& s : d.sentences) docs.str(s);
        docs.u32(static_cast<std::uint32_t>(d.entries.size()));
        for (const auto& e : d.entries) {
            docs.u32(static_cast<std::uint32_t>(
                std::lower_bound(unit_table_.begin(), unit_table_.end(), e.unit_key) - unit_table_.begin()));
            docs.f64(e.value);
            docs.str(e.exact);
            docs.u8(e.property ? 1 : 0);
            if (e.property) docs.str(*e.property);
            docs.u32(e.sentence);
        }
    }
    docs.save(base / "docs.bin");

    Writer postings;
    postings.magic("MQPS");
    for (const auto& [term, list] : postings_) {
        postings.str(term);
        postings.u32(static_cast<std::uint32_t>(list.size()));
        for (const auto& p : list) {
            postings.u32(p.doc);
            postings.u32(static_cast<std::uint32_t>(p.positions.size()));
            for (auto pos : p.positions) postings.u32(pos);
        }
    }
    postings.save(base / "postings.bin");

    Writer numeric;
    numeric.magic("MQNM");
    for (const auto& list : numeric_) {
        numeric.u32(static_cast<std::uint32_t>(list.size()));
        for (const auto& p : list) {
            numeric.f64(p.value);
            numeric.u32(p.doc);
            numeric.u32(p.entry);
        }
    }
    numeric.save(base / "numeric.bin");
}

Index Index::load(const std::string& dir) {
    const fs::path base(dir);
    if (!fs::is_directory(base)) throw LoadError("not an index directory: " + dir);
    Index idx;

    Reader manifest(base / "manifest.bin");
    manifest.magic("MQIX");
    const auto version = manifest.u32();
    if (version != kFormatVersion)
        throw LoadError("index format version " + std::to_string(version) + " is not supported (expected " +
                        std::to_string(kFormatVersion) + ")");
    const auto n_docs = manifest.u64();
    const auto n_terms = manifest.u64();
    const auto n_units = manifest.count(4);
    for (std::size_t i = 0; i < n_units; ++i) idx.unit_table_.push_back(manifest.str());
    manifest.finish();
    if (!std::is_sorted(idx.unit_table_.begin(), idx.unit_table_.end()))
        throw LoadError("manifest.bin: unit table out of order");

    Reader docs(base / "docs.bin");
    docs.magic("MQDC");
    for (std::uint64_t d = 0; d < n_docs; ++d) {
        IndexDoc doc;
        doc.doc_id = docs.str();
        doc.length = docs.u32();
        const auto ns = docs.count(4);
        for (std::size_t i = 0; i < ns; ++i) doc.sentences.push_back(docs.str());
        const auto ne = docs.count(21);
        for (std::size_t i = 0; i < ne; ++i) {
            NumericEntry e;
            const auto u = docs.u32();
            if (u >= idx.unit_table_.size()) throw LoadError("docs.bin: unit id out of range");
            e.unit_key = idx.unit_table_[u];
            e.value = docs.f64();
            e.exact = docs.str();
            if (docs.u8()) e.property = docs.str();
            e.sentence = docs.u32();
            if (e.sentence >= doc.sentences.size()) throw LoadError("docs.bin: sentence id out of range");
            doc.entries.push_back(std::move(e));
        }
        idx.docs_.push_back(std::move(doc));
    }
    docs.finish();

    Reader postings(base / "postings.bin");
    postings.magic("MQPS");
    for (std::uint64_t t = 0; t < n_terms; ++t) {
        auto term = postings.str();
        const auto n = postings.count(8);
        std::vector<Posting> list;
        list.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            Posting p{postings.u32(), {}};
            if (p.doc >= idx.docs_.size()) throw LoadError("postings.bin: document id out of range");
            const auto np = postings.count(4);
            p.positions.reserve(np);
            for (std::size_t k = 0; k < np; ++k) p.positions.push_back(postings.u32());
            list.push_back(std::move(p));
        }
        idx.postings_.emplace(std::move(term), std::move(list));
    }
    postings.finish();

    Reader numeric(base / "numeric.bin");
    numeric.magic("MQNM");
    idx.numeric_.resize(idx.unit_table_.size());
    for (auto& list : idx.numeric_) {
        const auto n = numeric.count(16);
        list.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            NumericPosting p{numeric.f64(), numeric.u32(), numeric.u32()};
            if (p.doc >= idx.docs_.size() || p.entry >= idx.docs_[p.doc].entries.size())
                throw LoadError("numeric.bin: entry out of range");
            list.push_back(p);
        }
    }
    numeric.finish();
    idx.finalize();
    return idx;
}

}  // namespace mqmine
