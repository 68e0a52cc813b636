#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mqmine/corpus.hpp"
#include "mqmine/decimal.hpp"
#include "mqmine/index.hpp"
#include "mqmine/mpe.hpp"
#include "mqmine/synth.hpp"

// Brute-force search over extraction records: every query is answered by a
// linear scan, with its own tokenizer and value parsing.
namespace oracle {

inline std::vector<std::string> words(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : s) {
        if (std::isalnum(c) || c >= 0x80) {
            cur.push_back(static_cast<char>(std::tolower(c)));
        } else if (!cur.empty()) {
            out.push_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

struct Entry {
    std::string unit;
    double value;
    std::string exact;
    std::optional<std::string> property;
};

struct Doc {
    std::string id;
    std::map<std::string, int> tf;
    int length = 0;
    std::vector<Entry> entries;
};

struct Answer {
    std::map<std::string, double> scores;  // doc id -> BM25 (0 without terms)
    std::map<std::string, std::size_t> units;
    std::map<std::string, std::size_t> properties;
    std::optional<std::string> min_exact;
    std::optional<std::string> max_exact;
    std::vector<std::pair<std::string, std::size_t>> top_terms;
};

class LinearIndex {
public:
    explicit LinearIndex(const std::vector<mqmine::ExtractionRecord>& records) {
        std::map<std::string, std::size_t> pos;
        for (const auto& r : records) {
            auto [it, fresh] = pos.emplace(r.doc_id, docs_.size());
            if (fresh) docs_.push_back({r.doc_id, {}, 0, {}});
            auto& d = docs_[it->second];
            for (const auto& w : words(r.sentence_text)) {
                ++d.tf[w];
                ++d.length;
            }
            std::vector<std::optional<std::string>> props(r.mqs.size());
            for (const auto& p : r.properties)
                if (!props[p.mq_index]) props[p.mq_index] = mqmine::normalize_property(p.text);
            for (std::size_t i = 0; i < r.mqs.size(); ++i)
                d.entries.push_back({r.mqs[i].unit_key, std::strtod(r.mqs[i].value.c_str(), nullptr), r.mqs[i].value,
                                     props[i]});
        }
        double total = 0;
        for (const auto& d : docs_) total += d.length;
        avg_ = docs_.empty() ? 0 : total / docs_.size();
    }

    const std::vector<Doc>& docs() const { return docs_; }

    static bool passes(const Entry& e, const mqmine::Query& q, bool with_property) {
        if (q.unit && e.unit != *q.unit) return false;
        if (q.vmin && e.value < *q.vmin) return false;
        if (q.vmax && e.value > *q.vmax) return false;
        if (with_property && q.property) {
            if (!e.property || *e.property != mqmine::normalize_property(*q.property)) return false;
        }
        return true;
    }

    Answer answer(const mqmine::Query& q) const {
        std::vector<std::string> terms;
        for (const auto& t : q.terms)
            for (auto& w : words(t)) terms.push_back(w);
        std::map<std::string, std::size_t> df;
        for (const auto& d : docs_)
            for (const auto& [w, n] : d.tf) ++df[w];
        const auto& stop = mqmine::default_stopwords();

        Answer a;
        std::map<std::string, std::size_t> term_docs;
        for (const auto& d : docs_) {
            bool ok = std::all_of(terms.begin(), terms.end(), [&](const std::string& t) { return d.tf.count(t) > 0; });
            if (ok && (q.unit || q.property))
                ok = std::any_of(d.entries.begin(), d.entries.end(), [&](const Entry& e) { return passes(e, q, true); });
            if (!ok) continue;
            double score = 0;
            for (const auto& t : terms) {
                const double tf = d.tf.at(t), n = static_cast<double>(docs_.size()), f = df.at(t);
                score += std::log(1 + (n - f + 0.5) / (f + 0.5)) * tf * 2.2 /
                         (tf + 1.2 * (0.25 + 0.75 * d.length / avg_));
            }
            a.scores[d.id] = score;
            std::set<std::string> du, dp;
            for (const auto& e : d.entries) {
                if (e.unit != "%") du.insert(e.unit);
                if (e.property && passes(e, q, false)) dp.insert(*e.property);
                if (q.unit && passes(e, q, true)) {
                    auto less = [](const std::string& x, const std::string& y) {
                        return *mqmine::Decimal::parse(x) < *mqmine::Decimal::parse(y);
                    };
                    if (!a.min_exact || less(e.exact, *a.min_exact)) a.min_exact = e.exact;
                    if (!a.max_exact || less(*a.max_exact, e.exact)) a.max_exact = e.exact;
                }
            }
            for (const auto& u : du) ++a.units[u];
            for (const auto& p : dp) ++a.properties[p];
            for (const auto& [w, n] : d.tf) {
                const bool letter = std::any_of(w.begin(), w.end(), [](char c) {
                    return std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0x80;
                });
                if (w.size() >= 2 && letter && !std::binary_search(stop.begin(), stop.end(), w)) ++term_docs[w];
            }
        }
        a.top_terms.assign(term_docs.begin(), term_docs.end());
        std::sort(a.top_terms.begin(), a.top_terms.end(), [](const auto& x, const auto& y) {
            return x.second != y.second ? x.second > y.second : x.first < y.first;
        });
        if (a.top_terms.size() > q.top_k) a.top_terms.resize(q.top_k);
        return a;
    }

private:
    std::vector<Doc> docs_;
    double avg_ = 0;
};

inline std::map<std::string, std::size_t> as_map(const mqmine::FacetCounts& f) { return {f.begin(), f.end()}; }

/// Empty when the index agrees with the linear scan; the first difference otherwise.
inline std::string check_query(const mqmine::Index& index, const LinearIndex& lin, mqmine::Query q) {
    q.page = 1;
    q.page_size = index.size() + 1;
    const auto got = index.search(q);
    const auto want = lin.answer(q);
    if (got.total != want.scores.size())
        return "total " + std::to_string(got.total) + " vs " + std::to_string(want.scores.size());
    if (got.hits.size() != want.scores.size()) return "hit count";
    double prev = INFINITY;
    for (const auto& h : got.hits) {
        auto it = want.scores.find(h.doc_id);
        if (it == want.scores.end()) return "unexpected hit " + h.doc_id;
        if (std::abs(it->second - h.score) > 1e-9) return "score of " + h.doc_id;
        if (h.score > prev + 1e-12) return "hits not in score order";
        prev = h.score;
    }
    if (as_map(got.units) != want.units) return "unit facets";
    if (as_map(got.properties) != want.properties) return "property facets";
    const auto gmin = got.min ? std::optional<std::string>(got.min->exact) : std::nullopt;
    const auto gmax = got.max ? std::optional<std::string>(got.max->exact) : std::nullopt;
    if (gmin != want.min_exact || gmax != want.max_exact) return "range bounds";
    if (got.top_terms != want.top_terms) return "top terms";
    return {};
}

/// Randomized queries drawn from what the records contain, plus some misses.
inline std::vector<mqmine::Query> random_queries(const LinearIndex& lin, std::uint64_t seed, std::size_t n) {
    mqmine::Rng rng(seed);
    std::vector<std::string> vocab, units, props;
    {
        std::set<std::string> v, u, p;
        for (const auto& d : lin.docs()) {
            for (const auto& [w, c] : d.tf) v.insert(w);
            for (const auto& e : d.entries) {
                u.insert(e.unit);
                if (e.property) p.insert(*e.property);
            }
        }
        vocab.assign(v.begin(), v.end());
        units.assign(u.begin(), u.end());
        props.assign(p.begin(), p.end());
    }
    std::vector<mqmine::Query> out;
    while (out.size() < n) {
        mqmine::Query q;
        const auto nterms = rng.below(3);
        for (std::uint64_t i = 0; i < nterms; ++i)
            q.terms.push_back(rng.chance(0.05) ? "qqxyzzy" : rng.pick(vocab));
        if (rng.chance(0.6)) {
            q.unit = rng.chance(0.05) ? "furlong" : rng.pick(units);
            std::vector<double> values;
            for (const auto& d : lin.docs())
                for (const auto& e : d.entries)
                    if (e.unit == *q.unit) values.push_back(e.value);
            if (!values.empty() && rng.chance(0.6)) {
                double a = rng.pick(values), b = rng.pick(values);
                if (a > b) std::swap(a, b);
                if (rng.chance(0.8)) q.vmin = a;
                if (rng.chance(0.8)) q.vmax = b;
            }
        }
        if (rng.chance(0.3) && !props.empty()) q.property = rng.pick(props);
        q.top_k = 1 + rng.below(15);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace oracle
