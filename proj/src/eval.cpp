#include "mqmine/eval.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

#include <boost/math/special_functions/beta.hpp>

#include "mqmine/error.hpp"

namespace mqmine {

std::string_view to_string(Extractor e) { return e == Extractor::MQE ? "MQE" : "MPE"; }

Extractor parse_extractor(std::string_view text) {
    std::string s(text);
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (s == "MQ" || s == "MQE") return Extractor::MQE;
    if (s == "MP" || s == "MPE") return Extractor::MPE;
    throw Error("unknown extractor '" + std::string(text) + "' (expected MQ or MP)");
}

Interval clopper_pearson(std::size_t k, std::size_t n, double confidence) {
    if (n == 0) throw RangeError("confidence interval needs at least one trial");
    if (k > n) throw RangeError("more successes than trials");
    if (!(confidence > 0 && confidence < 1)) throw RangeError("confidence must lie in (0, 1)");
    const double alpha = 1 - confidence;
    const auto kd = static_cast<double>(k);
    const auto nd = static_cast<double>(n);
    Interval ci;
    ci.lower = k == 0 ? 0.0 : boost::math::ibeta_inv(kd, nd - kd + 1, alpha / 2);
    ci.upper = k == n ? 1.0 : boost::math::ibeta_inv(kd + 1, nd - kd, 1 - alpha / 2);
    return ci;
}

namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json optional_interval(const std::optional<Interval>& v) {
    if (!v) return nullptr;
    return nlohmann::ordered_json::array({v->lower, v->upper});
}

std::string fmt(const std::optional<double>& v) {
    if (!v) return "undefined";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

std::string fmt(const std::optional<Interval>& v) {
    if (!v) return "-";
    char buf[64];
    std::snprintf(buf, sizeof buf, "[%.4f, %.4f]", v->lower, v->upper);
    return buf;
}

}  // namespace

nlohmann::ordered_json EvalReport::to_json() const {
    nlohmann::ordered_json j;
    j["extractor"] = std::string(to_string(extractor));
    j["n"] = n;
    j["tp"] = tp;
    j["fp"] = fp;
    j["fn"] = fn;
    j["precision"] = optional_number(precision);
    j["recall"] = optional_number(recall);
    j["precision_ci"] = optional_interval(precision_ci);
    j["recall_ci"] = optional_interval(recall_ci);
    return j;
}

std::string EvalReport::to_table() const {
    char buf[256];
    std::ostringstream os;
    std::snprintf(buf, sizeof buf, "%-10s %6s %6s %6s %6s\n", "extractor", "n", "tp", "fp", "fn");
    os << buf;
    std::snprintf(buf, sizeof buf, "%-10s %6zu %6zu %6zu %6zu\n", std::string(to_string(extractor)).c_str(), n, tp, fp,
                  fn);
    os << buf;
    std::snprintf(buf, sizeof buf, "%-10s %-10s %s\n", "precision", fmt(precision).c_str(), fmt(precision_ci).c_str());
    os << buf;
    std::snprintf(buf, sizeof buf, "%-10s %-10s %s\n", "recall", fmt(recall).c_str(), fmt(recall_ci).c_str());
    os << buf;
    return os.str();
}

SentencePrediction predict(const Pipeline& pipeline, std::string_view raw_sentence) {
    const auto nt = normalize_chars(raw_sentence, pipeline.rewrite_table());
    const auto a = pipeline.analyze_sentence(nt.text);
    SentencePrediction out;
    out.reserve(a.mqs.size());
    for (const auto& mq : a.mqs)
        out.push_back({mq.standardized.value.to_string(), mq.unit_key(), original_span(nt, mq.span), std::nullopt});
    for (const auto& p : a.properties) out[p.mq_index].property = normalize_property(p.property_text);
    return out;
}

std::vector<std::size_t> sample_sentences(const std::vector<std::string>& sentences, SamplePredicate predicate,
                                          std::size_t n, std::uint64_t seed, const Pipeline& pipeline) {
    std::vector<std::size_t> population;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
        const auto& s = sentences[i];
        bool keep;
        if (predicate == SamplePredicate::has_number)
            keep = std::any_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
        else
            keep = !pipeline.analyze_text(s).mqs.empty();
        if (keep) population.push_back(i);
    }
    if (population.size() < n)
        throw SizeError("population of " + std::to_string(population.size()) + " sentences is smaller than n=" +
                        std::to_string(n));
    Rng rng(seed);
    // Partial Fisher-Yates: the first n slots end up a uniform sample.
    for (std::size_t i = 0; i < n; ++i) {
        const auto j = i + rng.below(population.size() - i);
        std::swap(population[i], population[j]);
    }
    population.resize(n);
    return population;
}

namespace {

void finish(EvalReport& r) {
    if (r.tp + r.fp > 0) {
        r.precision = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp);
        r.precision_ci = clopper_pearson(r.tp, r.tp + r.fp);
    }
    if (r.tp + r.fn > 0) {
        r.recall = static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn);
        r.recall_ci = clopper_pearson(r.tp, r.tp + r.fn);
    }
}

}  // namespace

EvalReport score(const std::vector<std::vector<GoldQuantity>>& gold, const std::vector<SentencePrediction>& predicted,
                 Extractor mode) {
    if (gold.size() != predicted.size()) throw Error("gold and predicted differ in sentence count");
    EvalReport r;
    r.extractor = mode;
    r.n = gold.size();
    for (std::size_t s = 0; s < gold.size(); ++s) {
        const auto& g = gold[s];
        const auto& p = predicted[s];
        std::vector<int> match_of_gold(g.size(), -1);
        std::vector<bool> used(p.size(), false);
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = 0; j < p.size(); ++j) {
                if (used[j]) continue;
                if (p[j].value == g[i].value && p[j].unit_key == g[i].unit_key && p[j].span.overlaps(g[i].span)) {
                    used[j] = true;
                    match_of_gold[i] = static_cast<int>(j);
                    break;
                }
            }
        }
        if (mode == Extractor::MQE) {
            for (auto m : match_of_gold) (m >= 0 ? r.tp : r.fn)++;
            for (bool u : used)
                if (!u) ++r.fp;
            continue;
        }
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto m = match_of_gold[i];
            const std::optional<std::string>* pp = m >= 0 ? &p[static_cast<std::size_t>(m)].property : nullptr;
            const bool predicted_some = pp && pp->has_value();
            if (g[i].property && predicted_some && **pp == *g[i].property) {
                ++r.tp;
                continue;
            }
            if (g[i].property) ++r.fn;
            if (predicted_some) ++r.fp;
        }
        for (std::size_t j = 0; j < p.size(); ++j)
            if (!used[j] && p[j].property) ++r.fp;
    }
    finish(r);
    return r;
}

EvalReport evaluate(const std::vector<LabeledSentence>& sentences, Extractor mode, const Pipeline& pipeline) {
    std::vector<std::vector<GoldQuantity>> gold;
    std::vector<SentencePrediction> predicted;
    gold.reserve(sentences.size());
    predicted.reserve(sentences.size());
    for (const auto& s : sentences) {
        gold.push_back(s.gold_mqs);
        predicted.push_back(predict(pipeline, s.text));
    }
    return score(gold, predicted, mode);
}

bool meets_floors(const EvalReport& report, const Floors& floors) {
    if (floors.precision && (!report.precision || *report.precision < *floors.precision)) return false;
    if (floors.recall && (!report.recall || *report.recall < *floors.recall)) return false;
    return true;
}

}  // namespace mqmine
