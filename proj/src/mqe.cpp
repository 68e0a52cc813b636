#include "mqmine/mqe.hpp"

#include <algorithm>
#include <array>

#include "mqmine/error.hpp"

namespace mqmine {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || is_upper(c); }
bool is_alnum(char c) { return is_digit(c) || is_alpha(c); }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out)
        if (is_upper(c)) c = static_cast<char>(c - 'A' + 'a');
    return out;
}

// Abbreviations whose trailing period never ends a sentence.
constexpr std::array<std::string_view, 27> kAbbreviations = {
    "fig",  "figs", "eq",  "eqs",  "eqn", "ref", "refs", "no",   "nos",  "vol", "pp",   "p",    "sec", "sect",
    "approx", "vs", "cf",  "ca",   "dr",  "mr",  "mrs",  "prof", "al",   "e.g", "i.e",  "freq", "resp",
};

bool is_abbreviation(std::string_view word) {
    if (word.size() == 1 && is_upper(word[0])) return true;  // initials
    const auto w = lower(word);
    return std::find(kAbbreviations.begin(), kAbbreviations.end(), w) != kAbbreviations.end();
}

Span trim_span(std::string_view t, Span s) {
    while (s.begin < s.end && is_space(t[s.begin])) ++s.begin;
    while (s.end > s.begin && is_space(t[s.end - 1])) --s.end;
    return s;
}

// Token ending right before `end` (exclusive), skipping whitespace.
std::string_view previous_token(std::string_view t, std::size_t end) {
    std::size_t e = end;
    while (e > 0 && is_space(t[e - 1])) --e;
    std::size_t b = e;
    while (b > 0 && !is_space(t[b - 1])) --b;
    return t.substr(b, e - b);
}

std::string context_word(std::string_view token) {
    while (!token.empty() && (token.front() == '(' || token.front() == '[')) token.remove_prefix(1);
    while (!token.empty() && (token.back() == '.' || token.back() == ',' || token.back() == ':' ||
                              token.back() == ';' || token.back() == '('))
        token.remove_suffix(1);
    return lower(token);
}

bool is_number_start(std::string_view s, std::size_t i) {
    const char c = s[i];
    const char prev = i > 0 ? s[i - 1] : ' ';
    const char prev2 = i > 1 ? s[i - 2] : ' ';
    if (is_digit(c)) {
        if (is_alnum(prev) || prev == '^' || prev == '_') return false;
        if (prev == '.' && is_digit(prev2)) return false;
        if ((prev == '-' || prev == '+') && is_alpha(prev2)) return false;
        return true;
    }
    const bool next_digit = i + 1 < s.size() && is_digit(s[i + 1]);
    const bool next_point = i + 2 < s.size() && s[i + 1] == '.' && is_digit(s[i + 2]);
    if (c == '+' || c == '-') {
        if (!(next_digit || next_point)) return false;
        return !(is_alnum(prev) || prev == ')' || prev == '.' || prev == '-' || prev == '^');
    }
    if (c == '.') return next_digit && !is_alnum(prev) && prev != '.';
    return false;
}

}  // namespace

std::string_view to_string(RejectRule rule) {
    switch (rule) {
        case RejectRule::context: return "context";
        case RejectRule::repetition: return "repetition";
        case RejectRule::dash: return "dash";
    }
    return "unknown";
}

std::vector<Span> segment_sentences(std::string_view t) {
    std::vector<Span> out;
    std::size_t start = 0;
    auto emit = [&](std::size_t end) {
        auto s = trim_span(t, {start, end});
        if (!s.empty()) out.push_back(s);
    };
    for (std::size_t i = 0; i < t.size(); ++i) {
        const char c = t[i];
        if (c == '\n') {
            std::size_t j = i + 1, newlines = 1;
            while (j < t.size() && is_space(t[j])) newlines += t[j++] == '\n';
            if (newlines >= 2) {
                emit(i);
                start = j;
                i = j - 1;
            }
            continue;
        }
        if (c != '.' && c != '!' && c != '?') continue;
        if (i + 1 >= t.size() || !is_space(t[i + 1])) continue;
        std::size_t j = i + 1;
        while (j < t.size() && is_space(t[j])) ++j;
        if (j >= t.size() || !(is_upper(t[j]) || is_digit(t[j]))) continue;
        if (c == '.') {
            std::size_t b = i;
            while (b > start && !is_space(t[b - 1]) && t[b - 1] != '(') --b;
            if (is_abbreviation(t.substr(b, i - b))) continue;
        }
        emit(i + 1);
        start = j;
        i = j - 1;
    }
    emit(t.size());
    return out;
}

std::vector<Span> segment_sentences(const NormalizedText& text) { return segment_sentences(text.text); }

const std::vector<std::string>& default_context_blocklist() {
    static const std::vector<std::string> words = {"Table", "Figure", "Fig", "Section", "Eq",
                                                   "Equation", "Ref", "page", "p."};
    return words;
}

QuantityExtractor::QuantityExtractor(const UnitCatalog& catalog, std::vector<std::string> context_blocklist)
    : catalog_(&catalog) {
    for (const auto& w : context_blocklist) blocklist_.push_back(context_word(w));
}

std::optional<Candidate> QuantityExtractor::assemble(std::string_view s, std::size_t pos) const {
    auto number = parse_number(s, pos);
    if (!number) return std::nullopt;

    Candidate cand;
    auto& mq = cand.mq;
    if (s[pos] == '+' || s[pos] == '-') mq.literal.sign = s[pos];
    mq.literal.mantissa = number->value.abs();
    mq.number_span = number->span;

    std::size_t begin = pos;
    std::size_t j = number->span.end;
    if (auto err = parse_error(s, j)) {
        mq.literal.error = err->value;
        j = err->span.end;
        // "(1.3999 ± 0.003) × 10^-5": the closing parenthesis sits between
        // the error and the exponent.
        std::size_t open = pos;
        while (open > 0 && s[open - 1] == ' ') --open;
        std::size_t close = j;
        while (close < s.size() && s[close] == ' ') ++close;
        if (open > 0 && s[open - 1] == '(' && close < s.size() && s[close] == ')') {
            begin = open - 1;
            j = close + 1;
        }
    }
    if (auto sci = parse_sci(s, j)) {
        mq.literal.exponent = sci->value;
        j = sci->span.end;
    }

    std::size_t k = j;
    if (k < s.size() && s[k] == '-') {
        cand.dash_joined = true;
        ++k;
    } else {
        for (int n = 0; n < 2 && k < s.size() && is_space(s[k]); ++n) ++k;
    }
    auto unit = match_unit(s, k, *catalog_);
    if (!unit) return std::nullopt;

    try {
        mq.standardized = standardize(mq.literal);
    } catch (const OverflowError&) {
        return std::nullopt;
    }
    mq.unit = unit->unit;
    mq.unit_span = unit->span;
    mq.span = {begin, unit->span.end};
    cand.unit_match = std::move(*unit);
    return cand;
}

std::optional<RejectionReason> QuantityExtractor::post_filter(const Candidate& cand, std::string_view s) const {
    const auto word = context_word(previous_token(s, cand.mq.span.begin));
    if (!word.empty() && std::find(blocklist_.begin(), blocklist_.end(), word) != blocklist_.end())
        return RejectionReason{RejectRule::context, "preceded by '" + word + "'"};

    const auto& terms = cand.unit_match.unit.terms;
    const auto& surf = cand.unit_match.surfaces;
    for (std::size_t b = 0; b < terms.size();) {
        std::size_t e = b + 1;
        while (e < terms.size() && surf[e].juxtaposed) ++e;
        if (e - b >= 2) {
            bool single = true, repeated = false;
            for (std::size_t i = b; i < e; ++i) {
                single = single && terms[i].single_letter() && !surf[i].explicit_exponent;
                for (std::size_t k = b; k < i; ++k) repeated = repeated || terms[k].symbol == terms[i].symbol;
            }
            if (single && (e - b >= 3 || repeated))
                return RejectionReason{RejectRule::repetition, "run of single-letter units"};
        }
        b = e;
    }

    if (cand.dash_joined && !terms.empty() && terms.front().prefix.empty() && terms.front().single_letter())
        return RejectionReason{RejectRule::dash, "dash before single-letter unit '" + terms.front().symbol + "'"};
    return std::nullopt;
}

QuantityExtractor::Result QuantityExtractor::extract_detailed(std::string_view s) const {
    Result result;
    std::size_t i = 0;
    while (i < s.size()) {
        if (is_number_start(s, i)) {
            if (auto cand = assemble(s, i)) {
                if (auto reason = post_filter(*cand, s)) {
                    i = cand->mq.number_span.end;
                    result.rejected.emplace_back(std::move(*cand), std::move(*reason));
                } else {
                    i = cand->mq.span.end;
                    result.accepted.push_back(std::move(cand->mq));
                }
                continue;
            }
            i = parse_number(s, i)->span.end;
            continue;
        }
        if (is_alnum(s[i])) {
            while (i < s.size() && is_alnum(s[i])) ++i;
            continue;
        }
        ++i;
    }
    return result;
}

std::vector<MeasuredQuantity> QuantityExtractor::extract(std::string_view sentence) const {
    return extract_detailed(sentence).accepted;
}

}  // namespace mqmine
