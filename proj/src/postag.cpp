#include "mqmine/postag.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mqmine/error.hpp"
#include "mqmine/normalize.hpp"
#include "mqmine/resources.hpp"
#include "mqmine/utf8.hpp"

namespace mqmine {

namespace {

bool is_ascii_alnum(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

bool is_word_byte(std::string_view s, std::size_t i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c < 0x80) return is_ascii_alnum(s[i]);
    auto d = utf8::decode(s, i);
    return !is_eq_symbol(d.cp);
}

// Words that keep their trailing period.
constexpr std::array<std::string_view, 14> kAbbreviations = {
    "freq.", "approx.", "e.g.", "i.e.", "al.", "fig.", "eq.", "ref.", "no.", "etc.", "vs.", "cf.", "resp.", "temp.",
};

bool is_abbreviation(std::string_view w) {
    std::string lower(w);
    for (auto& c : lower)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return std::find(kAbbreviations.begin(), kAbbreviations.end(), lower) != kAbbreviations.end();
}

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (auto& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool is_noun(std::string_view tag) { return tag == "NN" || tag == "NNS" || tag == "NNP" || tag == "NNPS"; }

}  // namespace

std::vector<Token> tokenize(std::string_view s, const std::vector<Span>& mq_spans) {
    for (std::size_t k = 0; k < mq_spans.size(); ++k) {
        if (mq_spans[k].end > s.size() || mq_spans[k].begin > mq_spans[k].end)
            throw Error("mq span outside sentence");
        if (k > 0 && mq_spans[k].begin < mq_spans[k - 1].end) throw Error("overlapping mq spans");
    }

    std::vector<Token> out;
    std::size_t next_mq = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        if (next_mq < mq_spans.size() && i >= mq_spans[next_mq].begin) {
            const auto sp = mq_spans[next_mq];
            out.push_back({std::string(s.substr(sp.begin, sp.size())), TokenKind::mq, sp, static_cast<int>(next_mq)});
            i = std::max(i, sp.end);
            ++next_mq;
            continue;
        }
        const std::size_t limit = next_mq < mq_spans.size() ? mq_spans[next_mq].begin : s.size();
        if (is_space(s[i])) {
            ++i;
            continue;
        }
        const auto c = static_cast<unsigned char>(s[i]);
        if (c < 0x80 && !is_ascii_alnum(s[i])) {
            out.push_back({std::string(1, s[i]), TokenKind::punct, {i, i + 1}});
            ++i;
            continue;
        }
        if (c >= 0x80 && is_eq_symbol(utf8::decode(s, i).cp)) {
            const auto len = utf8::decode(s, i).length;
            out.push_back({std::string(s.substr(i, len)), TokenKind::symbol, {i, i + len}});
            i += len;
            continue;
        }

        // A run of letters, digits and non-ASCII code points, with '-', '.'
        // and '\'' allowed between two word characters.
        std::size_t j = i;
        bool has_ascii = false, has_alpha = false, all_digits = true;
        std::size_t codepoints = 0;
        while (j < limit) {
            if (is_word_byte(s, j)) {
                auto d = utf8::decode(s, j);
                if (d.cp < 0x80) {
                    has_ascii = true;
                    if (!(d.cp >= '0' && d.cp <= '9')) {
                        has_alpha = true;
                        all_digits = false;
                    }
                } else {
                    all_digits = false;
                }
                ++codepoints;
                j += d.length;
                continue;
            }
            if ((s[j] == '-' || s[j] == '.' || s[j] == '\'' || s[j] == ',') && j + 1 < limit && j > i &&
                is_word_byte(s, j + 1)) {
                // Commas only join digit groups.
                if (s[j] == ',' && !(std::isdigit(static_cast<unsigned char>(s[j - 1])) &&
                                     std::isdigit(static_cast<unsigned char>(s[j + 1]))))
                    break;
                if (s[j] == '.' && !has_alpha && !std::isdigit(static_cast<unsigned char>(s[j + 1]))) break;
                all_digits = all_digits && (s[j] == '.' || s[j] == ',');
                ++j;
                continue;
            }
            break;
        }
        if (j < limit && s[j] == '.' && is_abbreviation(s.substr(i, j + 1 - i))) ++j;

        TokenKind kind = TokenKind::word;
        if (!has_ascii && codepoints <= 2)
            kind = TokenKind::symbol;
        else if (all_digits)
            kind = TokenKind::number;
        out.push_back({std::string(s.substr(i, j - i)), kind, {i, j}});
        i = j;
    }
    return out;
}

const std::vector<std::string>& tag_inventory() {
    static const std::vector<std::string> tags = {
        "CC", "CD",  "DT",  "EX",  "FW",  "IN",  "JJ",  "JJR", "JJS", "LS",   "MD", "NN", "NNS", "NNP", "NNPS",
        "PDT", "POS", "PRP", "PRP$", "RB", "RBR", "RBS", "RP",  "SYM", "TO",  "UH", "VB", "VBD", "VBG", "VBN",
        "VBP", "VBZ", "WDT", "WP",  "WP$", "WRB", ",",   ".",   ":",   "(",    ")",  "``", "''",  "$",   "#",
        "MQ",  "EQ",
    };
    return tags;
}

bool is_known_tag(std::string_view tag) {
    const auto& inv = tag_inventory();
    return std::find(inv.begin(), inv.end(), tag) != inv.end();
}

namespace {

TransformationRule::Predicate parse_predicate(const std::string& name, std::size_t line) {
    using P = TransformationRule::Predicate;
    static const std::pair<std::string_view, P> names[] = {
        {"PREVTAG", P::prev_tag},           {"NEXTTAG", P::next_tag},           {"PREV2TAG", P::prev2_tag},
        {"NEXT2TAG", P::next2_tag},         {"PREV1OR2TAG", P::prev1or2_tag},   {"NEXT1OR2TAG", P::next1or2_tag},
        {"PREVWORD", P::prev_word},         {"NEXTWORD", P::next_word},         {"PREV1OR2WORD", P::prev1or2_word},
        {"NEXT1OR2WORD", P::next1or2_word}, {"SURROUNDTAG", P::surround_tag},   {"CURWORD", P::cur_word},
    };
    for (const auto& [key, p] : names)
        if (key == name) return p;
    throw ParseError("unknown rule predicate '" + name + "'", line);
}

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    // A '#' at column 0 starts a comment; inside a line it may be the '#' tag.
    if (hash == 0) return {};
    return line;
}

}  // namespace

Tagger Tagger::parse(std::string_view lexicon, std::string_view rules) {
    Tagger t;
    {
        std::istringstream in{std::string(lexicon)};
        std::string line;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            ++n;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            auto tab = line.find('\t');
            if (tab == std::string::npos || tab == 0) throw ParseError("expected 'word<TAB>tags'", n);
            std::string word = line.substr(0, tab);
            std::vector<std::string> tags;
            std::istringstream ts(line.substr(tab + 1));
            std::string tag;
            while (std::getline(ts, tag, ',')) {
                if (!is_known_tag(tag)) throw ParseError("unknown tag '" + tag + "'", n);
                tags.push_back(tag);
            }
            if (tags.empty()) throw ParseError("word without tags", n);
            t.lexicon_[word] = std::move(tags);
        }
    }
    {
        std::istringstream in{std::string(rules)};
        std::string line;
        std::size_t n = 0;
        while (std::getline(in, line)) {
            ++n;
            line = strip_comment(line);
            std::istringstream ls(line);
            std::vector<std::string> f;
            std::string w;
            while (ls >> w) f.push_back(w);
            if (f.empty()) continue;
            if (f.size() < 5 || f[2] != "WHEN") throw ParseError("expected 'FROM TO WHEN PREDICATE ARG'", n);
            TransformationRule r;
            r.from_tag = f[0];
            r.to_tag = f[1];
            if (!is_known_tag(r.from_tag) || !is_known_tag(r.to_tag)) throw ParseError("unknown tag in rule", n);
            r.predicate = parse_predicate(f[3], n);
            r.arg1 = f[4];
            if (r.predicate == TransformationRule::Predicate::surround_tag) {
                if (f.size() != 6) throw ParseError("SURROUNDTAG takes two tags", n);
                r.arg2 = f[5];
            } else if (f.size() != 5) {
                throw ParseError("too many rule arguments", n);
            }
            t.rules_.push_back(std::move(r));
        }
    }
    return t;
}

Tagger Tagger::load(const std::string& lexicon_path, const std::string& rules_path) {
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw LoadError("cannot open " + path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    return parse(slurp(lexicon_path), slurp(rules_path));
}

const Tagger& Tagger::builtin() {
    static const Tagger tagger = parse(resource("lexicon.tsv"), resource("tag_rules.txt"));
    return tagger;
}

const std::vector<std::string>& Tagger::lexicon_tags(std::string_view word) const {
    static const std::vector<std::string> none;
    if (auto it = lexicon_.find(std::string(word)); it != lexicon_.end()) return it->second;
    if (auto it = lexicon_.find(lowercase(word)); it != lexicon_.end()) return it->second;
    return none;
}

std::string Tagger::initial_tag(const Token& token, bool sentence_initial) const {
    switch (token.kind) {
    case TokenKind::mq:
        return "MQ";
    case TokenKind::number:
        return "CD";
    case TokenKind::symbol:
        return is_eq_symbol(utf8::decode(token.surface, 0).cp) ? "EQ" : "SYM";
    case TokenKind::punct: {
        const char c = token.surface[0];
        if (c == '=' || c == '~') return "EQ";
        switch (c) {
        case ',': return ",";
        case '.': case '!': case '?': return ".";
        case ':': case ';': return ":";
        case '(': case '[': case '{': return "(";
        case ')': case ']': case '}': return ")";
        case '"': return "''";
        case '$': return "$";
        case '#': return "#";
        case '%': return "NN";
        default: return "SYM";
        }
    }
    case TokenKind::word:
        break;
    }

    const auto& tags = lexicon_tags(token.surface);
    if (!tags.empty()) return tags.front();

    const std::string& w = token.surface;
    const bool capitalized = w[0] >= 'A' && w[0] <= 'Z';
    if (capitalized && !sentence_initial) return "NNP";
    const std::string lw = lowercase(w);
    if (std::any_of(lw.begin(), lw.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return capitalized ? "NNP" : "NN";
    if (ends_with(lw, "ly")) return "RB";
    if (ends_with(lw, "ing")) return "VBG";
    if (ends_with(lw, "ed")) return "VBN";
    if (ends_with(lw, "s") && !ends_with(lw, "ss") && !ends_with(lw, "us") && !ends_with(lw, "is")) return "NNS";
    return "NN";
}

bool Tagger::rule_applies(const TransformationRule& r, const std::vector<TaggedToken>& t, std::size_t i) const {
    using P = TransformationRule::Predicate;
    auto tag_at = [&](std::ptrdiff_t k) -> std::string_view {
        auto j = static_cast<std::ptrdiff_t>(i) + k;
        if (j < 0 || j >= static_cast<std::ptrdiff_t>(t.size())) return {};
        return t[static_cast<std::size_t>(j)].tag;
    };
    auto word_at = [&](std::ptrdiff_t k) -> std::string {
        auto j = static_cast<std::ptrdiff_t>(i) + k;
        if (j < 0 || j >= static_cast<std::ptrdiff_t>(t.size())) return {};
        return lowercase(t[static_cast<std::size_t>(j)].token.surface);
    };
    switch (r.predicate) {
    case P::prev_tag: return tag_at(-1) == r.arg1;
    case P::next_tag: return tag_at(1) == r.arg1;
    case P::prev2_tag: return tag_at(-2) == r.arg1;
    case P::next2_tag: return tag_at(2) == r.arg1;
    case P::prev1or2_tag: return tag_at(-1) == r.arg1 || tag_at(-2) == r.arg1;
    case P::next1or2_tag: return tag_at(1) == r.arg1 || tag_at(2) == r.arg1;
    case P::prev_word: return word_at(-1) == r.arg1;
    case P::next_word: return word_at(1) == r.arg1;
    case P::prev1or2_word: return word_at(-1) == r.arg1 || word_at(-2) == r.arg1;
    case P::next1or2_word: return word_at(1) == r.arg1 || word_at(2) == r.arg1;
    case P::surround_tag: return tag_at(-1) == r.arg1 && tag_at(1) == r.arg2;
    case P::cur_word: return word_at(0) == r.arg1;
    }
    return false;
}

std::vector<TaggedToken> Tagger::tag(const std::vector<Token>& tokens) const {
    std::vector<TaggedToken> out;
    out.reserve(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) out.push_back({tokens[i], initial_tag(tokens[i], i == 0)});

    // Each rule sees the tags as they stood before it ran.
    for (const auto& rule : rules_) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (out[i].tag != rule.from_tag || out[i].token.kind != TokenKind::word) continue;
            const auto& known = lexicon_tags(out[i].token.surface);
            if (!known.empty() && std::find(known.begin(), known.end(), rule.to_tag) == known.end()) continue;
            if (rule_applies(rule, out, i)) hits.push_back(i);
        }
        for (auto i : hits) out[i].tag = rule.to_tag;
    }
    return out;
}

std::vector<NPChunk> chunk_np(const std::vector<TaggedToken>& t, std::string_view sentence) {
    auto is_modifier = [&](std::size_t k) {
        const auto& tag = t[k].tag;
        if (tag == "CD" || tag == "JJ" || tag == "JJR" || tag == "JJS" || tag == "VBN") return true;
        if (t[k].token.surface == "%") return true;
        return tag == "MQ" && !t[k].token.surface.empty() && t[k].token.surface.back() == '%';
    };

    std::vector<NPChunk> chunks;
    std::size_t i = 0;
    while (i < t.size()) {
        std::size_t k = i;
        if (t[k].tag == "DT") ++k;
        while (k < t.size() && is_modifier(k)) ++k;
        std::size_t nouns = k;
        while (nouns < t.size() && is_noun(t[nouns].tag) && t[nouns].token.surface != "%") ++nouns;
        if (nouns == k) {
            ++i;
            continue;
        }
        NPChunk c;
        c.begin = i;
        c.end = nouns;
        c.head = nouns - 1;
        std::size_t first = t[i].tag == "DT" ? i + 1 : i;
        c.span = {t[first].token.span.begin, t[nouns - 1].token.span.end};
        c.property_text = std::string(sentence.substr(c.span.begin, c.span.size()));
        chunks.push_back(std::move(c));
        i = nouns;
    }
    return chunks;
}

}  // namespace mqmine
