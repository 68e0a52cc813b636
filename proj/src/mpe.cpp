#include "mqmine/mpe.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "mqmine/error.hpp"
#include "mqmine/resources.hpp"

namespace mqmine {

namespace {

class PatternParser {
public:
    PatternParser(std::string_view text, std::size_t line) : s_(text), line_(line) {}

    std::vector<PatternNode> parse() {
        auto seq = sequence();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return seq;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_); }

    void skip_space() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    std::vector<PatternNode> sequence() {
        std::vector<PatternNode> seq;
        for (;;) {
            skip_space();
            if (pos_ >= s_.size() || s_[pos_] == ')' || s_[pos_] == ']' || s_[pos_] == '|') break;
            seq.push_back(element());
        }
        return seq;
    }

    PatternNode element() {
        PatternNode n;
        char c = s_[pos_];
        if (c == '(' || c == '[') {
            const char close = c == '(' ? ')' : ']';
            ++pos_;
            n.kind = PatternNode::Kind::group;
            n.target = c == '[';
            n.alternatives.push_back(sequence());
            while (pos_ < s_.size() && s_[pos_] == '|') {
                if (n.target) fail("alternation is not allowed directly inside the target brackets");
                ++pos_;
                n.alternatives.push_back(sequence());
            }
            if (pos_ >= s_.size() || s_[pos_] != close) fail(std::string("missing '") + close + "'");
            ++pos_;
            if (n.target) return n;
        } else if (c == '\'') {
            auto end = s_.find('\'', pos_ + 1);
            if (end == std::string_view::npos || end == pos_ + 1) fail("unterminated literal");
            n.kind = PatternNode::Kind::literal;
            n.value = std::string(s_.substr(pos_ + 1, end - pos_ - 1));
            pos_ = end + 1;
        } else if (std::isupper(static_cast<unsigned char>(c))) {
            std::size_t b = pos_;
            while (pos_ < s_.size() && (std::isupper(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '$'))
                ++pos_;
            n.kind = PatternNode::Kind::atom;
            n.value = std::string(s_.substr(b, pos_ - b));
            if (n.value == "VB" && pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                n.value = "VP";
            }
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        quantifier(n);
        return n;
    }

    void quantifier(PatternNode& n) {
        if (pos_ >= s_.size()) return;
        switch (s_[pos_]) {
        case '?': n.min = 0; n.max = 1; ++pos_; return;
        case '*': n.min = 0; n.max = INT_MAX; ++pos_; return;
        case '+': n.min = 1; n.max = INT_MAX; ++pos_; return;
        case '{': {
            auto end = s_.find('}', pos_);
            if (end == std::string_view::npos) fail("missing '}'");
            std::string body(s_.substr(pos_ + 1, end - pos_ - 1));
            auto comma = body.find(',');
            try {
                if (comma == std::string::npos) {
                    n.min = n.max = std::stoi(body);
                } else {
                    n.min = std::stoi(body.substr(0, comma));
                    n.max = std::stoi(body.substr(comma + 1));
                }
            } catch (const std::exception&) {
                fail("bad repetition '{" + body + "}'");
            }
            if (n.min < 0 || n.max < n.min) fail("bad repetition bounds");
            pos_ = end + 1;
            return;
        }
        default:
            return;
        }
    }

    std::string_view s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

void count_nodes(const std::vector<PatternNode>& seq, int& targets, int& mqs) {
    for (const auto& n : seq) {
        if (n.kind == PatternNode::Kind::atom && n.value == "MQ") ++mqs;
        if (n.kind == PatternNode::Kind::group) {
            if (n.target) ++targets;
            for (const auto& alt : n.alternatives) count_nodes(alt, targets, mqs);
        }
    }
}

bool is_det(std::string_view w) {
    static const std::string_view dets[] = {"the", "a", "an", "this", "that", "these", "those",
                                            "each", "every", "some", "any", "all", "both"};
    return std::find(std::begin(dets), std::end(dets), w) != std::end(dets);
}

struct Unit {
    bool np = false;
    std::size_t chunk = 0;
    std::size_t token_begin = 0;
    std::size_t token_end = 0;
    std::string_view tag;
    std::string_view surface;
    Span span;
};

bool atom_matches(std::string_view atom, const Unit& u) {
    if (atom == "NP") return u.np;
    if (u.np) return false;
    const auto t = u.tag;
    if (atom == "RB") return t == "RB" || t == "RBR" || t == "RBS";
    if (atom == "JJ") return t == "JJ" || t == "JJR" || t == "JJS";
    if (atom == "VP") return t.substr(0, 2) == "VB" || t == "MD";
    if (atom == "DT") return t == "DT" || t == "PDT";
    return t == atom;
}

struct Capture {
    int mq = -1;
    int target_begin = -1;
    int target_end = -1;
};

class Matcher {
public:
    using Cont = std::function<void(std::size_t, const Capture&)>;

    explicit Matcher(const std::vector<Unit>& units) : units_(units) {}

    void seq(const std::vector<PatternNode>& nodes, std::size_t k, std::size_t pos, const Capture& cap,
             const Cont& cont) const {
        if (k == nodes.size()) {
            cont(pos, cap);
            return;
        }
        repeat(nodes[k], 0, pos, cap, [&](std::size_t p, const Capture& c) { seq(nodes, k + 1, p, c, cont); });
    }

private:
    void repeat(const PatternNode& n, int count, std::size_t pos, const Capture& cap, const Cont& cont) const {
        if (count >= n.min) cont(pos, cap);
        if (count < n.max) {
            once(n, pos, cap, [&](std::size_t p, const Capture& c) {
                if (p == pos) return;  // empty iteration
                repeat(n, count + 1, p, c, cont);
            });
        }
    }

    void once(const PatternNode& n, std::size_t pos, const Capture& cap, const Cont& cont) const {
        switch (n.kind) {
        case PatternNode::Kind::atom:
            if (pos < units_.size() && atom_matches(n.value, units_[pos])) {
                Capture c = cap;
                if (n.value == "MQ") c.mq = static_cast<int>(pos);
                cont(pos + 1, c);
            }
            return;
        case PatternNode::Kind::literal:
            if (pos < units_.size() && !units_[pos].np && units_[pos].surface == n.value) cont(pos + 1, cap);
            return;
        case PatternNode::Kind::group:
            for (const auto& alt : n.alternatives) {
                seq(alt, 0, pos, cap, [&](std::size_t p, const Capture& c) {
                    if (!n.target) {
                        cont(p, c);
                        return;
                    }
                    Capture t = c;
                    t.target_begin = static_cast<int>(pos);
                    t.target_end = static_cast<int>(p);
                    cont(p, t);
                });
            }
            return;
        }
    }

    const std::vector<Unit>& units_;
};

}  // namespace

std::vector<PropertyPattern> parse_patterns(std::string_view text) {
    std::vector<PropertyPattern> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected 'ID = pattern'", n);
        PropertyPattern p;
        std::istringstream ids(line.substr(0, eq));
        ids >> p.id;
        if (p.id.empty()) throw ParseError("missing pattern id", n);
        p.source = line.substr(eq + 1);
        p.source.erase(0, p.source.find_first_not_of(" \t"));
        p.elements = PatternParser(p.source, n).parse();
        int targets = 0, mqs = 0;
        count_nodes(p.elements, targets, mqs);
        if (targets != 1) throw ParseError("pattern " + p.id + " needs exactly one [target]", n);
        if (mqs != 1) throw ParseError("pattern " + p.id + " needs exactly one MQ", n);
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<PropertyPattern> load_patterns(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_patterns(ss.str());
}

const std::vector<PropertyPattern>& builtin_patterns() {
    static const std::vector<PropertyPattern> patterns = parse_patterns(resource("patterns.txt"));
    return patterns;
}

std::string normalize_property(std::string_view text) {
    std::vector<std::string> words;
    std::string cur;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            if (!cur.empty()) words.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    std::size_t k = 0;
    while (k + 1 < words.size() && is_det(words[k])) ++k;
    std::string out;
    for (; k < words.size(); ++k) {
        if (!out.empty()) out.push_back(' ');
        out += words[k];
    }
    return out;
}

PropertyExtractor::PropertyExtractor(std::vector<PropertyPattern> patterns, std::size_t window)
    : patterns_(std::move(patterns)), window_(window) {}

std::vector<MeasuredProperty> PropertyExtractor::extract(const std::vector<TaggedToken>& tagged,
                                                         const std::vector<NPChunk>& chunks,
                                                         std::string_view sentence) const {
    std::vector<Unit> units;
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < tagged.size();) {
            if (c < chunks.size() && chunks[c].begin == i) {
                Unit u;
                u.np = true;
                u.chunk = c;
                u.token_begin = chunks[c].begin;
                u.token_end = chunks[c].end;
                u.tag = "NP";
                u.span = chunks[c].span;
                units.push_back(u);
                i = chunks[c].end;
                ++c;
                continue;
            }
            Unit u;
            u.token_begin = i;
            u.token_end = i + 1;
            u.tag = tagged[i].tag;
            u.surface = tagged[i].token.surface;
            u.span = tagged[i].token.span;
            units.push_back(u);
            ++i;
        }
    }

    struct Claim {
        std::size_t pattern;
        Span span;
        std::string text;
    };
    std::vector<std::optional<Claim>> claims(units.size());

    Matcher matcher(units);
    std::vector<std::vector<Capture>> matches(patterns_.size());
    for (std::size_t p = 0; p < patterns_.size(); ++p) {
        for (std::size_t s = 0; s < units.size(); ++s) {
            matcher.seq(patterns_[p].elements, 0, s, Capture{},
                        [&](std::size_t, const Capture& c) { matches[p].push_back(c); });
        }
    }

    auto gap_tokens = [&](const Capture& c) -> std::size_t {
        const auto& mq = units[static_cast<std::size_t>(c.mq)];
        const auto& tb = units[static_cast<std::size_t>(c.target_begin)];
        const auto& te = units[static_cast<std::size_t>(c.target_end - 1)];
        if (c.target_end <= c.mq) return mq.token_begin - te.token_end;
        return tb.token_begin - mq.token_end;
    };

    for (std::size_t m = 0; m < units.size(); ++m) {
        if (units[m].np || units[m].tag != "MQ") continue;
        for (std::size_t p = 0; p < patterns_.size() && !claims[m]; ++p) {
            const Capture* best = nullptr;
            for (const auto& c : matches[p]) {
                if (c.mq != static_cast<int>(m) || c.target_begin < 0 || c.target_end <= c.target_begin) continue;
                if (gap_tokens(c) > window_) continue;
                if (!best) {
                    best = &c;
                    continue;
                }
                const bool before = c.target_end <= c.mq;
                // Nearest noun phrase: latest start on the left, earliest on the right.
                if (before ? c.target_begin > best->target_begin : c.target_begin < best->target_begin)
                    best = &c;
                else if (c.target_begin == best->target_begin && c.target_end < best->target_end)
                    best = &c;
            }
            if (!best) continue;
            const auto& first = units[static_cast<std::size_t>(best->target_begin)];
            const auto& last = units[static_cast<std::size_t>(best->target_end - 1)];
            Span sp{first.span.begin, last.span.end};
            claims[m] = Claim{p, sp, normalize_property(sentence.substr(sp.begin, sp.size()))};
        }
    }

    // A quantity left unclaimed inherits from a claimed one just before it
    // ("1.3 A/cm2 to 0.03 A/cm2", "8.90 ksi (61.4 MPa)").
    auto is_connector = [](const Unit& u) {
        return !u.np && (u.tag == "TO" || u.tag == "CC" || u.tag == "IN" || u.tag == "," || u.tag == ":" ||
                         u.tag == "(");
    };
    for (std::size_t m = 0; m < units.size(); ++m) {
        if (units[m].np || units[m].tag != "MQ" || claims[m]) continue;
        std::size_t j = m;
        int connectors = 0;
        bool paren = false;
        while (j > 0 && connectors < 2 && is_connector(units[j - 1])) {
            paren = paren || units[j - 1].tag == "(";
            --j;
            ++connectors;
        }
        if (connectors == 0 || j == 0) continue;
        const auto& prev = units[j - 1];
        if (prev.np || prev.tag != "MQ" || !claims[j - 1]) continue;
        claims[m] = claims[j - 1];
        if (paren) {
            for (std::size_t p = 0; p < patterns_.size(); ++p)
                if (patterns_[p].id == "P5") claims[m]->pattern = p;
        }
    }

    std::vector<MeasuredProperty> out;
    for (std::size_t m = 0; m < units.size(); ++m) {
        if (!claims[m]) continue;
        const auto& tok = tagged[units[m].token_begin].token;
        if (tok.mq_index < 0) continue;
        out.push_back({claims[m]->text, claims[m]->span, static_cast<std::size_t>(tok.mq_index),
                       patterns_[claims[m]->pattern].id});
    }
    return out;
}

}  // namespace mqmine
