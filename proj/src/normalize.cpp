#include "mqmine/normalize.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "mqmine/error.hpp"
#include "mqmine/resources.hpp"
#include "mqmine/utf8.hpp"

namespace mqmine {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::string parse_hex_bytes(std::string_view field, std::size_t line) {
    std::string out;
    std::size_t i = 0;
    while (i < field.size()) {
        if (field[i] == ' ') {
            ++i;
            continue;
        }
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(field.data() + i, field.data() + std::min(field.size(), i + 2), value, 16);
        if (ec != std::errc{} || ptr != field.data() + std::min(field.size(), i + 2))
            throw ParseError("bad hex byte in source sequence", line);
        out.push_back(static_cast<char>(value));
        i += 2;
    }
    if (out.empty()) throw ParseError("empty source sequence", line);
    return out;
}

char32_t parse_codepoint(std::string_view field, std::size_t line) {
    if (field.size() > 2 && (field[0] == 'U' || field[0] == 'u') && field[1] == '+') field.remove_prefix(2);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value, 16);
    if (ec != std::errc{} || ptr != field.data() + field.size() || value > 0x10FFFF)
        throw ParseError("bad target code point", line);
    return static_cast<char32_t>(value);
}

bool is_control(char32_t cp) {
    if (cp == '\t' || cp == '\n' || cp == '\r') return false;
    return cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F);
}

// One rewriting pass. Returns true when anything changed.
bool rewrite_pass(std::string_view in, const RewriteTable& table, std::string& out, std::vector<Span>& map) {
    out.clear();
    map.clear();
    out.reserve(in.size());
    map.reserve(in.size());
    bool changed = false;
    for (std::size_t i = 0; i < in.size();) {
        if (const auto* rule = table.match(in, i)) {
            const std::size_t before = out.size();
            utf8::append(out, rule->target);
            map.insert(map.end(), out.size() - before, Span{i, i + rule->source.size()});
            i += rule->source.size();
            changed = true;
            continue;
        }
        const auto d = utf8::decode(in, i);
        if (d.valid && is_control(d.cp)) {
            out.push_back(' ');
            map.push_back({i, i + d.length});
            changed = true;
        } else {
            out.append(in.substr(i, d.length));
            map.insert(map.end(), d.length, Span{i, i + d.length});
        }
        i += d.length;
    }
    return changed;
}

}  // namespace

bool NormalizedText::is_eq(std::size_t pos) const {
    return std::binary_search(eq_positions.begin(), eq_positions.end(), pos);
}

RewriteTable RewriteTable::parse(std::istream& in) {
    RewriteTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = line;
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const auto tab = view.find('\t');
        if (tab == std::string_view::npos) throw ParseError("expected <hex bytes> TAB <code point>", lineno);
        auto source = parse_hex_bytes(trim(view.substr(0, tab)), lineno);
        auto target = parse_codepoint(trim(view.substr(tab + 1)), lineno);
        for (const auto& r : table.rules_)
            if (r.source == source) throw ConflictError("duplicate rewrite source on line " + std::to_string(lineno));
        table.rules_.push_back({std::move(source), target});
    }

    // Resolve targets that are themselves sources (e.g. mojibake -> en dash -> '-').
    for (auto& rule : table.rules_) {
        for (std::size_t hops = 0; hops < table.rules_.size(); ++hops) {
            const auto encoded = utf8::encode(rule.target);
            auto it = std::find_if(table.rules_.begin(), table.rules_.end(),
                                   [&](const Rule& r) { return r.source == encoded; });
            if (it == table.rules_.end() || it->target == rule.target) break;
            rule.target = it->target;
        }
    }
    table.index();
    return table;
}

RewriteTable RewriteTable::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

RewriteTable RewriteTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open rewrite table: " + path);
    return parse(in);
}

const RewriteTable& RewriteTable::builtin() {
    static const RewriteTable table = parse(resource("rewrite_table.tsv"));
    return table;
}

void RewriteTable::index() {
    by_first_byte_.assign(256, {});
    for (std::size_t i = 0; i < rules_.size(); ++i)
        by_first_byte_[static_cast<unsigned char>(rules_[i].source[0])].push_back(i);
    for (auto& bucket : by_first_byte_)
        std::stable_sort(bucket.begin(), bucket.end(),
                         [&](std::size_t a, std::size_t b) { return rules_[a].source.size() > rules_[b].source.size(); });
}

const RewriteTable::Rule* RewriteTable::match(std::string_view text, std::size_t pos) const {
    if (by_first_byte_.empty()) return nullptr;
    for (auto idx : by_first_byte_[static_cast<unsigned char>(text[pos])]) {
        const auto& src = rules_[idx].source;
        if (text.compare(pos, src.size(), src) == 0) return &rules_[idx];
    }
    return nullptr;
}

bool is_eq_symbol(char32_t cp) {
    switch (cp) {
        case U'=':
        case U'~':
        case U'≈':
        case U'≃':
        case U'≅':
        case U'≒':
        case U'∼':
        case U'≡':
            return true;
        default:
            return false;
    }
}

NormalizedText normalize_chars(std::string_view raw, const RewriteTable& table) {
    NormalizedText nt;
    nt.raw_size = raw.size();

    std::string current;
    std::vector<Span> map;
    bool changed = rewrite_pass(raw, table, current, map);

    // Rewrites can assemble a new source sequence from their neighbours
    // (e.g. "Â" followed by a folded '°'); iterate to a fixpoint. Every
    // pass after the first only fires multi-byte rules, so length shrinks.
    std::string next;
    std::vector<Span> next_map;
    while (changed) {
        changed = rewrite_pass(current, table, next, next_map);
        if (!changed) break;
        for (auto& s : next_map) s = Span{map[s.begin].begin, map[s.end - 1].end};
        current.swap(next);
        map.swap(next_map);
    }

    nt.text = std::move(current);
    nt.offset_map = std::move(map);
    for (std::size_t i = 0; i < nt.text.size();) {
        const auto d = utf8::decode(nt.text, i);
        if (d.valid && is_eq_symbol(d.cp)) nt.eq_positions.push_back(i);
        i += d.length;
    }
    return nt;
}

Span original_span(const NormalizedText& nt, Span span) {
    if (span.begin > span.end || span.end > nt.text.size())
        throw RangeError("span out of bounds of normalized text");
    if (span.empty()) {
        const std::size_t at = span.begin < nt.offset_map.size() ? nt.offset_map[span.begin].begin : nt.raw_size;
        return {at, at};
    }
    return {nt.offset_map[span.begin].begin, nt.offset_map[span.end - 1].end};
}

}  // namespace mqmine
