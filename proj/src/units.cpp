#include "mqmine/units.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "mqmine/error.hpp"
#include "mqmine/resources.hpp"
#include "mqmine/utf8.hpp"

namespace mqmine {

namespace {

constexpr std::string_view kEmptySet = "∅";
constexpr std::size_t kMaxTerms = 6;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_list(std::string_view field) {
    std::vector<std::string> out;
    field = trim(field);
    if (field.empty() || field == kEmptySet) return out;
    std::size_t start = 0;
    while (start <= field.size()) {
        auto comma = field.find(',', start);
        if (comma == std::string_view::npos) comma = field.size();
        auto item = trim(field.substr(start, comma - start));
        if (!item.empty()) out.emplace_back(item);
        start = comma + 1;
    }
    return out;
}

char ascii_lower(char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; }

std::string lowercase(std::string_view s) {
    std::string out(s);
    for (auto& c : out) c = ascii_lower(c);
    return out;
}

bool is_ascii_alnum(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string ascii_symbol(std::string_view s) {
    std::string out;
    for (std::size_t i = 0; i < s.size();) {
        auto d = utf8::decode(s, i);
        switch (d.cp) {
            case U'µ': out += 'u'; break;
            case U'°': out += "deg"; break;
            case U'Ω': out += "Ohm"; break;
            case U'Å': out += "Ang"; break;
            default: out.append(s.substr(i, d.length));
        }
        i += d.length;
    }
    return out;
}

std::string render(const CompoundUnit& cu, bool ascii, std::string_view joiner) {
    std::string out;
    for (std::size_t i = 0; i < cu.terms.size(); ++i) {
        const auto& t = cu.terms[i];
        if (i) out += joiner;
        out += ascii ? ascii_symbol(t.prefix) : t.prefix;
        out += ascii ? ascii_symbol(t.symbol) : t.symbol;
        if (t.exponent != 1) {
            out += '^';
            out += std::to_string(t.exponent);
        }
    }
    return out;
}

struct Exponent {
    int value;
    std::size_t end;
    bool explicit_form;
};

char32_t superscript_digit(char32_t cp) {
    switch (cp) {
        case U'¹': return 1;
        case U'²': return 2;
        case U'³': return 3;
        case U'⁴': return 4;
        case U'⁵': return 5;
        case U'⁶': return 6;
        default: return 0;
    }
}

// A digit that is not followed by another digit, or by a decimal/grouping
// separator that continues a number.
bool lone_digit_at(std::string_view t, std::size_t i) {
    if (i >= t.size() || !is_digit(t[i])) return false;
    if (i + 1 < t.size()) {
        char n = t[i + 1];
        if (is_digit(n)) return false;
        if ((n == '.' || n == ',') && i + 2 < t.size() && is_digit(t[i + 2])) return false;
    }
    return true;
}

// Exponent alternatives after a unit term, most specific first. An empty
// result means no exponent is written.
std::vector<Exponent> exponents_at(std::string_view t, std::size_t q) {
    std::vector<Exponent> out;
    if (q >= t.size()) return out;
    const char c = t[q];
    if (c == '^') {
        std::size_t i = q + 1;
        int sign = 1;
        if (i < t.size() && (t[i] == '-' || t[i] == '+')) {
            sign = t[i] == '-' ? -1 : 1;
            ++i;
        }
        if (lone_digit_at(t, i) && t[i] >= '1' && t[i] <= '6') out.push_back({sign * (t[i] - '0'), i + 1, true});
        return out;
    }
    if (c == '-') {
        if (lone_digit_at(t, q + 1) && t[q + 1] >= '1' && t[q + 1] <= '6')
            out.push_back({-(t[q + 1] - '0'), q + 2, true});
        return out;
    }
    if (is_digit(c)) {
        if (lone_digit_at(t, q) && c >= '2' && c <= '6') out.push_back({c - '0', q + 1, true});
        return out;
    }
    if (c == ' ') {
        std::size_t i = q + 1;
        if (lone_digit_at(t, i) && t[i] >= '2' && t[i] <= '6' && (i + 1 >= t.size() || !is_ascii_alnum(t[i + 1])))
            out.push_back({t[i] - '0', i + 1, true});
        return out;
    }
    // Superscripts: optional ⁻/⁺ then one of ¹..⁶.
    auto d = utf8::decode(t, q);
    int sign = 1;
    std::size_t i = q;
    if (d.cp == U'⁻' || d.cp == U'⁺') {
        sign = d.cp == U'⁻' ? -1 : 1;
        i += d.length;
        if (i >= t.size()) return out;
        d = utf8::decode(t, i);
    }
    if (auto v = superscript_digit(d.cp)) {
        std::size_t end = i + d.length;
        if (end < t.size() && superscript_digit(utf8::decode(t, end).cp)) return out;
        out.push_back({sign * static_cast<int>(v), end, true});
    }
    return out;
}

struct Connector {
    std::size_t next;
    bool per;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool starts_with_ci(std::string_view t, std::size_t pos, std::string_view word) {
    if (pos + word.size() > t.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i)
        if (ascii_lower(t[pos + i]) != word[i]) return false;
    return true;
}

std::vector<Connector> connectors_at(std::string_view t, std::size_t q) {
    std::vector<Connector> out;
    if (q >= t.size()) return out;
    // \s?/\s?
    {
        std::size_t i = q;
        if (i < t.size() && is_space(t[i])) ++i;
        if (i < t.size() && t[i] == '/') {
            ++i;
            if (i < t.size() && is_space(t[i])) out.push_back({i + 1, true});
            out.push_back({i, true});
        }
    }
    if (is_space(t[q]) && starts_with_ci(t, q + 1, "per") && q + 4 < t.size() && is_space(t[q + 4]))
        out.push_back({q + 5, true});
    if (t.compare(q, 5, "-per-") == 0) out.push_back({q + 5, true});
    if (t[q] == '-' || t[q] == '*' || is_space(t[q])) out.push_back({q + 1, false});
    {
        std::size_t i = q;
        if (is_space(t[i])) ++i;
        if (i < t.size()) {
            auto d = utf8::decode(t, i);
            if (d.cp == U'×' || d.cp == U'·' || (d.cp == '*' && i != q)) {
                i += d.length;
                if (i < t.size() && is_space(t[i])) out.push_back({i + 1, false});
                out.push_back({i, false});
            }
        }
    }
    return out;
}

bool boundary_at(std::string_view t, std::size_t q) { return q >= t.size() || !is_ascii_alnum(t[q]); }

struct Search {
    std::string_view text;
    const UnitCatalog& catalog;

    std::vector<UnitTerm> terms;
    std::vector<TermSurface> surfaces;
    std::optional<bool> names;  // symbols and long names do not mix in one compound

    std::optional<UnitMatch> best;
    std::size_t best_end = 0;

    void consider(std::size_t end) {
        if (!best || end > best_end || (end == best_end && terms.size() < best->unit.terms.size())) {
            best = UnitMatch{CompoundUnit{terms}, Span{surfaces.front().span.begin, end}, surfaces};
            best_end = end;
        }
    }

    void term_at(std::size_t pos, bool per, bool juxtaposed) {
        if (terms.size() >= kMaxTerms || pos >= text.size()) return;
        std::vector<UnitCatalog::Candidate> cands;
        catalog.candidates_at(text, pos, cands);
        for (const auto& cand : cands) {
            const bool is_name = catalog.surface_is_name(cand.surface);
            if (names && *names != is_name) continue;
            const bool first = !names.has_value();
            if (first) names = is_name;
            const std::size_t q = pos + cand.length;
            const auto& def = catalog.surface_unit(cand.surface);
            auto options = exponents_at(text, q);
            // The spaced exponent form ("cm 2") is optional: also try without it.
            if (options.empty() || (q < text.size() && text[q] == ' ')) options.push_back({1, q, false});
            for (const auto& ex : options) {
                terms.push_back({catalog.surface_prefix(cand.surface), def.symbol, per ? -ex.value : ex.value});
                surfaces.push_back({Span{pos, ex.end}, juxtaposed, ex.explicit_form});
                if (boundary_at(text, ex.end)) consider(ex.end);
                for (const auto& conn : connectors_at(text, ex.end)) term_at(conn.next, conn.per, false);
                if (ex.end < text.size() && !is_space(text[ex.end])) term_at(ex.end, false, true);
                terms.pop_back();
                surfaces.pop_back();
            }
            if (first) names.reset();
        }
    }
};

}  // namespace

const std::vector<MetricPrefix>& metric_prefixes() {
    static const std::vector<MetricPrefix> prefixes = {
        {"f", "femto", -15}, {"p", "pico", -12}, {"n", "nano", -9}, {"µ", "micro", -6}, {"m", "milli", -3},
        {"c", "centi", -2},  {"d", "deci", -1},  {"da", "deca", 1}, {"h", "hecto", 2},  {"k", "kilo", 3},
        {"M", "mega", 6},    {"G", "giga", 9},   {"T", "tera", 12},
    };
    return prefixes;
}

bool UnitTerm::single_letter() const { return utf8::length(symbol) == 1; }

std::string canonical_string(const CompoundUnit& cu) { return render(cu, true, "."); }

std::string display_string(const CompoundUnit& cu) { return render(cu, false, "·"); }

UnitCatalog UnitCatalog::parse(std::istream& in) {
    UnitCatalog cat;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view view = trim(line);
        if (view.empty() || view.front() == '#') continue;
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            auto bar = view.find('|', start);
            fields.push_back(trim(view.substr(start, bar == std::string_view::npos ? view.npos : bar - start)));
            if (bar == std::string_view::npos) break;
            start = bar + 1;
        }
        if (fields.size() != 4) throw ParseError("expected 4 '|'-separated fields", lineno);
        UnitDef def;
        def.symbol = std::string(fields[0]);
        if (def.symbol.empty() || def.symbol == kEmptySet) throw ParseError("empty unit symbol", lineno);
        if (def.symbol.find_first_of(".^ /") != std::string::npos)
            throw ParseError("unit symbol may not contain '.', '^', '/' or spaces", lineno);
        def.long_names = split_list(fields[1]);
        def.prefixable = split_list(fields[2]);
        def.category = std::string(fields[3]);
        def.single_letter = utf8::length(def.symbol) == 1;
        for (const auto& p : def.prefixable) {
            const auto& all = metric_prefixes();
            if (std::none_of(all.begin(), all.end(), [&](const MetricPrefix& mp) { return mp.symbol == p; }))
                throw ParseError("unknown metric prefix '" + p + "'", lineno);
        }
        cat.add(std::move(def), lineno);
    }
    cat.build_surfaces();
    return cat;
}

UnitCatalog UnitCatalog::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse(in);
}

UnitCatalog UnitCatalog::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open unit catalog: " + path);
    return parse(in);
}

const UnitCatalog& UnitCatalog::builtin() {
    static const UnitCatalog catalog = parse(resource("units.catalog"));
    return catalog;
}

void UnitCatalog::add(UnitDef def, std::size_t line) {
    if (by_symbol_.count(def.symbol))
        throw ConflictError("line " + std::to_string(line) + ": duplicate unit symbol '" + def.symbol + "'");
    by_symbol_.emplace(def.symbol, defs_.size());
    defs_.push_back(std::move(def));
}

const UnitDef* UnitCatalog::find(std::string_view symbol) const {
    auto it = by_symbol_.find(std::string(symbol));
    return it == by_symbol_.end() ? nullptr : &defs_[it->second];
}

void UnitCatalog::build_surfaces() {
    surfaces_.clear();
    for (auto& b : exact_by_first_) b.clear();
    for (auto& b : folded_by_first_) b.clear();

    // Distinct (prefix, unit) terms must never share a surface or a key.
    std::unordered_map<std::string, std::pair<std::string, std::size_t>> exact_owner, key_owner;
    auto claim = [&](auto& owners, const std::string& text, const std::string& prefix, std::size_t unit) {
        auto [it, fresh] = owners.emplace(text, std::make_pair(prefix, unit));
        if (!fresh && it->second != std::make_pair(prefix, unit))
            throw ConflictError("unit surface '" + text + "' is ambiguous between '" + it->second.first +
                                defs_[it->second.second].symbol + "' and '" + prefix + defs_[unit].symbol + "'");
        return fresh;
    };

    for (std::size_t u = 0; u < defs_.size(); ++u) {
        const auto& def = defs_[u];
        std::vector<const MetricPrefix*> prefixes{nullptr};
        for (const auto& p : def.prefixable)
            for (const auto& mp : metric_prefixes())
                if (mp.symbol == p) prefixes.push_back(&mp);

        for (const auto* p : prefixes) {
            const std::string psym = p ? std::string(p->symbol) : std::string();
            claim(key_owner, ascii_symbol(psym + def.symbol), psym, u);
            std::vector<std::string> forms{psym + def.symbol};
            if (p && p->symbol == "µ") forms.push_back("u" + def.symbol);
            for (const auto& f : forms)
                if (claim(exact_owner, f, psym, u)) surfaces_.push_back({f, psym, u, false});
            for (const auto& name : def.long_names) {
                std::vector<std::string> names{lowercase(name)};
                if (p) {
                    names = {std::string(p->name) + lowercase(name)};
                    if (p->symbol == "da") names.push_back("deka" + lowercase(name));
                }
                for (auto& n : names) surfaces_.push_back({std::move(n), psym, u, true});
            }
        }
    }
    for (std::size_t i = 0; i < surfaces_.size(); ++i) {
        const auto first = static_cast<unsigned char>(surfaces_[i].text[0]);
        (surfaces_[i].fold_case ? folded_by_first_ : exact_by_first_)[first].push_back(i);
    }
}

void UnitCatalog::candidates_at(std::string_view text, std::size_t pos, std::vector<Candidate>& out) const {
    out.clear();
    if (pos >= text.size()) return;
    for (auto idx : exact_by_first_[static_cast<unsigned char>(text[pos])]) {
        const auto& s = surfaces_[idx].text;
        if (text.compare(pos, s.size(), s) == 0) out.push_back({s.size(), idx});
    }
    for (auto idx : folded_by_first_[static_cast<unsigned char>(ascii_lower(text[pos]))]) {
        const auto& s = surfaces_[idx].text;
        // Long names are whole words: they may not run into further letters
        // except through an exponent or connector, which the caller handles.
        if (starts_with_ci(text, pos, s)) out.push_back({s.size(), idx});
    }
    std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) { return a.length > b.length; });
    out.erase(std::unique(out.begin(), out.end(),
                          [&](const Candidate& a, const Candidate& b) {
                              return a.length == b.length && surfaces_[a.surface].unit == surfaces_[b.surface].unit &&
                                     surfaces_[a.surface].prefix == surfaces_[b.surface].prefix;
                          }),
              out.end());
}

std::optional<UnitMatch> match_unit(std::string_view text, std::size_t pos, const UnitCatalog& catalog) {
    if (pos >= text.size() || catalog.empty()) return std::nullopt;
    Search search{text, catalog, {}, {}, std::nullopt, std::nullopt, 0};
    search.term_at(pos, false, false);
    return search.best;
}

}  // namespace mqmine
