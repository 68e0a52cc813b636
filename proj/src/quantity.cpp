#include "mqmine/quantity.hpp"

#include <string>

#include "mqmine/error.hpp"
#include "mqmine/utf8.hpp"

namespace mqmine {

namespace {

constexpr int kMaxExponent = 308;

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alnum(char c) { return is_digit(c) || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool digit_at(std::string_view t, std::size_t i) { return i < t.size() && is_digit(t[i]); }

std::size_t digit_run(std::string_view t, std::size_t i) {
    std::size_t n = 0;
    while (i + n < t.size() && is_digit(t[i + n])) ++n;
    return n;
}

std::size_t skip_spaces(std::string_view t, std::size_t i, std::size_t max) {
    std::size_t n = 0;
    while (n < max && i + n < t.size() && t[i + n] == ' ') ++n;
    return i + n;
}

// "10" followed by a caret or sign reads as a scientific-notation base, so a
// fractional digit group may not continue into it.
bool looks_like_sci_base(std::string_view t, std::size_t i, std::size_t run) {
    if (run != 2 || t.compare(i, 2, "10") != 0) return false;
    const std::size_t n = i + 2;
    return n < t.size() && (t[n] == '^' || t[n] == '-' || t[n] == '+');
}

Decimal digits_only(std::string_view t, Span s) {
    std::string buf;
    buf.reserve(s.size());
    for (std::size_t i = s.begin; i < s.end; ++i)
        if (t[i] != ',' && t[i] != ' ') buf.push_back(t[i]);
    return *Decimal::parse(buf);
}

}  // namespace

std::optional<Parsed<Decimal>> parse_number(std::string_view text, std::size_t pos) {
    std::size_t i = pos;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;

    if (digit_at(text, i)) {
        const std::size_t lead = digit_run(text, i);
        std::size_t end = i + lead;
        if (lead <= 3 && end < text.size() && (text[end] == ',' || text[end] == ' ')) {
            const char sep = text[end];
            while (end < text.size() && text[end] == sep) {
                const std::size_t g = digit_run(text, end + 1);
                const bool ok = sep == ',' ? (g == 2 || g == 3) : g == 3;
                if (!ok) break;
                end += 1 + g;
            }
        }
        if (end + 1 < text.size() && text[end] == '.' && is_digit(text[end + 1])) {
            end += 1 + digit_run(text, end + 1);
            while (end + 1 < text.size() && text[end] == ' ' && is_digit(text[end + 1])) {
                const std::size_t g = digit_run(text, end + 1);
                if (looks_like_sci_base(text, end + 1, g)) break;
                end += 1 + g;
            }
        }
        Span span{pos, end};
        auto value = digits_only(text, Span{i, end});
        if (text[pos] == '-') value = value.negated();
        return Parsed<Decimal>{value, span};
    }

    if (i + 1 < text.size() && text[i] == '.' && is_digit(text[i + 1])) {
        const std::size_t run = digit_run(text, i + 1);
        std::size_t end = i + 1 + run;
        if (run == 3) {
            // .ddd( ddd)*( d{1,3})?
            while (end < text.size() && text[end] == ' ') {
                const std::size_t g = digit_run(text, end + 1);
                if (g == 3) {
                    end += 4;
                    continue;
                }
                if (g >= 1 && g <= 2) end += 1 + g;
                break;
            }
        }
        Span span{pos, end};
        auto value = digits_only(text, Span{i, end});
        if (text[pos] == '-') value = value.negated();
        return Parsed<Decimal>{value, span};
    }
    return std::nullopt;
}

std::optional<Parsed<Decimal>> parse_error(std::string_view text, std::size_t pos) {
    std::size_t i = skip_spaces(text, pos, 2);
    if (text.compare(i, 2, "±") == 0)
        i += 2;
    else if (text.compare(i, 3, "+/-") == 0)
        i += 3;
    else if (text.compare(i, 2, "+-") == 0)
        i += 2;
    else
        return std::nullopt;
    i = skip_spaces(text, i, 2);
    const std::size_t start = i;
    std::size_t end = i + digit_run(text, i);
    if (end + 1 < text.size() && text[end] == '.' && is_digit(text[end + 1])) end += 1 + digit_run(text, end + 1);
    if (end == start) return std::nullopt;
    auto value = Decimal::parse(text.substr(start, end - start));
    if (!value) return std::nullopt;
    return Parsed<Decimal>{*value, Span{pos, end}};
}

std::optional<Parsed<int>> parse_sci(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) return std::nullopt;

    auto read_exponent = [&](std::size_t i, bool caret) -> std::optional<std::pair<int, std::size_t>> {
        int sign = 1;
        bool explicit_sign = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            sign = text[i] == '-' ? -1 : 1;
            explicit_sign = true;
            ++i;
        }
        const std::size_t run = digit_run(text, i);
        if (run == 0 || run > 3) return std::nullopt;
        // Without a caret or sign, "×100" is a plain factor, not 10^0.
        if (!caret && !explicit_sign && text[i] == '0') return std::nullopt;
        const std::size_t end = i + run;
        if (end < text.size() && (is_alnum(text[end]) && !caret && !explicit_sign)) return std::nullopt;
        if (end + 1 < text.size() && text[end] == '.' && is_digit(text[end + 1])) return std::nullopt;
        return std::make_pair(sign * std::stoi(std::string(text.substr(i, run))), end);
    };

    // e-notation, directly attached.
    if (text[pos] == 'e' || text[pos] == 'E') {
        std::size_t i = pos + 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        const std::size_t run = digit_run(text, i);
        if (run == 0 || run > 3) return std::nullopt;
        const std::size_t end = i + run;
        if (end < text.size() && is_alnum(text[end])) return std::nullopt;
        return Parsed<int>{std::stoi(std::string(text.substr(pos + 1, end - pos - 1))), Span{pos, end}};
    }

    // Multiplication-sign forms.
    std::size_t i = skip_spaces(text, pos, 3);
    bool has_times = false;
    if (i < text.size()) {
        const auto d = utf8::decode(text, i);
        if (d.cp == U'×' || d.cp == U'·' || d.cp == '*') {
            has_times = true;
            i += d.length;
        } else if ((d.cp == 'x' || d.cp == 'X') && (i == 0 || !is_alnum(text[i - 1]))) {
            has_times = true;
            i += 1;
        }
    }
    if (!has_times) {
        // Bare space form requires the caret to survive: "1.4 10^-5".
        if (i == pos) return std::nullopt;
    } else {
        i = skip_spaces(text, i, 3);
    }
    if (text.compare(i, 2, "10") != 0) return std::nullopt;
    i += 2;
    std::size_t j = skip_spaces(text, i, 3);
    bool caret = false;
    if (j < text.size() && text[j] == '^') {
        caret = true;
        j = skip_spaces(text, j + 1, 1);
    }
    if (!has_times && !caret) return std::nullopt;
    auto ex = read_exponent(j, caret);
    if (!ex) return std::nullopt;
    return Parsed<int>{ex->first, Span{pos, ex->second}};
}

StandardizedValue standardize(const QuantityLiteral& q) {
    const int k = q.exponent.value_or(0);
    if (k > kMaxExponent || k < -kMaxExponent)
        throw OverflowError("exponent " + std::to_string(k) + " exceeds the storable range");
    StandardizedValue out;
    Decimal value = q.mantissa.abs();
    if (q.sign == '-') value = value.negated();
    out.value = value.shifted(k);
    if (q.error) out.error_abs = q.error->abs().shifted(k);
    return out;
}

}  // namespace mqmine
