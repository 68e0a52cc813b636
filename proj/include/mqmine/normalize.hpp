#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "mqmine/span.hpp"

namespace mqmine {

/// Canonicalized text plus, for every byte of `text`, the raw byte range it
/// was produced from. All bytes of one output character share a raw span.
struct NormalizedText {
    std::string text;
    std::vector<Span> offset_map;
    std::vector<std::size_t> eq_positions;  // byte offsets of '='-like symbols in `text`
    std::size_t raw_size = 0;

    bool is_eq(std::size_t pos) const;
};

/// Byte-sequence -> code point rewrite rules (mojibake repair and character folding).
class RewriteTable {
public:
    struct Rule {
        std::string source;
        char32_t target;
    };

    RewriteTable() = default;

    static RewriteTable parse(std::istream& in);
    static RewriteTable parse(std::string_view text);
    static RewriteTable load(const std::string& path);
    /// The packaged default table.
    static const RewriteTable& builtin();

    /// Longest rule whose source starts at `pos`, or nullptr.
    const Rule* match(std::string_view text, std::size_t pos) const;
    std::size_t size() const noexcept { return rules_.size(); }
    const std::vector<Rule>& rules() const noexcept { return rules_; }

private:
    void index();

    std::vector<Rule> rules_;
    std::vector<std::vector<std::size_t>> by_first_byte_;  // sorted longest-first
};

/// True for '=' and the symbols treated as equality-like in property patterns.
bool is_eq_symbol(char32_t cp);

NormalizedText normalize_chars(std::string_view raw, const RewriteTable& table = RewriteTable::builtin());

/// Smallest raw range covering the raw bytes behind `span`. Throws RangeError
/// when the span is out of bounds or reversed.
Span original_span(const NormalizedText& nt, Span span);

}  // namespace mqmine
