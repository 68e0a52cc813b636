#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mqmine/postag.hpp"
#include "mqmine/span.hpp"

namespace mqmine {

/// One element of a compiled pattern. Atoms name a tag class (NP, MQ, EQ,
/// SYM, IN, DT, TO, RB, JJ, CC, VP or any literal tag); literals match a
/// token's surface; groups hold alternatives. The bracketed target is a
/// group with `target` set.
struct PatternNode {
    enum class Kind { atom, literal, group };

    Kind kind = Kind::atom;
    std::string value;
    std::vector<std::vector<PatternNode>> alternatives;
    int min = 1;
    int max = 1;
    bool target = false;
};

struct PropertyPattern {
    std::string id;
    std::string source;
    std::vector<PatternNode> elements;
};

struct MeasuredProperty {
    std::string property_text;
    Span np_span;  // sentence bytes
    std::size_t mq_index = 0;
    std::string pattern_id;
};

/// Pattern file: `ID = elements` per line, '#' comments. Throws ParseError.
std::vector<PropertyPattern> parse_patterns(std::string_view text);
std::vector<PropertyPattern> load_patterns(const std::string& path);
/// P1..P5 in cascade order.
const std::vector<PropertyPattern>& builtin_patterns();

/// Lowercase, whitespace collapsed, leading determiners removed.
std::string normalize_property(std::string_view text);

class PropertyExtractor {
public:
    explicit PropertyExtractor(std::vector<PropertyPattern> patterns = builtin_patterns(), std::size_t window = 12);

    /// At most one property per mq placeholder, in mq order.
    std::vector<MeasuredProperty> extract(const std::vector<TaggedToken>& tagged, const std::vector<NPChunk>& chunks,
                                          std::string_view sentence) const;

    const std::vector<PropertyPattern>& patterns() const noexcept { return patterns_; }

private:
    std::vector<PropertyPattern> patterns_;
    std::size_t window_;
};

}  // namespace mqmine
