#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mqmine/span.hpp"

namespace mqmine {

enum class TokenKind { word, number, punct, mq, symbol };

struct Token {
    std::string surface;
    TokenKind kind = TokenKind::word;
    Span span;
    int mq_index = -1;  // position in the mq list for mq placeholders
};

struct TaggedToken {
    Token token;
    std::string tag;
};

/// Token index range [begin, end) plus the property phrase it names.
struct NPChunk {
    std::size_t begin = 0;
    std::size_t end = 0;
    std::size_t head = 0;
    std::string property_text;
    Span span;  // sentence bytes covered by property_text
};

/// Splits `sentence` into tokens. Each span in `mq_spans` (sorted, disjoint)
/// becomes one mq placeholder. Overlapping spans throw Error.
std::vector<Token> tokenize(std::string_view sentence, const std::vector<Span>& mq_spans = {});

/// Every tag the tagger can emit.
const std::vector<std::string>& tag_inventory();
bool is_known_tag(std::string_view tag);

struct TransformationRule {
    enum class Predicate {
        prev_tag,
        next_tag,
        prev2_tag,
        next2_tag,
        prev1or2_tag,
        next1or2_tag,
        prev_word,
        next_word,
        prev1or2_word,
        next1or2_word,
        surround_tag,
        cur_word,
    };

    std::string from_tag;
    std::string to_tag;
    Predicate predicate = Predicate::prev_tag;
    std::string arg1;
    std::string arg2;
};

class Tagger {
public:
    static Tagger parse(std::string_view lexicon, std::string_view rules);
    static Tagger load(const std::string& lexicon_path, const std::string& rules_path);
    static const Tagger& builtin();

    std::vector<TaggedToken> tag(const std::vector<Token>& tokens) const;

    /// Lexicon tags for `word` (exact spelling first, then lowercase); empty when unknown.
    const std::vector<std::string>& lexicon_tags(std::string_view word) const;
    std::size_t lexicon_size() const noexcept { return lexicon_.size(); }
    const std::vector<TransformationRule>& rules() const noexcept { return rules_; }

private:
    std::string initial_tag(const Token& token, bool sentence_initial) const;
    bool rule_applies(const TransformationRule& rule, const std::vector<TaggedToken>& tagged,
                      std::size_t i) const;

    std::unordered_map<std::string, std::vector<std::string>> lexicon_;
    std::vector<TransformationRule> rules_;
};

/// Maximal spans of DT? (CD|JJ|JJR|JJS|VBN|percent)* (NN|NNS|NNP|NNPS)+,
/// where "percent" is a '%' token or an mq placeholder ending in '%'.
std::vector<NPChunk> chunk_np(const std::vector<TaggedToken>& tagged, std::string_view sentence);

}  // namespace mqmine
