#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mqmine/normalize.hpp"
#include "mqmine/quantity.hpp"
#include "mqmine/span.hpp"
#include "mqmine/units.hpp"

namespace mqmine {

/// The 5-tuple (sign, number, error, scientific notation, units) as found in
/// one sentence. Spans are byte offsets into the sentence passed to extract().
struct MeasuredQuantity {
    QuantityLiteral literal;
    CompoundUnit unit;
    StandardizedValue standardized;
    Span span;
    Span number_span;
    Span unit_span;
    std::size_t sentence_index = 0;

    std::string unit_key() const { return canonical_string(unit); }
};

enum class RejectRule { context, repetition, dash };

std::string_view to_string(RejectRule rule);

struct RejectionReason {
    RejectRule rule_id;
    std::string detail;
};

/// An assembled extraction before post-processing.
struct Candidate {
    MeasuredQuantity mq;
    UnitMatch unit_match;
    bool dash_joined = false;  // a '-' sits between the quantity and its unit
};

/// Sentence spans over normalized text: '.', '!' or '?' followed by
/// whitespace and an uppercase letter or digit, or a blank line.
std::vector<Span> segment_sentences(std::string_view text);
std::vector<Span> segment_sentences(const NormalizedText& text);

/// Table, Figure, Fig, Section, Eq, Equation, Ref, page, p.
const std::vector<std::string>& default_context_blocklist();

class QuantityExtractor {
public:
    struct Result {
        std::vector<MeasuredQuantity> accepted;
        std::vector<std::pair<Candidate, RejectionReason>> rejected;
    };

    explicit QuantityExtractor(const UnitCatalog& catalog = UnitCatalog::builtin(),
                               std::vector<std::string> context_blocklist = default_context_blocklist());

    /// Left-to-right, non-overlapping extractions that survive post_filter.
    std::vector<MeasuredQuantity> extract(std::string_view sentence) const;
    Result extract_detailed(std::string_view sentence) const;

    /// nullopt accepts the candidate.
    std::optional<RejectionReason> post_filter(const Candidate& candidate, std::string_view sentence) const;

    /// Assembles the candidate whose number starts at `pos`, if any.
    std::optional<Candidate> assemble(std::string_view sentence, std::size_t pos) const;

    const UnitCatalog& catalog() const noexcept { return *catalog_; }

private:
    const UnitCatalog* catalog_;
    std::vector<std::string> blocklist_;
};

}  // namespace mqmine
