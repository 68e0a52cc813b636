#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mqmine/span.hpp"

namespace mqmine {

struct MetricPrefix {
    std::string_view symbol;
    std::string_view name;
    int power;
};

/// f, p, n, µ, m, c, d, da, h, k, M, G, T.
const std::vector<MetricPrefix>& metric_prefixes();

struct UnitDef {
    std::string symbol;
    std::vector<std::string> long_names;
    std::vector<std::string> prefixable;
    bool single_letter = false;
    std::string category;
};

struct UnitTerm {
    std::string prefix;  // empty when absent
    std::string symbol;
    int exponent = 1;

    /// The unit symbol (not counting the prefix) is one character.
    bool single_letter() const;

    friend bool operator==(const UnitTerm&, const UnitTerm&) = default;
};

struct CompoundUnit {
    std::vector<UnitTerm> terms;

    friend bool operator==(const CompoundUnit&, const CompoundUnit&) = default;
};

/// ASCII index key, e.g. "km.h^-1", "um", "s^-2.m^-1".
std::string canonical_string(const CompoundUnit& cu);
/// Human-readable form keeping 'µ' and joining terms with '·'.
std::string display_string(const CompoundUnit& cu);

/// Where each term of a matched unit sits in the text.
struct TermSurface {
    Span span;
    bool juxtaposed = false;         // no connector between this term and the previous one
    bool explicit_exponent = false;  // any exponent was written
};

struct UnitMatch {
    CompoundUnit unit;
    Span span;
    std::vector<TermSurface> surfaces;
};

class UnitCatalog {
public:
    struct Candidate {
        std::size_t length;
        std::size_t surface;
    };

    UnitCatalog() = default;

    static UnitCatalog parse(std::istream& in);
    static UnitCatalog parse(std::string_view text);
    static UnitCatalog load(const std::string& path);
    static const UnitCatalog& builtin();

    const UnitDef* find(std::string_view symbol) const;
    const std::vector<UnitDef>& units() const noexcept { return defs_; }
    std::size_t size() const noexcept { return defs_.size(); }
    bool empty() const noexcept { return defs_.empty(); }

    /// Unit term surfaces (symbol or long name, with optional prefix) starting
    /// at `pos`, longest first.
    void candidates_at(std::string_view text, std::size_t pos, std::vector<Candidate>& out) const;
    const std::string& surface_prefix(std::size_t surface) const { return surfaces_[surface].prefix; }
    const UnitDef& surface_unit(std::size_t surface) const { return defs_[surfaces_[surface].unit]; }
    bool surface_is_name(std::size_t surface) const { return surfaces_[surface].fold_case; }

private:
    struct Surface {
        std::string text;  // lowercase when fold_case
        std::string prefix;
        std::size_t unit;
        bool fold_case;
    };

    void add(UnitDef def, std::size_t line);
    void build_surfaces();

    std::vector<UnitDef> defs_;
    std::unordered_map<std::string, std::size_t> by_symbol_;
    std::vector<Surface> surfaces_;
    std::array<std::vector<std::size_t>, 256> exact_by_first_{};
    std::array<std::vector<std::size_t>, 256> folded_by_first_{};
};

/// Longest simple or compound unit starting exactly at `pos`.
std::optional<UnitMatch> match_unit(std::string_view text, std::size_t pos, const UnitCatalog& catalog);

}  // namespace mqmine
