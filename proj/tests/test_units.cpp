#include "doctest.h"

#include <set>

#include "mqmine/error.hpp"
#include "mqmine/units.hpp"

using namespace mqmine;

namespace {

const UnitCatalog& cat() { return UnitCatalog::builtin(); }

CompoundUnit unit_of(std::string_view text) {
    auto m = match_unit(text, 0, cat());
    REQUIRE_MESSAGE(m.has_value(), "no unit in '" << text << "'");
    return m->unit;
}

std::string key_of(std::string_view text) { return canonical_string(unit_of(text)); }

}  // namespace

TEST_SUITE("units") {

TEST_CASE("catalog record for metre") {
    const auto* m = cat().find("m");
    REQUIRE(m != nullptr);
    CHECK(m->single_letter);
    CHECK(std::find(m->long_names.begin(), m->long_names.end(), "meter") != m->long_names.end());
    CHECK(std::find(m->long_names.begin(), m->long_names.end(), "meters") != m->long_names.end());
    for (const char* p : {"f", "p", "n", "µ", "m", "c", "d", "k"})
        CHECK(std::find(m->prefixable.begin(), m->prefixable.end(), p) != m->prefixable.end());
}

TEST_CASE("catalog ships the units the extraction examples need") {
    for (const char* s : {"m", "s", "h", "Hz", "°C", "K", "A", "g", "L", "Pa", "psi", "ksi", "V", "W", "eV", "mol",
                          "U", "mi", "%"})
        CHECK_MESSAGE(cat().find(s) != nullptr, s);
}

TEST_CASE("catalog parsing") {
    CHECK(UnitCatalog::parse(std::string_view("")).empty());
    CHECK(UnitCatalog::parse(std::string_view("# only a comment\n")).empty());
    CHECK_THROWS_AS(UnitCatalog::parse(std::string_view("Hz | hertz | k | frequency\nHz | hz | ∅ | frequency\n")),
                    ConflictError);
    try {
        UnitCatalog::parse(std::string_view("m | meter | k | length\nbroken line\n"));
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    const auto c = UnitCatalog::parse(std::string_view("m | meter,meters | k,c | length\n"));
    REQUIRE(c.size() == 1);
    CHECK(c.find("m")->prefixable.size() == 2);
}

TEST_CASE("km/h and kilometer per hour") {
    const CompoundUnit want{{{"k", "m", 1}, {"", "h", -1}}};
    CHECK(unit_of("km/h") == want);
    CHECK(unit_of("kilometer per hour") == want);
    CHECK(unit_of("kilometers per hour") == want);
    CHECK(key_of("km/h") == "km.h^-1");
}

TEST_CASE("exponent surface forms converge") {
    const CompoundUnit want{{{"c", "m", 2}}};
    CHECK(unit_of("cm2") == want);
    CHECK(unit_of("cm^2") == want);
    CHECK(unit_of("cm 2") == want);
    CHECK(unit_of("cm-2") == CompoundUnit{{{"c", "m", -2}}});
}

TEST_CASE("juxtaposed terms with dash exponents") {
    CHECK(unit_of("s-2m-1") == CompoundUnit{{{"", "s", -2}, {"", "m", -1}}});
    CHECK(unit_of("s^-2m^-1") == CompoundUnit{{{"", "s", -2}, {"", "m", -1}}});
    CHECK(key_of("s^-2 m^-1") == "s^-2.m^-1");
}

TEST_CASE("unknown words do not match") {
    CHECK_FALSE(match_unit("zorkles", 0, cat()).has_value());
    CHECK_FALSE(match_unit("", 0, cat()).has_value());
}

TEST_CASE("per and slash negate the following term") {
    CHECK(unit_of("m/s") == unit_of("m s^-1"));
    CHECK(unit_of("mL/min") == unit_of("mL min^-1"));
    CHECK(unit_of("A/cm^2") == unit_of("A cm^-2"));
    CHECK(unit_of("meters per second") == unit_of("m/s"));
}

TEST_CASE("longest match: mol beats m") {
    CHECK(key_of("mol") == "mol");
    CHECK(key_of("mmol") == "mmol");
}

TEST_CASE("symbols are case sensitive, names are not") {
    CHECK(key_of("K") == "K");
    CHECK(key_of("Kelvin") == "K");
    CHECK(key_of("HERTZ") == "Hz");
    CHECK(key_of("kHz") == "kHz");
}

TEST_CASE("bare exponents only for digits 2 to 6") {
    CHECK_FALSE(match_unit("m1", 0, cat()).has_value());
    CHECK(key_of("m3") == "m^3");
}

TEST_CASE("hyphen joins only complete units") {
    CHECK(key_of("newton-meter") == "N.m");
    auto m = match_unit("m-long rod", 0, cat());
    REQUIRE(m.has_value());
    CHECK(canonical_string(m->unit) == "m");
}

TEST_CASE("canonical and display strings") {
    const CompoundUnit um{{{"µ", "m", 1}}};
    CHECK(canonical_string(um) == "um");
    CHECK(display_string(um) == "µm");
    CHECK(canonical_string(CompoundUnit{{{"", "s", -2}, {"", "m", -1}}}) == "s^-2.m^-1");
    CHECK(display_string(CompoundUnit{{{"", "s", -2}, {"", "m", -1}}}) == "s^-2·m^-1");
}

TEST_CASE("canonical_string is injective over two-term units") {
    // Independent renderer of the key grammar, used as the oracle.
    auto render = [](const UnitTerm& t) {
        std::string p = t.prefix == "µ" ? "u" : t.prefix;
        std::string s = p + t.symbol;
        if (t.exponent != 1) s += "^" + std::to_string(t.exponent);
        return s;
    };
    const std::vector<std::string> symbols = {"m", "s", "h", "Hz", "K", "A", "g", "L", "Pa", "mol"};
    const std::vector<std::string> prefixes = {"", "k"};
    std::vector<UnitTerm> terms;
    for (const auto& sym : symbols)
        for (const auto& p : prefixes)
            for (int e = -3; e <= 3; ++e)
                if (e != 0) terms.push_back({p, sym, e});
    std::set<std::string> keys;
    std::size_t lists = 0;
    for (const auto& a : terms) {
        CHECK(canonical_string(CompoundUnit{{a}}) == render(a));
        keys.insert(canonical_string(CompoundUnit{{a}}));
        ++lists;
        for (const auto& b : terms) {
            const auto k = canonical_string(CompoundUnit{{a, b}});
            if (k != render(a) + "." + render(b)) FAIL("unexpected key " << k);
            keys.insert(k);
            ++lists;
        }
    }
    CHECK(keys.size() == lists);
}

TEST_CASE("unit spans cover the matched text only") {
    auto m = match_unit("µm pixel", 0, cat());
    REQUIRE(m.has_value());
    CHECK(canonical_string(m->unit) == "um");
    CHECK(m->span == Span{0, std::string("µm").size()});
}

TEST_CASE("metric prefixes") {
    std::set<std::string_view> symbols;
    for (const auto& p : metric_prefixes()) symbols.insert(p.symbol);
    for (const char* s : {"f", "p", "n", "µ", "m", "c", "d", "k", "M", "G", "T"}) CHECK(symbols.count(s) == 1);
}

}  // TEST_SUITE
