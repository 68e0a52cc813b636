#include "doctest.h"

#include <random>

#include "mqmine/error.hpp"
#include "mqmine/normalize.hpp"

using namespace mqmine;

TEST_SUITE("normalize") {

TEST_CASE("dash variants fold to hyphen-minus") {
    CHECK(normalize_chars("m–1").text == "m-1");
    CHECK(normalize_chars("m—1").text == "m-1");
    CHECK(normalize_chars("m−1").text == "m-1");
    CHECK(normalize_chars("m‒1").text == "m-1");
}

TEST_CASE("mojibake en dash is repaired") {
    CHECK(normalize_chars("mâ€“1").text == "m-1");
    // The truncated form that survives some copy paths.
    CHECK(normalize_chars("mâ€1").text == "m-1");
}

TEST_CASE("canonical text passes through") {
    const auto nt = normalize_chars("5 m");
    CHECK(nt.text == "5 m");
    CHECK(nt.raw_size == 3);
}

TEST_CASE("micro and degree variants unify") {
    CHECK(normalize_chars("μm").text == "µm");
    CHECK(normalize_chars("Âµm").text == "µm");
    CHECK(normalize_chars("Î¼m").text == "µm");
    CHECK(normalize_chars("12 ºC").text == "12 °C");
    CHECK(normalize_chars("12 Â°C").text == "12 °C");
}

TEST_CASE("other cp1252 mojibake forms") {
    CHECK(normalize_chars("1.4 Ã— 10").text == "1.4 × 10");
    CHECK(normalize_chars("3 Â± 1").text == "3 ± 1");
    CHECK(normalize_chars("m Â· s").text == "m · s");
    CHECK(normalize_chars("x â‰ˆ 3").text == "x ≈ 3");
    CHECK(normalize_chars("x â‰… 3").text == "x ≅ 3");
    CHECK(normalize_chars("âˆ’5").text == "-5");
}

TEST_CASE("equality-like symbols are kept and recorded") {
    const auto nt = normalize_chars("a ≈ b = c ≅ d");
    CHECK(nt.text == "a ≈ b = c ≅ d");
    REQUIRE(nt.eq_positions.size() == 3);
    CHECK(nt.is_eq(2));
    CHECK_FALSE(nt.is_eq(0));
}

TEST_CASE("control characters become spaces") {
    CHECK(normalize_chars(std::string("a\x01" "b")).text == "a b");
}

TEST_CASE("original_span on identity text") {
    const auto nt = normalize_chars("hello world");
    CHECK(original_span(nt, {2, 5}) == Span{2, 5});
}

TEST_CASE("original_span covers the mojibake source") {
    const std::string raw = "mâ€“1";
    const auto nt = normalize_chars(raw);
    REQUIRE(nt.text == "m-1");
    // Independent replay: the '-' came from bytes 1 .. raw.size()-1.
    CHECK(original_span(nt, {1, 2}) == Span{1, raw.size() - 1});
    CHECK(original_span(nt, {0, nt.text.size()}) == Span{0, raw.size()});
}

TEST_CASE("original_span rejects bad spans") {
    const auto nt = normalize_chars("abc");
    CHECK_THROWS_AS(original_span(nt, {2, 9}), RangeError);
    CHECK_THROWS_AS(original_span(nt, {2, 1}), RangeError);
}

namespace {

std::string random_text(std::mt19937& rng) {
    static const std::vector<std::string> pieces = {
        "a", "Z", "5", " ", ".", "-", "–", "—", "−", "×", "·", "°", "º", "µ", "μ", "±", "≈", "≅", "=",
        "Ã—", "Â°", "Âµ", "Î¼", "Â±", "â€“", "â€", "âˆ’", "â‰ˆ", "é", "ζ", "\t", "\n",
    };
    std::string s;
    const auto n = rng() % 24;
    for (unsigned i = 0; i < n; ++i) s += pieces[rng() % pieces.size()];
    return s;
}

}  // namespace

TEST_CASE("idempotence, coverage and monotone offsets on random text") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto raw = random_text(rng);
        const auto nt = normalize_chars(raw);
        CHECK(normalize_chars(nt.text).text == nt.text);
        CHECK(nt.text.size() <= raw.size());
        REQUIRE(nt.offset_map.size() == nt.text.size());
        std::size_t last_begin = 0;
        for (std::size_t p = 0; p < nt.text.size(); ++p) {
            const auto s = original_span(nt, {p, p + 1});
            CHECK_FALSE(s.empty());
            CHECK(s.end <= raw.size());
            CHECK(s.begin >= last_begin);
            last_begin = s.begin;
        }
        if (!nt.text.empty()) CHECK(original_span(nt, {0, nt.text.size()}) == Span{0, raw.size()});
    }
}

TEST_CASE("rewrite table file format") {
    const auto t = RewriteTable::parse(std::string_view("# comment\n41\tU+0042\n"));
    CHECK(t.size() == 1);
    CHECK(normalize_chars("xAx", t).text == "xBx");
    CHECK_THROWS_AS(RewriteTable::parse(std::string_view("zz\tU+0042\n")), ParseError);
    CHECK(RewriteTable::builtin().size() > 40);
}

}  // TEST_SUITE
