#include "doctest.h"

#include "golden.hpp"
#include "mqmine/corpus.hpp"
#include "mqmine/error.hpp"
#include "mqmine/mpe.hpp"

using namespace mqmine;

namespace {

const Pipeline& pipeline() {
    static const Pipeline p;
    return p;
}

struct Bound {
    std::size_t mq;
    std::string text;
    std::string pattern;
    friend bool operator==(const Bound&, const Bound&) = default;
};

std::vector<Bound> bound(std::string_view raw) {
    std::vector<Bound> out;
    for (const auto& p : pipeline().analyze_text(raw).properties) out.push_back({p.mq_index, p.property_text, p.pattern_id});
    return out;
}

}  // namespace

TEST_SUITE("mpe") {

TEST_CASE("builtin patterns in cascade order") {
    const auto& ps = builtin_patterns();
    REQUIRE(ps.size() == 5);
    CHECK(ps[0].id == "P1");
    CHECK(ps[0].source == "[NP] SYM{0,2} EQ MQ");
    CHECK(ps[1].source == "MQ IN? [NP]");
    CHECK(ps[2].source == "[NP IN DT? NP] VP+ (TO|IN|RB|JJ)* MQ");
    CHECK(ps[3].source == "[NP] (IN DT? NP)* VP+ (IN|TO|RB|JJ)* MQ");
    CHECK(ps[4].source == "[NP] (CC|IN|TO|RB|JJ|',')* '('? MQ ')'?");
}

TEST_CASE("pattern parser") {
    const auto ps = parse_patterns("# comment\nA = [NP] EQ MQ\n\nB = MQ IN? [NP]\n");
    REQUIRE(ps.size() == 2);
    CHECK(ps[0].id == "A");
    CHECK(ps[0].elements.size() == 3);
    CHECK(ps[0].elements[0].target);
    CHECK(ps[1].elements[1].min == 0);
    CHECK(ps[1].elements[1].max == 1);

    const auto rep = parse_patterns("R = [NP] SYM{0,2} VP+ (IN|TO)* MQ\n")[0].elements;
    CHECK(rep[1].min == 0);
    CHECK(rep[1].max == 2);
    CHECK(rep[2].min == 1);
    CHECK(rep[3].kind == PatternNode::Kind::group);
    CHECK(rep[3].alternatives.size() == 2);

    CHECK_THROWS_AS(parse_patterns("X = [NP MQ\n"), ParseError);
    CHECK_THROWS_AS(parse_patterns("X = NP MQ\n"), ParseError);  // no target
    CHECK_THROWS_AS(parse_patterns("X = [NP] [NP] MQ\n"), ParseError);
    CHECK_THROWS_AS(parse_patterns("X = [NP]\n"), ParseError);  // no MQ
    CHECK_THROWS_AS(parse_patterns("no equals sign\n"), ParseError);
    try {
        parse_patterns("A = [NP] EQ MQ\nB = [NP MQ\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("pattern_rows fixture") {
    for (const auto& g : golden::load("pattern_rows")) {
        const auto why = golden::compare(g, pipeline().analyze_text(g.text));
        CHECK_MESSAGE(why.empty(), why);
    }
}

TEST_CASE("examples") {
    CHECK(bound("The pixel pitch employed was 352 µm.") == std::vector<Bound>{{0, "pixel pitch", "P4"}});
    CHECK(bound("a 352 µm pixel pitch") == std::vector<Bound>{{0, "pixel pitch", "P2"}});
    CHECK(bound("the melting point of water was 0 °C") == std::vector<Bound>{{0, "melting point of water", "P3"}});
}

TEST_CASE("P1 wins over P5") {
    // Both P1 and P5 match "gravity curvature = MQ"; the cascade takes P1.
    const auto b = bound("gravity curvature = 1.4 s^-2");
    REQUIRE(b.size() == 1);
    CHECK(b[0].pattern == "P1");
}

TEST_CASE("no noun phrase, no property") {
    CHECK(bound("at 5 m").empty());
    CHECK(bound("").empty());
    CHECK(bound("the sample was heated").empty());
}

TEST_CASE("at most one property per quantity") {
    for (const char* s : {"the mass of the sample was 5 kg and the volume 3 L",
                          "a 352 µm pixel pitch with a 10 µm gap",
                          "temperature = 300 K, pressure = 1 bar"}) {
        const auto a = pipeline().analyze_text(s);
        std::vector<bool> seen(a.mqs.size(), false);
        for (const auto& p : a.properties) {
            REQUIRE(p.mq_index < a.mqs.size());
            CHECK_FALSE(seen[p.mq_index]);
            seen[p.mq_index] = true;
        }
    }
}

TEST_CASE("custom pattern files replace the cascade") {
    const PropertyExtractor only_p2(parse_patterns("Q = MQ IN? [NP]\n"));
    const Pipeline p(UnitCatalog::builtin(), Tagger::builtin(), only_p2);
    const auto a = p.analyze_text("The pixel pitch employed was 352 µm.");
    CHECK(a.properties.empty());
    const auto b = p.analyze_text("a 352 µm pixel pitch");
    REQUIRE(b.properties.size() == 1);
    CHECK(b.properties[0].pattern_id == "Q");
}

TEST_CASE("normalize_property") {
    CHECK(normalize_property("The  Pixel\tPitch") == "pixel pitch");
    CHECK(normalize_property("a strong field") == "strong field");
    CHECK(normalize_property("an index") == "index");
    CHECK(normalize_property("the") == "the");
    CHECK(normalize_property("") == "");
    CHECK(normalize_property(normalize_property("The Melting Point")) == "melting point");
}

TEST_CASE("property spans are sentence bytes") {
    const std::string s = normalize_chars("The pixel pitch employed was 352 µm.").text;
    const auto a = pipeline().analyze_sentence(s);
    REQUIRE(a.properties.size() == 1);
    const auto& sp = a.properties[0].np_span;
    CHECK(s.substr(sp.begin, sp.size()) == "pixel pitch");
}

}  // TEST_SUITE

TEST_SUITE("mpe") {

TEST_CASE("golden snippets") {
    const auto snippets = golden::load("snippets");
    CHECK(snippets.size() == 16);
    for (const auto& g : snippets) {
        const auto why = golden::compare(g, pipeline().analyze_text(g.text));
        CHECK_MESSAGE(why.empty(), why);
    }
}

}  // TEST_SUITE
