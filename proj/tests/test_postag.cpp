#include "doctest.h"

#include "mqmine/error.hpp"
#include "mqmine/postag.hpp"

using namespace mqmine;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& toks) {
    std::vector<std::string> out;
    for (const auto& t : toks) out.push_back(t.surface);
    return out;
}

std::vector<std::string> tags(std::string_view sentence, const std::vector<Span>& mqs = {}) {
    std::vector<std::string> out;
    for (const auto& t : Tagger::builtin().tag(tokenize(sentence, mqs))) out.push_back(t.tag);
    return out;
}

std::vector<std::string> chunks(std::string_view sentence, const std::vector<Span>& mqs = {}) {
    std::vector<std::string> out;
    for (const auto& c : chunk_np(Tagger::builtin().tag(tokenize(sentence, mqs)), sentence))
        out.push_back(c.property_text);
    return out;
}

using V = std::vector<std::string>;

}  // namespace

TEST_SUITE("postag") {

TEST_CASE("tokenize splits punctuation and keeps placeholders whole") {
    CHECK(surfaces(tokenize("The size, was 3.")) == V{"The", "size", ",", "was", "3", "."});
    const std::string s = "pitch was 352 µm here";
    const auto toks = tokenize(s, {{10, 10 + std::string("352 µm").size()}});
    REQUIRE(toks.size() == 4);
    CHECK(toks[2].kind == TokenKind::mq);
    CHECK(toks[2].mq_index == 0);
    CHECK(toks[2].surface == "352 µm");
    CHECK(toks[3].span.begin == s.find("here"));
}

TEST_CASE("overlapping placeholders are rejected") {
    CHECK_THROWS_AS(tokenize("abcdefgh", {{0, 4}, {2, 6}}), Error);
}

TEST_CASE("token spans are increasing and in bounds") {
    const std::string s = "ζ = 4.5 (approx.) for the 3rd run; see e.g. Fig. 2";
    std::size_t prev = 0;
    for (const auto& t : tokenize(s)) {
        CHECK(t.span.begin >= prev);
        CHECK(t.span.end <= s.size());
        CHECK(s.substr(t.span.begin, t.span.size()) == t.surface);
        prev = t.span.end;
    }
}

TEST_CASE("closed-class words") {
    CHECK(tags("the value of")[2] == "IN");
    CHECK(tags("the value of")[0] == "DT");
    CHECK(tags("the bias was set to") == V{"DT", "NN", "VBD", "VBN", "TO"});
}

TEST_CASE("symbols and placeholders") {
    CHECK(tags("ζ = 4")[0] == "SYM");
    const std::string s = "mass is 5 kg";
    CHECK(tags(s, {{8, 12}}).back() == "MQ");
}

TEST_CASE("every emitted tag is in the inventory") {
    for (const auto& t : tag_inventory()) CHECK(is_known_tag(t));
    CHECK_FALSE(is_known_tag("XYZ"));
    const std::string text =
        "Quickly, the 12 engineers' unusually strong prototypes were being tested and they would have "
        "succeeded! Weren't 3.5 m? ζ ≈ Δ + (x) ; gloriously-unknownish zzyzx";
    for (const auto& t : tags(text)) CHECK_MESSAGE(is_known_tag(t), t);
}

TEST_CASE("unknown words get a noun-like guess") {
    const auto t = tags("the frobnication");
    CHECK(t[1] == "NN");
    CHECK(tags("the frobnications")[1] == "NNS");
    CHECK(tags("the glass")[1] == "NN");
}

TEST_CASE("lexicon and rules load from text") {
    const auto tg = Tagger::parse("dog\tNN\nbarks\tNNS,VBZ\n", "NNS VBZ WHEN PREVTAG NN\n");
    CHECK(tg.lexicon_size() == 2);
    CHECK(tg.rules().size() == 1);
    std::vector<std::string> got;
    for (const auto& t : tg.tag(tokenize("dog barks"))) got.push_back(t.tag);
    CHECK(got == V{"NN", "VBZ"});
    CHECK_THROWS_AS(Tagger::parse("dog\n", ""), ParseError);
    CHECK_THROWS_AS(Tagger::parse("dog\tNN\n", "NN VB WHEN NOSUCHPRED x\n"), ParseError);
}

TEST_CASE("noun phrase chunks") {
    CHECK(chunks("The pixel pitch employed was 5 m", {{29, 32}}) == V{"pixel pitch"});
    CHECK(chunks("the melting point of water") == V{"melting point", "water"});
    CHECK(chunks("a strong magnetic field") == V{"strong magnetic field"});
    CHECK(chunks("was set to").empty());
}

TEST_CASE("percent quantities modify a following noun") {
    const std::string s = "50 mL of 30% fuming sulfuric acid";
    const auto c = chunks(s, {{0, 5}, {9, 12}});
    REQUIRE_FALSE(c.empty());
    CHECK(c.back() == "30% fuming sulfuric acid");
}

TEST_CASE("chunk spans match their text") {
    const std::string s = "We measured the bulk thermal conductivity and the elastic modulus";
    for (const auto& c : chunk_np(Tagger::builtin().tag(tokenize(s)), s))
        CHECK(s.substr(c.span.begin, c.span.size()) == c.property_text);
}

}  // TEST_SUITE
