#include "doctest.h"

#include "mqmine/mqe.hpp"
#include "mqmine/normalize.hpp"

using namespace mqmine;

namespace {

const QuantityExtractor& mqe() {
    static const QuantityExtractor x;
    return x;
}

std::vector<MeasuredQuantity> run(std::string_view raw) { return mqe().extract(normalize_chars(raw).text); }

std::optional<RejectRule> rejection(std::string_view raw) {
    const auto r = mqe().extract_detailed(normalize_chars(raw).text);
    if (r.rejected.empty()) return std::nullopt;
    return r.rejected.front().second.rule_id;
}

}  // namespace

TEST_SUITE("mqe") {

TEST_CASE("sentence segmentation") {
    CHECK(segment_sentences("It was 3.5 m. Next came B.").size() == 2);
    CHECK(segment_sentences("value of 3.5 m was used").size() == 1);
    CHECK(segment_sentences("").empty());
    CHECK(segment_sentences("Measured by J. Smith in 2010.").size() == 1);
    CHECK(segment_sentences("First part\n\nsecond part").size() == 2);
    const std::string text = "A is 5 m. B is 6 m.";
    const auto s = segment_sentences(text);
    REQUIRE(s.size() == 2);
    CHECK(text.substr(s[1].begin, s[1].size()) == "B is 6 m.");
}

TEST_CASE("melting point") {
    const auto r = run("12 °C melting point");
    REQUIRE(r.size() == 1);
    CHECK(r[0].standardized.value.to_string() == "12");
    CHECK(r[0].unit_key() == "degC");
    CHECK_FALSE(r[0].literal.sign.has_value());
    CHECK_FALSE(r[0].literal.error.has_value());
    CHECK_FALSE(r[0].literal.exponent.has_value());
}

TEST_CASE("responsivity") {
    const auto r = run("responsivity as low as 6.2 pA/K");
    REQUIRE(r.size() == 1);
    CHECK(r[0].standardized.value.to_string() == "6.2");
    CHECK(r[0].unit_key() == "pA.K^-1");
}

TEST_CASE("gravity curvature with corrupted exponents") {
    const auto r = run("ζ = (1.3999 ± 0.003) × 10-5 s-2m-1");
    REQUIRE(r.size() == 1);
    const auto& q = r[0];
    CHECK_FALSE(q.literal.sign.has_value());
    CHECK(q.literal.mantissa.to_string() == "1.3999");
    CHECK(q.literal.error->to_string() == "0.003");
    CHECK(*q.literal.exponent == -5);
    CHECK(q.unit_key() == "s^-2.m^-1");
    CHECK(q.standardized.value.to_string() == "0.000013999");
}

TEST_CASE("lost exponent caret") {
    const auto r = run("is 9.3 × 107 miles");
    REQUIRE(r.size() == 1);
    CHECK(*r[0].literal.exponent == 7);
    CHECK(r[0].unit_key() == "mi");
    CHECK(r[0].standardized.value.to_string() == "93000000");
}

TEST_CASE("no unit, no extraction") {
    CHECK(run("see Section 5").empty());
    CHECK(run("there were 40 of them").empty());
    CHECK(run("vitamin B12 levels").empty());
}

TEST_CASE("post-processing rules") {
    CHECK(run("in Table 3 m was").empty());
    CHECK(rejection("in Table 3 m was") == RejectRule::context);
    CHECK(run("3 AJmm").empty());
    CHECK(rejection("3 AJmm") == RejectRule::repetition);
    CHECK(run("a 10-A rod").empty());
    CHECK(rejection("a 10-A rod") == RejectRule::dash);
    const auto ok = run("a 10-cm rod");
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].unit_key() == "cm");
}

TEST_CASE("context blocklist is case-insensitive and configurable") {
    CHECK(run("see figure 4 A").empty());
    CHECK(run("page 7 m").empty());
    const QuantityExtractor lax(UnitCatalog::builtin(), {});
    CHECK(lax.extract("in Table 3 m was").size() == 1);
}

TEST_CASE("ranges give two extractions in order") {
    const auto r = run("a nominal current density of 1.3 A/cm^2 to 0.03 A/cm^2");
    REQUIRE(r.size() == 2);
    CHECK(r[0].span.end <= r[1].span.begin);
    CHECK(r[0].unit_key() == "A.cm^-2");
    CHECK(r[1].standardized.value.to_string() == "0.03");
}

TEST_CASE("spans point at the quantity") {
    const std::string s = "The pixel pitch employed was 352 µm.";
    const auto r = mqe().extract(s);
    REQUIRE(r.size() == 1);
    CHECK(s.substr(r[0].span.begin, r[0].span.size()) == "352 µm");
    CHECK(s.substr(r[0].number_span.begin, r[0].number_span.size()) == "352");
    CHECK(s.substr(r[0].unit_span.begin, r[0].unit_span.size()) == "µm");
}

TEST_CASE("percent is a unit") {
    const auto r = run("with 50 mL of 30% fuming sulfuric acid");
    REQUIRE(r.size() == 2);
    CHECK(r[1].unit_key() == "%");
}

TEST_CASE("signs, grouping and e-notation") {
    auto r = run("a drop of -40 °C and 10,000 U/mL and 2.5e-3 mol");
    REQUIRE(r.size() == 3);
    CHECK(r[0].standardized.value.to_string() == "-40");
    CHECK(r[1].unit_key() == "U.mL^-1");
    CHECK(r[1].standardized.value.to_string() == "10000");
    CHECK(r[2].standardized.value.to_string() == "0.0025");
}

TEST_CASE("determinism and component re-verification") {
    const std::string s = normalize_chars("values of 3.2 ± 0.1 kV, 7 mm and 1.5×10^3 Hz were seen").text;
    const auto a = mqe().extract(s);
    const auto b = mqe().extract(s);
    REQUIRE(a.size() == 3);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].span == b[i].span);
        CHECK(a[i].standardized == standardize(a[i].literal));
        CHECK(parse_number(s, a[i].number_span.begin).has_value());
        CHECK(match_unit(s, a[i].unit_span.begin, UnitCatalog::builtin()).has_value());
        if (i) CHECK(a[i - 1].span.end <= a[i].span.begin);
    }
}

}  // TEST_SUITE
