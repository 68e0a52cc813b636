#include "doctest.h"

#include <random>
#include <sstream>

#include "mqmine/corpus.hpp"
#include "mqmine/error.hpp"
#include "mqmine/synth.hpp"
#include "tempdir.hpp"

using namespace mqmine;

TEST_SUITE("corpus") {

TEST_CASE("read_corpus walks files in path order") {
    TempDir dir;
    dir.write("b.txt", "second");
    dir.write("a.txt", "first");
    dir.write("sub/c.txt", "third");
    dir.write("bin.dat", std::string("ab\0cd", 5));
    const auto r = read_corpus(dir.str());
    REQUIRE(r.documents.size() == 3);
    CHECK(r.documents[0].id == "a.txt");
    CHECK(r.documents[1].id == "b.txt");
    CHECK(r.documents[2].id == "sub/c.txt");
    CHECK(r.documents[2].text == "third");
    REQUIRE(r.errors.size() == 1);
    CHECK(r.errors[0].path == "bin.dat");
}

TEST_CASE("empty and missing directories") {
    TempDir dir;
    const auto r = read_corpus(dir.str());
    CHECK(r.documents.empty());
    CHECK(r.errors.empty());
    CHECK_THROWS_AS(read_corpus(dir.str() + "/does-not-exist"), LoadError);
}

TEST_CASE("invalid UTF-8 is replaced") {
    TempDir dir;
    dir.write("x.txt", "bad \xff byte");
    const auto r = read_corpus(dir.str());
    REQUIRE(r.documents.size() == 1);
    CHECK(r.documents[0].text == "bad \xEF\xBF\xBD byte");
}

TEST_CASE("run_pipeline on a small document") {
    const auto recs = run_pipeline({"d1", "The pixel pitch employed was 352 µm. Nothing here. It reached 12 °C."});
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].doc_id == "d1");
    CHECK(recs[0].sentence_index == 0);
    CHECK(recs[1].sentence_index == 2);
    REQUIRE(recs[0].mqs.size() == 1);
    CHECK(recs[0].mqs[0].value == "352");
    CHECK(recs[0].mqs[0].unit_key == "um");
    CHECK(recs[0].mqs[0].unit_display == "µm");
    CHECK_FALSE(recs[0].mqs[0].error.has_value());
    REQUIRE(recs[0].properties.size() == 1);
    CHECK(recs[0].properties[0].text == "pixel pitch");
    CHECK(recs[0].properties[0].pattern_id == "P4");
    CHECK(recs[1].mqs[0].unit_key == "degC");
}

TEST_CASE("no quantities, no records") {
    CHECK(run_pipeline({"d", ""}).empty());
    CHECK(run_pipeline({"d", "Plain words only. More words."}).empty());
}

TEST_CASE("record spans and indices are consistent") {
    const auto docs = synth_documents(11, {60, 5, 4}).documents;
    for (const auto& d : docs) {
        for (const auto& r : run_pipeline(d)) {
            CHECK_FALSE(r.mqs.empty());
            for (const auto& q : r.mqs) CHECK(q.span.end <= r.sentence_text.size());
            for (const auto& p : r.properties) {
                CHECK(p.mq_index < r.mqs.size());
                CHECK(p.span.end <= r.sentence_text.size());
            }
        }
    }
}

TEST_CASE("JSON lines round trip") {
    const auto docs = synth_documents(5, {40, 3, 3}).documents;
    std::vector<ExtractionRecord> all;
    for (const auto& d : docs)
        for (auto& r : run_pipeline(d)) all.push_back(std::move(r));
    REQUIRE_FALSE(all.empty());
    std::stringstream ss;
    for (const auto& r : all) ss << to_jsonl_line(r) << '\n';
    const auto back = read_records(ss);
    CHECK(back == all);
}

TEST_CASE("malformed records") {
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse(R"({"doc_id": 3})")), ParseError);
    CHECK_THROWS_AS(record_from_json(nlohmann::json::parse(
                        R"({"doc_id":"a","sentence_index":-1,"sentence_text":"","mqs":[],"properties":[]})")),
                    ParseError);
    std::stringstream bad("{not json\n");
    CHECK_THROWS_AS(read_records(bad), ParseError);
}

TEST_CASE("the pipeline is total over arbitrary bytes") {
    std::mt19937_64 rng(99);
    const std::vector<std::string> pieces = {"5", " m", "±", "×10", "^-", "°C", "µ", "(", ")", "=", "the ", "of ",
                                             ". ", "\n", "Â", "â€", "-", ",", "e", "%", "/"};
    for (int i = 0; i < 500; ++i) {
        std::string text;
        const int len = static_cast<int>(rng() % 40);
        for (int k = 0; k < len; ++k) {
            if (rng() % 4 == 0) text.push_back(static_cast<char>(rng() % 256));
            else text += pieces[rng() % pieces.size()];
        }
        CHECK_NOTHROW(run_pipeline({"r", text}));
    }
}

TEST_CASE("parallel run keeps document order") {
    const auto docs = synth_documents(21, {120, 6, 3}).documents;
    const Pipeline p;
    std::vector<ExtractionRecord> sequential;
    for (const auto& d : docs)
        for (auto& r : p.run(d)) sequential.push_back(std::move(r));
    PipelineStats stats;
    const auto parallel = p.run_all(docs, 4, &stats);
    CHECK(parallel == sequential);
    CHECK(stats.documents == docs.size());
    CHECK(stats.mqs > 0);
    CHECK(p.run_all(docs, 1) == sequential);
}

}  // TEST_SUITE
