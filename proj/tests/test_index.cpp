#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "index_oracle.hpp"
#include "mqmine/error.hpp"
#include "mqmine/index.hpp"
#include "mqmine/synth.hpp"
#include "tempdir.hpp"

using namespace mqmine;
namespace fs = std::filesystem;

namespace {

const std::vector<ExtractionRecord>& records() {
    static const auto r = [] {
        const auto c = synth_documents(31, {1000, 20, 3});
        return Pipeline().run_all(c.documents);
    }();
    return r;
}

const Index& index() {
    static const Index i = Index::build(records());
    return i;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExtractionRecord rec(std::string doc, std::size_t s, std::string text, std::string value, std::string unit,
                     std::optional<std::string> prop = std::nullopt) {
    ExtractionRecord r{std::move(doc), s, std::move(text), {{value, std::nullopt, unit, unit, {0, 1}}}, {}};
    if (prop) r.properties.push_back({*prop, 0, "P4", {0, 1}});
    return r;
}

}  // namespace

TEST_SUITE("index") {

TEST_CASE("analyzer") {
    CHECK(analyze_terms("The Pixel-pitch, 352 µm!") == std::vector<std::string>{"the", "pixel", "pitch", "352", "µm"});
    CHECK(analyze_terms("").empty());
    CHECK(std::is_sorted(default_stopwords().begin(), default_stopwords().end()));
}

TEST_CASE("query validation") {
    Query q;
    q.vmin = 1;
    CHECK_THROWS_AS(q.validate(), QueryError);
    q.unit = "m";
    CHECK_NOTHROW(q.validate());
    q.vmax = INFINITY;
    CHECK_THROWS_AS(q.validate(), QueryError);
    Query p;
    p.page = 0;
    CHECK_THROWS_AS(p.validate(), QueryError);
}

TEST_CASE("agrees with a linear scan on random queries") {
    const oracle::LinearIndex lin(records());
    REQUIRE(index().size() == lin.docs().size());
    std::size_t nonempty = 0, ranged = 0;
    for (const auto& q : oracle::random_queries(lin, 77, 150)) {
        const auto why = oracle::check_query(index(), lin, q);
        CHECK_MESSAGE(why.empty(), why);
        const auto total = index().search(q).total;
        nonempty += total > 0;
        ranged += total > 0 && (q.vmin || q.vmax);
    }
    CHECK(nonempty >= 50);
    CHECK(ranged >= 5);
}

TEST_CASE("pages partition the ranking") {
    Query q;
    q.terms = {"temperature"};
    q.page_size = 1000;
    const auto all = index().search(q);
    REQUIRE(all.total > 7);
    std::vector<std::string> paged;
    for (std::size_t page = 1;; ++page) {
        q.page = page;
        q.page_size = 7;
        const auto r = index().search(q);
        if (r.hits.empty()) break;
        for (const auto& h : r.hits) paged.push_back(h.doc_id);
    }
    REQUIRE(paged.size() == all.hits.size());
    for (std::size_t i = 0; i < paged.size(); ++i) CHECK(paged[i] == all.hits[i].doc_id);
}

TEST_CASE("range bounds are inclusive and narrowing never adds hits") {
    const auto idx = Index::build({rec("a", 0, "x 5 m", "5", "m"), rec("b", 0, "x 7 m", "7", "m"),
                                   rec("c", 0, "x 9 m", "9", "m")});
    Query q;
    q.unit = "m";
    q.vmin = 5;
    q.vmax = 7;
    CHECK(idx.search(q).total == 2);
    q.vmin = 7;
    CHECK(idx.search(q).total == 1);
    q.vmin = 7.5;
    CHECK(idx.search(q).total == 0);

    const oracle::LinearIndex lin(records());
    for (auto wide : oracle::random_queries(lin, 5, 60)) {
        if (!wide.unit) continue;
        auto narrow = wide;
        narrow.vmin = wide.vmin.value_or(-1e300) + 1;
        CHECK(index().search(narrow).total <= index().search(wide).total);
        auto more = wide;
        more.terms.push_back("the");
        CHECK(index().search(more).total <= index().search(wide).total);
    }
}

TEST_CASE("snippets highlight query terms") {
    Query q;
    q.terms = {"temperature"};
    const auto r = index().search(q);
    REQUIRE_FALSE(r.hits.empty());
    CHECK(r.hits[0].snippets[0].find("<em>") != std::string::npos);
}

TEST_CASE("empty index") {
    const auto idx = Index::build({});
    const auto r = idx.search(Query{});
    CHECK(r.total == 0);
    CHECK(r.hits.empty());
    CHECK(r.units.empty());
    CHECK(idx.top_terms(Query{}, 5).empty());
}

TEST_CASE("duplicate sentence records conflict") {
    CHECK_THROWS_AS(Index::build({rec("a", 0, "x 5 m", "5", "m"), rec("a", 0, "x 6 m", "6", "m")}), ConflictError);
}

TEST_CASE("top terms") {
    CHECK(index().top_terms(Query{}, 0).empty());
    const auto t = index().top_terms(Query{}, 5);
    CHECK(t.size() == 5);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1].second >= t[i].second);
    for (const auto& [w, n] : t) CHECK_FALSE(std::binary_search(default_stopwords().begin(), default_stopwords().end(), w));
}

TEST_CASE("property filter and facets") {
    const auto idx = Index::build({rec("a", 0, "penicillin 5 U/mL", "5", "U.mL^-1", "Penicillin"),
                                   rec("b", 0, "heparin 7 U/mL", "7", "U.mL^-1", "heparin"),
                                   rec("b", 1, "mass 7 g", "7", "g")});
    Query q;
    q.property = "the penicillin";
    const auto r = idx.search(q);
    REQUIRE(r.total == 1);
    CHECK(r.hits[0].doc_id == "a");
    REQUIRE(r.properties.size() == 1);
    CHECK(r.properties[0].first == "penicillin");
    Query u;
    u.unit = "U.mL^-1";
    const auto ru = idx.search(u);
    CHECK(ru.total == 2);
    CHECK(ru.min->exact == "5");
    CHECK(ru.max->exact == "7");
    CHECK(idx.unit_facets() == FacetCounts{{"U.mL^-1", 2}, {"g", 1}});
}

TEST_CASE("persist and load") {
    TempDir a, b;
    index().persist(a.str());
    index().persist(b.str());
    for (const char* f : {"manifest.bin", "docs.bin", "postings.bin", "numeric.bin"})
        CHECK_MESSAGE(slurp(a.path() / f) == slurp(b.path() / f), f);
    const auto loaded = Index::load(a.str());
    CHECK(loaded.size() == index().size());
    const oracle::LinearIndex lin(records());
    for (const auto& q : oracle::random_queries(lin, 91, 60)) CHECK(loaded.search(q).to_json() == index().search(q).to_json());
}

TEST_CASE("load failures") {
    TempDir empty;
    CHECK_THROWS_AS(Index::load(empty.str()), LoadError);
    CHECK_THROWS_AS(Index::load(empty.str() + "/missing"), LoadError);

    TempDir d;
    index().persist(d.str());
    auto manifest = slurp(d.path() / "manifest.bin");
    manifest[4] = static_cast<char>(manifest[4] + 1);  // version field
    std::ofstream(d.path() / "manifest.bin", std::ios::binary | std::ios::trunc) << manifest;
    CHECK_THROWS_AS(Index::load(d.str()), LoadError);

    TempDir t;
    index().persist(t.str());
    const auto docs = slurp(t.path() / "docs.bin");
    std::ofstream(t.path() / "docs.bin", std::ios::binary | std::ios::trunc) << docs.substr(0, docs.size() / 2);
    CHECK_THROWS_AS(Index::load(t.str()), LoadError);
}

}  // TEST_SUITE
