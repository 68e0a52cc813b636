// mqmine: extract | index | serve | eval | search | synth

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <pthread.h>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "mqmine/corpus.hpp"
#include "mqmine/error.hpp"
#include "mqmine/eval.hpp"
#include "mqmine/index.hpp"
#include "mqmine/resources.hpp"
#include "mqmine/service.hpp"
#include "mqmine/synth.hpp"

namespace fs = std::filesystem;
using namespace mqmine;

namespace {

struct ModelFiles {
    std::string catalog;
    std::string patterns;
    std::string lexicon;
    std::string tag_rules;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--catalog", catalog, "Unit catalog file (default: packaged)")->check(CLI::ExistingFile);
        cmd->add_option("--patterns", patterns, "Property pattern file (default: packaged)")->check(CLI::ExistingFile);
        cmd->add_option("--lexicon", lexicon, "Tagger lexicon file (default: packaged)")->check(CLI::ExistingFile);
        cmd->add_option("--tag-rules", tag_rules, "Tagger rule file (default: packaged)")->check(CLI::ExistingFile);
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw LoadError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Owns whatever non-default models were requested.
struct Models {
    std::optional<UnitCatalog> catalog;
    std::optional<Tagger> tagger;
    std::unique_ptr<Pipeline> pipeline;

    explicit Models(const ModelFiles& f) {
        if (!f.catalog.empty()) catalog = UnitCatalog::load(f.catalog);
        if (!f.lexicon.empty() || !f.tag_rules.empty()) {
            const std::string lex = f.lexicon.empty() ? std::string(resource("lexicon.tsv")) : slurp(f.lexicon);
            const std::string rules = f.tag_rules.empty() ? std::string(resource("tag_rules.txt")) : slurp(f.tag_rules);
            tagger = Tagger::parse(lex, rules);
        }
        PropertyExtractor mpe = f.patterns.empty() ? PropertyExtractor{} : PropertyExtractor(load_patterns(f.patterns));
        pipeline = std::make_unique<Pipeline>(catalog ? *catalog : UnitCatalog::builtin(),
                                              tagger ? *tagger : Tagger::builtin(), std::move(mpe));
    }
};

int cmd_extract(const std::string& input, const std::string& output, const ModelFiles& files, unsigned threads) {
    Models models(files);
    auto corpus = read_corpus(input);
    for (const auto& e : corpus.errors) std::cerr << "warning: " << e.path << ": " << e.message << "\n";
    PipelineStats stats;
    const auto records = models.pipeline->run_all(corpus.documents, threads, &stats);
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + output);
    for (const auto& r : records) out << to_jsonl_line(r) << '\n';
    out.flush();
    if (!out) throw Error("write failed: " + output);
    std::cerr << "documents " << stats.documents << "\nsentences " << stats.sentences << "\nmqs " << stats.mqs
              << "\nproperties " << stats.properties << "\nfailed_sentences " << stats.failed_sentences
              << "\nunreadable_files " << corpus.errors.size() << "\n";
    for (const auto& [rule, n] : stats.rejections) std::cerr << "rejected_" << rule << " " << n << "\n";
    return 0;
}

int cmd_index(const std::string& records_path, const std::string& dir) {
    const auto index = Index::build(read_records_file(records_path));
    index.persist(dir);
    std::cerr << "indexed " << index.size() << " documents into " << dir << "\n";
    return 0;
}

int cmd_serve(ServiceConfig config) {
    if (!fs::is_directory(config.index_dir)) throw LoadError("index directory does not exist: " + config.index_dir);
    const auto index = Index::load(config.index_dir);

    // Signals are taken by a dedicated thread so shutdown runs outside a
    // signal handler.
    sigset_t set;
    sigemptyset(&set);
    sigaddset(&set, SIGINT);
    sigaddset(&set, SIGTERM);
    pthread_sigmask(SIG_BLOCK, &set, nullptr);

    SearchServer server(index, config);
    const int port = server.bind();
    std::cerr << "serving " << index.size() << " documents on http://" << config.host << ":" << port << "\n";
    std::thread watcher([&] {
        int sig = 0;
        sigwait(&set, &sig);
        std::cerr << "shutting down\n";
        server.wait_until_ready();
        server.stop();
    });
    server.listen();
    // listen() can also end on its own; wake the watcher so it exits.
    pthread_kill(watcher.native_handle(), SIGTERM);
    watcher.join();
    return 0;
}

struct EvalArgs {
    std::string mode = "MQ";
    std::uint64_t seed = 1;
    std::optional<std::size_t> n;
    std::optional<std::size_t> population;
    double corruption_prob = 0.3;
    std::optional<double> min_precision;
    std::optional<double> min_recall;
    bool json = false;
};

int cmd_eval(const EvalArgs& a, const ModelFiles& files) {
    Models models(files);
    const auto mode = parse_extractor(a.mode);
    // Sample sizes used for the two extractors in the original evaluation.
    const std::size_t n = a.n.value_or(mode == Extractor::MQE ? 1000 : 500);
    const std::size_t population = a.population.value_or(n * 4);
    const auto corpus = synth_corpus(a.seed, population, a.corruption_prob);
    std::vector<std::string> texts;
    texts.reserve(corpus.size());
    for (const auto& s : corpus) texts.push_back(s.text);
    const auto predicate = mode == Extractor::MQE ? SamplePredicate::has_number : SamplePredicate::has_mq;
    const auto picked = sample_sentences(texts, predicate, n, a.seed ^ 0x9e3779b97f4a7c15ULL, *models.pipeline);
    std::vector<LabeledSentence> sample;
    sample.reserve(picked.size());
    for (auto i : picked) sample.push_back(corpus[i]);
    const auto report = evaluate(sample, mode, *models.pipeline);
    if (a.json)
        std::cout << report.to_json().dump(2) << "\n";
    else
        std::cout << report.to_table();
    if (!meets_floors(report, {a.min_precision, a.min_recall})) {
        std::cerr << "floor violated\n";
        return 3;
    }
    return 0;
}

int cmd_search(const std::string& dir, const QueryParams& params) {
    const auto index = Index::load(dir);
    const auto r = handle_request(index, "/search", params, ServiceConfig{});
    std::cout << nlohmann::ordered_json::parse(r.body).dump(2) << "\n";
    return r.status == 200 ? 0 : 1;
}

int cmd_synth(std::uint64_t seed, const DocumentCorpusOptions& opt, const std::string& out_dir) {
    const auto corpus = synth_documents(seed, opt);
    fs::create_directories(out_dir);
    for (const auto& d : corpus.documents) {
        std::ofstream out(fs::path(out_dir) / (d.id + ".txt"), std::ios::binary | std::ios::trunc);
        out << d.text << '\n';
        if (!out) throw Error("cannot write into " + out_dir);
    }
    std::cerr << "wrote " << corpus.documents.size() << " documents (" << corpus.planted.size() << " planted) to "
              << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measured quantity and property mining"};
    app.require_subcommand(1);

    ModelFiles files;
    unsigned threads = 0;

    auto* extract = app.add_subcommand("extract", "Extract records from a directory of text files");
    std::string input, output;
    extract->add_option("input", input, "Corpus directory")->required();
    extract->add_option("-o,--output", output, "Record file (JSON lines)")->required();
    extract->add_option("--threads", threads, "Worker threads (0 = all cores)");
    files.add_to(extract);

    auto* index = app.add_subcommand("index", "Build a search index from a record file");
    std::string records, index_dir;
    index->add_option("records", records, "Record file")->required()->check(CLI::ExistingFile);
    index->add_option("--index-dir", index_dir, "Output index directory")->required();

    auto* serve = app.add_subcommand("serve", "Serve the search API over HTTP");
    ServiceConfig config;
    serve->add_option("--index-dir", config.index_dir, "Index directory")->required();
    serve->add_option("--port", config.port, "Port (0 = any free port)")->capture_default_str();
    serve->add_option("--host", config.host, "Bind address")->capture_default_str();
    serve->add_option("--page-size", config.page_size, "Default page size")->capture_default_str();
    serve->add_option("--cors", config.cors_allowlist, "Allowed CORS origins ('*' for any)");
    serve->add_option("--static-dir", config.static_dir, "Static files served under /")->check(CLI::ExistingDirectory);

    auto* eval = app.add_subcommand("eval", "Score an extractor on a synthetic labeled sample");
    EvalArgs ea;
    eval->add_option("--mode", ea.mode, "MQ or MP")->capture_default_str();
    eval->add_option("--seed", ea.seed, "Generator and sampling seed")->capture_default_str();
    eval->add_option("--n", ea.n, "Sample size (default 1000 for MQ, 500 for MP)");
    eval->add_option("--population", ea.population, "Synthetic population size (default 4n)");
    eval->add_option("--corruption-prob", ea.corruption_prob, "Per-transform corruption probability")
        ->capture_default_str();
    eval->add_option("--min-precision", ea.min_precision, "Exit 3 if precision falls below this");
    eval->add_option("--min-recall", ea.min_recall, "Exit 3 if recall falls below this");
    eval->add_flag("--json", ea.json, "Print the report as JSON");
    files.add_to(eval);

    auto* search = app.add_subcommand("search", "Query an index from the command line");
    std::string s_dir;
    std::string q, unit, property, vmin, vmax, page, page_size;
    search->add_option("--index-dir", s_dir, "Index directory")->required();
    search->add_option("-q,--query", q, "Search terms");
    search->add_option("--unit", unit, "Unit key filter, e.g. U.mL^-1");
    search->add_option("--vmin", vmin, "Inclusive lower bound");
    search->add_option("--vmax", vmax, "Inclusive upper bound");
    search->add_option("--property", property, "Property filter");
    search->add_option("--page", page, "Page number");
    search->add_option("--page-size", page_size, "Hits per page");

    auto* synth = app.add_subcommand("synth", "Write a synthetic document corpus");
    std::uint64_t synth_seed = 1;
    DocumentCorpusOptions opt;
    std::string synth_out;
    synth->add_option("--seed", synth_seed, "Generator seed")->capture_default_str();
    synth->add_option("--n", opt.n_docs, "Number of documents")->capture_default_str();
    synth->add_option("--planted", opt.planted_docs, "Documents with a planted U/mL measurement")->capture_default_str();
    synth->add_option("-o,--output-dir", synth_out, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*extract) return cmd_extract(input, output, files, threads);
        if (*index) return cmd_index(records, index_dir);
        if (*serve) return cmd_serve(config);
        if (*eval) return cmd_eval(ea, files);
        if (*search) {
            QueryParams params;
            auto put = [&](const char* k, const std::string& v, const CLI::Option* o) {
                if (o->count()) params.emplace(k, v);
            };
            put("q", q, search->get_option("--query"));
            put("unit", unit, search->get_option("--unit"));
            put("vmin", vmin, search->get_option("--vmin"));
            put("vmax", vmax, search->get_option("--vmax"));
            put("property", property, search->get_option("--property"));
            put("page", page, search->get_option("--page"));
            put("page_size", page_size, search->get_option("--page-size"));
            return cmd_search(s_dir, params);
        }
        if (*synth) return cmd_synth(synth_seed, opt, synth_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
