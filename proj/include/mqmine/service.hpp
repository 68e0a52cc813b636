#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "mqmine/error.hpp"
#include "mqmine/index.hpp"

namespace mqmine {

struct ServiceConfig {
    std::string index_dir;
    std::string host = "127.0.0.1";
    int port = 8080;  // 0 picks a free port
    std::size_t page_size = 10;
    std::size_t max_page_size = 1000;
    std::vector<std::string> cors_allowlist;  // "*" allows any origin
    std::string static_dir;  // served under / when set
};

/// A query parameter that is not a well-formed number.
class NumberError : public Error {
public:
    using Error::Error;
};

using QueryParams = std::multimap<std::string, std::string>;

struct HttpResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

/// Query parameters q, unit, vmin, vmax, property, page, page_size.
/// Throws QueryError for semantic problems and NumberError for values that
/// do not parse.
Query parse_search_params(const QueryParams& params, const ServiceConfig& config);

/// Answers GET /search, /facets and /health without any networking, so the
/// HTTP server and tests share one code path.
HttpResponse handle_request(const Index& index, const std::string& path, const QueryParams& params,
                            const ServiceConfig& config);

class SearchServer {
public:
    SearchServer(const Index& index, ServiceConfig config);
    ~SearchServer();
    SearchServer(const SearchServer&) = delete;
    SearchServer& operator=(const SearchServer&) = delete;

    /// Binds the socket and returns the bound port. Throws Error on failure.
    int bind();
    /// Serves until stop() is called. bind() must have succeeded.
    void listen();
    /// Blocks until a concurrent listen() accepts connections.
    void wait_until_ready() const;
    /// Safe to call from another thread.
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace mqmine
