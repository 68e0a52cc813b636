#include "mqmine/service.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>

#include "httplib.h"

#include "mqmine/error.hpp"

namespace mqmine {

namespace {

const std::string* param(const QueryParams& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end()) return nullptr;
    return &it->second;
}

double parse_double(const std::string& name, const std::string& text) {
    if (text.empty()) throw NumberError(name + " must be a number");
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(v))
        throw NumberError(name + " must be a finite number, got '" + text + "'");
    return v;
}

std::size_t parse_count(const std::string& name, const std::string& text) {
    if (text.empty() || text.size() > 9 || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw NumberError(name + " must be a non-negative integer, got '" + text + "'");
    return static_cast<std::size_t>(std::stoul(text));
}

HttpResponse json_response(int status, const nlohmann::ordered_json& body) { return {status, body.dump(), "application/json"}; }

HttpResponse error_response(int status, const std::string& message) {
    nlohmann::ordered_json j;
    j["error"] = message;
    return json_response(status, j);
}

}  // namespace

Query parse_search_params(const QueryParams& params, const ServiceConfig& config) {
    Query q;
    q.page_size = config.page_size;
    if (auto v = param(params, "q"); v && !v->empty()) q.terms.push_back(*v);
    if (auto v = param(params, "unit"); v && !v->empty()) q.unit = *v;
    if (auto v = param(params, "property"); v && !v->empty()) q.property = *v;
    if (auto v = param(params, "vmin")) q.vmin = parse_double("vmin", *v);
    if (auto v = param(params, "vmax")) q.vmax = parse_double("vmax", *v);
    if (auto v = param(params, "page")) q.page = parse_count("page", *v);
    if (auto v = param(params, "page_size")) {
        q.page_size = parse_count("page_size", *v);
        if (q.page_size > config.max_page_size)
            throw QueryError("page_size may not exceed " + std::to_string(config.max_page_size));
    }
    q.validate();
    return q;
}

HttpResponse handle_request(const Index& index, const std::string& path, const QueryParams& params,
                            const ServiceConfig& config) {
    try {
        if (path == "/health") {
            nlohmann::ordered_json j;
            j["status"] = "ok";
            j["documents"] = index.size();
            return json_response(200, j);
        }
        if (path == "/facets") {
            nlohmann::ordered_json j;
            j["total"] = index.size();
            auto units = nlohmann::ordered_json::object();
            for (const auto& [k, n] : index.unit_facets()) units[k] = n;
            j["facets"]["units"] = std::move(units);
            return json_response(200, j);
        }
        if (path == "/search") {
            const auto q = parse_search_params(params, config);
            auto j = index.search(q).to_json();
            j["page"] = q.page;
            j["page_size"] = q.page_size;
            return json_response(200, j);
        }
        return error_response(404, "no such endpoint: " + path);
    } catch (const NumberError& e) {
        return error_response(422, e.what());
    } catch (const QueryError& e) {
        return error_response(400, e.what());
    } catch (const std::exception&) {
        return error_response(500, "internal error");
    }
}

struct SearchServer::Impl {
    Impl(const Index& i, ServiceConfig c) : index(i), config(std::move(c)) {}

    const Index& index;
    ServiceConfig config;
    httplib::Server server;
    int port = -1;
};

SearchServer::SearchServer(const Index& index, ServiceConfig config)
    : impl_(std::make_unique<Impl>(index, std::move(config))) {
    auto& impl = *impl_;
    auto handler = [&impl](const httplib::Request& req, httplib::Response& res) {
        QueryParams params(req.params.begin(), req.params.end());
        const auto r = handle_request(impl.index, req.path, params, impl.config);
        res.status = r.status;
        res.set_content(r.body, r.content_type);
        const auto origin = req.get_header_value("Origin");
        const auto& allow = impl.config.cors_allowlist;
        if (!origin.empty()) {
            if (std::find(allow.begin(), allow.end(), "*") != allow.end())
                res.set_header("Access-Control-Allow-Origin", "*");
            else if (std::find(allow.begin(), allow.end(), origin) != allow.end())
                res.set_header("Access-Control-Allow-Origin", origin);
        }
    };
    impl.server.Get("/search", handler);
    impl.server.Get("/facets", handler);
    impl.server.Get("/health", handler);
    if (!impl.config.static_dir.empty() && !impl.server.set_mount_point("/", impl.config.static_dir))
        throw Error("cannot serve static files from " + impl.config.static_dir);
    impl.server.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
        res.status = 500;
        res.set_content(R"({"error":"internal error"})", "application/json");
    });
}

SearchServer::~SearchServer() { stop(); }

int SearchServer::bind() {
    auto& impl = *impl_;
    if (impl.config.port == 0)
        impl.port = impl.server.bind_to_any_port(impl.config.host);
    else if (impl.server.bind_to_port(impl.config.host, impl.config.port))
        impl.port = impl.config.port;
    if (impl.port < 0 || (impl.config.port == 0 && impl.port == 0))
        throw Error("cannot bind " + impl.config.host + ":" + std::to_string(impl.config.port));
    return impl.port;
}

void SearchServer::listen() {
    if (impl_->port < 0) throw Error("listen() before bind()");
    impl_->server.listen_after_bind();
}

void SearchServer::wait_until_ready() const { impl_->server.wait_until_ready(); }

void SearchServer::stop() {
    if (impl_) impl_->server.stop();
}

}  // namespace mqmine
