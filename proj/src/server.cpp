#include "ruledkit/design.hpp"

#include <httplib.h>

#include <atomic>

namespace ruledkit {

struct DesignServer::Impl {
    httplib::Server http;
    std::atomic<int> port{-1};
};

namespace {

void add_cors(httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
}

} // namespace

DesignServer::DesignServer() : impl_(std::make_unique<Impl>()) {
    auto& http = impl_->http;
    // httplib also sets SO_REUSEPORT, which would let a second server share
    // a busy port instead of failing to bind.
    http.set_socket_options([](socket_t sock) {
        int yes = 1;
        ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes), sizeof(yes));
    });
    http.Post("/api/design", [](const httplib::Request& req, httplib::Response& res) {
        const DesignResult result = handle_design(req.body);
        res.status = result.status;
        res.set_content(dump_json(result.body), "application/json");
    });
    http.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
        res.set_content(dump_json(health_json()), "application/json");
    });
    http.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    http.set_post_routing_handler([](const httplib::Request&, httplib::Response& res) { add_cors(res); });
}

DesignServer::~DesignServer() { stop(); }

bool DesignServer::bind(const std::string& host, int port) {
    int bound = port == 0 ? impl_->http.bind_to_any_port(host) : (impl_->http.bind_to_port(host, port) ? port : -1);
    impl_->port = bound;
    return bound > 0;
}

int DesignServer::port() const { return impl_->port; }

void DesignServer::run() { impl_->http.listen_after_bind(); }

void DesignServer::stop() {
    if (impl_) impl_->http.stop();
}

void DesignServer::wait_until_ready() const { impl_->http.wait_until_ready(); }

} // namespace ruledkit
