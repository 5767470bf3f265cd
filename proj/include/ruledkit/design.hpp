#pragma once

#include "ruledkit/bezier.hpp"
#include "ruledkit/closedinv.hpp"
#include "ruledkit/liftfield.hpp"

#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>

namespace ruledkit {

/// One design job as carried by POST /api/design.
struct DesignRequest {
    BezierPath2 net;
    LiftField field;
    std::string u_bar = "0";
    std::string v_bar = "0";
    int samples = 128;
    double w_min = -1.0;
    double w_max = 1.0;
    int mesh_nt = 128;
    int mesh_nw = 8;
};

/// Throws ParseError for malformed JSON, bad counts or bad expressions.
DesignRequest parse_design_request(std::string_view body);

struct DesignResult {
    int status = 200;
    nlohmann::json body;
};

/// Full pipeline. 400 for parse errors, 422 for open nets or fully
/// degenerate geometry, 200 with warnings otherwise. Never throws.
DesignResult handle_design(std::string_view body);

nlohmann::json validation_to_json(const ValidationReport& report);
nlohmann::json integrals_to_json(const IntegralInvariants& inv);
nlohmann::json health_json();

/// Compact JSON text with every floating-point number in the 17-digit
/// format; non-finite numbers become null.
std::string dump_json(const nlohmann::json& doc);

/// HTTP front end; routes /api/design and /api/health with CORS headers.
class DesignServer {
public:
    DesignServer();
    ~DesignServer();
    DesignServer(const DesignServer&) = delete;
    DesignServer& operator=(const DesignServer&) = delete;

    /// Port 0 picks a free port. Returns false when the port is taken.
    bool bind(const std::string& host, int port);
    int port() const;
    /// Blocks until stop().
    void run();
    void stop();
    void wait_until_ready() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

} // namespace ruledkit
