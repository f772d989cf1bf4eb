#pragma once

#include <chrono>
#include <string>

#include <httplib.h>
#include <json.hpp>

#include "pirank/service.hpp"

namespace pirank {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::size_t max_args = kDefaultMaxArguments;
  std::chrono::milliseconds timeout{10000};
};

/// Stateless JSON solve endpoint:
///   GET  /healthz    -> 200 "ok"
///   POST /api/solve  -> 200 response | 400 malformed | 413 too large | 504 timeout
class SolveService {
 public:
  explicit SolveService(ServiceConfig config) : config_(std::move(config)) {
    server_.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("ok", "text/plain");
    });
    server_.Post("/api/solve", [this](const httplib::Request& req, httplib::Response& res) {
      handle_solve(req, res);
    });
  }

  /// Binds to an ephemeral port and returns it; -1 on failure.
  int bind_any() { return server_.bind_to_any_port(config_.host); }
  bool bind() { return server_.bind_to_port(config_.host, config_.port); }
  bool listen_after_bind() { return server_.listen_after_bind(); }
  bool listen() { return server_.listen(config_.host, config_.port); }
  void stop() { server_.stop(); }
  void wait_until_ready() { server_.wait_until_ready(); }
  bool is_running() const { return server_.is_running(); }

  const ServiceConfig& config() const noexcept { return config_; }

  /// Maps a request body to (status, JSON body). Exposed for direct testing.
  std::pair<int, std::string> solve(const std::string& body) const {
    const auto start = std::chrono::steady_clock::now();
    std::string task = "unknown";
    try {
      const auto parsed = nlohmann::json::parse(body);
      if (parsed.is_object() && parsed.contains("task") && parsed["task"].is_string())
        task = parsed["task"].get<std::string>();
      const auto request = parse_solve_request(parsed, config_.max_args);
      return {200, solve_response(request, Deadline::after(config_.timeout)).dump()};
    } catch (const nlohmann::json::exception& e) {
      return {400, error_body("malformed-request", e.what())};
    } catch (const LimitError& e) {
      return {413, error_body("too-large", e.what())};
    } catch (const BudgetExceeded&) {
      Json partial;
      partial["status"] = "budget-exceeded";
      partial["task"] = task;
      partial["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
      partial["timeout_ms"] = config_.timeout.count();
      return {504, partial.dump()};
    } catch (const Error& e) {
      return {400, error_body("malformed-request", e.what())};
    }
  }

 private:
  static std::string error_body(const std::string& status, const std::string& message) {
    Json j;
    j["status"] = status;
    j["error"] = message;
    return j.dump();
  }

  void handle_solve(const httplib::Request& req, httplib::Response& res) const {
    auto [status, body] = solve(req.body);
    res.status = status;
    res.set_content(body, "application/json");
  }

  ServiceConfig config_;
  httplib::Server server_;
};

}  // namespace pirank
