#include "psp/service.hpp"

#include <httplib.h>

#include <charconv>
#include <optional>
#include <thread>

#include "psp/formulas.hpp"
#include "psp/render.hpp"
#include "psp/search.hpp"

namespace psp {

namespace {

constexpr i64 kMaxA3 = 100000;
constexpr i64 kMaxN = 10000;
constexpr double kMaxWork = 4e8;
constexpr i64 kMaxScanS = 300;
constexpr i64 kMaxMoptS = 1000000;
constexpr i64 kMaxSearchP = 12;

struct HttpError {
  int status;
  std::string message;
};

HttpReply json_reply(int status, const Json& j) { return {status, j.dump()}; }

HttpReply error_reply(const HttpError& e) { return json_reply(e.status, Json{{"error", e.message}}); }

std::optional<i64> parse_int(const std::map<std::string, std::string>& q, const std::string& key, bool required) {
  auto it = q.find(key);
  if (it == q.end()) {
    if (required) throw HttpError{400, "missing parameter " + key};
    return std::nullopt;
  }
  const std::string& v = it->second;
  i64 x = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() || x < 0)
    throw HttpError{400, "parameter " + key + " must be a non-negative integer"};
  return x;
}

HttpReply do_analyze(const std::map<std::string, std::string>& q) {
  i64 a2 = *parse_int(q, "a2", true);
  i64 a3 = *parse_int(q, "a3", true);
  i64 n = *parse_int(q, "n", true);
  auto s = parse_int(q, "s", false);
  if (a2 <= 1 || a2 >= a3) throw HttpError{422, "need 1 < a2 < a3"};
  if (n < 1) throw HttpError{422, "n must be at least 1"};
  if (s && *s < 1) throw HttpError{422, "s must be at least 1"};
  if (a3 > kMaxA3 || n > kMaxN) throw HttpError{413, "a3 or n above the request cap"};
  if (classify_work_estimate(Basis{a2, a3}, n) > kMaxWork) throw HttpError{413, "request too expensive"};
  return json_reply(200, analysis_json(analyze(Basis{a2, a3}, n, s)));
}

HttpReply do_osg(const std::map<std::string, std::string>& q) {
  i64 n = *parse_int(q, "n", true);
  i64 p = *parse_int(q, "p", true);
  if (n < 1) throw HttpError{422, "n must be at least 1"};
  if (n > kMaxN) throw HttpError{413, "n above the request cap"};
  Json j{{"n", n}, {"p", p}};
  if (p == 0) {
    Json rows = Json::array();
    for (const OsgRow& r : osg0(n)) rows.push_back(osg_json(r));
    j["rows"] = rows;
  } else if (p == 1) {
    OsgRow r = osg1(n);
    j["a2"] = r.a2;
    j["a3"] = r.a3;
    j["y"] = r.y;
    j["Y"] = r.y - 1;
    auto s1 = sg1_1(n);
    j["sg1"] = s1 ? osg_json(*s1) : Json(nullptr);
  } else {
    if (p > kMaxSearchP || n > Guards::from_env().n_max) throw HttpError{413, "search outside desk-scale limits"};
    auto b = best_osg(n, p);
    if (!b) throw HttpError{422, "no stride generator of that order"};
    j = best_osg_json(*b);
  }
  return json_reply(200, j);
}

HttpReply do_mopt(const std::map<std::string, std::string>& q) {
  i64 s = *parse_int(q, "s", true);
  if (s < kMoptMinS) throw HttpError{416, "closed form holds for s >= 18"};
  if (s > kMaxMoptS) throw HttpError{413, "s above the request cap"};
  Json j = mopt_json(mopt(s));
  j["maximal_set"] = maximal_set_json(maximal_set(s));
  return json_reply(200, j);
}

HttpReply do_scan(const std::map<std::string, std::string>& q) {
  i64 s = *parse_int(q, "s", true);
  if (s < 4) throw HttpError{422, "s must be at least 4"};
  if (s > kMaxScanS) throw HttpError{413, "s above the request cap"};
  return json_reply(200, scan_json(scan_osg1_cover(s)));
}

}  // namespace

HttpReply handle_request(const std::string& path, const std::map<std::string, std::string>& params) {
  try {
    if (path == "/health") return json_reply(200, Json{{"status", "ok"}});
    if (path == "/analyze") return do_analyze(params);
    if (path == "/osg") return do_osg(params);
    if (path == "/mopt") return do_mopt(params);
    if (path == "/scan") return do_scan(params);
    return error_reply({404, "unknown endpoint"});
  } catch (const HttpError& e) {
    return error_reply(e);
  } catch (const InvalidInput& e) {
    return error_reply({422, e.what()});
  } catch (const RangeError& e) {
    return error_reply({416, e.what()});
  } catch (const OverflowError& e) {
    return error_reply({413, e.what()});
  }
}

std::string cors_origin(const std::string& origin) {
  for (const char* host : {"http://localhost", "http://127.0.0.1", "https://localhost", "https://127.0.0.1"}) {
    std::string h = host;
    if (origin == h || origin.rfind(h + ":", 0) == 0) return origin;
  }
  return "";
}

namespace {

void install_routes(httplib::Server& svr) {
  auto route = [](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> params;
    for (const auto& [k, v] : req.params) params.emplace(k, v);
    HttpReply r = handle_request(req.path, params);
    res.status = r.status;
    res.set_content(r.body, "application/json");
    std::string allow = cors_origin(req.get_header_value("Origin"));
    if (!allow.empty()) {
      res.set_header("Access-Control-Allow-Origin", allow);
      res.set_header("Vary", "Origin");
    }
  };
  for (const char* p : {"/health", "/analyze", "/osg", "/mopt", "/scan"}) svr.Get(p, route);
  svr.Options(R"(/.*)", [](const httplib::Request& req, httplib::Response& res) {
    std::string allow = cors_origin(req.get_header_value("Origin"));
    if (!allow.empty()) {
      res.set_header("Access-Control-Allow-Origin", allow);
      res.set_header("Access-Control-Allow-Methods", "GET, OPTIONS");
      res.set_header("Access-Control-Allow-Headers", "Content-Type");
    }
    res.status = 204;
  });
}

}  // namespace

void serve(int port) {
  httplib::Server svr;
  install_routes(svr);
  if (!svr.listen("127.0.0.1", port)) throw std::runtime_error("could not bind 127.0.0.1:" + std::to_string(port));
}

struct BackgroundServer::Impl {
  httplib::Server svr;
  std::thread worker;
  int port = 0;
};

BackgroundServer::BackgroundServer(int port) : impl_(std::make_unique<Impl>()) {
  install_routes(impl_->svr);
  if (port == 0) {
    impl_->port = impl_->svr.bind_to_any_port("127.0.0.1");
  } else {
    impl_->port = impl_->svr.bind_to_port("127.0.0.1", port) ? port : -1;
  }
  if (impl_->port <= 0) throw std::runtime_error("could not bind service port");
  impl_->worker = std::thread([this] { impl_->svr.listen_after_bind(); });
  impl_->svr.wait_until_ready();
}

BackgroundServer::~BackgroundServer() { stop(); }

int BackgroundServer::port() const { return impl_->port; }

void BackgroundServer::stop() {
  if (!impl_) return;
  impl_->svr.stop();
  if (impl_->worker.joinable()) impl_->worker.join();
}

}  // namespace psp
