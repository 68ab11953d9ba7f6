#pragma once

#include <map>
#include <memory>
#include <string>

namespace psp {

constexpr int kDefaultPort = 7311;

struct HttpReply {
  int status = 200;
  std::string body;
};

// Pure request handler: same path and parameters give the same bytes.
HttpReply handle_request(const std::string& path, const std::map<std::string, std::string>& params);

// Access-Control-Allow-Origin value for an Origin header, empty when not allowed.
std::string cors_origin(const std::string& origin);

// Blocks until stopped. Binds 127.0.0.1 only.
void serve(int port);

// Runs the server on a background thread; port 0 picks a free one.
class BackgroundServer {
 public:
  explicit BackgroundServer(int port = 0);
  ~BackgroundServer();
  BackgroundServer(const BackgroundServer&) = delete;
  BackgroundServer& operator=(const BackgroundServer&) = delete;

  int port() const;
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace psp
