#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include "lstree/artifact.hpp"

namespace lstree {

struct Response {
  int status = 200;
  std::string body;  // JSON

  bool operator==(const Response&) const = default;
};

using Query = std::map<std::string, std::string>;

/// Read-only view over one artifact. handle() is a pure function of
/// (artifact, path, query) and is safe to call from many threads.
///
///   GET /artifact
///   GET /layout?scale=lambda|alpha|kappa|radius
///   GET /node/{id}/members
///   GET /labels?method=all-mode|first-k|upper-set&k_clusters=K&threshold=t&scale=lambda|alpha
///   GET /upperset?threshold=t&scale=lambda|alpha
///
/// Bad parameters give 400, unknown paths and node ids 404; error bodies are
/// {"error": message}.
class Session {
 public:
  explicit Session(TreeArtifact artifact);

  const TreeArtifact& artifact() const noexcept { return artifact_; }
  Response handle(const std::string& path, const Query& query) const;

 private:
  Response labels(const Query& query) const;
  Response upperset(const Query& query) const;

  TreeArtifact artifact_;
  std::string artifact_body_;
};

/// HTTP front end for a Session on a loopback socket.
class SessionServer {
 public:
  /// static_dir, when given, is served under / for the browser explorer.
  SessionServer(std::shared_ptr<const Session> session, std::optional<std::string> static_dir = {});
  ~SessionServer();
  SessionServer(const SessionServer&) = delete;
  SessionServer& operator=(const SessionServer&) = delete;

  /// Binds to host:port; port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop() is called.
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lstree
