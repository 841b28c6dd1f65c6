#include "lstree/service.hpp"

#include <charconv>
#include <cmath>
#include <regex>

#include <httplib.h>

#include "lstree/errors.hpp"
#include "lstree/labeling.hpp"
#include "lstree/layout.hpp"

namespace lstree {
namespace {

using nlohmann::json;

Response ok(const json& doc) { return {200, canonical_json(doc)}; }

Response error(int status, const std::string& message) {
  return {status, canonical_json(json{{"error", message}})};
}

std::optional<std::string> param(const Query& query, const std::string& key) {
  const auto it = query.find(key);
  if (it == query.end()) return std::nullopt;
  return it->second;
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw usage_error("parameter '" + key + "' is not a valid number: '" + text + "'");
  }
  return value;
}

double require_threshold(const Query& query) {
  const auto text = param(query, "threshold");
  if (!text) throw usage_error("missing parameter 'threshold'");
  const double t = parse_number<double>("threshold", *text);
  if (!std::isfinite(t)) throw usage_error("parameter 'threshold' must be finite");
  return t;
}

CutScale cut_scale(const Query& query) {
  const auto text = param(query, "scale").value_or("alpha");
  if (text == "alpha") return CutScale::alpha;
  if (text == "lambda") return CutScale::lambda;
  throw usage_error("unknown cut scale '" + text + "' (expected lambda or alpha)");
}

json labeling_json(const Labeling& labeling, std::size_t n) {
  json doc = to_json(labeling);
  doc["full_labels"] = labeling.full_labels(n);
  return doc;
}

template <class Tree>
Response members(const Tree& tree, int id) {
  const auto it = tree.nodes.find(id);
  if (it == tree.nodes.end()) return error(404, "unknown node id " + std::to_string(id));
  return ok({{"id", id}, {"size", it->second.size()}, {"members", it->second.members}});
}

}  // namespace

Session::Session(TreeArtifact artifact)
    : artifact_(std::move(artifact)), artifact_body_(serialize_artifact(artifact_)) {}

Response Session::handle(const std::string& path, const Query& query) const {
  static const std::regex node_path(R"(/node/(-?[0-9]+)/members)");
  try {
    if (path == "/artifact") return {200, artifact_body_};
    if (path == "/layout") {
      const bool cd = artifact_.kind() == TreeKind::cd;
      const auto scale = parse_layout_scale(param(query, "scale").value_or(cd ? "radius" : "lambda"));
      return ok(to_json(cd ? layout_dendrogram(artifact_.cd().tree, scale)
                           : layout_dendrogram(artifact_.geometric().tree, scale)));
    }
    std::smatch match;
    if (std::regex_match(path, match, node_path)) {
      const int id = parse_number<int>("id", match[1].str());
      return artifact_.kind() == TreeKind::cd ? members(artifact_.cd().tree, id)
                                              : members(artifact_.geometric().tree, id);
    }
    if (path == "/labels") return labels(query);
    if (path == "/upperset") return upperset(query);
    return error(404, "no such endpoint: " + path);
  } catch (const usage_error& e) {
    return error(400, e.what());
  } catch (const data_error& e) {
    return error(400, e.what());
  }
}

Response Session::labels(const Query& query) const {
  const auto method = param(query, "method").value_or("all-mode");
  const std::size_t n = artifact_.n;
  if (method == "all-mode") {
    return ok(labeling_json(artifact_.kind() == TreeKind::cd
                                ? label_all_mode(artifact_.cd().tree)
                                : label_all_mode(artifact_.geometric().tree),
                            n));
  }
  if (method == "first-k") {
    const auto text = param(query, "k_clusters");
    if (!text) throw usage_error("first-k needs parameter 'k_clusters'");
    const auto k = parse_number<std::size_t>("k_clusters", *text);
    return ok(labeling_json(artifact_.kind() == TreeKind::cd
                                ? label_first_k(artifact_.cd().tree, k)
                                : label_first_k(artifact_.geometric().tree, k),
                            n));
  }
  if (method == "upper-set") return upperset(query);
  throw usage_error("unknown method '" + method + "' (expected all-mode, first-k or upper-set)");
}

Response Session::upperset(const Query& query) const {
  if (artifact_.kind() == TreeKind::cd) {
    throw usage_error("upper-set labeling needs a density and is not available for CD trees");
  }
  const auto& g = artifact_.geometric();
  const double threshold = require_threshold(query);
  return ok(labeling_json(label_upper_set(g.tree, g.fhat, threshold, cut_scale(query)), artifact_.n));
}

struct SessionServer::Impl {
  std::shared_ptr<const Session> session;
  httplib::Server server;
};

SessionServer::SessionServer(std::shared_ptr<const Session> session,
                             std::optional<std::string> static_dir)
    : impl_(std::make_unique<Impl>()) {
  impl_->session = std::move(session);
  if (static_dir && !impl_->server.set_mount_point("/", *static_dir)) {
    throw data_error("cli_service", "static directory '" + *static_dir + "' does not exist");
  }
  const auto serve = [session = impl_->session](const httplib::Request& req, httplib::Response& res) {
    Query query;
    for (const auto& [key, value] : req.params) query.emplace(key, value);
    const Response out = session->handle(req.path, query);
    res.status = out.status;
    res.set_content(out.body, "application/json");
  };
  impl_->server.Get("/artifact", serve);
  impl_->server.Get("/layout", serve);
  impl_->server.Get(R"(/node/(-?\d+)/members)", serve);
  impl_->server.Get("/labels", serve);
  impl_->server.Get("/upperset", serve);
}

SessionServer::~SessionServer() = default;

int SessionServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw data_error("cli_service", "could not bind to " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port)) {
    throw data_error("cli_service", "could not bind to " + host + ":" + std::to_string(port));
  }
  return port;
}

void SessionServer::run() { impl_->server.listen_after_bind(); }

void SessionServer::stop() { impl_->server.stop(); }

}  // namespace lstree
