#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <httplib.h>

#include "weblens/domain.hpp"
#include "weblens/error.hpp"
#include "weblens/scene.hpp"

namespace weblens {

namespace detail {

inline void send_json(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

}  // namespace detail

/// Registers the JSON API on `server`, plus static files from `ui_dir`
/// at `/` when given. `engine` must outlive the server.
///
///   GET /api/v1/health
///   GET /api/v1/scene/{domain}?direction=&hops=&labels=&mode=&seed=
inline void install_routes(httplib::Server& server, const SceneEngine& engine,
                           const std::optional<std::filesystem::path>& ui_dir = std::nullopt) {
  server.Get("/api/v1/health", [&engine](const httplib::Request&, httplib::Response& res) {
    detail::send_json(res, 200, health_json(engine.store()));
  });

  server.Get(R"(/api/v1/scene/([^/]+))", [&engine](const httplib::Request& req,
                                                   httplib::Response& res) {
    try {
      const Domain center = normalize_domain(req.matches[1].str());
      std::multimap<std::string, std::string> params(req.params.begin(), req.params.end());
      const auto opts = parse_scene_options(params, engine.settings().layout_seed);
      detail::send_json(res, 200, to_json(engine.scene(center, opts), engine.store()));
    } catch (const MalformedDomain& e) {
      detail::send_json(res, 400, {{"error", e.what()}});
    } catch (const InvalidArgument& e) {
      detail::send_json(res, 400, {{"error", e.what()}});
    }
  });

  if (ui_dir && !server.set_mount_point("/", ui_dir->string())) {
    throw Error("UI directory does not exist: " + ui_dir->string());
  }
}

}  // namespace weblens
