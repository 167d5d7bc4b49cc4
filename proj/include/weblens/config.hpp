#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "weblens/error.hpp"
#include "weblens/scene.hpp"

namespace weblens {

struct ListenAddress {
  std::string host;
  int port = 0;
};

inline ListenAddress parse_listen_address(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw InvalidArgument("listen address must be host:port, got '" + text + "'");
  }
  const std::string port_text = text.substr(colon + 1);
  std::size_t used = 0;
  int port = -1;
  try {
    port = std::stoi(port_text, &used);
  } catch (const std::exception&) {
  }
  if (used != port_text.size() || port < 0 || port > 65535) {
    throw InvalidArgument("invalid port in listen address '" + text + "'");
  }
  return {text.substr(0, colon), port};
}

struct ServiceConfig {
  std::filesystem::path sites_path;
  std::filesystem::path edges_path;
  std::filesystem::path mentions_path;
  std::string listen_address = "127.0.0.1:8080";
  double bot_threshold = kDefaultBotThreshold;
  std::uint64_t layout_seed = 0;
  std::size_t per_hop_cap = 100;
  std::optional<std::filesystem::path> ui_dir;
  std::vector<std::string> label_sources = default_label_sources();

  EngineSettings engine_settings() const {
    EngineSettings s;
    s.bot_threshold = bot_threshold;
    s.layout_seed = layout_seed;
    s.per_hop_cap = per_hop_cap;
    s.label_sources = label_sources;
    return s;
  }
};

/// Reads a JSON config file. Relative paths inside it resolve against the
/// directory holding the file.
inline ServiceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path.string(), e.what());
  }
  if (!j.is_object()) throw ParseError(path.string(), "config must be a JSON object");

  const auto base = path.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_relative() ? base / fp : fp;
  };

  ServiceConfig cfg;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "sites_path") {
        cfg.sites_path = resolve(value.get<std::string>());
      } else if (key == "edges_path") {
        cfg.edges_path = resolve(value.get<std::string>());
      } else if (key == "mentions_path") {
        cfg.mentions_path = resolve(value.get<std::string>());
      } else if (key == "listen_address") {
        cfg.listen_address = value.get<std::string>();
      } else if (key == "bot_threshold") {
        cfg.bot_threshold = value.get<double>();
      } else if (key == "layout_seed") {
        cfg.layout_seed = value.get<std::uint64_t>();
      } else if (key == "per_hop_cap") {
        cfg.per_hop_cap = value.get<std::size_t>();
      } else if (key == "ui_dir") {
        cfg.ui_dir = resolve(value.get<std::string>());
      } else if (key == "label_sources") {
        cfg.label_sources = value.get<std::vector<std::string>>();
      } else {
        throw ParseError(path.string(), "unknown config key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::type_error& e) {
    throw ParseError(path.string(), e.what());
  }
  return cfg;
}

/// Checks that every dataset path is readable and that numeric settings are
/// in range. Error messages name the offending path.
inline void validate(const ServiceConfig& cfg) {
  auto check = [](const std::filesystem::path& p, const char* what) {
    if (p.empty()) throw InvalidArgument(std::string(what) + " is not configured");
    std::ifstream in(p);
    if (!in) throw Error(std::string(what) + " is not readable: " + p.string());
  };
  check(cfg.sites_path, "sites file");
  check(cfg.edges_path, "edges file");
  check(cfg.mentions_path, "mentions file");
  if (cfg.per_hop_cap < 1) throw InvalidArgument("per_hop_cap must be at least 1");
  if (!(cfg.bot_threshold >= 0.0 && cfg.bot_threshold <= 1.0)) {
    throw InvalidArgument("bot_threshold must be in [0, 1]");
  }
  parse_listen_address(cfg.listen_address);
}

}  // namespace weblens
