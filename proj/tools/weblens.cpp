// weblens: dataset ingestion, offline scene rendering, and the HTTP service.
//
//   weblens [--config FILE] [overrides] ingest
//   weblens [--config FILE] [overrides] scene DOMAIN [--direction in|both] ...
//   weblens [--config FILE] [overrides] serve
//
// Without --config the WEBLENS_CONFIG environment variable is consulted.

#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "weblens/config.hpp"
#include "weblens/scene.hpp"
#include "weblens/server.hpp"
#include "weblens/store.hpp"

namespace {

struct Overrides {
  std::string config;
  std::optional<std::string> sites, edges, mentions, listen, ui_dir;
  std::optional<double> bot_threshold;
  std::optional<std::uint64_t> layout_seed;
  std::optional<std::size_t> per_hop_cap;
};

weblens::ServiceConfig resolve_config(const Overrides& o) {
  std::string path = o.config;
  if (path.empty()) {
    if (const char* env = std::getenv("WEBLENS_CONFIG"); env && *env) path = env;
  }
  weblens::ServiceConfig cfg = path.empty() ? weblens::ServiceConfig{} : weblens::load_config(path);
  if (o.sites) cfg.sites_path = *o.sites;
  if (o.edges) cfg.edges_path = *o.edges;
  if (o.mentions) cfg.mentions_path = *o.mentions;
  if (o.listen) cfg.listen_address = *o.listen;
  if (o.ui_dir) cfg.ui_dir = *o.ui_dir;
  if (o.bot_threshold) cfg.bot_threshold = *o.bot_threshold;
  if (o.layout_seed) cfg.layout_seed = *o.layout_seed;
  if (o.per_hop_cap) cfg.per_hop_cap = *o.per_hop_cap;
  weblens::validate(cfg);
  return cfg;
}

std::shared_ptr<const weblens::DataStore> load_store(const weblens::ServiceConfig& cfg) {
  return std::make_shared<const weblens::DataStore>(
      weblens::DataStore::load(cfg.sites_path, cfg.edges_path, cfg.mentions_path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weblens: explain a website's reliability from its hyperlink neighborhood"};
  app.require_subcommand(1);

  Overrides o;
  app.add_option("--config", o.config, "JSON config file (falls back to $WEBLENS_CONFIG)");
  app.add_option("--sites", o.sites, "sites.csv path");
  app.add_option("--edges", o.edges, "edges.csv path");
  app.add_option("--mentions", o.mentions, "mentions.jsonl path");
  app.add_option("--listen", o.listen, "host:port for serve");
  app.add_option("--ui-dir", o.ui_dir, "static UI bundle served at /");
  app.add_option("--bot-threshold", o.bot_threshold, "bot score cutoff in [0,1]");
  app.add_option("--layout-seed", o.layout_seed, "default layout seed");
  app.add_option("--per-hop-cap", o.per_hop_cap, "maximum nodes per ring");

  auto* ingest = app.add_subcommand("ingest", "validate datasets and report counts");
  auto* serve = app.add_subcommand("serve", "start the HTTP service");
  auto* scene = app.add_subcommand("scene", "print the scene document for a domain");

  std::string domain;
  std::optional<std::string> direction, hops, labels, mode, seed;
  bool compact = false;
  scene->add_option("domain", domain, "visited domain or URL")->required();
  scene->add_option("--direction", direction, "in | both");
  scene->add_option("--hops", hops, "1 | 2");
  scene->add_option("--labels", labels, "comma-separated subset of controversial,verified,unlabeled");
  scene->add_option("--mode", mode, "normalized | absolute");
  scene->add_option("--seed", seed, "layout seed override");
  scene->add_flag("--compact", compact, "single-line JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto cfg = resolve_config(o);

    if (ingest->parsed()) {
      const auto stats = load_store(cfg)->stats();
      std::cout << stats.sites << " labeled sites, " << stats.edges << " edges, " << stats.mentions
                << " mention records, " << stats.self_loops_dropped << " self-loops dropped\n";
      return 0;
    }

    if (scene->parsed()) {
      weblens::SceneEngine engine(load_store(cfg), cfg.engine_settings());
      std::multimap<std::string, std::string> params;
      if (direction) params.emplace("direction", *direction);
      if (hops) params.emplace("hops", *hops);
      if (labels) params.emplace("labels", *labels);
      if (mode) params.emplace("mode", *mode);
      if (seed) params.emplace("seed", *seed);
      const auto opts = weblens::parse_scene_options(params, cfg.layout_seed);
      const auto doc = engine.scene(weblens::normalize_domain(domain), opts);
      std::cout << weblens::to_json(doc, engine.store()).dump(compact ? -1 : 2) << '\n';
      return 0;
    }

    if (serve->parsed()) {
      const auto addr = weblens::parse_listen_address(cfg.listen_address);
      weblens::SceneEngine engine(load_store(cfg), cfg.engine_settings());
      httplib::Server server;
      weblens::install_routes(server, engine, cfg.ui_dir);
      std::cerr << "weblens: serving " << engine.store().stats().sites << " sites on "
                << addr.host << ":" << addr.port << '\n';
      if (!server.listen(addr.host, addr.port)) {
        std::cerr << "weblens: error: cannot listen on " << cfg.listen_address << '\n';
        return 1;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "weblens: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
