#pragma once

#include <charconv>
#include <cstdint>
#include <map>
#include <memory>
#include <numbers>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "weblens/domain.hpp"
#include "weblens/error.hpp"
#include "weblens/layout.hpp"
#include "weblens/neighborhood.hpp"
#include "weblens/store.hpp"
#include "weblens/summary.hpp"
#include "weblens/twitter.hpp"

namespace weblens {

/// Per-request options, always fully resolved (defaults filled in).
struct SceneOptions {
  Direction direction = Direction::Inbound;
  int hops = 2;
  LabelSet labels = all_labels();
  SummaryMode mode = SummaryMode::Normalized;
  std::uint64_t seed = 0;

  friend bool operator==(const SceneOptions&, const SceneOptions&) = default;
};

/// Query parameters: direction=in|both, hops=1|2,
/// labels=controversial,verified,unlabeled, mode=normalized|absolute,
/// seed=<u64>. Unknown keys, repeated keys and out-of-range values throw
/// InvalidArgument. A missing seed takes `default_seed`.
inline SceneOptions parse_scene_options(const std::multimap<std::string, std::string>& params,
                                        std::uint64_t default_seed) {
  SceneOptions opts;
  opts.seed = default_seed;
  std::set<std::string> seen;
  for (const auto& [key, value] : params) {
    if (!seen.insert(key).second) throw InvalidArgument("option '" + key + "' given twice");
    if (key == "direction") {
      auto d = parse_direction(value);
      if (!d) throw InvalidArgument("direction must be 'in' or 'both', got '" + value + "'");
      opts.direction = *d;
    } else if (key == "hops") {
      if (value == "1") {
        opts.hops = 1;
      } else if (value == "2") {
        opts.hops = 2;
      } else {
        throw InvalidArgument("hops must be 1 or 2, got '" + value + "'");
      }
    } else if (key == "labels") {
      LabelSet labels;
      std::string_view rest = value;
      for (;;) {
        auto cut = rest.find(',');
        auto item = rest.substr(0, cut);
        auto label = parse_label(item);
        if (!label) throw InvalidArgument("unknown label '" + std::string(item) + "'");
        labels.insert(*label);
        if (cut == std::string_view::npos) break;
        rest.remove_prefix(cut + 1);
      }
      opts.labels = std::move(labels);
    } else if (key == "mode") {
      auto m = parse_mode(value);
      if (!m) throw InvalidArgument("mode must be 'normalized' or 'absolute', got '" + value + "'");
      opts.mode = *m;
    } else if (key == "seed") {
      std::uint64_t seed = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), seed);
      if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
        throw InvalidArgument("seed must be an unsigned 64-bit integer, got '" + value + "'");
      }
      opts.seed = seed;
    } else {
      throw InvalidArgument("unknown option '" + key + "'");
    }
  }
  return opts;
}

struct SceneDocument {
  Domain center;
  ReliabilityLabel center_label = ReliabilityLabel::Unlabeled;
  NeighborhoodGraph graph;
  LayoutResult layout;
  ReliabilitySummary summary;
  TwitterSummary twitter;
  std::vector<std::string> label_sources_notice;
  SceneOptions options;
};

inline const std::vector<std::string>& default_label_sources() {
  static const std::vector<std::string> kSources = {
      "Columbia Journalism Review", "Media Bias Fact Check", "FakeNewsNet"};
  return kSources;
}

struct EngineSettings {
  double bot_threshold = kDefaultBotThreshold;
  std::uint64_t layout_seed = 0;
  std::size_t per_hop_cap = 100;
  /// Always listed first in the notice, in this order.
  std::vector<std::string> label_sources = default_label_sources();
  /// Radii and force constants; `seed` is replaced per request.
  LayoutParams layout;
};

/// Composes neighborhood, layout, summary and Twitter statistics over a
/// shared immutable store. Const member functions are thread-safe.
class SceneEngine {
 public:
  SceneEngine(std::shared_ptr<const DataStore> store, EngineSettings settings = {})
      : store_(std::move(store)), settings_(std::move(settings)) {
    if (!store_) throw InvalidArgument("scene engine needs a data store");
    if (settings_.per_hop_cap < 1) throw InvalidArgument("per_hop_cap must be at least 1");
    if (!(settings_.bot_threshold >= 0.0 && settings_.bot_threshold <= 1.0)) {
      throw InvalidArgument("bot_threshold must be in [0, 1]");
    }
    validate(settings_.layout);
  }

  const DataStore& store() const noexcept { return *store_; }
  const EngineSettings& settings() const noexcept { return settings_; }

  SceneOptions default_options() const {
    SceneOptions o;
    o.seed = settings_.layout_seed;
    return o;
  }

  SceneDocument scene(const Domain& center, const SceneOptions& opts) const {
    NeighborhoodOptions nopts{opts.direction, opts.hops, opts.labels, settings_.per_hop_cap};
    auto graph = extract_neighborhood(*store_, center, nopts);

    LayoutParams lp = settings_.layout;
    lp.seed = opts.seed;
    auto layout = compute_layout(graph, lp);
    auto summary = build_summary(graph, opts.mode);
    auto notice = notice_for(graph);

    return SceneDocument{center,
                         store_->lookup_label(center),
                         std::move(graph),
                         std::move(layout),
                         std::move(summary),
                         twitter_summary(*store_, center, settings_.bot_threshold),
                         std::move(notice),
                         opts};
  }

 private:
  std::vector<std::string> notice_for(const NeighborhoodGraph& g) const {
    std::vector<std::string> notice;
    std::set<std::string> listed;
    for (const auto& s : settings_.label_sources) {
      if (listed.insert(s).second) notice.push_back(s);
    }
    std::set<std::string> extra;
    auto collect = [&](const Domain& d) {
      if (const auto* site = store_->find_site(d)) {
        for (const auto& s : site->sources) {
          if (!listed.contains(s)) extra.insert(s);
        }
      }
    };
    collect(g.center);
    for (const auto& n : g.nodes) collect(n.domain);
    notice.insert(notice.end(), extra.begin(), extra.end());
    return notice;
  }

  std::shared_ptr<const DataStore> store_;
  EngineSettings settings_;
};

// ---------------------------------------------------------------------------
// Wire format. Keys are lower_snake_case and emitted in a fixed order;
// angles leave the engine in degrees.
// ---------------------------------------------------------------------------

using Json = nlohmann::ordered_json;

inline double to_degrees(double radians) {
  double deg = radians * 180.0 / std::numbers::pi;
  return deg >= 360.0 ? deg - 360.0 : deg;
}

inline Json labels_json(const LabelSet& labels) {
  Json arr = Json::array();
  for (auto l : labels) arr.push_back(to_string(l));
  return arr;
}

inline Json to_json(const SceneOptions& o) {
  return Json{{"direction", to_string(o.direction)},
              {"hops", o.hops},
              {"labels", labels_json(o.labels)},
              {"mode", to_string(o.mode)},
              {"seed", o.seed}};
}

inline Json to_json(const LabelCounts& c) {
  return Json{{"controversial", c.controversial},
              {"verified", c.verified},
              {"unlabeled", c.unlabeled},
              {"total", c.total}};
}

inline Json to_json(const NeighborhoodGraph& g, const DataStore& store) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes) {
    const auto* site = store.find_site(n.domain);
    nodes.push_back({{"domain", n.domain.str()},
                     {"hop", n.hop},
                     {"label", to_string(n.label)},
                     {"sources", site ? site->sources : std::vector<std::string>{}}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({{"src", e.src.str()}, {"dst", e.dst.str()}});
  return Json{{"center", g.center.str()},
              {"center_label", to_string(g.center_label)},
              {"direction", to_string(g.direction)},
              {"max_hops", g.max_hops},
              {"label_filter", labels_json(g.label_filter)},
              {"per_hop_cap", g.per_hop_cap},
              {"truncated", g.truncated},
              {"inbound_controversial_linkers", g.inbound_controversial_linkers},
              {"nodes", std::move(nodes)},
              {"edges", std::move(edges)}};
}

inline Json to_json(const LayoutResult& l) {
  Json positions = Json::array();
  for (const auto& p : l.positions) {
    positions.push_back({{"domain", p.domain.str()},
                         {"radius", p.radius},
                         {"angle_deg", to_degrees(p.angle)},
                         {"x", p.x()},
                         {"y", p.y()}});
  }
  Json edges = Json::array();
  for (const auto& e : l.edges) {
    Json cp = nullptr;
    if (e.control_point) cp = Json{{"x", e.control_point->x}, {"y", e.control_point->y}};
    edges.push_back({{"src", e.src.str()},
                     {"dst", e.dst.str()},
                     {"kind", to_string(e.kind)},
                     {"control_point", std::move(cp)},
                     {"animate_by_default", e.animate_by_default},
                     {"flow", {{"from", e.src.str()}, {"to", e.dst.str()}}}});
  }
  const auto& p = l.params;
  return Json{{"params",
               {{"r1", p.r1},
                {"r2", p.r2},
                {"iterations", p.iterations},
                {"repulsion_k", p.repulsion_k},
                {"attraction_k", p.attraction_k},
                {"cooling", p.cooling},
                {"seed", p.seed}}},
              {"positions", std::move(positions)},
              {"edges", std::move(edges)}};
}

inline Json to_json(const ReliabilitySummary& s) {
  Json arcs = Json::array();
  for (const auto& a : s.arcs) {
    arcs.push_back({{"ring", to_string(a.ring)},
                    {"label", to_string(a.label)},
                    {"start_angle", a.start_angle},
                    {"sweep", a.sweep},
                    {"count", a.count},
                    {"percent_of_ring", a.percent_of_ring}});
  }
  return Json{{"mode_requested", to_string(s.mode_requested)},
              {"mode_effective", to_string(s.mode_effective)},
              {"fallback", s.fallback},
              {"ring1", to_json(s.ring1)},
              {"ring2", to_json(s.ring2)},
              {"arcs", std::move(arcs)},
              {"center_percent_controversial", s.center_percent_controversial},
              {"statement_count", s.statement_count},
              {"statement", s.statement}};
}

inline Json to_json(const TwitterSummary& t) {
  return Json{{"domain", t.domain.str()},
              {"mentioning_accounts", t.mentioning_accounts},
              {"bot_accounts", t.bot_accounts},
              {"bot_threshold", t.bot_threshold},
              {"coshared", to_json(t.coshared)},
              {"percent_controversial_coshared", t.percent_controversial_coshared}};
}

inline Json to_json(const SceneDocument& doc, const DataStore& store) {
  return Json{{"center", doc.center.str()},
              {"center_label", to_string(doc.center_label)},
              {"options_echo", to_json(doc.options)},
              {"graph", to_json(doc.graph, store)},
              {"layout", to_json(doc.layout)},
              {"summary", to_json(doc.summary)},
              {"twitter", to_json(doc.twitter)},
              {"label_sources_notice", doc.label_sources_notice}};
}

inline Json health_json(const DataStore& store) {
  const auto stats = store.stats();
  return Json{{"status", "ok"}, {"sites", stats.sites}, {"edges", stats.edges}};
}

}  // namespace weblens
