#pragma once

#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "weblens/domain.hpp"
#include "weblens/error.hpp"
#include "weblens/store.hpp"

namespace weblens {

/// Inbound follows links pointing at the visited site. Both also follows
/// the visited site's own outgoing links. There is no outbound-only mode.
enum class Direction { Inbound, Both };

inline constexpr std::string_view to_string(Direction d) {
  return d == Direction::Inbound ? "in" : "both";
}

inline std::optional<Direction> parse_direction(std::string_view text) {
  if (text == "in") return Direction::Inbound;
  if (text == "both") return Direction::Both;
  return std::nullopt;
}

using LabelSet = std::set<ReliabilityLabel>;

inline LabelSet all_labels() { return LabelSet(kAllLabels.begin(), kAllLabels.end()); }

struct NeighborNode {
  Domain domain;
  int hop = 1;
  ReliabilityLabel label = ReliabilityLabel::Unlabeled;

  friend bool operator==(const NeighborNode&, const NeighborNode&) = default;
};

struct NeighborhoodOptions {
  Direction direction = Direction::Inbound;
  int max_hops = 2;
  LabelSet label_filter = all_labels();
  std::size_t per_hop_cap = 100;

  friend bool operator==(const NeighborhoodOptions&, const NeighborhoodOptions&) = default;
};

struct NeighborhoodGraph {
  Domain center;
  ReliabilityLabel center_label = ReliabilityLabel::Unlabeled;
  /// Hop-1 nodes then hop-2 nodes, each group in lexicographic domain order.
  std::vector<NeighborNode> nodes;
  /// True hyperlink orientation, sorted by (src, dst).
  std::vector<HyperlinkEdge> edges;
  Direction direction = Direction::Inbound;
  LabelSet label_filter;
  int max_hops = 2;
  std::size_t per_hop_cap = 100;
  bool truncated = false;
  /// Controversial sites linking directly to the center, ignoring the
  /// label filter, direction and cap. Feeds the summary statement.
  std::size_t inbound_controversial_linkers = 0;

  const NeighborNode* find(const Domain& d) const {
    for (const auto& n : nodes) {
      if (n.domain == d) return &n;
    }
    return nullptr;
  }

  /// 0 for the center, the node's hop otherwise, nullopt if absent.
  std::optional<int> hop_of(const Domain& d) const {
    if (d == center) return 0;
    if (const auto* n = find(d)) return n->hop;
    return std::nullopt;
  }

  friend bool operator==(const NeighborhoodGraph&, const NeighborhoodGraph&) = default;
};

inline void validate(const NeighborhoodOptions& opts) {
  if (opts.max_hops != 1 && opts.max_hops != 2) {
    throw InvalidArgument("max_hops must be 1 or 2, got " + std::to_string(opts.max_hops));
  }
  if (opts.per_hop_cap < 1) throw InvalidArgument("per_hop_cap must be at least 1");
  if (opts.label_filter.empty()) throw InvalidArgument("label filter must not be empty");
}

/// Breadth-first extraction of the visited site's 1- and 2-hop neighborhood.
///
/// Hops are assigned on the unfiltered graph (minimum hop wins). The label
/// filter and the per-hop cap are applied afterwards, ring by ring: a hop-2
/// node survives only if it is still adjacent to a surviving hop-1 node.
/// Nodes beyond the cap are dropped in lexicographic order and `truncated`
/// is set.
inline NeighborhoodGraph extract_neighborhood(const DataStore& store, const Domain& center,
                                              const NeighborhoodOptions& opts = {}) {
  validate(opts);

  NeighborhoodGraph g{.center = center,
                      .center_label = store.lookup_label(center),
                      .direction = opts.direction,
                      .label_filter = opts.label_filter,
                      .max_hops = opts.max_hops,
                      .per_hop_cap = opts.per_hop_cap};

  auto adjacent = [&](const Domain& d) {
    std::set<Domain> out = store.in_edges(d);
    if (opts.direction == Direction::Both) {
      const auto& fwd = store.out_edges(d);
      out.insert(fwd.begin(), fwd.end());
    }
    return out;
  };

  auto keep = [&](const std::set<Domain>& candidates, int hop) {
    std::size_t kept = 0;
    for (const auto& d : candidates) {
      const auto label = store.lookup_label(d);
      if (!opts.label_filter.contains(label)) continue;
      if (kept == opts.per_hop_cap) {
        g.truncated = true;
        break;
      }
      g.nodes.push_back({d, hop, label});
      ++kept;
    }
  };

  for (const auto& d : store.in_edges(center)) {
    if (store.lookup_label(d) == ReliabilityLabel::Controversial) ++g.inbound_controversial_linkers;
  }

  std::set<Domain> reached_1 = adjacent(center);
  reached_1.erase(center);
  keep(reached_1, 1);

  if (opts.max_hops == 2) {
    std::set<Domain> reached_2;
    for (const auto& n : g.nodes) {
      for (const auto& d : adjacent(n.domain)) {
        if (d != center && !reached_1.contains(d)) reached_2.insert(d);
      }
    }
    keep(reached_2, 2);
  }

  std::set<Domain> members{center};
  for (const auto& n : g.nodes) members.insert(n.domain);
  for (const auto& src : members) {
    for (const auto& dst : store.out_edges(src)) {
      if (members.contains(dst)) g.edges.push_back({src, dst});
    }
  }
  return g;
}

}  // namespace weblens
