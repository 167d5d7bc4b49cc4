#pragma once

// Fixtures, generators and independent oracles shared by the test suites.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "weblens/weblens.hpp"

namespace weblens::testing {

inline Domain dom(const std::string& s) { return normalize_domain(s); }

inline DataStore make_store(const std::string& sites_csv, const std::string& edges_csv,
                            const std::string& mentions_jsonl = "") {
  std::istringstream s(sites_csv), e(edges_csv), m(mentions_jsonl);
  return DataStore(load_sites(s), load_edges(e), load_mentions(m));
}

inline std::shared_ptr<const DataStore> share(DataStore store) {
  return std::make_shared<const DataStore>(std::move(store));
}

/// Edges a->x, b->x, c->a, x->d. a controversial, b and d verified, c
/// absent from the site table (unlabeled). Accounts u1 (0.9: x, a) and
/// u2 (0.2: x, b).
inline DataStore tiny_store() {
  const std::string dir = WEBLENS_TEST_DATA "/tiny/";
  return DataStore::load(dir + "sites.csv", dir + "edges.csv", dir + "mentions.jsonl");
}

struct RandomGraph {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> edges;  // indices, src -> dst, no self-loops, unique
  std::vector<ReliabilityLabel> labels;
};

inline RandomGraph random_graph(std::mt19937_64& rng, int max_nodes, double edge_prob) {
  std::uniform_int_distribution<int> n_dist(2, max_nodes);
  std::bernoulli_distribution edge(edge_prob);
  std::uniform_int_distribution<int> label(0, 2);
  RandomGraph g;
  const int n = n_dist(rng);
  for (int i = 0; i < n; ++i) {
    g.names.push_back("n" + std::to_string(i) + ".test");
    g.labels.push_back(kAllLabels[static_cast<std::size_t>(label(rng))]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && edge(rng)) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

inline DataStore to_store(const RandomGraph& g) {
  std::string sites = "domain,label,sources\n";
  for (std::size_t i = 0; i < g.names.size(); ++i) {
    // Unlabeled sites are left out of the table on purpose half the time.
    if (g.labels[i] == ReliabilityLabel::Unlabeled && i % 2 == 0) continue;
    sites += g.names[i] + "," + std::string(to_string(g.labels[i])) + ",src" +
             std::to_string(i % 3) + "\n";
  }
  std::string edges = "src,dst\n";
  for (auto [s, t] : g.edges) edges += g.names[s] + "," + g.names[t] + "\n";
  return make_store(sites, edges);
}

/// All-pairs shortest paths (Floyd-Warshall) over the traversal relation:
/// u -> v when v links to u (Inbound), or either links to the other (Both).
/// Returns domain -> hop for every node at distance 1 or 2 from `center`.
inline std::map<std::string, int> brute_force_hops(const RandomGraph& g, int center,
                                                   Direction dir, int max_hops) {
  const auto n = g.names.size();
  constexpr int kInf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;
  for (auto [s, t] : g.edges) {
    dist[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)] = 1;
    if (dir == Direction::Both) dist[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);

  std::map<std::string, int> hops;
  for (std::size_t v = 0; v < n; ++v) {
    const int d = dist[static_cast<std::size_t>(center)][v];
    if (d >= 1 && d <= max_hops) hops[g.names[v]] = d;
  }
  return hops;
}

/// Rule-based edge classification used as the oracle for layout output.
struct ExpectedEdgeClass {
  EdgeKind kind;
  bool animate;
};

inline ExpectedEdgeClass classify_by_radius(const LayoutResult& layout, const EdgeGeometry& e) {
  const double rs = layout.find(e.src)->radius;
  const double rt = layout.find(e.dst)->radius;
  const double r1 = layout.params.r1;
  const bool same_ring = rs == rt && rs != 0.0;
  const bool center_inner = (rs == 0.0 && rt == r1) || (rt == 0.0 && rs == r1);
  return {same_ring ? EdgeKind::Curved : EdgeKind::Straight, center_inner};
}

/// A graph with `inner` hop-1 inbound linkers and `outer` hop-2 ones,
/// with controversial counts given per ring.
inline DataStore ring_store(int inner, int inner_controversial, int outer = 0,
                            int outer_controversial = 0) {
  std::string sites = "domain,label,sources\nhub.test,verified,src\n";
  std::string edges = "src,dst\n";
  for (int i = 0; i < inner; ++i) {
    const auto name = "in" + std::to_string(i) + ".test";
    sites += name + (i < inner_controversial ? ",controversial,src\n" : ",verified,src\n");
    edges += name + ",hub.test\n";
  }
  for (int i = 0; i < outer; ++i) {
    const auto name = "out" + std::to_string(i) + ".test";
    sites += name + (i < outer_controversial ? ",controversial,src\n" : ",unlabeled,\n");
    edges += name + ",in0.test\n";
  }
  return make_store(sites, edges);
}

}  // namespace weblens::testing
