#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "weblens/domain.hpp"
#include "weblens/error.hpp"
#include "weblens/neighborhood.hpp"

namespace weblens {

struct LayoutParams {
  double r1 = 1.0;
  double r2 = 2.0;
  int iterations = 300;
  double repulsion_k = 0.05;
  double attraction_k = 0.02;
  double cooling = 0.99;
  std::uint64_t seed = 0;

  friend bool operator==(const LayoutParams&, const LayoutParams&) = default;
};

inline void validate(const LayoutParams& p) {
  if (!(p.r1 > 0.0 && p.r1 < p.r2 && std::isfinite(p.r2))) {
    throw InvalidArgument("ring radii must satisfy 0 < r1 < r2");
  }
  if (p.iterations < 1) throw InvalidArgument("iterations must be at least 1");
  if (!(p.cooling > 0.0 && p.cooling <= 1.0)) throw InvalidArgument("cooling must be in (0, 1]");
  if (!(p.repulsion_k >= 0.0 && p.attraction_k >= 0.0 && std::isfinite(p.repulsion_k) &&
        std::isfinite(p.attraction_k))) {
    throw InvalidArgument("force constants must be finite and non-negative");
  }
}

struct NodePosition {
  Domain domain;
  double radius = 0.0;
  double angle = 0.0;  // radians, [0, 2pi)

  double x() const { return radius * std::cos(angle); }
  double y() const { return radius * std::sin(angle); }

  friend bool operator==(const NodePosition&, const NodePosition&) = default;
};

enum class EdgeKind { Straight, Curved };

inline constexpr std::string_view to_string(EdgeKind k) {
  return k == EdgeKind::Straight ? "straight" : "curved";
}

struct Point {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point&, const Point&) = default;
};

/// Flow always runs src -> dst, i.e. along the hyperlink.
struct EdgeGeometry {
  Domain src;
  Domain dst;
  EdgeKind kind = EdgeKind::Straight;
  std::optional<Point> control_point;
  bool animate_by_default = false;

  friend bool operator==(const EdgeGeometry&, const EdgeGeometry&) = default;
};

struct LayoutResult {
  /// Center first, then the graph's nodes in graph order.
  std::vector<NodePosition> positions;
  std::vector<EdgeGeometry> edges;
  LayoutParams params;

  const NodePosition* find(const Domain& d) const {
    for (const auto& p : positions) {
      if (p.domain == d) return &p;
    }
    return nullptr;
  }

  friend bool operator==(const LayoutResult&, const LayoutResult&) = default;
};

/// splitmix64 (Steele, Lea, Flood). Fixed so seeds reproduce across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits of precision.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

namespace detail {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInitialStep = std::numbers::pi / 8.0;
inline constexpr double kMinAngularDistance = 1e-9;
inline constexpr double kControlPointOffset = 0.15;

/// Maps to [0, 2pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

/// Signed shortest rotation from `from` to `to`, in (-pi, pi].
inline double angular_delta(double from, double to) {
  double d = std::fmod(to - from, kTwoPi);
  if (d <= -std::numbers::pi) d += kTwoPi;
  if (d > std::numbers::pi) d -= kTwoPi;
  return d;
}

inline double ring_radius(int hop, const LayoutParams& p) {
  return hop == 0 ? 0.0 : (hop == 1 ? p.r1 : p.r2);
}

struct Relaxation {
  std::vector<double> angle;              // per graph node
  std::vector<std::size_t> ring[2];       // node indices per ring
  std::vector<std::pair<std::size_t, std::size_t>> links;  // edges between ring nodes
};

inline Relaxation seed_angles(const NeighborhoodGraph& graph, const LayoutParams& params) {
  Relaxation r;
  SplitMix64 rng(params.seed);
  std::map<Domain, std::size_t> index;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    r.angle.push_back(rng.next_unit() * kTwoPi);
    r.ring[graph.nodes[i].hop - 1].push_back(i);
    index.emplace(graph.nodes[i].domain, i);
  }
  for (const auto& e : graph.edges) {
    auto s = index.find(e.src);
    auto t = index.find(e.dst);
    if (s != index.end() && t != index.end()) r.links.emplace_back(s->second, t->second);
  }
  return r;
}

/// Angular Fruchterman-Reingold. Radii never change, so only angles move:
/// same-ring nodes repel along both arcs of the circle, linked nodes attract
/// proportionally to their angular difference, and each step is capped by a
/// temperature that decays geometrically.
inline void relax(Relaxation& r, const LayoutParams& p) {
  std::vector<double> disp(r.angle.size());
  double temperature = kInitialStep;
  for (int it = 0; it < p.iterations; ++it) {
    std::fill(disp.begin(), disp.end(), 0.0);

    for (const auto& ring : r.ring) {
      for (std::size_t a = 0; a < ring.size(); ++a) {
        for (std::size_t b = a + 1; b < ring.size(); ++b) {
          const auto i = ring[a];
          const auto j = ring[b];
          const double d = angular_delta(r.angle[i], r.angle[j]);
          const double dist = std::max(std::abs(d), kMinAngularDistance);
          const double force = p.repulsion_k / dist - p.repulsion_k / (kTwoPi - dist);
          const double dir = d >= 0.0 ? 1.0 : -1.0;
          disp[i] -= dir * force;
          disp[j] += dir * force;
        }
      }
    }

    for (const auto& [i, j] : r.links) {
      const double d = angular_delta(r.angle[i], r.angle[j]);
      disp[i] += p.attraction_k * d;
      disp[j] -= p.attraction_k * d;
    }

    for (std::size_t i = 0; i < r.angle.size(); ++i) {
      r.angle[i] = wrap_angle(r.angle[i] + std::clamp(disp[i], -temperature, temperature));
    }
    temperature *= p.cooling;
  }
}

inline LayoutResult assemble(const NeighborhoodGraph& graph, const LayoutParams& params,
                             const std::vector<double>& angles) {
  LayoutResult out;
  out.params = params;
  out.positions.push_back({graph.center, 0.0, 0.0});
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const auto& n = graph.nodes[i];
    out.positions.push_back({n.domain, ring_radius(n.hop, params), angles[i]});
  }

  for (const auto& e : graph.edges) {
    const auto src_hop = graph.hop_of(e.src).value_or(0);
    const auto dst_hop = graph.hop_of(e.dst).value_or(0);
    EdgeGeometry geo{e.src, e.dst};
    if (src_hop == dst_hop && src_hop != 0) {
      geo.kind = EdgeKind::Curved;
      const double a = out.find(e.src)->angle;
      const double b = out.find(e.dst)->angle;
      const double mid = a + angular_delta(a, b) / 2.0;
      const double radius = ring_radius(src_hop, params) * (1.0 + kControlPointOffset);
      geo.control_point = Point{radius * std::cos(mid), radius * std::sin(mid)};
    }
    geo.animate_by_default = (src_hop == 0 && dst_hop == 1) || (src_hop == 1 && dst_hop == 0);
    out.edges.push_back(std::move(geo));
  }
  return out;
}

}  // namespace detail

/// Seeded starting placement, before any relaxation.
inline LayoutResult initial_layout(const NeighborhoodGraph& graph, const LayoutParams& params) {
  validate(params);
  auto r = detail::seed_angles(graph, params);
  return detail::assemble(graph, params, r.angle);
}

/// Radial layout: center at the origin, hop-1 nodes on radius r1, hop-2
/// nodes on radius r2. Deterministic for a given (graph, params).
inline LayoutResult compute_layout(const NeighborhoodGraph& graph, const LayoutParams& params) {
  validate(params);
  auto r = detail::seed_angles(graph, params);
  detail::relax(r, params);
  return detail::assemble(graph, params, r.angle);
}

/// Number of properly crossing pairs when every edge is drawn as a
/// straight segment. Pairs sharing an endpoint never count.
inline std::size_t straight_line_crossings(const LayoutResult& layout) {
  struct Segment {
    const Domain* a;
    const Domain* b;
    Point p;
    Point q;
  };
  std::vector<Segment> segs;
  for (const auto& e : layout.edges) {
    const auto* s = layout.find(e.src);
    const auto* t = layout.find(e.dst);
    segs.push_back({&e.src, &e.dst, {s->x(), s->y()}, {t->x(), t->y()}});
  }
  auto orient = [](Point a, Point b, Point c) {
    const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return (v > 0.0) - (v < 0.0);
  };
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const auto& s = segs[i];
      const auto& t = segs[j];
      if (*s.a == *t.a || *s.a == *t.b || *s.b == *t.a || *s.b == *t.b) continue;
      const int o1 = orient(s.p, s.q, t.p);
      const int o2 = orient(s.p, s.q, t.q);
      const int o3 = orient(t.p, t.q, s.p);
      const int o4 = orient(t.p, t.q, s.q);
      if (o1 * o2 < 0 && o3 * o4 < 0) ++crossings;
    }
  }
  return crossings;
}

}  // namespace weblens
