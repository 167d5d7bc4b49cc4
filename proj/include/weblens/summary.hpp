#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weblens/domain.hpp"
#include "weblens/error.hpp"
#include "weblens/neighborhood.hpp"

namespace weblens {

/// Rings holding more sites than this cannot be drawn one segment per site.
inline constexpr std::size_t kAbsoluteSegments = 100;
inline constexpr double kSegmentSweepDegrees = 360.0 / static_cast<double>(kAbsoluteSegments);

enum class SummaryMode { Normalized, Absolute };

inline constexpr std::string_view to_string(SummaryMode m) {
  return m == SummaryMode::Normalized ? "normalized" : "absolute";
}

inline std::optional<SummaryMode> parse_mode(std::string_view text) {
  if (text == "normalized") return SummaryMode::Normalized;
  if (text == "absolute") return SummaryMode::Absolute;
  return std::nullopt;
}

enum class Ring { Inner, Outer };

inline constexpr std::string_view to_string(Ring r) { return r == Ring::Inner ? "inner" : "outer"; }

struct LabelCounts {
  std::size_t controversial = 0;
  std::size_t verified = 0;
  std::size_t unlabeled = 0;
  std::size_t total = 0;

  void add(ReliabilityLabel label) {
    switch (label) {
      case ReliabilityLabel::Controversial: ++controversial; break;
      case ReliabilityLabel::Verified: ++verified; break;
      case ReliabilityLabel::Unlabeled: ++unlabeled; break;
    }
    ++total;
  }

  std::size_t count(ReliabilityLabel label) const {
    switch (label) {
      case ReliabilityLabel::Controversial: return controversial;
      case ReliabilityLabel::Verified: return verified;
      case ReliabilityLabel::Unlabeled: return unlabeled;
    }
    return 0;
  }

  friend bool operator==(const LabelCounts&, const LabelCounts&) = default;
};

/// 100 * part / whole, or 0 for an empty whole.
inline double percent(std::size_t part, std::size_t whole) {
  return whole == 0 ? 0.0 : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

/// One doughnut arc, angles in degrees clockwise from 0.
struct Arc {
  Ring ring = Ring::Inner;
  ReliabilityLabel label = ReliabilityLabel::Unlabeled;
  double start_angle = 0.0;
  double sweep = 0.0;
  std::size_t count = 0;
  double percent_of_ring = 0.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct ReliabilitySummary {
  SummaryMode mode_requested = SummaryMode::Normalized;
  SummaryMode mode_effective = SummaryMode::Normalized;
  bool fallback = false;
  LabelCounts ring1;
  LabelCounts ring2;
  std::vector<Arc> arcs;
  double center_percent_controversial = 0.0;
  std::size_t statement_count = 0;
  std::string statement;

  friend bool operator==(const ReliabilitySummary&, const ReliabilitySummary&) = default;
};

/// Label counts of the nodes sitting exactly at `hop`.
inline LabelCounts ring_distribution(const NeighborhoodGraph& graph, int hop) {
  if (hop < 1 || hop > graph.max_hops) {
    throw InvalidArgument("hop " + std::to_string(hop) + " outside 1.." +
                          std::to_string(graph.max_hops));
  }
  LabelCounts counts;
  for (const auto& n : graph.nodes) {
    if (n.hop == hop) counts.add(n.label);
  }
  return counts;
}

inline std::string summary_statement(std::size_t controversial_linkers) {
  constexpr std::string_view kTail = "linking to the site you are visiting";
  if (controversial_linkers == 0) {
    return "No controversial websites are " + std::string(kTail);
  }
  if (controversial_linkers == 1) {
    return "1 controversial website is " + std::string(kTail);
  }
  return std::to_string(controversial_linkers) + " controversial websites are " + std::string(kTail);
}

namespace detail {

inline void append_ring_arcs(std::vector<Arc>& arcs, Ring ring, const LabelCounts& counts,
                             SummaryMode mode) {
  double start = 0.0;
  for (auto label : kAllLabels) {
    const auto n = counts.count(label);
    if (n == 0) continue;
    // Sweep computed from integers in one division so that 5/10 gives 180
    // and 5 absolute segments give 18 without accumulated rounding.
    const double sweep =
        mode == SummaryMode::Normalized
            ? 360.0 * static_cast<double>(n) / static_cast<double>(counts.total)
            : 360.0 * static_cast<double>(n) / static_cast<double>(kAbsoluteSegments);
    arcs.push_back({ring, label, start, sweep, n, percent(n, counts.total)});
    start += sweep;
  }
}

}  // namespace detail

/// Builds the doughnut payload. Absolute mode falls back to normalized when
/// either ring has more than 100 sites.
inline ReliabilitySummary build_summary(const NeighborhoodGraph& graph, SummaryMode mode) {
  ReliabilitySummary s;
  s.mode_requested = mode;
  s.ring1 = ring_distribution(graph, 1);
  if (graph.max_hops >= 2) s.ring2 = ring_distribution(graph, 2);

  s.fallback = mode == SummaryMode::Absolute &&
               (s.ring1.total > kAbsoluteSegments || s.ring2.total > kAbsoluteSegments);
  s.mode_effective = s.fallback ? SummaryMode::Normalized : mode;

  detail::append_ring_arcs(s.arcs, Ring::Inner, s.ring1, s.mode_effective);
  detail::append_ring_arcs(s.arcs, Ring::Outer, s.ring2, s.mode_effective);

  s.center_percent_controversial =
      percent(s.ring1.controversial + s.ring2.controversial, s.ring1.total + s.ring2.total);
  s.statement_count = graph.inbound_controversial_linkers;
  s.statement = summary_statement(s.statement_count);
  return s;
}

}  // namespace weblens
