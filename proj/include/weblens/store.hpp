#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "weblens/csv.hpp"
#include "weblens/domain.hpp"
#include "weblens/error.hpp"

namespace weblens {

struct SiteRecord {
  Domain domain;
  ReliabilityLabel label;
  std::vector<std::string> sources;

  friend bool operator==(const SiteRecord&, const SiteRecord&) = default;
};

struct HyperlinkEdge {
  Domain src;
  Domain dst;

  friend auto operator<=>(const HyperlinkEdge&, const HyperlinkEdge&) = default;
};

struct MentionRecord {
  std::string account_id;
  double bot_score = 0.0;
  std::set<Domain> mentioned;

  friend bool operator==(const MentionRecord&, const MentionRecord&) = default;
};

using SiteTable = std::map<Domain, SiteRecord>;
using Adjacency = std::map<Domain, std::set<Domain>>;

struct EdgeTable {
  Adjacency out_edges;
  Adjacency in_edges;
  std::size_t edge_count = 0;
  std::size_t self_loops_dropped = 0;

  void insert(const Domain& src, const Domain& dst) {
    if (out_edges[src].insert(dst).second) {
      in_edges[dst].insert(src);
      ++edge_count;
    }
  }

  friend bool operator==(const EdgeTable&, const EdgeTable&) = default;
};

struct MentionTable {
  /// Sorted by account_id so that ingest is independent of file order.
  std::vector<MentionRecord> records;
  std::map<Domain, std::set<std::string>> index;

  friend bool operator==(const MentionTable&, const MentionTable&) = default;
};

namespace detail {

inline Domain parse_domain_at(std::string_view raw, const std::string& where) {
  try {
    return normalize_domain(raw);
  } catch (const MalformedDomain& e) {
    throw ParseError(where, e.what());
  }
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Loaders. Each takes a stream plus a source name used in error messages;
// the path overloads just open the file.
// ---------------------------------------------------------------------------

/// CSV with header `domain,label,sources`; sources are `;`-separated.
inline SiteTable load_sites(std::istream& in, const std::string& source = "sites.csv") {
  csv::Reader reader(in, source, {"domain", "label", "sources"});
  SiteTable table;
  std::vector<std::string> row;
  while (reader.next(row)) {
    const auto where = reader.where();
    Domain domain = detail::parse_domain_at(row[0], where);
    auto label = parse_label(row[1]);
    if (!label) throw ParseError(where, "unknown label '" + row[1] + "'");

    std::vector<std::string> sources;
    std::string_view rest = row[2];
    for (;;) {
      auto cut = rest.find(';');
      auto piece = detail::trim(rest.substr(0, cut));
      if (!piece.empty() && std::find(sources.begin(), sources.end(), piece) == sources.end()) {
        sources.emplace_back(piece);
      }
      if (cut == std::string_view::npos) break;
      rest.remove_prefix(cut + 1);
    }
    if (*label != ReliabilityLabel::Unlabeled && sources.empty()) {
      throw ParseError(where, "labeled site '" + domain.str() + "' has no label source");
    }
    if (table.contains(domain)) throw DuplicateDomain(where, domain.str());
    table.emplace(domain, SiteRecord{domain, *label, std::move(sources)});
  }
  return table;
}

/// CSV with header `src,dst`. Duplicates collapse; self-loops are counted and dropped.
inline EdgeTable load_edges(std::istream& in, const std::string& source = "edges.csv") {
  csv::Reader reader(in, source, {"src", "dst"});
  EdgeTable table;
  std::vector<std::string> row;
  while (reader.next(row)) {
    const auto where = reader.where();
    Domain src = detail::parse_domain_at(row[0], where);
    Domain dst = detail::parse_domain_at(row[1], where);
    if (src == dst) {
      ++table.self_loops_dropped;
      continue;
    }
    table.insert(src, dst);
  }
  return table;
}

/// JSON lines: `{"account_id": str, "bot_score": [0,1], "mentioned": [str, ...]}`.
inline MentionTable load_mentions(std::istream& in, const std::string& source = "mentions.jsonl") {
  MentionTable table;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::trim(line).empty()) continue;
    const auto where = source + ":" + std::to_string(line_no);

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(where, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(where, "record is not an object");

    const auto id = j.find("account_id");
    if (id == j.end() || !id->is_string() || id->get<std::string>().empty()) {
      throw ParseError(where, "missing or empty account_id");
    }
    const auto score = j.find("bot_score");
    if (score == j.end() || !score->is_number()) throw ParseError(where, "missing bot_score");
    const double bot_score = score->get<double>();
    if (!(bot_score >= 0.0 && bot_score <= 1.0)) throw ParseError(where, "bot_score outside [0,1]");
    const auto mentioned = j.find("mentioned");
    if (mentioned == j.end() || !mentioned->is_array()) throw ParseError(where, "missing mentioned array");
    if (mentioned->empty()) throw ParseError(where, "empty mentioned set");

    MentionRecord record{id->get<std::string>(), bot_score, {}};
    for (const auto& m : *mentioned) {
      if (!m.is_string()) throw ParseError(where, "mentioned entries must be strings");
      record.mentioned.insert(detail::parse_domain_at(m.get<std::string>(), where));
    }
    if (!seen.insert(record.account_id).second) throw DuplicateAccount(where, record.account_id);
    table.records.push_back(std::move(record));
  }

  std::sort(table.records.begin(), table.records.end(),
            [](const auto& a, const auto& b) { return a.account_id < b.account_id; });
  for (const auto& r : table.records) {
    for (const auto& d : r.mentioned) table.index[d].insert(r.account_id);
  }
  return table;
}

inline SiteTable load_sites(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return load_sites(in, path.string());
}

inline EdgeTable load_edges(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return load_edges(in, path.string());
}

inline MentionTable load_mentions(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return load_mentions(in, path.string());
}

struct IngestStats {
  std::size_t sites = 0;
  std::size_t edges = 0;
  std::size_t mentions = 0;
  std::size_t self_loops_dropped = 0;
};

/// Immutable, in-memory index over the three datasets. Safe to share
/// between threads once constructed.
class DataStore {
 public:
  DataStore() = default;
  DataStore(SiteTable sites, EdgeTable edges, MentionTable mentions)
      : sites_(std::move(sites)), edges_(std::move(edges)), mentions_(std::move(mentions)) {
    for (const auto& r : mentions_.records) by_account_.emplace(r.account_id, &r);
    for (const auto& [_, site] : sites_) {
      for (const auto& s : site.sources) sources_.insert(s);
    }
  }

  DataStore(const DataStore&) = delete;
  DataStore& operator=(const DataStore&) = delete;
  // by_account_ points into records; a moved vector keeps its buffer.
  DataStore(DataStore&&) noexcept = default;
  DataStore& operator=(DataStore&&) noexcept = default;

  static DataStore load(const std::filesystem::path& sites, const std::filesystem::path& edges,
                        const std::filesystem::path& mentions) {
    auto site_table = load_sites(sites);
    auto edge_table = load_edges(edges);
    return DataStore(std::move(site_table), std::move(edge_table), load_mentions(mentions));
  }

  const SiteTable& sites() const noexcept { return sites_; }
  const EdgeTable& edges() const noexcept { return edges_; }
  const MentionTable& mentions() const noexcept { return mentions_; }

  const SiteRecord* find_site(const Domain& d) const {
    auto it = sites_.find(d);
    return it == sites_.end() ? nullptr : &it->second;
  }

  /// Never fails: domains absent from the site table are Unlabeled.
  ReliabilityLabel lookup_label(const Domain& d) const {
    const auto* site = find_site(d);
    return site ? site->label : ReliabilityLabel::Unlabeled;
  }

  const std::set<Domain>& out_edges(const Domain& d) const { return neighbors(edges_.out_edges, d); }
  const std::set<Domain>& in_edges(const Domain& d) const { return neighbors(edges_.in_edges, d); }

  bool has_edge(const Domain& src, const Domain& dst) const { return out_edges(src).contains(dst); }

  const std::set<std::string>& mentioning_accounts(const Domain& d) const {
    static const std::set<std::string> kNone;
    auto it = mentions_.index.find(d);
    return it == mentions_.index.end() ? kNone : it->second;
  }

  const MentionRecord* find_account(const std::string& id) const {
    auto it = by_account_.find(id);
    return it == by_account_.end() ? nullptr : it->second;
  }

  /// Every label source named anywhere in the site table, sorted.
  const std::set<std::string>& all_sources() const noexcept { return sources_; }

  IngestStats stats() const {
    return {sites_.size(), edges_.edge_count, mentions_.records.size(), edges_.self_loops_dropped};
  }

  friend bool operator==(const DataStore& a, const DataStore& b) {
    return a.sites_ == b.sites_ && a.edges_ == b.edges_ && a.mentions_ == b.mentions_;
  }

 private:
  static const std::set<Domain>& neighbors(const Adjacency& adj, const Domain& d) {
    static const std::set<Domain> kNone;
    auto it = adj.find(d);
    return it == adj.end() ? kNone : it->second;
  }

  SiteTable sites_;
  EdgeTable edges_;
  MentionTable mentions_;
  std::map<std::string, const MentionRecord*> by_account_;
  std::set<std::string> sources_;
};

inline ReliabilityLabel lookup_label(const DataStore& store, const Domain& d) {
  return store.lookup_label(d);
}

}  // namespace weblens
