#pragma once

#include <set>

#include "weblens/domain.hpp"
#include "weblens/error.hpp"
#include "weblens/store.hpp"
#include "weblens/summary.hpp"

namespace weblens {

inline constexpr double kDefaultBotThreshold = 0.5;

struct TwitterSummary {
  Domain domain;
  std::size_t mentioning_accounts = 0;
  std::size_t bot_accounts = 0;
  double bot_threshold = kDefaultBotThreshold;
  /// Distinct sites, other than `domain`, shared by the mentioning accounts.
  LabelCounts coshared;
  double percent_controversial_coshared = 0.0;

  friend bool operator==(const TwitterSummary&, const TwitterSummary&) = default;
};

/// An account is a bot when its score is >= `bot_threshold`.
inline TwitterSummary twitter_summary(const DataStore& store, const Domain& d,
                                      double bot_threshold = kDefaultBotThreshold) {
  if (!(bot_threshold >= 0.0 && bot_threshold <= 1.0)) {
    throw InvalidArgument("bot_threshold must be in [0, 1]");
  }
  TwitterSummary out{.domain = d, .bot_threshold = bot_threshold};

  std::set<Domain> coshared;
  for (const auto& id : store.mentioning_accounts(d)) {
    const auto* account = store.find_account(id);
    ++out.mentioning_accounts;
    if (account->bot_score >= bot_threshold) ++out.bot_accounts;
    coshared.insert(account->mentioned.begin(), account->mentioned.end());
  }
  coshared.erase(d);

  for (const auto& site : coshared) out.coshared.add(store.lookup_label(site));
  out.percent_controversial_coshared = percent(out.coshared.controversial, out.coshared.total);
  return out;
}

}  // namespace weblens
