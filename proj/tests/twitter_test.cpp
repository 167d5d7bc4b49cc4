#include <gtest/gtest.h>

#include "test_support.hpp"

namespace weblens {
namespace {

using testing::dom;

TEST(TwitterSummary, TwoAccountFixture) {
  auto store = testing::tiny_store();
  auto t = twitter_summary(store, dom("x.test"), 0.5);
  EXPECT_EQ(t.mentioning_accounts, 2U);
  EXPECT_EQ(t.bot_accounts, 1U);
  EXPECT_EQ(t.coshared, (LabelCounts{1, 1, 0, 2}));
  EXPECT_DOUBLE_EQ(t.percent_controversial_coshared, 50.0);
}

TEST(TwitterSummary, ZeroThresholdCountsEveryAccount) {
  auto store = testing::tiny_store();
  EXPECT_EQ(twitter_summary(store, dom("x.test"), 0.0).bot_accounts, 2U);
  EXPECT_EQ(twitter_summary(store, dom("x.test"), 0.9).bot_accounts, 1U);
  EXPECT_EQ(twitter_summary(store, dom("x.test"), 1.0).bot_accounts, 0U);
}

TEST(TwitterSummary, NeverMentionedDomain) {
  auto store = testing::tiny_store();
  auto t = twitter_summary(store, dom("d.test"), 0.5);
  EXPECT_EQ(t.mentioning_accounts, 0U);
  EXPECT_EQ(t.bot_accounts, 0U);
  EXPECT_EQ(t.coshared, LabelCounts{});
  EXPECT_EQ(t.percent_controversial_coshared, 0.0);
}

TEST(TwitterSummary, CosharedSitesAreDistinctAndExcludeVisited) {
  auto store = testing::make_store(
      "domain,label,sources\na.test,controversial,s\nb.test,verified,s\n", "src,dst\n",
      "{\"account_id\":\"u1\",\"bot_score\":0.6,\"mentioned\":[\"x.test\",\"a.test\",\"c.test\"]}\n"
      "{\"account_id\":\"u2\",\"bot_score\":0.7,\"mentioned\":[\"x.test\",\"a.test\",\"b.test\"]}\n"
      "{\"account_id\":\"u3\",\"bot_score\":0.8,\"mentioned\":[\"a.test\",\"b.test\"]}\n");
  auto t = twitter_summary(store, dom("x.test"), 0.5);
  EXPECT_EQ(t.mentioning_accounts, 2U);
  EXPECT_EQ(t.bot_accounts, 2U);
  EXPECT_EQ(t.coshared, (LabelCounts{1, 1, 1, 3}));
  EXPECT_NEAR(t.percent_controversial_coshared, 100.0 / 3.0, 1e-12);
}

TEST(TwitterSummary, RejectsThresholdOutsideUnitInterval) {
  auto store = testing::tiny_store();
  EXPECT_THROW(twitter_summary(store, dom("x.test"), -0.1), InvalidArgument);
  EXPECT_THROW(twitter_summary(store, dom("x.test"), 1.1), InvalidArgument);
}

TEST(TwitterSummary, PropertiesOnRandomCorpora) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::string mentions;
    for (int a = 0; a < 30; ++a) {
      mentions += "{\"account_id\":\"acct" + std::to_string(a) + "\",\"bot_score\":" +
                  std::to_string(unit(rng)) + ",\"mentioned\":[";
      const int k = 1 + static_cast<int>(rng() % 5);
      for (int i = 0; i < k; ++i) {
        mentions += std::string(i ? "," : "") + "\"s" + std::to_string(rng() % 12) + ".test\"";
      }
      mentions += "]}\n";
    }
    auto store = testing::make_store(
        "domain,label,sources\ns0.test,controversial,s\ns1.test,verified,s\ns2.test,controversial,s\n",
        "src,dst\n", mentions);
    const auto d = dom("s" + std::to_string(rng() % 12) + ".test");
    std::size_t previous = std::numeric_limits<std::size_t>::max();
    for (double threshold = 0.0; threshold <= 1.0; threshold += 0.05) {
      auto t = twitter_summary(store, d, threshold);
      ASSERT_LE(t.bot_accounts, t.mentioning_accounts);
      ASSERT_LE(t.bot_accounts, previous);
      previous = t.bot_accounts;
      ASSERT_EQ(t.coshared.total,
                t.coshared.controversial + t.coshared.verified + t.coshared.unlabeled);
      ASSERT_DOUBLE_EQ(t.percent_controversial_coshared,
                       percent(t.coshared.controversial, t.coshared.total));
    }
  }
}

}  // namespace
}  // namespace weblens
