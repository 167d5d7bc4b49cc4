#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace weblens {
namespace {

using testing::dom;
using Params = std::multimap<std::string, std::string>;

SceneEngine tiny_engine() {
  return SceneEngine(testing::share(testing::tiny_store()), EngineSettings{.layout_seed = 7});
}

TEST(ParseSceneOptions, Defaults) {
  auto o = parse_scene_options({}, 42);
  EXPECT_EQ(o.direction, Direction::Inbound);
  EXPECT_EQ(o.hops, 2);
  EXPECT_EQ(o.labels, all_labels());
  EXPECT_EQ(o.mode, SummaryMode::Normalized);
  EXPECT_EQ(o.seed, 42U);
}

TEST(ParseSceneOptions, AllFields) {
  auto o = parse_scene_options({{"direction", "both"},
                                {"hops", "1"},
                                {"labels", "verified,controversial"},
                                {"mode", "absolute"},
                                {"seed", "18446744073709551615"}},
                               0);
  EXPECT_EQ(o.direction, Direction::Both);
  EXPECT_EQ(o.hops, 1);
  EXPECT_EQ(o.labels, (LabelSet{ReliabilityLabel::Controversial, ReliabilityLabel::Verified}));
  EXPECT_EQ(o.mode, SummaryMode::Absolute);
  EXPECT_EQ(o.seed, 18446744073709551615ULL);
}

TEST(ParseSceneOptions, RejectsInvalidValues) {
  for (const Params& p : {Params{{"hops", "3"}}, Params{{"hops", "two"}},
                          Params{{"direction", "out"}}, Params{{"mode", "relative"}},
                          Params{{"labels", ""}}, Params{{"labels", "verified,,unlabeled"}},
                          Params{{"labels", "fake"}}, Params{{"seed", "-1"}},
                          Params{{"seed", "12x"}}, Params{{"view", "graph"}},
                          Params{{"hops", "1"}, {"hops", "2"}}}) {
    EXPECT_THROW(parse_scene_options(p, 0), InvalidArgument) << p.begin()->first;
  }
}

TEST(SceneEngine, TinyDefaults) {
  auto engine = tiny_engine();
  auto doc = engine.scene(dom("x.test"), engine.default_options());
  EXPECT_EQ(doc.graph.nodes.size(), 3U);
  EXPECT_DOUBLE_EQ(doc.summary.center_percent_controversial, 100.0 / 3.0);
  EXPECT_EQ(doc.twitter.mentioning_accounts, 2U);
  EXPECT_EQ(doc.layout.params.seed, 7U);
  EXPECT_EQ(doc.label_sources_notice,
            (std::vector<std::string>{"Columbia Journalism Review", "Media Bias Fact Check",
                                      "FakeNewsNet"}));
}

TEST(SceneEngine, FilteredSceneKeepsStatementCount) {
  auto engine = tiny_engine();
  auto opts = engine.default_options();
  opts.labels = {ReliabilityLabel::Controversial};
  auto doc = engine.scene(dom("x.test"), opts);
  ASSERT_EQ(doc.graph.nodes.size(), 1U);
  EXPECT_EQ(doc.summary.statement, "1 controversial website is linking to the site you are visiting");
}

TEST(SceneEngine, NoticeAddsSourcesOfDisplayedSites) {
  auto store = testing::make_store(
      "domain,label,sources\na.test,controversial,BS Detector;Media Bias Fact Check\n"
      "far.test,verified,Hidden Source\n",
      "src,dst\na.test,x.test\n");
  SceneEngine engine(testing::share(std::move(store)));
  auto doc = engine.scene(dom("x.test"), engine.default_options());
  EXPECT_EQ(doc.label_sources_notice,
            (std::vector<std::string>{"Columbia Journalism Review", "Media Bias Fact Check",
                                      "FakeNewsNet", "BS Detector"}));
}

TEST(SceneEngine, UnknownDomainGivesEmptyScene) {
  auto engine = tiny_engine();
  auto doc = engine.scene(dom("unknown.example"), engine.default_options());
  EXPECT_TRUE(doc.graph.nodes.empty());
  EXPECT_EQ(doc.layout.positions.size(), 1U);
  EXPECT_EQ(doc.center_label, ReliabilityLabel::Unlabeled);
}

TEST(SceneEngine, RejectsBadSettings) {
  auto store = testing::share(testing::tiny_store());
  EXPECT_THROW(SceneEngine(store, EngineSettings{.per_hop_cap = 0}), InvalidArgument);
  EXPECT_THROW(SceneEngine(store, EngineSettings{.bot_threshold = 2.0}), InvalidArgument);
  EXPECT_THROW(SceneEngine(nullptr), InvalidArgument);
}

TEST(SceneJson, ShapeAndUnits) {
  auto engine = tiny_engine();
  auto opts = engine.default_options();
  opts.direction = Direction::Both;
  auto j = to_json(engine.scene(dom("x.test"), opts), engine.store());
  EXPECT_EQ(j["center"], "x.test");
  EXPECT_EQ(j["options_echo"]["direction"], "both");
  EXPECT_EQ(j["options_echo"]["labels"],
            Json::array({"controversial", "verified", "unlabeled"}));
  EXPECT_EQ(j["graph"]["nodes"].size(), 4U);
  EXPECT_EQ(j["graph"]["nodes"][0]["sources"], Json::array({"Media Bias Fact Check"}));
  for (const auto& p : j["layout"]["positions"]) {
    EXPECT_GE(p["angle_deg"].get<double>(), 0.0);
    EXPECT_LT(p["angle_deg"].get<double>(), 360.0);
  }
  for (const auto& e : j["layout"]["edges"]) {
    EXPECT_EQ(e["flow"]["from"], e["src"]);
    EXPECT_EQ(e["flow"]["to"], e["dst"]);
  }
  EXPECT_EQ(j["summary"]["mode_effective"], "normalized");
  EXPECT_EQ(j["twitter"]["bot_accounts"], 1);
  EXPECT_EQ(j["label_sources_notice"].size(), 3U);
}

TEST(SceneJson, RepeatedRequestsAreByteIdentical) {
  auto engine = tiny_engine();
  const auto first = to_json(engine.scene(dom("x.test"), engine.default_options()), engine.store()).dump();
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(to_json(engine.scene(dom("x.test"), engine.default_options()), engine.store()).dump(),
              first);
  }
}

TEST(Config, LoadsAndResolvesRelativePaths) {
  auto cfg = load_config(WEBLENS_TEST_DATA "/tiny/config.json");
  EXPECT_EQ(cfg.sites_path, std::filesystem::path(WEBLENS_TEST_DATA "/tiny/sites.csv"));
  EXPECT_EQ(cfg.layout_seed, 7U);
  EXPECT_NO_THROW(validate(cfg));
  auto settings = cfg.engine_settings();
  EXPECT_EQ(settings.per_hop_cap, 100U);
}

TEST(Config, ValidationNamesMissingPath) {
  auto cfg = load_config(WEBLENS_TEST_DATA "/tiny/config.json");
  cfg.sites_path = "/definitely/missing/sites.csv";
  try {
    validate(cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/definitely/missing/sites.csv"), std::string::npos);
  }
}

TEST(Config, RejectsUnknownKeysAndBadValues) {
  const auto dir = std::filesystem::temp_directory_path() / "weblens_config_test";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& body) {
    std::ofstream(dir / "c.json") << body;
    return dir / "c.json";
  };
  EXPECT_THROW(load_config(write(R"({"sites": "x"})")), ParseError);
  EXPECT_THROW(load_config(write(R"({"per_hop_cap": "many"})")), ParseError);
  EXPECT_THROW(load_config(write("[1,2]")), ParseError);
  EXPECT_THROW(load_config(dir / "absent.json"), Error);
  EXPECT_THROW(parse_listen_address("localhost"), InvalidArgument);
  EXPECT_THROW(parse_listen_address("localhost:99999"), InvalidArgument);
  EXPECT_EQ(parse_listen_address("0.0.0.0:8080").port, 8080);
}

}  // namespace
}  // namespace weblens
