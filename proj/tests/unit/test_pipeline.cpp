#include <fstream>
#include <sstream>

#include <doctest.h>

#include "gam/outcome.hpp"
#include "gam/pipeline.hpp"
#include "helpers.hpp"

using namespace gam;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig fixture_config(const std::filesystem::path& out) {
  auto cfg = load_run_config(testing::data_dir() / "run.conf");
  cfg.out = out;
  return cfg;
}

}  // namespace

TEST_SUITE("pipeline") {
  TEST_CASE("commands parse") {
    CHECK(parse_command("validate") == Command::Validate);
    CHECK(to_string(Command::All) == "all");
    CHECK_THROWS_AS(parse_command("bogus"), std::invalid_argument);
  }

  TEST_CASE("config resolves relative paths") {
    const auto cfg = load_run_config(testing::data_dir() / "run.conf");
    CHECK(cfg.annotations.size() == 3);
    CHECK(cfg.metadata == testing::data_dir() / "metadata.csv");
    CHECK(cfg.lexicons.size() == 3);
    CHECK(cfg.lexicons[1].schema.has_value());
    CHECK(cfg.aliases.at("code") == "ignore");

    testing::TempDir dir("config_err");
    const auto bad = dir.write("bad.conf", "metadata = m.csv\nnonsense line\n");
    CHECK_THROWS_AS(load_run_config(bad), InputError);
    const auto unknown = dir.write("unknown.conf", "colour = red\n");
    CHECK_THROWS_AS(load_run_config(unknown), InputError);
  }

  TEST_CASE("full run is deterministic") {
    testing::TempDir a("pipe_a"), b("pipe_b");
    DecisionLog la, lb;
    std::ostringstream oa, ob;
    auto ca = fixture_config(a.path());
    auto cb = fixture_config(b.path());
    ca.log_decisions = cb.log_decisions = true;
    const auto pa = run(Command::All, ca, la, oa);
    const auto pb = run(Command::All, cb, lb, ob);
    REQUIRE(pa.size() == pb.size());
    CHECK(pa.size() >= 8);
    for (const auto* name : {"corpus_stats.csv", "coverage.csv", "agreement.csv",
                             "gam_features.csv", "bivariate.csv", "partial_dependence.csv",
                             "anova.csv", "decisions.log"}) {
      CHECK(std::filesystem::exists(a.path() / name));
      CHECK(slurp(a.path() / name) == slurp(b.path() / name));
    }
    CHECK(la.counts() == lb.counts());
    CHECK(la.counts().contains("annotation.valence_reversed"));
  }

  TEST_CASE("agree with two files warns about the missing median") {
    testing::TempDir dir("pipe_two");
    auto cfg = fixture_config(dir.path());
    cfg.annotations.pop_back();
    DecisionLog log;
    std::ostringstream out;
    run(Command::Agree, cfg, log, out);
    CHECK(out.str().find("median") != std::string::npos);
    CHECK(log.counts().contains("agreement.no_median"));
    const auto csv = slurp(dir.path() / "agreement.csv");
    CHECK(csv.find("k_12") != std::string::npos);
    CHECK(csv.find("k_1m") == std::string::npos);

    // validation needs the median
    CHECK_THROWS_AS(run(Command::Validate, cfg, log, out), InputError);
  }

  TEST_CASE("a missing input fails before any report is written") {
    testing::TempDir dir("pipe_missing");
    auto cfg = fixture_config(dir.path() / "out");
    cfg.lexicons[0].file = dir.path() / "nope.csv";
    DecisionLog log;
    std::ostringstream out;
    CHECK_THROWS_AS(run(Command::All, cfg, log, out), InputError);
    CHECK_FALSE(std::filesystem::exists(dir.path() / "out" / "corpus_stats.csv"));
  }
}
