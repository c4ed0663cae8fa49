#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "gam/report.hpp"
#include "helpers.hpp"

using namespace gam;
using namespace gam::report;

TEST_SUITE("report") {
  TEST_CASE("format_value") {
    CHECK(format_value(Value()) == "");
    CHECK(format_value(Value(0.1)) == "0.1");
    CHECK(format_value(Value(1.0 / 3.0)) == "0.3333333333333333");
    CHECK(format_value(Value(-0.0)) == "0");
    CHECK(format_value(Value(std::numeric_limits<double>::infinity())) == "inf");
    CHECK(format_value(Value(std::nan(""))) == "nan");
    CHECK(format_value(Value(42LL)) == "42");
    CHECK(format_value(Value(true)) == "true");
    const double x = 0.1 + 0.2;
    CHECK(std::stod(format_value(Value(x))) == x);  // round trip
  }

  TEST_CASE("csv quoting and json") {
    Table t{"t", {"a", "b"}, {}};
    t.rows.push_back({std::string("x,y"), 1.5});
    t.rows.push_back({std::string("say \"hi\""), Value()});
    CHECK(to_csv(t) == "a,b\n\"x,y\",1.5\n\"say \"\"hi\"\"\",\n");
    const auto j = nlohmann::json::parse(to_json(t));
    CHECK(j.size() == 2);
    CHECK(j[0]["a"] == "x,y");
    CHECK(j[0]["b"] == 1.5);
    CHECK(j[1]["b"].is_null());

    testing::TempDir dir("report");
    const auto paths = write_table(t, dir.path() / "sub", ReportFormat::Both);
    REQUIRE(paths.size() == 2);
    std::ifstream in(paths[0], std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == to_csv(t));
  }

  TEST_CASE("anova table keeps only significant rows") {
    validation::AnovaReport rep;
    validation::AnovaRow a, b;
    a.category = "Love";
    a.gam_feature = "valence_mean";
    a.significant = true;
    a.p_value = 0.01;
    b.p_value = 0.5;
    rep.rows = {a, b};
    const auto t = anova_table(rep);
    CHECK(t.rows.size() == 1);
    CHECK(t.header.front() == "category");
  }
}
