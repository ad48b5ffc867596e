#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "tiltwall/report_json.hpp"
#include "tiltwall_cli/cli.hpp"

namespace fs = std::filesystem;
using tiltwall::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "tiltwall");
  std::ostringstream out, err;
  const int code = tiltwall::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string config(const char* name) { return std::string(TILTWALL_CONFIG_DIR) + "/" + name; }

fs::path write_temp(const std::string& name, const std::string& text) {
  const fs::path p = fs::temp_directory_path() / ("tiltwall_test_" + name);
  std::ofstream(p) << text;
  return p;
}

const char* kQuinticN1 = "[threefold]\nh3 = 5\nc2H = 50\n[charge]\nbetaH = 0\nm = 0\nn = 1\nQ = 0\n";

}  // namespace

TEST(Cli, FirstWallWorkedExample) {
  const Result r = run({"first-wall", "--config", config("criterion1.toml")});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j.at("first_wall").at("b0"), "-26/5");
  EXPECT_EQ(j.at("first_wall").at("w_f"), "1103/50");
  EXPECT_EQ(j.at("provenance").at("command"), "first-wall");
  EXPECT_EQ(j.at("provenance").at("version"), tiltwall::kVersion);
  EXPECT_EQ(j.at("provenance").at("config_hash").get<std::string>().size(), 16u);
}

TEST(Cli, Deterministic) {
  const auto a = run({"first-wall", "--config", config("quintic.toml")});
  const auto b = run({"first-wall", "--config", config("quintic.toml")});
  EXPECT_EQ(a.out, b.out);
  const auto p1 = run({"plot", "--config", config("criterion1.toml")});
  const auto p2 = run({"plot", "--config", config("criterion1.toml")});
  EXPECT_EQ(p1.out, p2.out);
  EXPECT_NE(p1.out.find("<svg"), std::string::npos);
}

TEST(Cli, DecimalFlag) {
  const Result r = run({"first-wall", "--config", config("criterion1.toml"), "--decimal", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out).at("first_wall").at("b0"), "-5.20");
}

TEST(Cli, UsageErrorsExit2) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"first-wall", "--config", config("quintic.toml"), "--bogus"}).code, 2);
  EXPECT_EQ(run({"first-wall"}).code, 2);
  EXPECT_EQ(run({"li-region", "--b", "1"}).code, 2);
  EXPECT_EQ(run({"li-region", "--b", "x", "--w", "1"}).code, 2);
}

TEST(Cli, ConfigErrorsExit4) {
  const fs::path bad = write_temp("bad.toml", "[threefold]\nvolume = 5\n");
  EXPECT_EQ(run({"first-wall", "--config", bad.string()}).code, 4);
  EXPECT_EQ(run({"first-wall", "--config", "/nonexistent.toml"}).code, 4);
  const fs::path good = write_temp("good.toml", kQuinticN1);
  const fs::path junk = write_temp("junk.json", "{not json");
  EXPECT_EQ(run({"toda", "--config", good.string(), "--table", junk.string()}).code, 4);
}

TEST(Cli, PreconditionsExit3) {
  const fs::path good = write_temp("good3.toml", kQuinticN1);
  const fs::path nl = write_temp("nl_bad.json", R"([{"d": "1", "gamma": 0, "value": 1}])");
  const Result r = run({"nl-series", "--config", good.string(), "--table", nl.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("inconsistent-coset"), std::string::npos);
  EXPECT_EQ(run({"bg-check", "--charge", "1,0,-3,0", "--b", "0", "--w", "1"}).code, 3);
  EXPECT_EQ(run({"wall", "--u", "1,2,3,0", "--v", "2,4,6,1"}).code, 3);
}

TEST(Cli, MinN) {
  const fs::path cfg = write_temp("minn.toml", "[threefold]\nh3 = 5\nc2H = 50\n[charge]\nbetaH = 1\nm = 0\n");
  const Result r = run({"min-n", "--config", cfg.string(), "--n-max", "80"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out).at("min_n").is_number_integer());
  const Result none = run({"min-n", "--config", cfg.string(), "--n-max", "2"});
  EXPECT_EQ(Json::parse(none.out).at("min_n"), "none");
}

TEST(Cli, CountingCommands) {
  const fs::path cfg = write_temp("count.toml", kQuinticN1);
  EXPECT_EQ(Json::parse(run({"en", "--config", cfg.string()}).out).at("e_n"), "5");
  EXPECT_EQ(Json::parse(run({"dt", "--config", cfg.string(), "--I", "3"}).out).at("omega"), "15");
  EXPECT_EQ(Json::parse(run({"mhat", "--config", cfg.string()}).out).at("mhat"), "-55/24");
  EXPECT_EQ(Json::parse(run({"chi", "--config", cfg.string(), "--charge", "1,5,5/2,5/6"}).out).at("chi"), "5");
  const Json tw = Json::parse(run({"twist", "--config", cfg.string(), "--a", "2"}).out);
  EXPECT_EQ(tw.at("mhat_before"), tw.at("mhat_after"));
  const fs::path table = write_temp("toda.json", R"([{"type": "P", "degree": 0, "charge": 0, "value": 1},
                                                     {"type": "I", "degree": 0, "charge": 0, "value": 2}])");
  const Json toda = Json::parse(run({"toda", "--config", cfg.string(), "--table", table.string()}).out);
  EXPECT_EQ(toda.at("toda_sum"), "10");
  EXPECT_EQ(toda.at("e_n_times_I_minus_m"), "10");
  EXPECT_EQ(toda.at("terms").size(), 1u);
}

TEST(Cli, ModularCommands) {
  const fs::path cfg = write_temp("mod.toml", kQuinticN1);
  const Json g = Json::parse(run({"goettsche", "--config", cfg.string(), "--order", "3"}).out);
  EXPECT_EQ(g.at("series").at("offset"), "-55/24");
  EXPECT_EQ(g.at("series").at("coeffs").size(), 4u);
  const Json t = Json::parse(run({"t-check", "--config", cfg.string()}).out);
  EXPECT_EQ(t.at("phi"), "17/24");
  EXPECT_TRUE(t.at("passed").get<bool>());
  const fs::path series = write_temp("series.json", R"({"offset": "1/3", "coeffs": ["1", "1"], "order": 1})");
  const Json f = Json::parse(run({"t-check", "--config", cfg.string(), "--series", series.string(), "--phi", "1/2"}).out);
  EXPECT_FALSE(f.at("passed").get<bool>());
  const fs::path nl = write_temp("nl.json", R"([{"d": "0", "gamma": 0, "value": 1}])");
  const Json s = Json::parse(run({"nl-series", "--config", cfg.string(), "--table", nl.string(), "--order", "2"}).out);
  EXPECT_EQ(s.at("components").size(), 5u);
  EXPECT_EQ(s.at("weight"), "-3/2");
  const Json m = Json::parse(run({"s-matrix", "--N", "3"}).out);
  EXPECT_EQ(m.at("matrix").size(), 3u);
  EXPECT_LT(m.at("unitarity_deviation").get<double>(), 1e-12);
}

TEST(Cli, GeometryCommands) {
  const Json li = Json::parse(run({"li-region", "--b", "-26/5", "--w", "1103/50"}).out);
  EXPECT_TRUE(li.at("in_li_region").get<bool>());
  const Json w = Json::parse(run({"wall", "--config", config("criterion1.toml"), "--u", "0,10,-52,497/3",
                                  "--v", "1,-10,50,-500/3"}).out);
  EXPECT_EQ(w.at("wall").at("slope"), "-26/5");
  const Json bg = Json::parse(run({"bg-check", "--charge", "1,0,-2,10/3", "--b", "-5/2", "--w", "17/4"}).out);
  EXPECT_TRUE(bg.at("inequality_holds").get<bool>());
}

TEST(Cli, PlotToFile) {
  const fs::path out = fs::temp_directory_path() / "tiltwall_test_walls.svg";
  fs::remove(out);
  const Result r = run({"plot", "--config", config("quintic.toml"), "--out", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_NE(ss.str().find("class=\"wall\""), std::string::npos);
}
