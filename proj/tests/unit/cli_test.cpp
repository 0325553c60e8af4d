#include <gtest/gtest.h>

#include <algorithm>
#include <cstdio>
#include <set>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "sbraid_cli/cli.hpp"

namespace sbraid {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::execute(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("sbraid_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

void expect_report_schema(const json& j) {
  ASSERT_TRUE(j.contains("command"));
  ASSERT_TRUE(j["cases"].is_array());
  for (const auto& c : j["cases"]) {
    ASSERT_TRUE(c["id"].is_string());
    ASSERT_TRUE(c["pass"].is_boolean());
    ASSERT_TRUE(c.contains("details"));
  }
  std::vector<std::string> ids;
  for (const auto& c : j["cases"]) ids.push_back(c["id"]);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(j["summary"]["cases"].get<std::size_t>(), j["cases"].size());
  EXPECT_EQ(j["summary"]["passed"].get<std::size_t>() + j["summary"]["failed"].get<std::size_t>(),
            j["cases"].size());
  EXPECT_TRUE(j["duration_us"].is_number_integer());
}

TEST(Cli, VerifyAll) {
  Result r = run({"verify", "--suite", "all", "--n-max", "3", "--g-max", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  expect_report_schema(j);
  EXPECT_TRUE(j["summary"]["pass"].get<bool>());
  std::set<std::string> suites;
  for (const auto& c : j["cases"]) suites.insert(c["id"].get<std::string>().substr(0, c["id"].get<std::string>().find('/')));
  EXPECT_EQ(suites, (std::set<std::string>{"almost-direct", "identity-A", "identity-B", "lemma41-1", "lemma41-2",
                                           "splitting", "tau-gamma2"}));
}

TEST(Cli, VerifyAlmostDirect) {
  Result r = run({"verify", "--suite", "almost-direct", "--n", "3", "--g", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json d = json::parse(r.out)["cases"][0]["details"];
  EXPECT_EQ(d["n"], 3);
  EXPECT_EQ(d["g"], 2);
  EXPECT_TRUE(d["pairs_checked"].get<int>() > 0);
  EXPECT_EQ(d["witnesses"].size(), 2u);
}

TEST(Cli, MutatedSplittingFails) {
  Result r = run({"verify", "--suite", "splitting", "--n", "2", "--g", "1", "--omit-section-c", "1"});
  EXPECT_EQ(r.code, 1);
  json j = json::parse(r.out);
  expect_report_schema(j);
  EXPECT_EQ(j["summary"]["failed"], 1);
}

TEST(Cli, NqBraid) {
  Result r = run({"nq", "--preset", "artin-braid", "--n", "4", "--class", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["pieces"][0]["rank"], 1);
  EXPECT_TRUE(j["pieces"][0]["torsion"].empty());
  EXPECT_TRUE(j["pieces"][1]["trivial"].get<bool>());
  EXPECT_EQ(j["stabilizes_at"], 2);
}

TEST(Cli, Presentation) {
  Result r = run({"presentation", "--preset", "pure-closed-abt", "--n", "2", "--g", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["generators"].size(), 5u);
  EXPECT_EQ(j["counts"]["relators"].get<std::size_t>(), j["relators"].size());
  Result text = run({"presentation", "--preset", "surface-group", "--g", "2", "--format", "text"});
  ASSERT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("generators (4)"), std::string::npos);
  Result lit = run({"presentation", "--preset", "pure-closed-A", "--n", "3", "--g", "1"});
  Result bnd = run({"presentation", "--preset", "pure-closed-A", "--n", "3", "--g", "1", "--reading", "boundary"});
  EXPECT_GT(json::parse(bnd.out)["relators"].size(), json::parse(lit.out)["relators"].size());
}

TEST(Cli, Action) {
  Result r = run({"action", "--n", "2", "--g", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j["basis"].size(), 3u);
  bool found = false;
  for (const auto& m : j["matrices"]) {
    if (m["letter"] != "b[1,1]") continue;
    found = true;
    ASSERT_EQ(m["off_identity"].size(), 1u);
    EXPECT_EQ(m["off_identity"][0]["row"], "t[1,2]");
    EXPECT_EQ(m["off_identity"][0]["col"], "a[2,1]");
    EXPECT_EQ(m["off_identity"][0]["value"], 1);
  }
  EXPECT_TRUE(found);
  EXPECT_EQ(run({"action", "--n", "3", "--g", "1", "--format", "text"}).code, 0);
}

TEST(Cli, DeriveFiles) {
  Result exported = run({"derive", "--export", "lemma41-1", "--n", "3", "--g", "1"});
  ASSERT_EQ(exported.code, 0) << exported.err;
  json scripts = json::parse(exported.out);
  ASSERT_TRUE(scripts.is_array());
  ASSERT_FALSE(scripts.empty());

  std::string all = temp_file("all.json", exported.out);
  Result ok = run({"derive", all});
  ASSERT_EQ(ok.code, 0) << ok.err;
  expect_report_schema(json::parse(ok.out));
  EXPECT_EQ(json::parse(ok.out)["cases"].size(), scripts.size());

  json broken = scripts[0];
  broken["target"] = "t[1,2]";
  Result bad = run({"derive", temp_file("broken.json", broken.dump())});
  EXPECT_EQ(bad.code, 1);
  EXPECT_FALSE(json::parse(bad.out)["cases"][0]["pass"].get<bool>());

  Result sample = run({"derive", std::string(SBRAID_SCRIPTS_DIR) + "/er2_one_step.json"});
  EXPECT_EQ(sample.code, 0) << sample.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  Result flag = run({"verify", "--bogus"});
  EXPECT_EQ(flag.code, 2);
  EXPECT_FALSE(flag.err.empty());
  EXPECT_EQ(run({"verify", "--suite", "lemma41-9"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "splitting", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--n", "3", "--n-max", "2"}).code, 2);
  EXPECT_EQ(run({"nq", "--preset", "nope", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"nq", "--n", "2"}).code, 2);
  EXPECT_EQ(run({"derive", "/nonexistent/script.json"}).code, 2);
  EXPECT_EQ(run({"derive", temp_file("garbage.json", "{not json")}).code, 2);
  EXPECT_EQ(run({"derive"}).code, 2);
  EXPECT_EQ(run({"presentation", "--preset", "pure-closed-abt", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

}  // namespace
}  // namespace sbraid
