#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ekr/cli.hpp"
#include "ekr/permutations.hpp"
#include "oracles.hpp"

using namespace ekr;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome call(std::vector<std::string> args, const char *env = nullptr) {
  args.insert(args.begin(), "ekr");
  std::ostringstream out, err;
  int code = cli::main_entry(args, env, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    result.push_back(line);
  return result;
}

} // namespace

TEST_CASE("stirling single value") {
  auto r = call({"stirling", "--n", "5", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":5,\"k\":2,\"value\":\"50\"}\n");
  CHECK(r.err.empty());
}

TEST_CASE("stirling range carries ratios and big values as strings") {
  auto r = call({"stirling", "--n-min", "28", "--n-max", "30", "--k", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 3);
  CHECK(j[0]["value"].is_string());
  CHECK(j[0]["ratio"].is_number());

  auto csv = call({"stirling", "--n-min", "3", "--n-max", "4", "--k", "2",
                   "--format", "csv"});
  CHECK(lines(csv.out).front() == "n,k,value,ratio");
  CHECK(lines(csv.out).size() == 3);
}

TEST_CASE("enumerate prints one permutation per line") {
  auto r = call({"enumerate", "--n", "3", "--k", "2"});
  REQUIRE(r.code == 0);
  std::vector<std::string> expected;
  for (const auto &image : oracle::brute_snk(3, 2))
    expected.push_back(CyclePermutation::from_one_line(image).to_string());
  auto got = lines(r.out);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  CHECK(got == expected);

  auto j = call({"enumerate", "--n", "5", "--k", "3", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out).size() == 35);
}

TEST_CASE("verify reports the vertex count") {
  auto r = call({"verify", "--n", "4", "--k", "2", "--t", "1",
                 "--budget-seconds", "60"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["vertex_count"] == 11);
  CHECK(j["bound_stirling"] == "2");
  CHECK(j["optimal"] == true);
  CHECK_FALSE(j.contains("elapsed_ms"));

  auto timed = call({"verify", "--n", "4", "--k", "2", "--t", "1", "--timing"});
  CHECK(nlohmann::json::parse(timed.out).contains("elapsed_ms"));

  auto csv = call({"verify", "--n", "4", "--k", "2", "--t", "1", "--format",
                   "csv"});
  CHECK(lines(csv.out).size() == 2);
}

TEST_CASE("sweep streams one row per instance") {
  auto r = call({"sweep", "--n-min", "3", "--n-max", "5", "--k", "2", "--t",
                 "1", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out).size() == 4);
  auto j = call({"sweep", "--n-min", "3", "--n-max", "5", "--k", "2", "--t",
                 "1"});
  for (const auto &line : lines(j.out))
    CHECK(nlohmann::json::parse(line).contains("max_size"));
}

TEST_CASE("bounds and find-n0") {
  auto b = call({"bounds", "--n-max", "100", "--m", "2", "--k", "3"});
  REQUIRE(b.code == 0);
  auto j = nlohmann::json::parse(b.out);
  CHECK(j.contains("harmonic"));
  CHECK(j.contains("log_power"));
  CHECK(j.contains("constants"));

  auto f = call({"find-n0", "--k", "2", "--t", "1", "--n-max", "6"});
  REQUIRE(f.code == 0);
  CHECK(nlohmann::json::parse(f.out)["rows"].size() == 5);
}

TEST_CASE("invalid parameters exit 2 with a usage message") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"verify", "--n", "4", "--k", "2", "--t", "2"},
           {"verify", "--n", "3", "--k", "4", "--t", "1"},
           {"verify", "--n", "4", "--k", "2"},
           {"enumerate", "--n", "3", "--k", "4"},
           {"stirling", "--n", "3"},
           {"stirling", "--n-min", "5", "--n-max", "3", "--k", "2"},
           {"bounds", "--n-max", "5"},
           {"find-n0", "--k", "4", "--t", "1", "--n-max", "3"},
           {"verify", "--n", "x", "--k", "2", "--t", "1"},
           {"stirling", "--n", "5", "--k", "2", "--format", "xml"},
           {"frobnicate"},
           {}}) {
    auto r = call(args);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("output path") {
  const auto path =
      std::filesystem::temp_directory_path() / "ekr_cli_test_output.json";
  auto r = call({"stirling", "--n", "6", "--k", "3", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(text == "{\"n\":6,\"k\":3,\"value\":\"225\"}\n");
  std::filesystem::remove(path);
}

TEST_CASE("thread count from the environment") {
  std::ostringstream out, err;
  auto env = cli::parse_command_line({"ekr", "verify", "--n", "5", "--k", "2",
                                      "--t", "1"},
                                     "4", out, err);
  REQUIRE(env.config);
  CHECK(env.config->threads == 4);
  auto flag = cli::parse_command_line({"ekr", "verify", "--n", "5", "--k", "2",
                                       "--t", "1", "--threads", "2"},
                                      "4", out, err);
  REQUIRE(flag.config);
  CHECK(flag.config->threads == 2);
}

TEST_CASE("identical configurations give identical bytes") {
  const std::vector<std::string> args{"verify", "--n", "6", "--k", "3", "--t",
                                      "1"};
  auto a = call(args, "1");
  auto b = call(args, "1");
  auto c = call(args, "4");
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}
