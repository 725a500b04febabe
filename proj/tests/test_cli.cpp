#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "wlplab/cli.hpp"

using namespace wlplab;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("indpoly and mode") {
    auto r = run({"indpoly", "path:6"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 + 6t + 10t^2 + 4t^3\n");
    CHECK(run({"indpoly", "--method", "enum", "path:6"}).out == r.out);
    r = run({"mode", "path:13"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
    r = run({"--format", "json", "indpoly", "cycle:5"});
    CHECK(nlohmann::json::parse(r.out)["coefficients"] == nlohmann::json::array({"1", "5", "5"}));
  }

  TEST_CASE("wlp exit codes") {
    auto r = run({"wlp", "cycle:17"});
    CHECK(r.code == 0);
    CHECK(r.out.find("has_wlp true") != std::string::npos);
    CHECK(run({"wlp", "path:8"}).code == 1);
    CHECK(run({"wlp", "path:7", "path:8"}).code == 1);
    CHECK(run({"--char", "5", "wlp", "empty:5"}).code == 0);
    CHECK(run({"--char", "3", "wlp", "empty:5"}).code == 1);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    auto r = run({"wlp", "path:"});
    CHECK(r.code == 2);
    CHECK(r.err.find("byte 5") != std::string::npos);
    CHECK(run({"wlp", "ce:3"}).code == 2);
    CHECK(run({"--char", "4", "wlp", "path:3"}).code == 2);
    CHECK(run({"--format", "xml", "wlp", "path:3"}).code == 2);
    CHECK(run({"reproduce", "thm-nothing"}).code == 2);
    CHECK_THROWS_AS(cli::reproduce("thm-nothing"), cli::UnknownTarget);
  }

  TEST_CASE("json verdicts round trip") {
    auto r = run({"--format", "json", "wlp", "path:8", "cycle:6"});
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> specs;
    while (std::getline(lines, line)) {
      const auto j = nlohmann::json::parse(line);
      CHECK(WlpVerdict::from_json(j).to_json() == j);
      specs.push_back(j["spec"]);
    }
    CHECK(specs == std::vector<std::string>{"path:8", "cycle:6"});
  }

  TEST_CASE("csv has one record per degree") {
    auto r = run({"--format", "csv", "wlp", "path:8"});
    CHECK(count_lines(r.out) == 1 + 5);
    r = run({"--format", "csv", "reproduce", "table1"});
    CHECK(count_lines(r.out) == 1 + 52);
  }

  TEST_CASE("table output is stable under a fixed seed") {
    CHECK(run({"--seed", "42", "wlp", "pan:11"}).out == run({"--seed", "42", "wlp", "pan:11"}).out);
  }

  TEST_CASE("environment variables mirror flags and flags win") {
    setenv("WLPLAB_FORMAT", "json", 1);
    auto r = run({"indpoly", "path:3"});
    CHECK(r.out.front() == '{');
    r = run({"--format", "table", "indpoly", "path:3"});
    CHECK(r.out == "1 + 3t + t^2\n");
    unsetenv("WLPLAB_FORMAT");
  }

  TEST_CASE("verdict cache") {
    const std::string path = "wlplab_test_cache.jsonl";
    std::remove(path.c_str());
    auto first = run({"--cache", path, "--format", "json", "wlp", "path:8"});
    auto second = run({"--cache", path, "--format", "json", "wlp", "path:8"});
    CHECK(first.out == second.out);
    std::ifstream in(path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
      const auto j = nlohmann::json::parse(line);
      for (const char* key : {"key", "verdict", "timestamp", "version"}) CHECK(j.contains(key));
      ++n;
    }
    CHECK(n == 1);
    cli::VerdictCache cache(path);
    CHECK(cache.lookup(cli::VerdictCache::key("path:8", 0, CertifyMode::Auto)).has_value());
    CHECK_FALSE(cache.lookup(cli::VerdictCache::key("path:8", 3, CertifyMode::Auto)).has_value());
    std::remove(path.c_str());
  }

  TEST_CASE("reproduce reports") {
    auto rep = cli::reproduce("table1");
    CHECK(rep.cases.size() == 52);
    CHECK(rep.pass());
    auto r = run({"reproduce", "thm-paths", "--max-n", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("10/10 cases pass") != std::string::npos);
    r = run({"--format", "json", "reproduce", "lemma-modes", "--max-n", "50"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["failed"] == 0);
  }

  TEST_CASE("worker pool keeps input order and rethrows") {
    std::vector<int> seen(100, -1);
    cli::for_each_index(seen.size(), 4, [&](std::size_t i) { seen[i] = static_cast<int>(i); });
    for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == static_cast<int>(i));
    CHECK_THROWS_AS(cli::for_each_index(10, 3,
                                        [](std::size_t i) {
                                          if (i == 7) throw std::runtime_error("boom");
                                        }),
                    std::runtime_error);
  }

  TEST_CASE("catalog export is json") {
    auto r = run({"catalog", "export"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out).contains("families"));
  }
}
