#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "ptb/tracefield.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ptb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string repeat(const std::string& s, int n) {
  std::string r;
  for (int i = 0; i < n; ++i) r += s;
  return r;
}

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("ptb-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("analyze exit codes") {
  unsetenv("PTB_CACHE_DIR");
  auto r = run({"analyze", "RL4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Z/4") != std::string::npos);
  CHECK(run({"analyze", "R"}).code == 2);
  CHECK(run({"analyze", "RX"}).code == 2);
  CHECK(run({"analyze", ""}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"analyze", repeat("R9L9", 40)}).code == 3);
}

TEST_CASE("analyze json") {
  unsetenv("PTB_CACHE_DIR");
  const auto r = run({"--json", "analyze", "-RL4"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  const auto& rec = j.is_array() ? j.at(0) : j;
  CHECK(rec.at("word") == "-RL4");
  CHECK(rec.at("h1").at("torsion") == nlohmann::json::array({"8"}));
  CHECK(rec.at("K").at("r1") == 0);
  // records survive a parse and re-serialization unchanged
  const auto back = ptb::to_json(ptb::report_from_json(rec));
  CHECK(back.dump() == rec.dump());
}

TEST_CASE("euler exit codes") {
  auto r = run({"euler", "--character", "3,3,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("-1") != std::string::npos);
  CHECK(run({"euler", "--character", "0,0,0"}).code == 2);
  CHECK(run({"euler", "--character", "2,2,2"}).code == 2);
  CHECK(run({"euler", "--character", "3,3,4"}).code == 2);
  CHECK(run({"euler", "--character", "3,3"}).code == 2);
  CHECK(run({"euler", "--character", "-3,3,-3"}).code == 0);
}

TEST_CASE("field command") {
  auto r = run({"field", "-2,3,-1,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1") != std::string::npos);
  CHECK(run({"field", "-1,0,1"}).code == 2);
  CHECK(run({"field", "1,a"}).code == 2);
}

TEST_CASE("verify-paper") {
  auto r = run({"verify-paper"});
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
  r = run({"--json", "verify-paper", "--only", "m039"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(!j.empty());
  for (const auto& row : j) CHECK(row.at("id") == "m039");

  const fs::path dir = scratch_dir("fixture");
  std::ofstream(dir / "bad.json") << "{ not json";
  CHECK(run({"verify-paper", "--fixture", (dir / "bad.json").string()}).code == 2);
  CHECK(run({"verify-paper", "--fixture", (dir / "missing.json").string()}).code == 2);

  auto fixture = nlohmann::json::parse(ptb::cli::embedded_fixture());
  std::ofstream(dir / "ok.json") << fixture.dump();
  CHECK(run({"verify-paper", "--fixture", (dir / "ok.json").string(), "--only", "m039"}).code == 0);
  // wrong expectation
  fixture["records"][0]["expected_torsion"] = {"5"};
  std::ofstream(dir / "wrong.json") << fixture.dump();
  r = run({"verify-paper", "--fixture", (dir / "wrong.json").string(), "--only", "m039"});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("sweep and cache") {
  const fs::path dir = scratch_dir("cache");
  setenv("PTB_CACHE_DIR", dir.c_str(), 1);
  const auto first = run({"sweep", "--max-exponent", "2", "--out", (dir / "a.jsonl").string()});
  CHECK(first.code == 0);
  std::size_t cached = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir)) cached += e.path().extension() == ".json";
  CHECK(cached >= 1);
  const auto second = run({"sweep", "--max-exponent", "2", "--out", (dir / "b.jsonl").string()});
  CHECK(second.code == 0);

  auto lines = [](const fs::path& p) {
    std::ifstream in(p);
    std::vector<nlohmann::json> v;
    for (std::string s; std::getline(in, s);) {
      if (!s.empty()) v.push_back(nlohmann::json::parse(s));
    }
    return v;
  };
  auto a = lines(dir / "a.jsonl"), b = lines(dir / "b.jsonl");
  REQUIRE(a.size() == 2);
  REQUIRE(b.size() == 2);
  for (std::size_t i = 0; i < a.size(); ++i) {
    a[i].erase("runtime_ms");
    b[i].erase("runtime_ms");
    CHECK(a[i] == b[i]);
  }
  CHECK(run({"sweep", "--max-exponent", "1"}).code == 2);
  unsetenv("PTB_CACHE_DIR");
  fs::remove_all(dir);
}
