#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "locmouf/cli.hpp"
#include "locmouf/serialize.hpp"

using namespace locmouf;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("report layout") {
  const auto r = call({"ring-info", "zmod:5:2"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"schema", "tool", "version", "command", "input", "summary", "checks", "ok",
                                         "timing_ms"});
  CHECK(j["schema"] == 1);
  CHECK(j["summary"]["size"] == 25);
  CHECK(j["summary"]["units"] == 20);
}

TEST_CASE("exit codes") {
  CHECK(call({"jp-verify", "zmod:5:1"}).code == 0);
  CHECK(call({"jp-verify", "zmod:5:1", "--control", "linear"}).code == 1);
  CHECK(call({"jp-verify", "zmod:5:1", "--control", "shifted"}).code == 1);
  CHECK(call({"roundtrip", "zmod:4:1"}).code == 1);
  CHECK(call({"ms-group", "zmod:5:1", "--cap", "10"}).code == 1);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"ring-info", "zmod:6:1"}).code == 2);
  CHECK(call({"ring-info"}).code == 2);
  CHECK(call({"ms-extract", "zmod:5:2", "--e", "5"}).code == 2);
  CHECK(call({"ms-verify", "--input", "no/such/file.json"}).code == 2);
  CHECK(call({"jp-verify", "zmod:5:1", "--control", "cubic"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("group order and radical") {
  const Json g = call({"ms-group", "zmod:5:1"}).json();
  CHECK(g["summary"]["order"] == 60);
  CHECK(g["ok"] == true);
  const Json r = call({"jp-radical", "zmod:4:1"}).json();
  CHECK(r["summary"]["radical_plus"] == Json::parse(R"(["0", "2"])"));
  CHECK(r["summary"]["invertible_minus"] == 2);
}

TEST_CASE("Z/4 round trip names J3") {
  const auto r = call({"roundtrip", "zmod:4:1"});
  const Json j = r.json();
  bool j3 = false;
  for (const auto& c : j["checks"])
    if (c["pass"] == false && c["name"].get<std::string>().find("J3") != std::string::npos) {
      j3 = true;
      CHECK(c["witness"]["u"] == "A:1");
    }
  CHECK(j3);
}

TEST_CASE("build, export and reload") {
  const std::string path = "cli_test_m7.json";
  REQUIRE(call({"ms-build", "zmod:7:1", "--out", path}).code == 0);
  const auto v = call({"ms-verify", "--input", path});
  CHECK(v.code == 0);
  CHECK(v.json()["summary"]["points"] == 8);
  const auto x = call({"ms-extract", "--input", path, "--e", "A:3"});
  CHECK(x.code == 0);
  CHECK(x.json()["summary"]["e"] == "A:3");
  CHECK(call({"ms-extract", "--input", path, "--e", "A:0"}).code == 2);
  CHECK(call({"ms-verify", "zmod:7:1", "--input", path}).code == 2);
  std::remove(path.c_str());
}

TEST_CASE("reports are deterministic apart from timing") {
  auto strip = [](Json j) {
    j.erase("timing_ms");
    return j.dump();
  };
  const auto a = call({"ms-extract", "zmod:5:1", "--deep"});
  const auto b = call({"ms-extract", "zmod:5:1", "--deep", "--seedless"});
  REQUIRE(a.code == 0);
  Json ja = a.json(), jb = b.json();
  jb["input"] = ja["input"];
  CHECK(strip(ja) == strip(jb));
}

TEST_CASE("table export") {
  const std::string path = "cli_test_table.json";
  REQUIRE(call({"ms-extract", "poly:5:2", "--table", path}).code == 0);
  std::ifstream f(path);
  const Json t = Json::parse(f);
  CHECK(t["q_plus"].size() == 25);
  std::remove(path.c_str());
}
