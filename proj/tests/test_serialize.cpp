#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "locmouf/extraction.hpp"
#include "locmouf/serialize.hpp"

using namespace locmouf;

namespace {

FinMoufang ring_moufang(const char* s) {
  const Ring r(RingSpec::parse(s));
  const ProjectiveSpace p(make_pair_from_ring(r), r.one());
  return FinMoufang::build(moufang_data(p), p.infinity());
}

std::string schema_error(const Json& j) {
  try {
    moufang_from_json(j);
  } catch (const SchemaError& ex) {
    return ex.what();
  }
  return {};
}

}  // namespace

TEST_CASE("export and import are lossless") {
  for (const char* s : {"zmod:5:1", "zmod:5:2", "poly:5:2"}) {
    const auto m = ring_moufang(s);
    const Json j = moufang_to_json(m);
    CHECK(j.begin().key() == "schema");
    const auto back = moufang_from_json(Json::parse(j.dump()));
    CHECK(back.data().points == m.data().points);
    CHECK(back.data().classes == m.data().classes);
    CHECK(back.u_inf() == m.u_inf());
    CHECK(back.tau() == m.tau());
    CHECK(back.inf() == m.inf());
    CHECK(moufang_to_json(back).dump() == j.dump());
  }
}

TEST_CASE("schema errors carry a location") {
  const Json good = moufang_to_json(ring_moufang("zmod:5:1"));
  SUBCASE("non-bijective tau") {
    Json j = good;
    j["tau"][1] = j["tau"][2];
    CHECK(schema_error(j) == "/tau: not a bijection");
  }
  SUBCASE("short permutation") {
    Json j = good;
    j["u_inf"][3].erase(0);
    CHECK(schema_error(j).rfind("/u_inf/3: length", 0) == 0);
  }
  SUBCASE("index out of range") {
    Json j = good;
    j["classes"][0][0] = 99;
    CHECK(schema_error(j).rfind("/classes/0/0:", 0) == 0);
  }
  SUBCASE("missing key") {
    Json j = good;
    j.erase("points");
    CHECK(schema_error(j) == "/points: missing");
  }
  SUBCASE("wrong version") {
    Json j = good;
    j["schema"] = 2;
    CHECK(schema_error(j).rfind("/schema:", 0) == 0);
  }
  SUBCASE("duplicate labels") {
    Json j = good;
    j["points"][1] = j["points"][0];
    CHECK(schema_error(j) == "/points/1: duplicate label");
  }
}

TEST_CASE("two classes are rejected by the construction") {
  Json j = moufang_to_json(ring_moufang("zmod:5:1"));
  j["classes"] = Json::parse("[[0], [1, 2, 3, 4, 5]]");
  j.erase("infinity");
  try {
    moufang_from_json(j);
    FAIL("expected a construction failure");
  } catch (const ConstructionFailure& ex) {
    CHECK(std::string(ex.what()).find("need more than 2 classes") != std::string::npos);
  }
}

TEST_CASE("files") {
  const std::string path = "serialize_test_m5.json";
  {
    std::ofstream f(path);
    f << moufang_to_json(ring_moufang("zmod:5:1")).dump(2);
  }
  CHECK(parse_moufang_file(path).size() == 6);
  {
    std::ofstream f(path);
    f << "{\"points\": [";
  }
  CHECK_THROWS_AS(parse_moufang_file(path), SchemaError);
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_moufang_file("no/such/file.json"), SchemaError);
}

TEST_CASE("report json") {
  VerifyReport r;
  Check c;
  c.name = "x";
  c.pass = false;
  c.evaluated = 3;
  c.failures = 1;
  c.witness = {{"b", "A:1"}, {"a", "R:0"}};
  r.add(c);
  const Json j = to_json(r);
  REQUIRE(j.size() == 1);
  CHECK(j[0].dump() ==
        R"({"name":"x","pass":false,"required":true,"evaluated":3,"failures":1,"witness":{"b":"A:1","a":"R:0"},"note":""})");
}

TEST_CASE("pair tables") {
  const auto ex = extract(ring_moufang("zmod:5:1"));
  REQUIRE(ex.w.has_value());
  const Json t = pair_tables(*ex.w);
  CHECK(t["elements_plus"].size() == 5);
  CHECK(t["add_plus"].size() == 5);
  CHECK(t["q_minus"][0].size() == 5);
  // Q_0 = 0
  for (const auto& v : t["q_plus"][0]) CHECK(v == 0);
}
