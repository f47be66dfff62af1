#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locmouf/extraction.hpp"
#include "locmouf/moufang_verify.hpp"
#include "locmouf/roundtrip.hpp"

using namespace locmouf;

namespace {

struct Built {
  Ring r;
  ProjectiveSpace p;
  FinMoufang m;
  explicit Built(const char* s)
      : r(RingSpec::parse(s)), p(make_pair_from_ring(r), r.one()), m(FinMoufang::build(moufang_data(p))) {}
  Index A(Elem x) const { return p.affine(x); }
};

const char* const kDivisible[] = {"zmod:5:1", "zmod:7:1", "zmod:5:2", "poly:5:2"};

}  // namespace

TEST_CASE("bilinear maps on the plus side of M(Z/5)") {
  Built b("zmod:5:1");
  const auto pair = ExtractedPair::build(b.m, b.A(1));
  const Side s = Side::plus;
  auto P = [&](Elem x) { return pair.elem(s, b.A(x)); };
  // V- element y of the ring pair sits at the point [1, 1 + y]
  auto M = [&](Elem y) { return pair.elem(Side::minus, b.p.from_offset(y)); };
  // y mu_(x,z) = 2 x z y in the ring picture
  CHECK(pair.bilinear(s, P(1), P(2), M(1)) == P(4));
  for (Elem x = 0; x < 5; ++x)
    for (Elem z = 0; z < 5; ++z)
      for (Elem y = 0; y < 5; ++y) REQUIRE(pair.bilinear(s, P(x), P(z), M(y)) == P(b.r.from_int(2 * x * y * z)));
  // yQ_x = x y x
  for (Elem x = 0; x < 5; ++x)
    for (Elem y = 0; y < 5; ++y) REQUIRE(pair.q(s, P(x), M(y)) == P(b.r.from_int(x * y * x)));
  CHECK(pair.q_defined());
  CHECK(pair.j4_report().ok());
}

TEST_CASE("first unit and side membership") {
  Built b("zmod:5:2");
  CHECK(first_unit(b.m) == b.A(1));
  const auto pair = ExtractedPair::build(b.m, b.A(1));
  CHECK(pair.size(Side::plus) == 25);
  CHECK(pair.size(Side::minus) == 25);
  CHECK(pair.on_side(Side::plus, b.A(5)));
  CHECK_FALSE(pair.on_side(Side::minus, b.A(5)));
  CHECK_FALSE(pair.on_side(Side::plus, b.m.inf()));
  CHECK(pair.on_side(Side::minus, b.m.inf()));
  CHECK_THROWS(pair.elem(Side::plus, b.m.inf()));
}

TEST_CASE("extraction succeeds on 2- and 3-divisible rings") {
  for (const char* s : kDivisible) {
    Built b(s);
    const auto ex = extract(b.m);
    REQUIRE_MESSAGE(ex.report.ok(), s << ": " << ex.report.first_failure());
    REQUIRE(ex.w.has_value());
    CHECK(verify_jordan_axioms(*ex.w).ok());
    CHECK(verify_local(*ex.w).ok());
    const auto rad = radical(*ex.w);
    CHECK(rad.count(Side::plus) == b.r.size() / b.r.characteristic_prime());
    // same result from the other side
    CHECK(extract(b.m.swapped()).report.ok());
  }
}

TEST_CASE("Z/4 is rejected at J3") {
  Built b("zmod:2:2");
  const auto pre = check_preconditions(b.m);
  CHECK(pre.passed("J1: special"));
  CHECK(pre.passed("J2: U_inf is abelian"));
  const Check* j3 = pre.find("J3: x . 2 and x . 3 are units for every unit x");
  REQUIRE(j3 != nullptr);
  CHECK_FALSE(j3->pass);
  CHECK_FALSE(j3->witness.empty());
  CHECK_THROWS_AS(ExtractedPair::build(b.m, b.A(1)), HypothesisFailed);
  const auto ex = extract(b.m);
  CHECK_FALSE(ex.report.ok());
  CHECK_FALSE(ex.w.has_value());
}

TEST_CASE("extraction identities") {
  for (const char* s : {"zmod:5:1", "zmod:7:1"}) {
    Built b(s);
    const auto pair = ExtractedPair::build(b.m, b.A(1));
    const auto rep = verify_extraction_identities(pair, true);
    CHECK_MESSAGE(rep.ok(), s << ": " << rep.first_failure());
  }
}

TEST_CASE("round trips") {
  for (const char* s : kDivisible) {
    Built b(s);
    CHECK_MESSAGE(verify_roundtrip_pair(b.p.pair(), b.r.one()).ok(), s);
    CHECK_MESSAGE(verify_star_and_iso(b.m, b.A(1)).ok(), s);
  }
  Built z4("zmod:2:2");
  CHECK_FALSE(verify_roundtrip_pair(z4.p.pair(), 1).ok());
}

TEST_CASE("a different distinguished unit") {
  Built b("zmod:5:2");
  const auto ex = extract(b.m, b.A(7));
  CHECK(ex.report.ok());
  CHECK(verify_star_and_iso(b.m, b.A(7)).ok());
}
