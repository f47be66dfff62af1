#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locmouf/error.hpp"
#include "locmouf/ring.hpp"
#include "locmouf/ring_verify.hpp"

using namespace locmouf;

namespace {

// coefficient vector of a poly element, lowest degree first
std::vector<unsigned> coeffs(const Ring& r, Elem a) {
  std::vector<unsigned> c(r.spec().k);
  for (auto& d : c) {
    d = a % r.spec().p;
    a /= r.spec().p;
  }
  return c;
}

Elem brute_inverse(const Ring& r, Elem a) {
  for (Elem b : r.elements())
    if (r.mul(a, b) == r.one()) return b;
  return static_cast<Elem>(-1);
}

}  // namespace

TEST_CASE("ring string parsing") {
  CHECK(RingSpec::parse("zmod:5:2").str() == "zmod:5:2");
  CHECK(RingSpec::parse("poly:5:2").kind == RingKind::poly);
  // a prime power base is folded into the exponent
  CHECK(RingSpec::parse("zmod:4:1") == RingSpec::parse("zmod:2:2"));
  CHECK(RingSpec::parse("zmod:25:1").str() == "zmod:5:2");
  CHECK_THROWS_AS(RingSpec::parse("zmod:5"), RingError);
  CHECK_THROWS_AS(RingSpec::parse("field:5:1"), RingError);
  CHECK_THROWS_AS(Ring(RingSpec::parse("zmod:6:1")), RingError);
  CHECK_THROWS_AS(Ring(RingSpec::parse("poly:4:1")), RingError);
  CHECK_THROWS_AS(Ring(RingSpec::parse("zmod:5:6")), RingError);  // 15625 > cap
  CHECK_NOTHROW(Ring(RingSpec::parse("zmod:5:5")));
}

TEST_CASE("zmod arithmetic matches integers mod p^k") {
  for (const char* s : {"zmod:5:1", "zmod:7:1", "zmod:2:2", "zmod:5:2", "zmod:3:3"}) {
    const Ring r(RingSpec::parse(s));
    const unsigned n = static_cast<unsigned>(r.size());
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        REQUIRE(r.add(a, b) == (a + b) % n);
        REQUIRE(r.mul(a, b) == (a * b) % n);
      }
  }
}

TEST_CASE("poly arithmetic matches truncated polynomial products") {
  const Ring r(RingSpec::parse("poly:5:2"));
  for (Elem a : r.elements())
    for (Elem b : r.elements()) {
      const auto x = coeffs(r, a), y = coeffs(r, b);
      const auto s = coeffs(r, r.add(a, b)), m = coeffs(r, r.mul(a, b));
      REQUIRE(s[0] == (x[0] + y[0]) % 5);
      REQUIRE(s[1] == (x[1] + y[1]) % 5);
      REQUIRE(m[0] == (x[0] * y[0]) % 5);
      REQUIRE(m[1] == (x[0] * y[1] + x[1] * y[0]) % 5);
    }
  // t^2 = 0
  const Elem t = r.parse_elem("t");
  CHECK(r.mul(t, t) == r.zero());
  CHECK(r.to_string(r.parse_elem("2+3t")) == "2+3t");
}

TEST_CASE("units and inverses against brute force") {
  for (const auto& spec : catalog_specs()) {
    const Ring r(spec);
    for (Elem a : r.elements()) {
      const Elem b = brute_inverse(r, a);
      REQUIRE(r.is_unit(a) == (b != static_cast<Elem>(-1)));
      if (r.is_unit(a)) REQUIRE(r.invert(a) == b);
      else REQUIRE_THROWS_AS(r.invert(a), NonUnit);
    }
  }
  const Ring z25(RingSpec::parse("zmod:5:2"));
  CHECK(z25.invert(11) == 16);
  CHECK(z25.invert(2) == 13);
  CHECK(z25.from_int(-1) == 24);
}

TEST_CASE("ring axiom report") {
  for (const auto& spec : catalog_specs()) {
    const auto rep = verify_ring(Ring(spec));
    CHECK_MESSAGE(rep.ok(), spec.str() << ": " << rep.first_failure());
  }
}
