#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locmouf/jordan_pair.hpp"

using namespace locmouf;

namespace {

JordanPair ring_pair(const char* s) { return make_pair_from_ring(Ring(RingSpec::parse(s))); }

}  // namespace

TEST_CASE("Q is x y x") {
  const Ring r(RingSpec::parse("zmod:5:2"));
  const auto v = make_pair_from_ring(r);
  for (Side s : {Side::plus, Side::minus})
    for (Elem x : r.elements())
      for (Elem y : r.elements()) REQUIRE(v.q(s, x, y) == r.mul(r.mul(x, y), x));
  // {x y z} = 2xyz for a commutative ring
  CHECK(v.triple(Side::plus, 1, 1, 2) == 4);
  CHECK(v.triple(Side::plus, 3, 4, 5) == r.from_int(2 * 3 * 4 * 5));
}

TEST_CASE("side-checked operations") {
  const auto v = ring_pair("zmod:5:1");
  CHECK(q_apply(v, {Side::plus, 2}, {Side::minus, 3}) == JElem{Side::plus, 2});  // 2*3*2 = 12 = 2
  CHECK_THROWS_AS(q_apply(v, {Side::plus, 2}, {Side::plus, 3}), SideMismatch);
  CHECK_THROWS_AS(triple_product(v, {Side::plus, 1}, {Side::plus, 1}, {Side::plus, 1}), SideMismatch);
}

TEST_CASE("invertibility, inverses and quasi-inverses against ring arithmetic") {
  for (const char* s : {"zmod:5:1", "zmod:2:2", "zmod:5:2", "poly:5:2"}) {
    const Ring r(RingSpec::parse(s));
    const auto v = make_pair_from_ring(r);
    const auto rad = radical(v);
    for (Elem x : r.elements()) {
      REQUIRE(is_invertible(v, Side::plus, x) == r.is_unit(x));
      REQUIRE(rad.contains(Side::minus, x) == !r.is_unit(x));
      if (r.is_unit(x)) REQUIRE(jp_inverse(v, Side::plus, x) == r.invert(x));
      else REQUIRE_THROWS_AS(jp_inverse(v, Side::plus, x), NotInvertible);
      for (Elem y : r.elements()) {
        // (x, y) is quasi-invertible iff 1 - xy is a unit; then x^y = x (1 - yx)^-1
        const Elem d = r.sub(r.one(), r.mul(x, y));
        REQUIRE(is_quasi_invertible(v, Side::plus, x, y) == r.is_unit(d));
        if (r.is_unit(d)) REQUIRE(quasi_inverse(v, Side::plus, x, y) == r.mul(x, r.invert(d)));
      }
    }
    CHECK(rad.count(Side::plus) == r.size() / r.characteristic_prime());
  }
}

TEST_CASE("structure checks and axiom suites pass on the catalog") {
  for (const auto& spec : catalog_specs()) {
    const auto v = make_pair_from_ring(Ring(spec));
    CHECK_MESSAGE(structure_checks(v).ok(), spec.str());
    CHECK_MESSAGE(verify_jordan_axioms(v).ok(), spec.str());
    CHECK_MESSAGE(verify_local(v).ok(), spec.str());
    CHECK_MESSAGE(verify_quasi_inverse_identities(v).ok(), spec.str());
  }
}

TEST_CASE("negative controls fail with a witness") {
  const Ring r(RingSpec::parse("zmod:5:1"));
  const auto g = AbelianGroup::additive_group(r);
  const auto linear = JordanPair::unchecked("linear", g, g, [&](Side, Elem x, Elem y) { return r.mul(x, y); });
  const auto shifted = JordanPair::unchecked("shifted", g, g,
                                             [&](Side, Elem x, Elem y) { return r.add(r.mul(r.mul(x, x), y), x); });
  for (const auto* v : {&linear, &shifted}) {
    const auto rep = verify_jordan_axioms(*v);
    REQUIRE_FALSE(rep.ok());
    const Check* c = rep.find(rep.first_failure());
    REQUIRE(c != nullptr);
    CHECK_FALSE(c->witness.empty());
  }
  // create() refuses the shifted map: Q_x is not additive in y
  CHECK_THROWS_AS(JordanPair::create("shifted", g, g, [&](Side, Elem x, Elem y) { return r.add(r.mul(r.mul(x, x), y), x); }),
                  InvalidPair);
}

TEST_CASE("generator-based structure checks agree with a full sweep") {
  const Ring r(RingSpec::parse("zmod:5:2"));
  const auto g = AbelianGroup::additive_group(r);
  auto full_additive = [&](const JordanPair& v) {
    for (Elem x : r.elements())
      for (Elem a : r.elements())
        for (Elem b : r.elements())
          if (v.q(Side::plus, x, r.add(a, b)) != r.add(v.q(Side::plus, x, a), v.q(Side::plus, x, b))) return false;
    return true;
  };
  const auto good = make_pair_from_ring(r);
  const auto bad = JordanPair::unchecked("shifted", g, g, [&](Side, Elem x, Elem y) { return r.add(r.mul(r.mul(x, x), y), x); });
  CHECK(full_additive(good));
  CHECK(structure_checks(good).ok());
  CHECK_FALSE(full_additive(bad));
  CHECK_FALSE(structure_checks(bad).ok());
}
