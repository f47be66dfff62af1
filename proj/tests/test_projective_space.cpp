#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "locmouf/projective_space.hpp"

using namespace locmouf;

namespace {

// For V = (R, R) the point [x, y] is the line through (x, 1 - yx) in R^2.
bool same_line(const Ring& r, Elem a, Elem b, Elem c, Elem d) {
  for (Elem u : r.elements())
    if (r.is_unit(u) && r.mul(u, a) == c && r.mul(u, b) == d) return true;
  return false;
}

struct Fixture {
  Ring r;
  ProjectiveSpace p;
  explicit Fixture(const char* s, Elem e = 1) : r(RingSpec::parse(s)), p(make_pair_from_ring(r), e) {}
  Elem second(Elem x, Elem y) const { return r.sub(r.one(), r.mul(y, x)); }
};

}  // namespace

TEST_CASE("point and class counts") {
  Fixture z25("zmod:5:2");
  CHECK(z25.p.size() == 30);
  CHECK(z25.p.class_count() == 6);
  Fixture z4("zmod:4:1");
  CHECK(z4.p.size() == 6);
  CHECK(z4.p.class_count() == 3);
  for (const auto& spec : catalog_specs()) {
    const Ring r(spec);
    const ProjectiveSpace p(make_pair_from_ring(r), r.one());
    const auto& st = p.structure();
    CHECK(p.size() == r.size() + st.rad.count(Side::minus));
    // equal-sized classes, one per point of the residue line
    for (const auto& c : p.classes()) CHECK(c.size() == r.size() / r.characteristic_prime());
  }
}

TEST_CASE("canonical forms") {
  Fixture f("zmod:5:2");
  CHECK(f.p.label(f.p.zero()) == "A:0");
  CHECK(f.p.label(f.p.infinity()) == "R:0");
  CHECK(f.p.canonicalize(3, 0) == f.p.affine(3));
  // [1, 1] is [e, e^-1], i.e. infinity
  CHECK(f.p.canonicalize(1, 1) == f.p.infinity());
  // [5, 1] with 1 - 5 = 21 a unit: 5 * 21^-1 = 5 * 6 = 30 = 5
  CHECK(f.p.canonicalize(5, 1) == f.p.affine(5));
  CHECK_THROWS(f.p.rad_offset(1));
}

TEST_CASE("canonicalize agrees with the line model") {
  for (const char* s : {"zmod:5:1", "zmod:2:2", "zmod:5:2", "poly:5:2"}) {
    Fixture f(s);
    std::vector<std::pair<Elem, Elem>> line;
    for (Index i = 0; i < f.p.size(); ++i) {
      auto [x, y] = f.p.expand(i);
      line.push_back({x, f.second(x, y)});
    }
    for (Elem x : f.r.elements())
      for (Elem y : f.r.elements()) {
        const Index i = f.p.canonicalize(x, y);
        REQUIRE(same_line(f.r, x, f.second(x, y), line[i].first, line[i].second));
      }
  }
}

TEST_CASE("equivalence from the definition matches canonical forms") {
  for (const char* s : {"zmod:5:1", "zmod:2:2", "zmod:3:2"}) {
    Fixture f(s);
    const auto& v = f.p.pair();
    for (Elem x : f.r.elements())
      for (Elem y : f.r.elements())
        for (Elem x2 : f.r.elements())
          for (Elem y2 : f.r.elements())
            REQUIRE(proj_equivalent(v, x, y, x2, y2) == (f.p.canonicalize(x, y) == f.p.canonicalize(x2, y2)));
  }
}

TEST_CASE("alpha, zeta and mu on affine points") {
  Fixture f("zmod:5:2");
  const Ring& r = f.r;
  for (Elem v : r.elements()) {
    const Perm a = f.p.alpha(v), z = f.p.zeta(v);
    CHECK(a(f.p.infinity()) == f.p.infinity());
    for (Elem x : r.elements()) {
      REQUIRE(a(f.p.affine(x)) == f.p.affine(r.add(x, v)));
      const Elem d = r.sub(r.one(), r.mul(v, x));
      if (r.is_unit(d)) REQUIRE(z(f.p.affine(x)) == f.p.affine(r.mul(x, r.invert(d))));
    }
    if (!r.is_unit(v)) continue;
    const Perm m = f.p.mu(v);
    CHECK(m(f.p.zero()) == f.p.infinity());
    CHECK(m(f.p.infinity()) == f.p.zero());
    CHECK((m * m).is_identity());
    // x mu_v = -v x^-1 v
    for (Elem x : r.elements())
      if (r.is_unit(x)) REQUIRE(m(f.p.affine(x)) == f.p.affine(r.neg(r.mul(r.mul(v, r.invert(x)), v))));
  }
  CHECK(f.p.mu(1)(f.p.affine(2)) == f.p.affine(12));
  CHECK(f.p.mu(2)(f.p.affine(1)) == f.p.affine(21));
}

TEST_CASE("a non-invertible e is rejected") {
  const Ring r(RingSpec::parse("zmod:5:2"));
  CHECK_THROWS_AS(ProjectiveSpace(make_pair_from_ring(r), 5), NotInvertible);
}

TEST_CASE("verification suites over the catalog") {
  for (const auto& spec : catalog_specs()) {
    const Ring r(spec);
    const ProjectiveSpace p(make_pair_from_ring(r), r.one());
    CHECK_MESSAGE(verify_projective_space(p).ok(), spec.str());
    CHECK_MESSAGE(verify_mu_actions(p).ok(), spec.str());
    CHECK_MESSAGE(verify_dictionary(p).ok(), spec.str());
  }
  // another choice of e
  const Ring r(RingSpec::parse("zmod:5:2"));
  const ProjectiveSpace p(make_pair_from_ring(r), 7);
  CHECK(p.size() == 30);
  CHECK(verify_mu_actions(p).ok());
}
