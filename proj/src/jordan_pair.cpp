#include "locmouf/jordan_pair.hpp"

#include "locmouf/error.hpp"

namespace locmouf {

JordanPair::JordanPair(std::string name, AbelianGroup plus, AbelianGroup minus, const QFunction& q)
    : name_(std::move(name)), modules_{std::move(plus), std::move(minus)} {
  for (Side s : {Side::plus, Side::minus}) {
    const std::size_t n = size(s);
    const std::size_t m = size(-s);
    auto& table = q_[idx(s)];
    table.resize(n * m);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < m; ++y) {
        Elem r = q(s, x, y);
        if (r >= n) throw Error("Q operator value out of range in pair " + name_);
        table[x * m + y] = r;
      }
    }
  }
}

JordanPair JordanPair::unchecked(std::string name, AbelianGroup plus, AbelianGroup minus, const QFunction& q) {
  return JordanPair(std::move(name), std::move(plus), std::move(minus), q);
}

JordanPair JordanPair::create(std::string name, AbelianGroup plus, AbelianGroup minus, const QFunction& q) {
  JordanPair v(std::move(name), std::move(plus), std::move(minus), q);
  VerifyReport report = structure_checks(v);
  if (!report.ok())
    throw InvalidPair("pair " + v.name() + " fails the structure check '" + report.first_failure() + "'",
                      std::move(report));
  return v;
}

JordanPair make_pair_from_ring(const Ring& ring) {
  auto group = AbelianGroup::additive_group(ring);
  return JordanPair::create("(" + ring.spec().str() + ")", group, group,
                            [&ring](Side, Elem x, Elem y) { return ring.mul(ring.mul(x, y), x); });
}

namespace {

void expect_side(JElem e, Side s, const char* role) {
  if (e.side != s)
    throw SideMismatch(std::string(role) + " must lie in V" + side_name(s) + ", got V" + side_name(e.side));
}

// True when z -> f(z) is a bijection of a set of size n.
template <class F>
bool is_bijection(std::size_t n, F&& f) {
  std::vector<bool> hit(n, false);
  for (Elem z = 0; z < n; ++z) {
    Elem w = f(z);
    if (w >= n || hit[w]) return false;
    hit[w] = true;
  }
  return true;
}

}  // namespace

JElem q_apply(const JordanPair& v, JElem x, JElem y) {
  expect_side(y, -x.side, "y");
  return {x.side, v.q(x.side, x.value, y.value)};
}

JElem q_bilinear(const JordanPair& v, JElem x, JElem z, JElem y) {
  expect_side(z, x.side, "z");
  expect_side(y, -x.side, "y");
  return {x.side, v.q2(x.side, x.value, z.value, y.value)};
}

JElem triple_product(const JordanPair& v, JElem x, JElem y, JElem z) {
  return q_bilinear(v, x, z, y);
}

JElem bergman_apply(const JordanPair& v, JElem x, JElem y, JElem z) {
  expect_side(y, -x.side, "y");
  expect_side(z, x.side, "z");
  return {x.side, v.bergman(x.side, x.value, y.value, z.value)};
}

bool is_invertible(const JordanPair& v, Side s, Elem x) {
  if (v.size(s) != v.size(-s)) return false;
  return is_bijection(v.size(-s), [&](Elem y) { return v.q(s, x, y); });
}

bool is_invertible(const JordanPair& v, JElem x) { return is_invertible(v, x.side, x.value); }

Elem q_inverse_apply(const JordanPair& v, Side s, Elem x, Elem target) {
  Elem found = 0;
  int hits = 0;
  for (Elem w = 0; w < v.size(-s); ++w) {
    if (v.q(s, x, w) == target) {
      found = w;
      ++hits;
    }
  }
  if (hits != 1)
    throw NotInvertible("Q_" + v.label(s, x) + " is not invertible (" + std::to_string(hits) +
                        " preimages of " + v.label(s, target) + ")");
  return found;
}

Elem jp_inverse(const JordanPair& v, Side s, Elem x) {
  if (!is_invertible(v, s, x)) throw NotInvertible(v.label(s, x) + " is not invertible");
  return q_inverse_apply(v, s, x, x);
}

JElem jp_inverse(const JordanPair& v, JElem x) { return {-x.side, jp_inverse(v, x.side, x.value)}; }

bool is_quasi_invertible(const JordanPair& v, Side s, Elem x, Elem y) {
  return is_bijection(v.size(s), [&](Elem z) { return v.bergman(s, x, y, z); });
}

bool is_quasi_invertible(const JordanPair& v, JElem x, JElem y) {
  expect_side(y, -x.side, "y");
  return is_quasi_invertible(v, x.side, x.value, y.value);
}

Elem quasi_inverse(const JordanPair& v, Side s, Elem x, Elem y) {
  const auto& m = v.module(s);
  const Elem rhs = m.sub(x, v.q(s, x, y));
  Elem found = 0;
  int hits = 0;
  for (Elem z = 0; z < m.size(); ++z) {
    if (v.bergman(s, x, y, z) == rhs) {
      found = z;
      ++hits;
    }
  }
  if (hits != 1 || !is_quasi_invertible(v, s, x, y))
    throw NotQuasiInvertible("(" + v.label(s, x) + ", " + v.label(-s, y) + ") is not quasi-invertible");
  return found;
}

JElem quasi_inverse(const JordanPair& v, JElem x, JElem y) {
  expect_side(y, -x.side, "y");
  return {x.side, quasi_inverse(v, x.side, x.value, y.value)};
}

std::vector<Elem> Radical::elements(Side s) const {
  std::vector<Elem> out;
  for (Elem x = 0; x < member[idx(s)].size(); ++x)
    if (member[idx(s)][x]) out.push_back(x);
  return out;
}

std::size_t Radical::count(Side s) const {
  std::size_t c = 0;
  for (bool b : member[idx(s)]) c += b ? 1 : 0;
  return c;
}

Radical radical(const JordanPair& v) {
  Radical rad;
  for (Side s : {Side::plus, Side::minus}) {
    auto& mem = rad.member[idx(s)];
    mem.assign(v.size(s), true);
    for (Elem x = 0; x < v.size(s); ++x) {
      for (Elem y = 0; y < v.size(-s) && mem[x]; ++y)
        if (!is_quasi_invertible(v, s, x, y)) mem[x] = false;
    }
  }
  return rad;
}

PairStructure PairStructure::analyze(const JordanPair& v) {
  PairStructure ps;
  for (Side s : {Side::plus, Side::minus}) {
    const std::size_t n = v.size(s);
    ps.invertible[idx(s)].assign(n, false);
    ps.inverse[idx(s)].assign(n, 0);
    for (Elem x = 0; x < n; ++x) {
      if (is_invertible(v, s, x)) {
        ps.invertible[idx(s)][x] = true;
        ps.inverse[idx(s)][x] = q_inverse_apply(v, s, x, x);
      }
    }
  }
  ps.rad = radical(v);
  return ps;
}

QuasiInverseTable::QuasiInverseTable(const JordanPair& v) : n_{v.size(Side::plus), v.size(Side::minus)} {
  for (Side s : {Side::plus, Side::minus}) {
    const std::size_t n = n_[idx(s)];
    const std::size_t m = n_[idx(-s)];
    auto& table = t_[idx(s)];
    table.assign(n * m, kNone);
    std::vector<Elem> preimage(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < m; ++y) {
        // Invert B_{x,y} once: preimage[w] = z with zB = w.
        std::vector<bool> hit(n, false);
        bool bijective = true;
        for (Elem z = 0; z < n && bijective; ++z) {
          Elem w = v.bergman(s, x, y, z);
          if (hit[w]) bijective = false;
          hit[w] = true;
          preimage[w] = z;
        }
        if (bijective) table[x * m + y] = preimage[v.module(s).sub(x, v.q(s, x, y))];
      }
    }
  }
}

}  // namespace locmouf
