#include "locmouf/extraction.hpp"

#include <limits>
#include <string>

#include "locmouf/error.hpp"
#include "locmouf/moufang_verify.hpp"

namespace locmouf {

namespace {

constexpr Elem kNone = std::numeric_limits<Elem>::max();
const char* tag(Side s) { return s == Side::plus ? "[+]" : "[-]"; }

Check j1(const FinMoufang& m) {
  Check c = check_special(m);
  c.name = "J1: special";
  return c;
}

Check j2(const FinMoufang& m) {
  Check c = check_abelian(m);
  c.name = "J2: U_inf is abelian";
  return c;
}

Check j3(const FinMoufang& m) {
  Check c = divisibility_hypothesis(m, 3);
  c.name = "J3: x . 2 and x . 3 are units for every unit x";
  return c;
}

}  // namespace

Index first_unit(const FinMoufang& m) {
  for (Index x = 0; x < m.size(); ++x)
    if (m.is_unit(x)) return x;
  throw ConstructionError("no unit");
}

Elem ExtractedPair::elem(Side s, Index p) const {
  const Elem a = p < m_.size() ? elem_of_[idx(s)][p] : kNone;
  if (a == kNone) throw Error(m_.label(p) + " is not in V" + side_name(s));
  return a;
}

bool ExtractedPair::on_side(Side s, Index p) const { return p < m_.size() && elem_of_[idx(s)][p] != kNone; }

ExtractedPair ExtractedPair::build(const FinMoufang& m, Index e) {
  for (const Check& c : {j1(m), j2(m), j3(m)})
    if (!c.pass) throw HypothesisFailed(c.name + " fails");
  if (!m.is_unit(e)) throw NotUnit(m.label(e) + " is not a unit");

  ExtractedPair p(m, e);
  p.points_ = {m.plus_points(), m.minus_points()};
  for (Side s : {Side::plus, Side::minus}) {
    auto& of = p.elem_of_[idx(s)];
    of.assign(m.size(), kNone);
    const auto& pts = p.points_[idx(s)];
    for (Elem a = 0; a < pts.size(); ++a) of[pts[a]] = a;
    const std::size_t n = pts.size();
    std::vector<std::string> labels;
    for (Index x : pts) labels.push_back(m.label(x));
    std::vector<Elem> table(n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        table[a * n + b] = of[s == Side::plus ? m.add(pts[a], pts[b]) : m.add_tilde(pts[a], pts[b])];
    const Index zero_point = s == Side::plus ? m.zero() : m.inf();
    p.groups_.emplace_back(std::move(labels), std::move(table), of[zero_point]);
  }
  for (Side s : {Side::plus, Side::minus}) p.tabulate(s);
  p.halve();
  return p;
}

// Evaluates the cascade for (x, z) with memoization. A revisit of a pair in
// progress means the cascade loops, which only happens when J3 fails.
const std::vector<Elem>& ExtractedPair::cascade(Side s, Elem x, Elem z) {
  const std::size_t n = size(s);
  const std::size_t key = static_cast<std::size_t>(x) * n + z;
  auto& st = state_[idx(s)][key];
  auto& out = bil_[idx(s)][key];
  if (st == 2) return out;
  if (st == 1) throw Error("cascade does not terminate");
  st = 1;
  const AbelianGroup& g = group(s);
  const std::size_t no = size(-s);
  const Elem ue = elem(s, e_);
  const bool ux = is_unit(s, x), uz = is_unit(s, z);
  const Elem xz = g.add(x, z);
  std::vector<Elem> v(no);
  if (ux && uz && is_unit(s, xz)) {
    for (Elem y = 0; y < no; ++y)
      v[y] = g.sub(g.sub(mu(s, point(s, xz), y), mu(s, point(s, x), y)), mu(s, point(s, z), y));
  } else if (ux && uz) {
    const auto& a = cascade(s, g.neg(x), z);
    for (Elem y = 0; y < no; ++y) v[y] = g.neg(a[y]);
  } else if (ux) {
    const auto& a = cascade(s, x, xz);
    const auto& b = cascade(s, x, x);
    for (Elem y = 0; y < no; ++y) v[y] = g.sub(a[y], b[y]);
  } else if (uz) {
    v = cascade(s, z, x);
  } else {
    const auto& a = cascade(s, g.add(x, ue), z);
    const auto& b = cascade(s, ue, z);
    for (Elem y = 0; y < no; ++y) v[y] = g.sub(a[y], b[y]);
  }
  out = std::move(v);
  st = 2;
  return out;
}

void ExtractedPair::tabulate(Side s) {
  const std::size_t n = size(s);
  bil_[idx(s)].assign(n * n, {});
  state_[idx(s)].assign(n * n, 0);
  Sweep term(std::string("J4: cascade terminates") + tag(s));
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z) {
      try {
        cascade(s, x, z);
        term.test(true, {});
      } catch (const Error& e) {
        // Leave every pair touched by the failing evaluation undefined.
        for (auto& st : state_[idx(s)])
          if (st == 1) st = 0;
        term.fail(e.what(), {{"x", group(s).label(x)}, {"z", group(s).label(z)}});
      }
    }
  term.note("e = " + m_.label(e_));
  j4_.add(term.finish());
  if (j4_.checks().back().pass) check_j4(s);
}

Elem ExtractedPair::bilinear(Side s, Elem x, Elem z, Elem y) const {
  const std::size_t key = static_cast<std::size_t>(x) * size(s) + z;
  if (state_[idx(s)][key] != 2) throw Error("mu_(x,z) is undefined");
  return bil_[idx(s)][key][y];
}

void ExtractedPair::check_j4(Side s) {
  const AbelianGroup& g = group(s);
  const AbelianGroup& h = group(-s);
  const std::size_t n = size(s), no = size(-s);
  const Elem ue = elem(s, e_);
  auto T = [&](Elem x, Elem z) -> const std::vector<Elem>& { return bil_[idx(s)][x * n + z]; };
  auto wxz = [&](Elem x, Elem z) { return Witness{{"x", g.label(x)}, {"z", g.label(z)}}; };

  Sweep sym(std::string("J4: mu_(x,z) = mu_(z,x)") + tag(s));
  Sweep addx(std::string("J4: mu_(x+x',z) = mu_(x,z) + mu_(x',z)") + tag(s));
  Sweep hom(std::string("J4: mu_(x,z) is additive") + tag(s));
  Sweep b2(std::string("J4: mu_(x,z) = -mu_(-x,z)") + tag(s));
  Sweep b3(std::string("J4: mu_(x,z) = mu_(x,x+z) - mu_(x,x)") + tag(s));
  Sweep b5(std::string("J4: mu_(x,z) = mu_(x+e,z) - mu_(e,z)") + tag(s));
  for (Elem x = 0; x < n; ++x)
    for (Elem z = 0; z < n; ++z) {
      const auto& t = T(x, z);
      auto w = [&] { return wxz(x, z); };
      sym.test(t == T(z, x), w);
      const auto& tn = T(g.neg(x), z);
      const auto& t3 = T(x, g.add(x, z));
      const auto& txx = T(x, x);
      const auto& t5 = T(g.add(x, ue), z);
      const auto& te = T(ue, z);
      bool ok2 = true, ok3 = true, ok5 = true;
      for (Elem y = 0; y < no; ++y) {
        ok2 = ok2 && t[y] == g.neg(tn[y]);
        ok3 = ok3 && t[y] == g.sub(t3[y], txx[y]);
        ok5 = ok5 && t[y] == g.sub(t5[y], te[y]);
      }
      b2.test(ok2, w);
      b3.test(ok3, w);
      b5.test(ok5, w);
      for (Elem x2 = 0; x2 < n; ++x2) {
        const auto& a = T(x2, z);
        const auto& sum = T(g.add(x, x2), z);
        bool ok = true;
        for (Elem y = 0; y < no && ok; ++y) ok = sum[y] == g.add(t[y], a[y]);
        addx.test(ok, [&] { return Witness{{"x", g.label(x)}, {"x'", g.label(x2)}, {"z", g.label(z)}}; });
      }
      for (Elem y = 0; y < no; ++y)
        for (Elem y2 = 0; y2 < no; ++y2)
          hom.test(t[h.add(y, y2)] == g.add(t[y], t[y2]), [&] {
            return Witness{{"x", g.label(x)}, {"z", g.label(z)}, {"y", h.label(y)}, {"y'", h.label(y2)}};
          });
    }
  for (Sweep* sw : {&sym, &addx, &hom, &b2, &b3, &b5}) j4_.add(sw->finish());
}

void ExtractedPair::halve() {
  q_ok_ = j4_.ok();
  if (!q_ok_) return;
  for (Side s : {Side::plus, Side::minus}) {
    const AbelianGroup& g = group(s);
    std::vector<Elem> half(g.size());
    for (Elem a = 0; a < g.size(); ++a) half[a] = g.divide(a, 2);
    const std::size_t n = size(s), no = size(-s);
    auto& q = q_[idx(s)];
    q.resize(n * no);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < no; ++y) q[x * no + y] = half[bilinear(s, x, x, y)];
  }
}

Elem ExtractedPair::q(Side s, Elem x, Elem y) const {
  if (!q_ok_) throw Error("Q is undefined: J4 failed");
  return q_[idx(s)][static_cast<std::size_t>(x) * size(-s) + y];
}

JordanPair ExtractedPair::jordan_pair() const {
  if (!q_ok_) throw Error("Q is undefined: J4 failed");
  return JordanPair::create("extracted", group(Side::plus), group(Side::minus),
                            [this](Side s, Elem x, Elem y) { return q(s, x, y); });
}

VerifyReport check_preconditions(const FinMoufang& m, std::optional<Index> e) {
  VerifyReport r;
  const Check c1 = j1(m), c2 = j2(m), c3 = j3(m);
  r.add(c1);
  r.add(c2);
  r.add(c3);
  if (!(c1.pass && c2.pass && c3.pass)) {
    Check c;
    c.name = "J4: bilinear extension";
    c.pass = false;
    c.note = "not evaluated: J1-J3 fail";
    r.add(std::move(c));
    return r;
  }
  const ExtractedPair p = ExtractedPair::build(m, e.value_or(first_unit(m)));
  r.merge(p.j4_report());
  return r;
}

Extraction extract(const FinMoufang& m, std::optional<Index> e) {
  Extraction out;
  const Index unit = e.value_or(first_unit(m));
  VerifyReport pre = check_preconditions(m, unit);
  out.report.merge(pre);
  if (!pre.ok()) {
    out.report.add("not Jordan-extractable", false, pre.first_failure());
    return out;
  }
  out.pair.emplace(ExtractedPair::build(m, unit));
  const ExtractedPair& p = *out.pair;
  for (Side s : {Side::plus, Side::minus}) out.report.merge(p.group(s).check_group_law(), std::string("V") + side_name(s) + ": ");

  try {
    out.w.emplace(p.jordan_pair());
  } catch (const InvalidPair& ex) {
    out.report.merge(ex.report(), "W: ");
    out.report.add("W is a Jordan pair", false, ex.what());
    return out;
  }
  const JordanPair& w = *out.w;
  out.report.merge(verify_jordan_axioms(w), "W: ");
  out.report.merge(verify_local(w), "W: ");

  const Radical rad = radical(w);
  Sweep radc("Rad W = (class of 0, class of infinity)");
  for (Side s : {Side::plus, Side::minus}) {
    const Index anchor = s == Side::plus ? m.zero() : m.inf();
    for (Elem a = 0; a < p.size(s); ++a)
      radc.test(rad.contains(s, a) == m.equivalent(p.point(s, a), anchor),
                [&] { return Witness{{"side", side_name(s)}, {"x", p.group(s).label(a)}}; });
  }
  radc.note("radical sizes (" + std::to_string(rad.count(Side::plus)) + ", " + std::to_string(rad.count(Side::minus)) +
            ")");
  out.report.add(radc.finish());
  return out;
}

}  // namespace locmouf
