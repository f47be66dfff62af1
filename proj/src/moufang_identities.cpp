#include "locmouf/moufang_identities.hpp"

#include <limits>
#include <string>

#include "locmouf/error.hpp"
#include "locmouf/moufang_verify.hpp"

namespace locmouf {

namespace {

constexpr Index kNone = std::numeric_limits<Index>::max();

}  // namespace

ScalarTables::ScalarTables(const FinMoufang& m, int max_k) : m_(&m), max_k_(max_k) {
  const int top = max_k * max_k;
  mult_.assign(2, std::vector<std::vector<Index>>(top + 1, std::vector<Index>(m.size(), kNone)));
  div_ = mult_;
  for (int t = 0; t < 2; ++t) {
    const auto dom = t ? m.minus_points() : m.plus_points();
    for (int k = 1; k <= top; ++k) {
      std::vector<int> hits(m.size(), 0);
      for (Index x : dom) {
        const Index y = t ? m.scalar_tilde(x, k) : m.scalar(x, k);
        mult_[t][k][x] = y;
        if (++hits[y] == 1) div_[t][k][y] = x;
      }
      for (Index x : dom)
        if (hits[x] != 1) div_[t][k][x] = kNone;
    }
  }
}

Index ScalarTables::times(Index x, int k, bool tilde) const {
  if (k < 1 || k > max_k_ * max_k_) throw Error("scalar out of tabulated range");
  const Index y = mult_[tilde][k][x];
  if (y == kNone) throw Error(m_->label(x) + (tilde ? " is equivalent to 0" : " is equivalent to infinity"));
  return y;
}

Index ScalarTables::part(Index x, int k, bool tilde) const {
  if (k < 1 || k > max_k_ * max_k_) throw Error("scalar out of tabulated range");
  const Index y = div_[tilde][k][x];
  if (y == kNone) throw NoSolution(m_->label(x) + " has no unique " + std::to_string(k) + "-th part");
  return y;
}

namespace {

class Suite {
 public:
  explicit Suite(const FinMoufang& m) : m_(m), units_(m.units()) {}

  VerifyReport run();

 private:
  using W = std::function<Witness()>;

  template <class F>
  void probe(Sweep& s, F&& f, const W& w) {
    try {
      s.test(f(), w);
    } catch (const Error& e) {
      s.fail(e.what(), w());
    }
  }
  Witness wx(Index x) const { return {{"x", m_.label(x)}}; }
  Witness wxy(Index x, Index y) const { return {{"x", m_.label(x)}, {"y", m_.label(y)}}; }
  void skip(const std::string& name, const std::string& why) {
    Check c;
    c.name = name;
    c.required = false;
    c.note = "not evaluated: " + why;
    r_.add(std::move(c));
  }

  void general();
  void special();
  void abelian();
  void scaling(const ScalarTables& t);

  const FinMoufang& m_;
  std::vector<Index> units_;
  VerifyReport r_;
};

void Suite::general() {
  const FinMoufang& m = m_;
  {
    Sweep s("y is a unit iff y mu_x is a unit");
    for (Index x : units_)
      for (Index y = 0; y < m.size(); ++y)
        probe(s, [&] { return m.is_unit(y) == m.is_unit(m.mu(x)(y)); }, [&] { return wxy(x, y); });
    r_.add(s.finish());
  }
  {
    // Rebuild with every unit mu-map as tau.
    Sweep mu("mu_x does not depend on tau");
    Sweep til("~x does not depend on tau");
    Sweep conj("mu_(x tau) = mu_(-x)^tau");
    for (Index a : units_) {
      MoufangData d = m.data();
      d.tau = m.mu(a);
      const FinMoufang other = FinMoufang::build(std::move(d), m.inf());
      for (Index x : units_) {
        auto w = [&] { return Witness{{"tau", "mu_" + m.label(a)}, {"x", m.label(x)}}; };
        probe(mu, [&] { return other.mu(x) == m.mu(x); }, w);
        probe(til, [&] { return other.tilde(x) == m.tilde(x); }, w);
        probe(conj, [&] { return m.mu(m.mu(a)(x)) == m.mu(m.neg(x)).conjugate(m.mu(a)); }, w);
      }
    }
    conj.note("tau ranges over all unit mu-maps");
    r_.add(mu.finish());
    r_.add(til.finish());
    r_.add(conj.finish());
  }
  {
    Sweep inv("mu_(-x) = mu_x^-1");
    Sweep tdef("~x = -((-x)mu_x) = (-(x tau^-1))tau");
    Sweep f2("mu_x = alpha_x alpha_(-(x tau^-1))^tau alpha_(-~x)");
    Sweep f3("mu_(-x) = alpha_(-~x) mu_(-x) alpha_x mu_(-x) alpha_(~-x)");
    Sweep swap("mu_x = g alpha_x h swaps 0 and infinity");
    const Perm& tau = m.tau();
    for (Index x : units_) {
      auto w = [&] { return wx(x); };
      probe(inv, [&] { return m.mu(m.neg(x)) == m.mu(x).inverse(); }, w);
      probe(tdef, [&] { return m.tilde(x) == tau(m.neg(m.tau_inv()(x))); }, w);
      probe(f2,
            [&] {
              return m.mu(x) ==
                     m.alpha(x) * m.alpha(m.neg(m.tau_inv()(x))).conjugate(tau) * m.alpha(m.neg(m.tilde(x)));
            },
            w);
      probe(f3,
            [&] {
              const Perm& mn = m.mu(m.neg(x));
              return mn == m.alpha(m.neg(m.tilde(x))) * mn * m.alpha(x) * mn * m.alpha(m.tilde(m.neg(x)));
            },
            w);
      probe(swap, [&] { return !mu_map(m, x).is_identity(); }, w);
    }
    r_.add(inv.finish());
    r_.add(tdef.finish());
    r_.add(f2.finish());
    r_.add(f3.finish());
    r_.add(swap.finish());
  }
  {
    Sweep s("Hua: alpha_x^(tau mu) = alpha_(x tau mu)");
    for (Index a : units_)
      for (Index b : units_) {
        const Perm tm = m.mu(a) * m.mu(b);
        for (Index x : m.plus_points())
          probe(s, [&] { return m.alpha(x).conjugate(tm) == m.alpha(tm(x)); },
                [&] { return Witness{{"tau", "mu_" + m.label(a)}, {"mu", "mu_" + m.label(b)}, {"x", m.label(x)}}; });
      }
    s.note("tau and mu range over all unit mu-maps");
    r_.add(s.finish());
  }
  {
    Sweep zind("sum formula: z = x tau^-1 alpha_(-(y tau^-1)) tau does not depend on tau");
    Sweep zform("sum formula: z = x alpha_(-y) mu_y alpha_(~y)");
    Sweep ztil("sum formula: ~z = y alpha_(-x) mu_x alpha_(~x)");
    Sweep sum("sum formula: mu_y mu_z mu_(-x) = mu_(y alpha_(-x))");
    auto zeta = [&](const Perm& tau, Index x, Index y) {
      const Perm ti = tau.inverse();
      return tau(m.alpha(m.neg(ti(y)))(ti(x)));
    };
    for (Index x : units_)
      for (Index y : units_) {
        if (m.equivalent(x, y)) continue;
        auto w = [&] { return wxy(x, y); };
        const Index z = zeta(m.tau(), x, y);
        probe(zind,
              [&] {
                for (Index a : units_)
                  if (zeta(m.mu(a), x, y) != z) return false;
                return true;
              },
              w);
        probe(zform, [&] { return z == m.alpha(m.tilde(y))(m.mu(y)(m.alpha(m.neg(y))(x))); }, w);
        probe(ztil, [&] { return m.tilde(z) == m.alpha(m.tilde(x))(m.mu(x)(m.alpha(m.neg(x))(y))); }, w);
        probe(sum, [&] { return m.mu(y) * m.mu(z) * m.mu(m.neg(x)) == m.mu(m.alpha(m.neg(x))(y)); }, w);
      }
    r_.add(zind.finish());
    r_.add(zform.finish());
    r_.add(ztil.finish());
    r_.add(sum.finish());
  }
  {
    Sweep s("(x . n)tau = x tau .~ n");
    for (Index x : m.plus_points())
      for (int n = 1; n <= 5; ++n)
        probe(s, [&] { return m.tau()(m.scalar(x, n)) == m.scalar_tilde(m.tau()(x), n); },
              [&] { return Witness{{"x", m.label(x)}, {"n", std::to_string(n)}}; });
    r_.add(s.finish());
  }
  {
    Sweep s("x ~ y implies x . n ~ y . n");
    const auto pts = m.plus_points();
    for (Index x : pts)
      for (Index y : pts)
        if (m.equivalent(x, y))
          for (int n = 2; n <= 3; ++n)
            probe(s, [&] { return m.equivalent(m.scalar(x, n), m.scalar(y, n)); }, [&] { return wxy(x, y); });
    r_.add(s.finish());
  }
}

void Suite::special() {
  const FinMoufang& m = m_;
  Sweep a("special: (-y)mu_x = -(y mu_x)");
  Sweep b("special: mu_x = alpha_x alpha_(-x tau^-1)^tau alpha_x");
  Sweep c("special: x mu_x = -x = x mu_(-x)");
  Sweep d("special: mu_x = alpha_x alpha_x^(mu_x) alpha_x = alpha_x alpha_x^(mu_(-x)) alpha_x");
  Sweep e("special: mu_(-x) = alpha_x mu_(-x) alpha_x mu_(-x) alpha_x");
  Sweep f("special: x mu_(x alpha_y) = (-y)alpha_(-x) alpha_(x mu_y) alpha_(-y)");
  for (Index x : units_) {
    auto w = [&] { return wx(x); };
    const Perm& mx = m.mu(x);
    const Perm& mn = m.mu(m.neg(x));
    const Perm& ax = m.alpha(x);
    for (Index y : units_) probe(a, [&] { return mx(m.neg(y)) == m.neg(mx(y)); }, [&] { return wxy(x, y); });
    probe(b, [&] { return mx == ax * m.alpha(m.neg(m.tau_inv()(x))).conjugate(m.tau()) * ax; }, w);
    probe(c, [&] { return mx(x) == m.neg(x) && mn(x) == m.neg(x); }, w);
    probe(d, [&] { return mx == ax * ax.conjugate(mx) * ax && mx == ax * ax.conjugate(mn) * ax; }, w);
    probe(e, [&] { return mn == ax * mn * ax * mn * ax; }, w);
    for (Index y : units_) {
      const Index xy = m.alpha(y)(x);
      if (!m.is_unit(xy)) continue;
      probe(f,
            [&] {
              return m.mu(xy)(x) ==
                     m.alpha(m.neg(y))(m.alpha(m.mu(y)(x))(m.alpha(m.neg(x))(m.neg(y))));
            },
            [&] { return wxy(x, y); });
    }
  }
  for (Sweep* s : {&a, &b, &c, &d, &e, &f}) r_.add(s->finish());
}

void Suite::abelian() {
  const FinMoufang& m = m_;
  Sweep a("abelian: mu_x = mu_(-x) and mu_x^2 = 1");
  Sweep b("abelian: mu_x^(mu_y) = mu_(x mu_y)");
  Sweep c("abelian: mu_x mu_(x alpha_y) mu_y = mu_y mu_(x alpha_y) mu_x = mu_((x tau alpha_(y tau))tau)");
  Sweep d("abelian: (x .~ n)tau = x tau . n");
  for (Index x : units_) {
    const Perm& mx = m.mu(x);
    probe(a, [&] { return mx == m.mu(m.neg(x)) && (mx * mx).is_identity(); }, [&] { return wx(x); });
    for (Index y : units_) {
      auto w = [&] { return wxy(x, y); };
      probe(b, [&] { return mx.conjugate(m.mu(y)) == m.mu(m.mu(y)(x)); }, w);
      const Index xy = m.alpha(y)(x);
      if (!m.is_unit(xy)) continue;
      probe(c,
            [&] {
              const Perm lhs = mx * m.mu(xy) * m.mu(y);
              const Index t = m.tau()(m.alpha(m.tau()(y))(m.tau()(x)));
              return lhs == m.mu(y) * m.mu(xy) * mx && lhs == m.mu(t);
            },
            w);
    }
  }
  for (Index x : m.minus_points())
    for (int n = 1; n <= 5; ++n)
      probe(d, [&] { return m.tau()(m.scalar_tilde(x, n)) == m.scalar(m.tau()(x), n); },
            [&] { return Witness{{"x", m.label(x)}, {"n", std::to_string(n)}}; });
  for (Sweep* s : {&a, &b, &c, &d}) r_.add(s->finish());
}

void Suite::scaling(const ScalarTables& t) {
  const FinMoufang& m = m_;
  struct Ell {
    int num, den;
    const char* name;
  };
  const Ell ells[] = {{2, 1, "2"}, {3, 1, "3"}, {1, 2, "1/2"}, {1, 3, "1/3"}};

  Sweep divp("(x . k)mu_(-x) . k = -x");
  Sweep divt("(x . k)tau . k = x tau");
  Sweep yk("y_k = (-x . k)mu_(-x) is the unique k-th part of x");
  Sweep tl("x .~ l = x . l^-1");
  for (Index x : units_)
    for (int k = 2; k <= 3; ++k) {
      auto w = [&] { return Witness{{"x", m.label(x)}, {"k", std::to_string(k)}}; };
      probe(divp, [&] { return t.times(m.mu(m.neg(x))(t.times(x, k, false)), k, false) == m.neg(x); }, w);
      probe(divt, [&] { return t.times(m.tau()(t.times(x, k, false)), k, false) == m.tau()(x); }, w);
      probe(yk, [&] { return m.mu(m.neg(x))(t.times(m.neg(x), k, false)) == divide(m, x, k); }, w);
      probe(tl,
            [&] {
              return m.scalar_tilde(x, k) == t.part(x, k, false) && t.part(x, k, true) == m.scalar(x, k);
            },
            w);
    }
  Sweep parts("x . (1/k) . k = x for all x !~ infinity");
  for (Index x : m.plus_points())
    for (int k = 2; k <= 3; ++k)
      probe(parts, [&] { return t.times(t.part(x, k, false), k, false) == x; },
            [&] { return Witness{{"x", m.label(x)}, {"k", std::to_string(k)}}; });

  Sweep sp("scaling: y mu_(x . l) = y mu_x . l^2, y !~ 0");
  Sweep st("scaling: y mu_(x .~ l) = y mu_x .~ l^2, y !~ infinity");
  Sweep sx("scaling: y mu_(x . l^-1) = y mu_(x .~ l)");
  for (Index x : units_)
    for (const Ell& l : ells) {
      for (Index y : m.minus_points())
        probe(sp,
              [&] {
                const Index xl = t.scale(x, l.num, l.den, false);
                return m.mu(xl)(y) == t.scale(m.mu(x)(y), l.num * l.num, l.den * l.den, false);
              },
              [&] { return Witness{{"x", m.label(x)}, {"y", m.label(y)}, {"l", l.name}}; });
      for (Index y : m.plus_points()) {
        auto w = [&] { return Witness{{"x", m.label(x)}, {"y", m.label(y)}, {"l", l.name}}; };
        probe(st,
              [&] {
                const Index xl = t.scale(x, l.num, l.den, true);
                return m.mu(xl)(y) == t.scale(m.mu(x)(y), l.num * l.num, l.den * l.den, true);
              },
              w);
        probe(sx,
              [&] {
                return m.mu(t.scale(x, l.den, l.num, false))(y) == m.mu(t.scale(x, l.num, l.den, true))(y);
              },
              w);
      }
    }
  for (Sweep* s : {&divp, &divt, &yk, &tl, &parts, &sp, &st, &sx}) r_.add(s->finish());
}

VerifyReport Suite::run() {
  general();

  const Check sp = check_special(m_);
  const Check ab = check_abelian(m_);
  r_.add(sp);
  r_.add(ab);
  if (sp.pass)
    special();
  else
    skip("special identities", "M is not special");
  if (sp.pass && ab.pass)
    abelian();
  else
    skip("abelian identities", "M is not special with abelian root groups");

  const Check hp = divisibility_hypothesis(m_, 3);
  const Check ht = divisibility_hypothesis(m_, 3, Side::minus);
  if (sp.pass && ab.pass && hp.pass && ht.pass) {
    scaling(ScalarTables(m_, 3));
  } else {
    std::string why = "hypothesis fails";
    for (const Check* c : {&hp, &ht})
      if (!c->pass) {
        why += " (" + c->name + ":";
        for (const auto& [k, v] : c->witness) why += " " + k + "=" + v;
        why += ")";
      }
    skip("division and scaling identities", why);
  }
  return std::move(r_);
}

}  // namespace

VerifyReport verify_moufang_identities(const FinMoufang& m) { return Suite(m).run(); }

}  // namespace locmouf
