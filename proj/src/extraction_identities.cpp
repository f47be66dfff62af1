#include <string>

#include "locmouf/error.hpp"
#include "locmouf/extraction.hpp"

namespace locmouf {

namespace {

// One orientation of the identity suite: "plain" objects live on side s,
// "tilde" objects on -s. Running both orientations covers the statements
// with V+ and V- interchanged.
class Oriented {
 public:
  Oriented(const ExtractedPair& p, Side s, VerifyReport& out)
      : p_(p), m_(p.moufang()), s_(s), o_(-s), g_(p.group(s)), h_(p.group(-s)), out_(out) {
    for (Index x = 0; x < m_.size(); ++x)
      if (m_.is_unit(x)) units_.push_back(x);
    e_ = p.e();
  }

  void basic();
  void deep();

 private:
  using W = std::function<Witness()>;

  Elem P(Index pt) const { return p_.elem(s_, pt); }
  Elem N(Index pt) const { return p_.elem(o_, pt); }
  Index ptP(Elem a) const { return p_.point(s_, a); }
  Index ptN(Elem a) const { return p_.point(o_, a); }
  // a in V^-s -> V^s, and a in V^s -> V^-s.
  Elem mu(Index t, Elem a) const { return p_.mu(s_, t, a); }
  Elem mu_o(Index t, Elem a) const { return p_.mu(o_, t, a); }
  Elem B(Elem x, Elem z, Elem y) const { return p_.bilinear(s_, x, z, y); }
  Elem Bo(Elem y, Elem w, Elem x) const { return p_.bilinear(o_, y, w, x); }

  std::string name(const std::string& n) const { return n + (s_ == Side::plus ? "[+]" : "[-]"); }
  Witness wp(std::initializer_list<std::pair<const char*, Index>> pts) const {
    Witness w;
    for (const auto& [k, v] : pts) w.emplace_back(k, m_.label(v));
    return w;
  }
  template <class F>
  void probe(Sweep& sw, F&& f, const W& w) {
    try {
      sw.test(f(), w);
    } catch (const Error& e) {
      sw.fail(e.what(), w());
    }
  }
  void emit(std::initializer_list<Sweep*> sweeps) {
    for (Sweep* sw : sweeps) out_.add(sw->finish());
  }

  const ExtractedPair& p_;
  const FinMoufang& m_;
  Side s_, o_;
  const AbelianGroup& g_;
  const AbelianGroup& h_;
  VerifyReport& out_;
  std::vector<Index> units_;
  Index e_;
};

void Oriented::basic() {
  const std::size_t n = p_.size(s_), no = p_.size(o_);
  {
    Sweep a(name("(x + z)mu_t = x mu_t +~ z mu_t"));
    for (Index t : units_)
      for (Elem x = 0; x < n; ++x)
        for (Elem z = 0; z < n; ++z)
          probe(a, [&] { return mu_o(t, g_.add(x, z)) == h_.add(mu_o(t, x), mu_o(t, z)); },
                [&] { return wp({{"t", t}, {"x", ptP(x)}, {"z", ptP(z)}}); });
    emit({&a});
  }
  {
    Sweep q(name("Q_t = mu_t for units t"));
    for (Index t : units_)
      for (Elem y = 0; y < no; ++y)
        probe(q, [&] { return p_.q(s_, P(t), y) == mu(t, y); }, [&] { return wp({{"t", t}, {"y", ptN(y)}}); });
    emit({&q});
  }
  Sweep l1(name("t mu_(t,x) = -x . 2"));
  Sweep l2(name("y mu_(t,t) = y mu_t . 2"));
  for (Index t : units_) {
    for (Elem x = 0; x < n; ++x)
      probe(l1, [&] { return B(P(t), x, N(t)) == g_.times(x, -2); }, [&] { return wp({{"t", t}, {"x", ptP(x)}}); });
    for (Elem y = 0; y < no; ++y)
      probe(l2, [&] { return B(P(t), P(t), y) == g_.times(mu(t, y), 2); },
            [&] { return wp({{"t", t}, {"y", ptN(y)}}); });
  }
  Sweep l3(name("mu_s mu_(s,t) mu_t = mu_t mu_(s,t) mu_s = mu~_(s,t)"));
  Sweep l4(name("s mu_t mu_(s,t) = -t mu_s . 2"));
  for (Index s : units_)
    for (Index t : units_) {
      for (Elem x = 0; x < n; ++x)
        probe(l3,
              [&] {
                const Elem a = mu_o(t, B(P(s), P(t), mu_o(s, x)));
                const Elem b = mu_o(s, B(P(s), P(t), mu_o(t, x)));
                return a == b && a == Bo(N(s), N(t), x);
              },
              [&] { return wp({{"s", s}, {"t", t}, {"x", ptP(x)}}); });
      probe(l4, [&] { return B(P(s), P(t), mu_o(t, P(s))) == g_.times(P(m_.mu(s)(t)), -2); },
            [&] { return wp({{"s", s}, {"t", t}}); });
    }
  emit({&l1, &l2, &l3, &l4});

  {
    const Perm& tau = m_.tau();
    Sweep tt(name("y mu_(x,z) tau = y tau mu~_(x tau, z tau)"));
    for (Elem x = 0; x < n; ++x)
      for (Elem z = 0; z < n; ++z)
        for (Elem y = 0; y < no; ++y)
          probe(tt,
                [&] {
                  const Elem lhs = N(tau(ptP(B(x, z, y))));
                  return lhs == Bo(N(tau(ptP(x))), N(tau(ptP(z))), P(tau(ptN(y))));
                },
                [&] { return wp({{"x", ptP(x)}, {"z", ptP(z)}, {"y", ptN(y)}}); });
    tt.note("tau = the input tau");
    emit({&tt});

    // The literal variant puts y tau in the second slot of mu~, which only
    // typechecks when y is a unit.
    Sweep lit(name("y mu_(x,z) tau = y tau mu~_(x tau, y tau), literal variant"));
    for (Elem x = 0; x < n; ++x)
      for (Elem z = 0; z < n; ++z)
        for (Index y : units_)
          probe(lit,
                [&] {
                  const Elem lhs = N(tau(ptP(B(x, z, N(y)))));
                  return lhs == Bo(N(tau(ptP(x))), N(tau(y)), P(tau(y)));
                },
                [&] { return wp({{"x", ptP(x)}, {"z", ptP(z)}, {"y", y}}); });
    Check c = lit.finish();
    c.required = false;
    c.note = "informational: evaluated for units y only; the form above is the one required";
    out_.add(std::move(c));
  }

  Sweep jp1(name("JP1 for units: x mu~_(z mu_y, y) = y mu_(x,z) mu_y = z mu~_(x mu_y, y)"));
  Sweep jp2(name("JP2 for units: x mu_y mu_(x,z) = y mu_(y mu_x, z)"));
  for (Index x : units_)
    for (Index z : units_)
      for (Index y : units_) {
        auto w = [&] { return wp({{"x", x}, {"z", z}, {"y", y}}); };
        probe(jp1,
              [&] {
                const Elem a = Bo(N(m_.mu(y)(z)), N(y), P(x));
                const Elem b = mu_o(y, B(P(x), P(z), N(y)));
                const Elem c = Bo(N(m_.mu(y)(x)), N(y), P(z));
                return a == b && b == c;
              },
              w);
        probe(jp2, [&] { return B(P(x), P(z), mu_o(y, P(x))) == B(P(m_.mu(x)(y)), P(z), N(y)); }, w);
      }
  emit({&jp1, &jp2});
}

void Oriented::deep() {
  const std::size_t n = p_.size(s_), no = p_.size(o_);
  const Index e = e_;
  const Elem Pe = P(e), Ne = N(e);

  Sweep muxe(name("y mu_(x,e) = e mu~_(y, x mu_e) mu_e = -e mu_(y mu_e, x)"));
  Sweep xmue(name("x mu_e mu_(x,e) = -e mu_x . 2"));
  Sweep qj20(name("mu_(x,e) mu_e mu_(x,e) + mu_(e mu_x, e) = mu_x . 2"));
  Sweep qj26(name("e mu_(z, e mu_x) = x mu_e mu_(z,x)"));
  Sweep qj29(name("e mu(z mu_e mu_x, z) = e mu(x mu_e mu_z, x)"));
  Sweep lin2(name("r mu_s mu_(t,s) + t mu_s mu_(r,s) = -s mu_(r,t) . 2"));
  Sweep lin3(name("r mu_s mu_(t,s) = t mu~_(r,s) mu_r"));
  for (Index x : units_) {
    probe(xmue, [&] { return B(P(x), Pe, mu_o(e, P(x))) == g_.times(P(m_.mu(x)(e)), -2); },
          [&] { return wp({{"x", x}}); });
    for (Index y : units_)
      probe(muxe,
            [&] {
              const Elem a = B(P(x), Pe, N(y));
              const Elem b = mu(e, Bo(N(y), N(m_.mu(e)(x)), Pe));
              const Elem c = g_.neg(B(P(m_.mu(e)(y)), P(x), Ne));
              return a == b && b == c;
            },
            [&] { return wp({{"x", x}, {"y", y}}); });
    for (Elem y = 0; y < no; ++y)
      probe(qj20,
            [&] {
              const Elem a = B(P(x), Pe, mu_o(e, B(P(x), Pe, y)));
              const Elem b = B(P(m_.mu(x)(e)), Pe, y);
              return g_.add(a, b) == g_.times(mu(x, y), 2);
            },
            [&] { return wp({{"x", x}, {"y", ptN(y)}}); });
    for (Index z : units_) {
      auto w = [&] { return wp({{"x", x}, {"z", z}}); };
      probe(qj26, [&] { return B(P(z), P(m_.mu(x)(e)), Ne) == B(P(z), P(x), mu_o(e, P(x))); }, w);
      probe(qj29,
            [&] {
              return B(P(m_.mu(x)(m_.mu(e)(z))), P(z), Ne) == B(P(m_.mu(z)(m_.mu(e)(x))), P(x), Ne);
            },
            w);
      for (Index t : units_) {
        // r = x, s = z
        auto w3 = [&] { return wp({{"r", x}, {"s", z}, {"t", t}}); };
        probe(lin2,
              [&] {
                const Elem lhs = g_.add(B(P(t), P(z), mu_o(z, P(x))), B(P(x), P(z), mu_o(z, P(t))));
                return lhs == g_.times(B(P(x), P(t), N(z)), -2);
              },
              w3);
        probe(lin3, [&] { return B(P(t), P(z), mu_o(z, P(x))) == mu(x, Bo(N(x), N(z), P(t))); }, w3);
      }
    }
  }
  emit({&muxe, &xmue, &qj20, &qj26, &qj29, &lin2, &lin3});

  Sweep qj9(name("y mu_(x, w mu_(x,z)) + y mu_(z, w mu_x) = x mu~_(y,w) mu_(x,z) + z mu~_(y,w) mu_x"));
  Sweep qj7(name("mu_x mu_y mu_z + mu_z mu_y mu_x + mu_(x,z) mu_y mu_(x,z) = mu_(y mu_(x,z)) + mu_(y mu_x, y mu_z)"));
  for (Index x : units_)
    for (Index z : units_)
      for (Index y : units_) {
        for (Index wpt : units_)
          probe(qj9,
                [&] {
                  const Elem lhs =
                      g_.add(B(P(x), B(P(x), P(z), N(wpt)), N(y)), B(P(z), mu(x, N(wpt)), N(y)));
                  const Elem rhs =
                      g_.add(B(P(x), P(z), Bo(N(y), N(wpt), P(x))), mu(x, Bo(N(y), N(wpt), P(z))));
                  return lhs == rhs;
                },
                [&] { return wp({{"x", x}, {"z", z}, {"y", y}, {"w", wpt}}); });
        for (Elem v = 0; v < no; ++v)
          probe(qj7,
                [&] {
                  const Elem a = mu(z, mu_o(y, mu(x, v)));
                  const Elem b = mu(x, mu_o(y, mu(z, v)));
                  const Elem c = B(P(x), P(z), mu_o(y, B(P(x), P(z), v)));
                  const Elem u = B(P(x), P(z), N(y));
                  const Elem d = p_.q(s_, u, v);
                  const Elem f = B(P(m_.mu(x)(y)), P(m_.mu(z)(y)), v);
                  return g_.add(g_.add(a, b), c) == g_.add(d, f);
                },
                [&] { return Witness{{"x", m_.label(x)}, {"z", m_.label(z)}, {"y", m_.label(y)}, {"v", h_.label(v)}}; });
      }
  qj7.note("mu of a non-unit u is read as Q_u = mu_(u,u) . 1/2");
  emit({&qj9, &qj7});

  Sweep qj27(name("e mu_(v, e mu_(x,z)) = x mu_e mu_(v,z) + z mu_e mu_(v,x)"));
  Sweep qj33(name("e mu(A, B) + e mu(B mu_e mu_z, x) = e mu_(z,v) mu_e mu_x mu_e mu_(z,e) + e mu(D, v) mu_e mu_(z,e)"));
  Sweep qj32(name("v mu_e mu(D, z) - v mu_e mu(A, x) = e mu(A, B) - e mu(D, v) mu_e mu_(z,e)"));
  for (Index x : units_)
    for (Index z : units_)
      for (Index v : units_) {
        auto w = [&] { return wp({{"x", x}, {"z", z}, {"v", v}}); };
        probe(qj27,
              [&] {
                const Elem lhs = B(P(v), B(P(x), P(z), Ne), Ne);
                return lhs == g_.add(B(P(v), P(z), mu_o(e, P(x))), B(P(v), P(x), mu_o(e, P(z))));
              },
              w);
        // A = x mu_e mu_z, B = x mu_e mu_(v,e), D = z mu_e mu_x.
        auto parts = [&] {
          const Elem A = P(m_.mu(z)(m_.mu(e)(x)));
          const Elem Bv = B(P(v), Pe, mu_o(e, P(x)));
          const Elem D = P(m_.mu(x)(m_.mu(e)(z)));
          const Elem r2 = B(P(z), Pe, mu_o(e, B(D, P(v), Ne)));
          return std::array<Elem, 4>{A, Bv, D, r2};
        };
        probe(qj33,
              [&] {
                const auto [A, Bv, D, r2] = parts();
                const Elem C = mu(z, mu_o(e, Bv));
                const Elem lhs = g_.add(B(A, Bv, Ne), B(C, P(x), Ne));
                const Elem r1 = B(P(z), Pe, mu_o(e, mu(x, mu_o(e, B(P(z), P(v), Ne)))));
                return lhs == g_.add(r1, r2);
              },
              w);
        probe(qj32,
              [&] {
                const auto [A, Bv, D, r2] = parts();
                const Elem ve = mu_o(e, P(v));
                const Elem lhs = g_.sub(B(D, P(z), ve), B(A, P(x), ve));
                return lhs == g_.sub(B(A, Bv, Ne), r2);
              },
              w);
      }
  qj33.note("A = x mu_e mu_z, B = x mu_e mu_(v,e), D = z mu_e mu_x");
  qj32.note("A = x mu_e mu_z, B = x mu_e mu_(v,e), D = z mu_e mu_x");
  emit({&qj27, &qj33, &qj32});

  Sweep qj34(name("e mu(z mu_e mu_(x,v), z) = e mu(x mu_e mu_z, v) + e mu(v mu_e mu_z, x)"));
  for (Index x : units_)
    for (Index z : units_)
      for (Elem v = 0; v < n; ++v)
        probe(qj34,
              [&] {
                const Elem lhs = B(B(P(x), v, mu_o(e, P(z))), P(z), Ne);
                const Elem a = B(P(m_.mu(z)(m_.mu(e)(x))), v, Ne);
                const Elem b = B(mu(z, mu_o(e, v)), P(x), Ne);
                return lhs == g_.add(a, b);
              },
              [&] { return Witness{{"x", m_.label(x)}, {"z", m_.label(z)}, {"v", g_.label(v)}}; });
  qj34.note("v ranges over all of V");
  emit({&qj34});
}

}  // namespace

VerifyReport verify_extraction_identities(const ExtractedPair& p, bool deep) {
  VerifyReport r;
  for (Side s : {Side::plus, Side::minus}) {
    Oriented o(p, s, r);
    o.basic();
    if (deep) o.deep();
  }
  return r;
}

}  // namespace locmouf
