#include "locmouf/roundtrip.hpp"

#include <limits>
#include <set>
#include <string>

#include "locmouf/error.hpp"
#include "locmouf/extraction.hpp"
#include "locmouf/projective_space.hpp"

namespace locmouf {

namespace {

constexpr Elem kNone = std::numeric_limits<Elem>::max();

template <class F>
void probe(Sweep& s, F&& f, const std::function<Witness()>& w) {
  try {
    s.test(f(), w);
  } catch (const Error& e) {
    s.fail(e.what(), w());
  }
}

Check bijective(const std::string& name, const std::vector<Elem>& map, std::size_t target) {
  Check c;
  c.name = name;
  c.evaluated = map.size();
  std::set<Elem> image(map.begin(), map.end());
  c.pass = map.size() == target && image.size() == target && !image.count(kNone);
  c.failures = c.pass ? 0 : 1;
  c.note = std::to_string(image.size()) + " images in a set of " + std::to_string(target);
  return c;
}

}  // namespace

VerifyReport verify_roundtrip_pair(const JordanPair& v, Elem e) {
  VerifyReport r;
  const AbelianGroup& vp = v.module(Side::plus);
  const AbelianGroup& vm = v.module(Side::minus);

  const VerifyReport local = verify_local(v);
  r.merge(local, "V: ");
  r.add("V+ is uniquely 2-divisible", vp.uniquely_divisible(2));
  r.add("V+ is uniquely 3-divisible", vp.uniquely_divisible(3));
  if (!local.ok()) return r;

  const ProjectiveSpace pv(v, e);
  const FinMoufang m = FinMoufang::build(moufang_data(pv));
  const Index ue = pv.affine(e);
  if (!r.ok()) {
    // Show where extraction breaks.
    r.merge(check_preconditions(m, ue), "M(V): ");
    return r;
  }

  Extraction ex = extract(m, ue);
  r.merge(ex.report, "M(V): ");
  if (!ex.w) return r;
  const ExtractedPair& p = *ex.pair;
  const JordanPair& w = *ex.w;

  // h+ and h- as element maps W^s -> V^s.
  std::vector<Elem> hp(p.size(Side::plus), kNone), hm(p.size(Side::minus), kNone);
  for (Elem a = 0; a < hp.size(); ++a) {
    const ProjPoint pt = pv.point(p.point(Side::plus, a));
    if (pt.form == PointForm::affine) hp[a] = pt.value;
  }
  for (Elem b = 0; b < hm.size(); ++b) {
    const ProjPoint pt = pv.point(p.point(Side::minus, b));
    hm[b] = pt.form == PointForm::rad_offset ? pt.value : vm.neg(pv.structure().inverse[idx(Side::plus)][pt.value]);
  }
  r.add(bijective("h+ is a bijection", hp, vp.size()));
  r.add(bijective("h- is a bijection", hm, vm.size()));
  if (!r.ok()) return r;

  const AbelianGroup& wp = w.module(Side::plus);
  const AbelianGroup& wm = w.module(Side::minus);
  Sweep addp("h+ is additive"), addm("h- is additive");
  for (Elem a = 0; a < wp.size(); ++a)
    for (Elem b = 0; b < wp.size(); ++b)
      addp.test(hp[wp.add(a, b)] == vp.add(hp[a], hp[b]), [&] { return Witness{{"x", wp.label(a)}, {"x'", wp.label(b)}}; });
  for (Elem a = 0; a < wm.size(); ++a)
    for (Elem b = 0; b < wm.size(); ++b)
      addm.test(hm[wm.add(a, b)] == vm.add(hm[a], hm[b]), [&] { return Witness{{"y", wm.label(a)}, {"y'", wm.label(b)}}; });
  r.add(addp.finish());
  r.add(addm.finish());

  Sweep qp("h+(y U+_x) = h-(y) Q+_(h+(x))"), qm("h-(x U-_y) = h+(x) Q-_(h-(y))");
  for (Elem a = 0; a < wp.size(); ++a)
    for (Elem b = 0; b < wm.size(); ++b) {
      auto wit = [&] { return Witness{{"x", wp.label(a)}, {"y", wm.label(b)}}; };
      qp.test(hp[w.q(Side::plus, a, b)] == v.q(Side::plus, hp[a], hm[b]), wit);
      qm.test(hm[w.q(Side::minus, b, a)] == v.q(Side::minus, hm[b], hp[a]), wit);
    }
  r.add(qp.finish());
  r.add(qm.finish());

  // The explicit mu-map expressions, evaluated on points of M(V).
  const auto& inv = pv.structure().invertible;
  const Elem einv = pv.e_inverse();
  Sweep up("[e,e^-1+y] mu_[x,0] = [yQ_x,0] for invertible x");
  Sweep np("[e,e^-1+y](mu_[e+x,0] . 2 - mu_[2e+x,0] + mu_[e,0] . 2) = [yQ_x,0] for non-invertible x");
  for (Elem x = 0; x < vp.size(); ++x)
    for (Elem y = 0; y < vm.size(); ++y) {
      const Index pt = pv.from_offset(y);
      const Index want = pv.affine(v.q(Side::plus, x, y));
      auto wit = [&] { return Witness{{"x", vp.label(x)}, {"y", vm.label(y)}}; };
      if (inv[idx(Side::plus)][x]) {
        probe(up, [&] { return m.mu(pv.affine(x))(pt) == want; }, wit);
      } else {
        probe(np,
              [&] {
                const Index a = m.scalar(m.mu(pv.affine(vp.add(e, x)))(pt), 2);
                const Index b = m.mu(pv.affine(vp.add(vp.times(e, 2), x)))(pt);
                const Index c = m.scalar(m.mu(ue)(pt), 2);
                return m.add(m.sub(a, b), c) == want;
              },
              wit);
      }
    }
  Sweep um("[x,0] mu_[e,e^-1+y] = [e,e^-1+xQ_y] for invertible y");
  Sweep nm("[x,0](mu_[e,e^-1+e^-1+y] .~ 2 -~ mu_[e,e^-1+2e^-1+y] +~ mu_[e,e^-1+e^-1] .~ 2) = [e,e^-1+xQ_y] for non-invertible y");
  for (Elem y = 0; y < vm.size(); ++y)
    for (Elem x = 0; x < vp.size(); ++x) {
      const Index pt = pv.affine(x);
      const Index want = pv.from_offset(v.q(Side::minus, y, x));
      auto wit = [&] { return Witness{{"x", vp.label(x)}, {"y", vm.label(y)}}; };
      if (inv[idx(Side::minus)][y]) {
        probe(um, [&] { return m.mu(pv.from_offset(y))(pt) == want; }, wit);
      } else {
        probe(nm,
              [&] {
                const Index a = m.scalar_tilde(m.mu(pv.from_offset(vm.add(einv, y)))(pt), 2);
                const Index b = m.mu(pv.from_offset(vm.add(vm.times(einv, 2), y)))(pt);
                const Index c = m.scalar_tilde(m.mu(pv.from_offset(einv))(pt), 2);
                return m.add_tilde(m.sub_tilde(a, b), c) == want;
              },
              wit);
      }
    }
  for (Sweep* s : {&up, &np, &um, &nm}) r.add(s->finish());
  return r;
}

VerifyReport verify_star_and_iso(const FinMoufang& m, Index e) {
  VerifyReport r;
  Extraction ex = extract(m, e);
  r.merge(ex.report);
  if (!ex.w) return r;
  const ExtractedPair& p = *ex.pair;
  const AbelianGroup& g = p.group(Side::plus);
  const AbelianGroup& h = p.group(Side::minus);
  auto P = [&](Index pt) { return p.elem(Side::plus, pt); };
  auto N = [&](Index pt) { return p.elem(Side::minus, pt); };

  Sweep star("(*): t alpha_x -~ x mu~_(t, t alpha_x) +~ t alpha_x mu_(x,x) mu~_(t,t) .~ 1/4 = t -~ x mu~_(t,t) .~ 1/2");
  for (Index t = 0; t < m.size(); ++t) {
    if (m.not_inf(t)) continue;
    for (Index x : m.plus_points())
      probe(star,
            [&] {
              const Elem nt = N(t), ta = N(m.alpha(x)(t)), px = P(x);
              const Elem a = p.bilinear(Side::minus, nt, ta, px);
              const Elem b = h.divide(p.bilinear(Side::minus, nt, nt, p.bilinear(Side::plus, px, px, ta)), 4);
              const Elem lhs = h.add(h.sub(ta, a), b);
              const Elem rhs = h.sub(nt, h.divide(p.bilinear(Side::minus, nt, nt, px), 2));
              return lhs == rhs;
            },
            [&] { return Witness{{"t", m.label(t)}, {"x", m.label(x)}}; });
  }
  Check sc = star.finish();
  const bool star_ok = sc.pass;
  if (!star_ok) {
    sc.required = false;
    sc.note = "inconclusive: (*) fails, so the isomorphism is not checked";
  }
  r.add(std::move(sc));
  if (!star_ok) {
    Check skip;
    skip.name = "M is isomorphic to M(W)";
    skip.required = false;
    skip.note = "not evaluated: (*) fails";
    r.add(std::move(skip));
    return r;
  }

  const JordanPair& w = *ex.w;
  const Elem we = P(e);
  const ProjectiveSpace pw(w, we);

  std::vector<Elem> phi(m.size());
  for (Index t = 0; t < m.size(); ++t)
    phi[t] = static_cast<Elem>(m.not_inf(t) ? pw.affine(P(t)) : pw.rad_offset(N(t)));
  r.add(bijective("phi is a bijection", phi, pw.size()));
  if (!r.ok()) return r;

  Sweep eq("x ~ y iff phi(x) ~ phi(y)");
  for (Index x = 0; x < m.size(); ++x)
    for (Index y = 0; y < m.size(); ++y)
      eq.test(m.equivalent(x, y) == pw.rad_equivalent(phi[x], phi[y]),
              [&] { return Witness{{"x", m.label(x)}, {"y", m.label(y)}}; });
  r.add(eq.finish());

  std::vector<Perm> theta;
  for (Elem a = 0; a < g.size(); ++a) theta.push_back(pw.alpha(a));
  Sweep hom("theta(alpha_x alpha_z) = theta(alpha_x) theta(alpha_z)");
  for (Elem a = 0; a < g.size(); ++a)
    for (Elem b = 0; b < g.size(); ++b)
      hom.test(theta[g.add(a, b)] == theta[a] * theta[b], [&] { return Witness{{"x", g.label(a)}, {"z", g.label(b)}}; });
  r.add(hom.finish());
  r.add("theta is injective", sorted_set(theta).size() == theta.size());

  Sweep act("phi(t alpha_x) = phi(t) alpha_[x,0]");
  for (Index x : m.plus_points()) {
    const Perm& ax = m.alpha(x);
    const Perm& tx = theta[P(x)];
    for (Index t = 0; t < m.size(); ++t)
      act.test(phi[ax(t)] == tx(phi[t]), [&] { return Witness{{"t", m.label(t)}, {"x", m.label(x)}}; });
  }
  r.add(act.finish());

  const Perm& tau = m.mu(e);
  const Perm tau_w = pw.mu(we);
  Sweep tc("phi(t mu_e) = phi(t) mu_[e,0]");
  for (Index t = 0; t < m.size(); ++t)
    tc.test(phi[tau(t)] == tau_w(phi[t]), [&] { return Witness{{"t", m.label(t)}}; });
  r.add(tc.finish());
  return r;
}

}  // namespace locmouf
