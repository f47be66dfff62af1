#include "locmouf/projective_space.hpp"

#include <limits>
#include <map>

#include "locmouf/error.hpp"

namespace locmouf {

namespace {
constexpr Index kNpos = std::numeric_limits<Index>::max();
}

ProjectiveSpace::ProjectiveSpace(JordanPair v, Elem e)
    : v_(std::move(v)), ps_(PairStructure::analyze(v_)), e_(e), e_inv_(0) {
  if (e >= v_.size(Side::plus)) throw Error("distinguished element out of range");
  if (!ps_.invertible[idx(Side::plus)][e])
    throw NotInvertible("distinguished element " + v_.label(Side::plus, e) + " is not invertible");
  e_inv_ = ps_.inverse[idx(Side::plus)][e];

  const std::size_t n_plus = v_.size(Side::plus);
  for (Elem x = 0; x < n_plus; ++x) points_.push_back({PointForm::affine, x});
  rad_index_.assign(v_.size(Side::minus), kNpos);
  for (Elem y : ps_.rad.elements(Side::minus)) {
    rad_index_[y] = static_cast<Index>(points_.size());
    points_.push_back({PointForm::rad_offset, y});
  }

  // Affine points are equivalent iff they differ by a radical element; all
  // radical-offset points form one class.
  class_of_.assign(points_.size(), kNpos);
  const auto& mp = v_.module(Side::plus);
  for (Elem x = 0; x < n_plus; ++x) {
    if (class_of_[x] != kNpos) continue;
    const Index id = static_cast<Index>(class_count_++);
    for (Elem r : ps_.rad.elements(Side::plus)) class_of_[mp.add(x, r)] = id;
  }
  if (points_.size() > n_plus) {
    const Index id = static_cast<Index>(class_count_++);
    for (Index i = static_cast<Index>(n_plus); i < points_.size(); ++i) class_of_[i] = id;
  }
}

Index ProjectiveSpace::index_of(ProjPoint p) const {
  if (p.form == PointForm::affine) {
    if (p.value >= v_.size(Side::plus)) throw Error("affine point out of range");
    return p.value;
  }
  if (p.value >= rad_index_.size() || rad_index_[p.value] == kNpos)
    throw Error("radical-offset point with non-radical value " +
                (p.value < rad_index_.size() ? v_.label(Side::minus, p.value) : std::to_string(p.value)));
  return rad_index_[p.value];
}

std::string ProjectiveSpace::label(Index i) const {
  const ProjPoint p = points_[i];
  return p.form == PointForm::affine ? "A:" + v_.label(Side::plus, p.value) : "R:" + v_.label(Side::minus, p.value);
}

std::vector<std::string> ProjectiveSpace::labels() const {
  std::vector<std::string> out;
  for (Index i = 0; i < size(); ++i) out.push_back(label(i));
  return out;
}

Index ProjectiveSpace::from_offset(Elem s) const {
  if (ps_.rad.contains(Side::minus, s)) return rad_index_[s];
  require(ps_.invertible[idx(Side::minus)][s],
          "offset " + v_.label(Side::minus, s) + " is neither radical nor invertible");
  // [e, e^-1 + s] = [-s^-1, 0]
  return affine(v_.module(Side::plus).neg(ps_.inverse[idx(Side::minus)][s]));
}

Index ProjectiveSpace::canonicalize(Elem x, Elem y) const {
  if (is_quasi_invertible(v_, Side::plus, x, y)) return affine(quasi_inverse(v_, Side::plus, x, y));
  require(ps_.invertible[idx(Side::plus)][x],
          "(" + v_.label(Side::plus, x) + ", " + v_.label(Side::minus, y) +
              ") is not quasi-invertible and x is not invertible");
  const Elem t = v_.module(Side::minus).sub(y, ps_.inverse[idx(Side::plus)][x]);
  require(ps_.rad.contains(Side::minus, t), "y - x^-1 = " + v_.label(Side::minus, t) + " is not radical");
  return rad_index_[t];
}

std::pair<Elem, Elem> ProjectiveSpace::expand(Index i) const {
  const ProjPoint p = points_[i];
  if (p.form == PointForm::affine) return {p.value, v_.module(Side::minus).zero()};
  return {e_, v_.module(Side::minus).add(e_inv_, p.value)};
}

std::vector<std::vector<Index>> ProjectiveSpace::classes() const {
  std::vector<std::vector<Index>> out(class_count_);
  for (Index i = 0; i < size(); ++i) out[class_of_[i]].push_back(i);
  return out;
}

Perm ProjectiveSpace::alpha(Elem v) const {
  const auto& mp = v_.module(Side::plus);
  std::vector<Index> t(size());
  for (Index i = 0; i < size(); ++i) {
    const ProjPoint p = points_[i];
    if (p.form == PointForm::affine)
      t[i] = affine(mp.add(p.value, v));
    else
      t[i] = rad_offset(quasi_inverse(v_, Side::minus, p.value, v));
  }
  return Perm::from_table(std::move(t));
}

Perm ProjectiveSpace::zeta(Elem w) const {
  const auto& mm = v_.module(Side::minus);
  std::vector<Index> t(size());
  for (Index i = 0; i < size(); ++i) {
    const ProjPoint p = points_[i];
    if (p.form == PointForm::rad_offset) {
      t[i] = from_offset(mm.add(p.value, w));
    } else if (ps_.rad.contains(Side::plus, p.value)) {
      t[i] = affine(quasi_inverse(v_, Side::plus, p.value, w));
    } else {
      // [x,0] = [e, e^-1 - x^-1], then translate.
      t[i] = from_offset(mm.add(mm.neg(ps_.inverse[idx(Side::plus)][p.value]), w));
    }
  }
  return Perm::from_table(std::move(t));
}

Perm ProjectiveSpace::mu_closed(Elem v) const {
  if (!ps_.invertible[idx(Side::plus)][v]) throw NotInvertible(v_.label(Side::plus, v) + " is not invertible");
  const auto& mp = v_.module(Side::plus);
  std::vector<Index> t(size());
  for (Index i = 0; i < size(); ++i) {
    const ProjPoint p = points_[i];
    if (p.form == PointForm::rad_offset)
      t[i] = affine(v_.q(Side::plus, v, p.value));
    else if (ps_.rad.contains(Side::plus, p.value))
      t[i] = rad_offset(q_inverse_apply(v_, Side::plus, v, p.value));
    else
      t[i] = affine(mp.neg(v_.q(Side::plus, v, ps_.inverse[idx(Side::plus)][p.value])));
  }
  return Perm::from_table(std::move(t));
}

Perm ProjectiveSpace::mu_composite(Elem v) const {
  if (!ps_.invertible[idx(Side::plus)][v]) throw NotInvertible(v_.label(Side::plus, v) + " is not invertible");
  const Perm z = zeta(ps_.inverse[idx(Side::plus)][v]);
  return z * alpha(v) * z;
}

Perm ProjectiveSpace::mu(Elem v) const {
  Perm closed = mu_closed(v);
  require(closed == mu_composite(v), "closed-form mu_" + v_.label(Side::plus, v) + " differs from the composite");
  require((closed * closed).is_identity(), "mu_" + v_.label(Side::plus, v) + " is not an involution");
  return closed;
}

bool proj_equivalent(const JordanPair& v, Elem x, Elem y, Elem x2, Elem y2) {
  const Elem d = v.module(Side::minus).sub(y, y2);
  if (!is_quasi_invertible(v, Side::plus, x, d)) return false;
  return quasi_inverse(v, Side::plus, x, d) == x2;
}

namespace {

// g preserves the partition iff class(p) -> class(pg) is a well-defined
// injection.
bool preserves_classes(const ProjectiveSpace& p, const Perm& g, Witness& w) {
  std::map<Index, Index> image;
  std::map<Index, Index> preimage;
  for (Index i = 0; i < p.size(); ++i) {
    const Index a = p.class_of()[i];
    const Index b = p.class_of()[g(i)];
    auto [it, fresh] = image.emplace(a, b);
    auto [jt, fresh2] = preimage.emplace(b, a);
    if (it->second != b || jt->second != a) {
      w = {{"point", p.label(i)}, {"image", p.label(g(i))}};
      return false;
    }
  }
  return true;
}

}  // namespace

VerifyReport verify_projective_space(const ProjectiveSpace& p) {
  VerifyReport report;
  const JordanPair& v = p.pair();
  const auto& mp = v.module(Side::plus);
  const auto& mm = v.module(Side::minus);
  const std::size_t expected = v.size(Side::plus) + p.structure().rad.count(Side::minus);
  report.add("|P(V)| = |V+| + |Rad V-|", p.size() == expected,
             std::to_string(p.size()) + " points, " + std::to_string(p.class_count()) + " classes");

  Sweep idem("canonicalize is idempotent");
  for (Index i = 0; i < p.size(); ++i) {
    auto [x, y] = p.expand(i);
    idem.test(p.canonicalize(x, y) == i, [&] { return Witness{{"point", p.label(i)}}; });
  }
  report.add(idem.finish());

  Sweep eq("canonicalize(x,y) is projectively equivalent to (x,y)");
  for (Elem x = 0; x < mp.size(); ++x)
    for (Elem y = 0; y < mm.size(); ++y) {
      auto [x2, y2] = p.expand(p.canonicalize(x, y));
      eq.test(proj_equivalent(v, x, y, x2, y2),
              [&] { return Witness{{"x", v.label(Side::plus, x)}, {"y", v.label(Side::minus, y)}}; });
    }
  report.add(eq.finish());

  std::vector<Perm> alphas, zetas;
  for (Elem a = 0; a < mp.size(); ++a) alphas.push_back(p.alpha(a));
  for (Elem b = 0; b < mm.size(); ++b) zetas.push_back(p.zeta(b));

  Sweep amor("alpha_v alpha_v' = alpha_(v+v')");
  for (Elem a = 0; a < mp.size(); ++a)
    for (Elem b = 0; b < mp.size(); ++b)
      amor.test(alphas[a] * alphas[b] == alphas[mp.add(a, b)],
                [&] { return Witness{{"v", v.label(Side::plus, a)}, {"v'", v.label(Side::plus, b)}}; });
  report.add(amor.finish());

  Sweep zmor("zeta_w zeta_w' = zeta_(w+w')");
  for (Elem a = 0; a < mm.size(); ++a)
    for (Elem b = 0; b < mm.size(); ++b)
      zmor.test(zetas[a] * zetas[b] == zetas[mm.add(a, b)],
                [&] { return Witness{{"w", v.label(Side::minus, a)}, {"w'", v.label(Side::minus, b)}}; });
  report.add(zmor.finish());

  Sweep pres("alpha, zeta and mu preserve radical equivalence");
  auto check_pres = [&](const Perm& g, const std::string& name) {
    Witness w;
    bool ok = preserves_classes(p, g, w);
    pres.test(ok, [&] {
      w.insert(w.begin(), {"map", name});
      return w;
    });
  };
  for (Elem a = 0; a < mp.size(); ++a) check_pres(alphas[a], "alpha_" + v.label(Side::plus, a));
  for (Elem b = 0; b < mm.size(); ++b) check_pres(zetas[b], "zeta_" + v.label(Side::minus, b));
  for (Elem t = 0; t < mp.size(); ++t)
    if (p.structure().invertible[idx(Side::plus)][t]) check_pres(p.mu_closed(t), "mu_" + v.label(Side::plus, t));
  report.add(pres.finish());

  Sweep neg("[t,0] mu_t = [-t,0]");
  for (Elem t = 0; t < mp.size(); ++t) {
    if (!p.structure().invertible[idx(Side::plus)][t]) continue;
    neg.test(p.mu_closed(t)(p.affine(t)) == p.affine(mp.neg(t)),
             [&] { return Witness{{"t", v.label(Side::plus, t)}}; });
  }
  report.add(neg.finish());
  return report;
}

VerifyReport verify_mu_actions(const ProjectiveSpace& p) {
  VerifyReport report;
  const JordanPair& v = p.pair();
  const auto& mp = v.module(Side::plus);
  const auto& mm = v.module(Side::minus);
  const auto& ps = p.structure();

  Sweep comp("closed-form mu_v = zeta_(v^-1) alpha_v zeta_(v^-1)");
  Sweep inv("mu_v^2 = 1");
  Sweep off("[e,e^-1+y] mu_v = [yQ_v,0] for all y");
  Sweep aff("[x,0] mu_v = [e,e^-1+xQ_v^-1] for all x");
  Sweep nonrad("[e,e^-1+y] mu_v = [e,e^-1-y^-1 Q_v^-1] for non-radical y");
  for (Elem t = 0; t < mp.size(); ++t) {
    if (!ps.invertible[idx(Side::plus)][t]) continue;
    const Perm closed = p.mu_closed(t);
    const Perm composite = p.mu_composite(t);
    for (Index i = 0; i < p.size(); ++i)
      comp.test(closed(i) == composite(i),
                [&] { return Witness{{"v", v.label(Side::plus, t)}, {"point", p.label(i)}}; });
    inv.test((closed * closed).is_identity(), [&] { return Witness{{"v", v.label(Side::plus, t)}}; });
    for (Elem y = 0; y < mm.size(); ++y) {
      auto wit = [&] { return Witness{{"v", v.label(Side::plus, t)}, {"y", v.label(Side::minus, y)}}; };
      off.test(composite(p.from_offset(y)) == p.affine(v.q(Side::plus, t, y)), wit);
      if (!ps.rad.contains(Side::minus, y)) {
        const Elem yinv = ps.inverse[idx(Side::minus)][y];
        nonrad.test(composite(p.from_offset(y)) == p.from_offset(mm.neg(q_inverse_apply(v, Side::plus, t, yinv))),
                    wit);
      }
    }
    for (Elem x = 0; x < mp.size(); ++x)
      aff.test(composite(p.affine(x)) == p.from_offset(q_inverse_apply(v, Side::plus, t, x)),
               [&] { return Witness{{"v", v.label(Side::plus, t)}, {"x", v.label(Side::plus, x)}}; });
  }
  report.add(comp.finish());
  report.add(inv.finish());
  report.add(off.finish());
  report.add(aff.finish());
  report.add(nonrad.finish());
  return report;
}

VerifyReport verify_dictionary(const ProjectiveSpace& p) {
  VerifyReport report;
  const JordanPair& v = p.pair();
  const auto& mp = v.module(Side::plus);
  Sweep dict("alpha_v^(mu_t) = zeta_(vQ_t^-1)");
  std::vector<Perm> alphas;
  for (Elem a = 0; a < mp.size(); ++a) alphas.push_back(p.alpha(a));
  for (Elem t = 0; t < mp.size(); ++t) {
    if (!p.structure().invertible[idx(Side::plus)][t]) continue;
    const Perm mu = p.mu_closed(t);
    for (Elem a = 0; a < mp.size(); ++a)
      dict.test(alphas[a].conjugate(mu) == p.zeta(q_inverse_apply(v, Side::plus, t, a)),
                [&] { return Witness{{"t", v.label(Side::plus, t)}, {"v", v.label(Side::plus, a)}}; });
  }
  report.add(dict.finish());
  return report;
}

}  // namespace locmouf
