#include "locmouf/moufang_verify.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "locmouf/error.hpp"

namespace locmouf {

namespace {

using ClassMap = std::vector<Index>;

ClassMap induced(const FinMoufang& m, const Perm& g) {
  ClassMap img(m.class_count());
  for (std::size_t k = 0; k < m.class_count(); ++k) img[k] = m.class_of(g(m.data().classes[k].front()));
  return img;
}

std::vector<ClassMap> induced_set(const FinMoufang& m, const std::vector<Perm>& group) {
  std::set<ClassMap> s;
  for (const Perm& g : group) s.insert(induced(m, g));
  return {s.begin(), s.end()};
}

std::vector<Perm> conjugate_all(const std::vector<Perm>& group, const Perm& h) {
  std::vector<Perm> out;
  out.reserve(group.size());
  for (const Perm& u : group) out.push_back(u.conjugate(h));
  return sorted_set(std::move(out));
}

Witness point_witness(const FinMoufang& m, const std::string& name, Index x) { return {{name, m.label(x)}}; }

// Fixes x and is sharply transitive on X minus the class of x.
bool sharply_transitive_off(const FinMoufang& m, const std::vector<Perm>& group, Index x) {
  std::vector<int> hits(m.size(), 0);
  Index base = x;
  for (Index y = 0; y < m.size(); ++y)
    if (!m.equivalent(x, y)) {
      base = y;
      break;
    }
  if (base == x) return false;
  for (const Perm& u : group) {
    if (u(x) != x) return false;
    ++hits[u(base)];
  }
  for (Index y = 0; y < m.size(); ++y)
    if (hits[y] != (m.equivalent(x, y) ? 0 : 1)) return false;
  return true;
}

bool sharply_transitive_classes(const FinMoufang& m, const std::vector<ClassMap>& group, Index cls) {
  std::vector<int> hits(m.class_count(), 0);
  const Index base = cls == 0 ? 1 : 0;
  for (const ClassMap& g : group) {
    if (g[cls] != cls) return false;
    ++hits[g[base]];
  }
  for (Index k = 0; k < m.class_count(); ++k)
    if (hits[k] != (k == cls ? 0 : 1)) return false;
  return true;
}

}  // namespace

VerifyReport verify_moufang(const FinMoufang& m, bool full_lm3) {
  VerifyReport r;
  const auto units = m.units();
  const auto u_inf = sorted_set(m.u_inf());
  const auto u_zero = sorted_set(m.u_zero());

  std::vector<std::vector<Perm>> root(m.size());
  for (Index x = 0; x < m.size(); ++x) root[x] = sorted_set(m.root_group(x));

  Sweep c1("criterion (i): U_inf^gamma_(x tau^-1) = U_x");
  Sweep c2("criterion (ii): U_0^mu_x = U_inf");
  Sweep c3("criterion (iii): U_0 = U_inf^mu_x");
  Sweep agree("mu_x = g alpha_x h");
  for (Index x : units) {
    auto w = [&] { return point_witness(m, "x", x); };
    c1.test(conjugate_all(m.u_inf(), m.gamma(m.tau_inv()(x))) == root[x], w);
    c2.test(conjugate_all(m.u_zero(), m.mu(x)) == u_inf, w);
    c3.test(conjugate_all(m.u_inf(), m.mu(x)) == u_zero, w);
    bool ok = true;
    try {
      mu_map(m, x);
    } catch (const AssertionFailure&) {
      ok = false;
    }
    agree.test(ok, w);
  }
  r.add(c1.finish());
  r.add(c2.finish());
  r.add(c3.finish());
  r.add(agree.finish());

  std::vector<std::vector<ClassMap>> root_bar(m.size());
  for (Index x = 0; x < m.size(); ++x) root_bar[x] = induced_set(m, root[x]);

  Sweep lm1("LM1: x ~ y implies U_xbar = U_ybar");
  for (Index x = 0; x < m.size(); ++x)
    for (Index y = x + 1; y < m.size(); ++y)
      if (m.equivalent(x, y))
        lm1.test(root_bar[x] == root_bar[y], [&] { return Witness{{"x", m.label(x)}, {"y", m.label(y)}}; });
  r.add(lm1.finish());

  Sweep lm2("LM2: U_x fixes x and is sharply transitive on X minus xbar");
  for (Index x = 0; x < m.size(); ++x)
    lm2.test(sharply_transitive_off(m, root[x], x), [&] { return point_witness(m, "x", x); });
  r.add(lm2.finish());

  Sweep lm2b("LM2': U_xbar fixes xbar and is sharply transitive on the other classes");
  for (Index x = 0; x < m.size(); ++x)
    lm2b.test(sharply_transitive_classes(m, root_bar[x], m.class_of(x)), [&] { return point_witness(m, "x", x); });
  r.add(lm2b.finish());

  std::vector<Perm> conj;
  std::string what;
  if (full_lm3) {
    conj = group_elements(m, std::size_t{1} << 22);
    what = "all of G";
  } else {
    conj = m.u_inf();
    conj.insert(conj.end(), m.u_zero().begin(), m.u_zero().end());
    what = "U_inf and U_0, which generate G";
  }
  Sweep lm3("LM3: U_x^g = U_xg");
  for (std::size_t i = 0; i < conj.size(); ++i) {
    const Perm& g = conj[i];
    for (Index x = 0; x < m.size(); ++x)
      lm3.test(conjugate_all(root[x], g) == root[g(x)],
               [&] { return Witness{{"x", m.label(x)}, {"g", std::to_string(i)}}; });
  }
  lm3.note("g ranges over " + what);
  r.add(lm3.finish());
  return r;
}

bool is_unit_point(const FinMoufang& m, Index x) {
  const bool by_class = m.is_unit(x);
  bool by_alpha = false;
  if (m.not_inf(x)) {
    const ClassMap img = induced(m, m.alpha(x));
    by_alpha = true;
    for (Index k = 0; k < m.class_count(); ++k)
      if (k != m.class_of(m.inf()) && img[k] == k) by_alpha = false;
  }
  if (by_class != by_alpha) throw AssertionFailure("unit characterizations disagree at " + m.label(x));
  return by_class;
}

Perm mu_map(const FinMoufang& m, Index x) {
  if (!m.is_unit(x)) throw NotUnit(m.label(x) + " is not a unit");
  const Perm& g = m.u0_to(m.neg(x));
  const Perm* h = nullptr;
  for (const Perm& u : m.u_zero())
    if (u(x) == m.inf()) {
      h = &u;
      break;
    }
  if (!h) throw AssertionFailure("no element of U_0 maps " + m.label(x) + " to infinity");
  Perm mu = g * m.alpha(x) * *h;
  if (mu(m.zero()) != m.inf() || mu(m.inf()) != m.zero())
    throw AssertionFailure("mu_" + m.label(x) + " does not swap 0 and infinity");
  if (!(mu == m.mu(x))) throw AssertionFailure("mu_" + m.label(x) + " disagrees with the construction formula");
  return mu;
}

std::vector<Perm> group_elements(const FinMoufang& m, std::size_t cap) {
  std::vector<Perm> gens = m.u_inf();
  gens.insert(gens.end(), m.u_zero().begin(), m.u_zero().end());
  gens = sorted_set(std::move(gens));
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  std::deque<Perm> queue;
  const Perm id = Perm::identity(m.size());
  seen.insert(id);
  out.push_back(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const Perm g = queue.front();
    queue.pop_front();
    for (const Perm& s : gens) {
      Perm h = g * s;
      if (seen.insert(h).second) {
        if (seen.size() > cap)
          throw CapExceeded("little projective group has more than " + std::to_string(cap) + " elements");
        out.push_back(h);
        queue.push_back(std::move(h));
      }
    }
  }
  return out;
}

GroupSummary little_projective_group(const FinMoufang& m, std::size_t cap) {
  GroupSummary s;
  const auto group = group_elements(m, cap);
  s.order = group.size();
  s.report.add("closure of U_inf and U_0", true, "order " + std::to_string(s.order));

  std::size_t pairs = 0;
  for (Index x = 0; x < m.size(); ++x)
    for (Index y = 0; y < m.size(); ++y)
      if (!m.equivalent(x, y)) ++pairs;
  std::set<std::pair<Index, Index>> orbit;
  for (const Perm& g : group) orbit.insert({g(m.zero()), g(m.inf())});
  Check c;
  c.name = "G is transitive on pairs of non-equivalent points";
  c.evaluated = pairs;
  c.pass = orbit.size() == pairs;
  c.failures = pairs - std::min(pairs, orbit.size());
  c.note = "orbit of (0, inf) has " + std::to_string(orbit.size()) + " of " + std::to_string(pairs) + " pairs";
  if (!c.pass)
    for (Index x = 0; x < m.size() && c.witness.empty(); ++x)
      for (Index y = 0; y < m.size(); ++y)
        if (!m.equivalent(x, y) && !orbit.count({x, y})) {
          c.witness = {{"x", m.label(x)}, {"y", m.label(y)}};
          break;
        }
  s.report.add(std::move(c));
  return s;
}

Check check_special(const FinMoufang& m) {
  Sweep s("special: (-x)tau = -(x tau)");
  for (Index x : m.units())
    s.test(m.tau()(m.neg(x)) == m.neg(m.tau()(x)), [&] { return point_witness(m, "x", x); });
  return s.finish();
}

Check check_abelian(const FinMoufang& m) {
  Sweep s("U_inf is abelian");
  const auto& u = m.u_inf();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      s.test(u[i] * u[j] == u[j] * u[i],
             [&] { return Witness{{"u", m.label(u[i](m.zero()))}, {"u'", m.label(u[j](m.zero()))}}; });
  return s.finish();
}

namespace {

Index times(const FinMoufang& m, Index x, int k, Side side) {
  return side == Side::plus ? m.scalar(x, k) : m.scalar_tilde(x, k);
}

}  // namespace

Check divisibility_hypothesis(const FinMoufang& m, int n, Side side) {
  Sweep s(std::string("units stay units under ") + (side == Side::plus ? "x . k" : "x .~ k") + ", k <= " +
          std::to_string(n));
  for (Index u : m.units())
    for (int k = 2; k <= n; ++k) {
      const Index uk = times(m, u, k, side);
      s.test(m.is_unit(uk), [&] { return Witness{{"u", m.label(u)}, {"k", std::to_string(k)}, {"u.k", m.label(uk)}}; });
    }
  return s.finish();
}

Index divide(const FinMoufang& m, Index x, int n, Side side) {
  if (n < 1) throw Error("divide needs n >= 1");
  const bool plain = side == Side::plus;
  if (plain ? !m.not_inf(x) : !m.not_zero(x))
    throw Error(m.label(x) + (plain ? " is equivalent to infinity" : " is equivalent to 0"));
  const Check hyp = divisibility_hypothesis(m, n, side);
  if (!hyp.pass) {
    std::string w;
    for (const auto& [k, v] : hyp.witness) w += " " + k + "=" + v;
    throw HypothesisFailed("divisibility hypothesis fails:" + w);
  }
  std::optional<Index> found;
  for (Index y : plain ? m.plus_points() : m.minus_points()) {
    if (times(m, y, n, side) != x) continue;
    if (found) throw NotUnique(m.label(x) + " has several " + std::to_string(n) + "-th parts");
    found = y;
  }
  if (!found) throw NoSolution(m.label(x) + " has no " + std::to_string(n) + "-th part");
  if (plain && m.is_unit(x)) {
    const Index nx = m.neg(x);
    const Index y = m.mu(nx)(m.scalar(nx, n));
    if (y != *found)
      throw AssertionFailure("constructive division of " + m.label(x) + " gives " + m.label(y) + ", search gives " +
                             m.label(*found));
  }
  return *found;
}

}  // namespace locmouf
