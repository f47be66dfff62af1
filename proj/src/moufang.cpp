#include "locmouf/moufang.hpp"

#include <limits>
#include <set>
#include <unordered_set>

#include "locmouf/error.hpp"

namespace locmouf {

namespace {

constexpr Index kNpos = std::numeric_limits<Index>::max();

// C1 and C1' for a candidate fixed point, plus C2.
VerifyReport check_candidate(const MoufangData& d, const std::vector<Index>& class_of, Index inf) {
  VerifyReport r;
  const std::size_t n = d.points.size();
  const std::size_t nc = d.classes.size();
  auto label = [&](Index x) { return d.points[x]; };

  Sweep fix("C1: U fixes infinity");
  for (std::size_t i = 0; i < d.u_inf.size(); ++i)
    fix.test(d.u_inf[i](inf) == inf, [&] { return Witness{{"u", std::to_string(i)}}; });
  r.add(fix.finish());

  // Sharp transitivity on X minus the class of infinity.
  std::vector<Index> outside;
  for (Index x = 0; x < n; ++x)
    if (class_of[x] != class_of[inf]) outside.push_back(x);
  {
    Check c;
    c.name = "C1: U is sharply transitive on X minus the class of infinity";
    c.evaluated = 1;
    if (outside.empty()) {
      c.pass = false;
      c.note = "no point outside the class of infinity";
    } else {
      const Index base = outside.front();
      std::vector<int> hits(n, 0);
      for (const Perm& u : d.u_inf) ++hits[u(base)];
      for (Index x = 0; x < n && c.pass; ++x) {
        const bool inside = class_of[x] == class_of[inf];
        const int want = inside ? 0 : 1;
        if (hits[x] != want) {
          c.pass = false;
          c.witness = {{"base", label(base)}, {"point", label(x)}, {"hits", std::to_string(hits[x])}};
        }
      }
    }
    c.failures = c.pass ? 0 : 1;
    r.add(std::move(c));
  }
  {
    Check c;
    c.name = "C1': induced action of U is sharply transitive on the other classes";
    c.evaluated = 1;
    std::set<std::vector<Index>> induced;
    for (const Perm& u : d.u_inf) {
      std::vector<Index> img(nc);
      for (std::size_t k = 0; k < nc; ++k) img[k] = class_of[u(d.classes[k].front())];
      induced.insert(std::move(img));
    }
    if (!outside.empty()) {
      const Index base_class = class_of[outside.front()];
      std::vector<int> hits(nc, 0);
      for (const auto& img : induced) ++hits[img[base_class]];
      for (std::size_t k = 0; k < nc && c.pass; ++k) {
        const int want = k == class_of[inf] ? 0 : 1;
        if (hits[k] != want) {
          c.pass = false;
          c.witness = {{"class of", label(d.classes[k].front())}, {"hits", std::to_string(hits[k])}};
        }
      }
    } else {
      c.pass = false;
    }
    c.failures = c.pass ? 0 : 1;
    c.note = std::to_string(induced.size()) + " induced permutations of " + std::to_string(nc) + " classes";
    r.add(std::move(c));
  }
  const Index zero = d.tau(inf);
  r.add("C2: infinity tau is not equivalent to infinity", class_of[zero] != class_of[inf],
        "0 := " + label(zero));
  r.add("C2: infinity tau^2 = infinity", d.tau(zero) == inf);
  return r;
}

}  // namespace

MoufangData moufang_data(const ProjectiveSpace& p) {
  MoufangData d;
  d.points = p.labels();
  d.classes = p.classes();
  for (Elem v = 0; v < p.pair().size(Side::plus); ++v) d.u_inf.push_back(p.alpha(v));
  d.tau = p.mu(p.e());
  return d;
}

FinMoufang FinMoufang::build(MoufangData data, std::optional<Index> inf) {
  const std::size_t n = data.points.size();
  VerifyReport rep;
  auto fail = [&](const std::string& why) { throw ConstructionFailure(why, rep); };

  // Partition.
  std::vector<Index> class_of(n, kNpos);
  bool partition_ok = true;
  std::string partition_note;
  for (std::size_t k = 0; k < data.classes.size(); ++k) {
    if (data.classes[k].empty()) {
      partition_ok = false;
      partition_note = "empty class " + std::to_string(k);
    }
    for (Index x : data.classes[k]) {
      if (x >= n || class_of[x] != kNpos) {
        partition_ok = false;
        partition_note = "point index " + std::to_string(x) + " is out of range or repeated";
        continue;
      }
      class_of[x] = static_cast<Index>(k);
    }
  }
  for (Index x = 0; x < n && partition_ok; ++x)
    if (class_of[x] == kNpos) {
      partition_ok = false;
      partition_note = "point " + data.points[x] + " lies in no class";
    }
  rep.add("classes partition X", partition_ok, partition_note);
  if (!partition_ok) fail("classes do not partition the point set: " + partition_note);
  rep.add("more than 2 classes", data.classes.size() > 2, std::to_string(data.classes.size()) + " classes");
  if (data.classes.size() <= 2) fail("need more than 2 classes");

  for (const Perm& u : data.u_inf)
    if (u.size() != n) throw SchemaError("u_inf element has the wrong length");
  if (data.tau.size() != n) throw SchemaError("tau has the wrong length");
  if (data.u_inf.empty()) throw SchemaError("u_inf is empty");

  // U is a group.
  {
    std::unordered_set<Perm, PermHash> members(data.u_inf.begin(), data.u_inf.end());
    Check c;
    c.name = "U is a group";
    if (members.size() != data.u_inf.size()) {
      c.pass = false;
      c.note = "repeated elements";
    }
    if (!members.count(Perm::identity(n))) {
      c.pass = false;
      c.note = "identity missing";
    }
    for (std::size_t i = 0; i < data.u_inf.size() && c.pass; ++i) {
      ++c.evaluated;
      if (!members.count(data.u_inf[i].inverse())) {
        c.pass = false;
        c.witness = {{"u", std::to_string(i)}};
        c.note = "not closed under inverses";
      }
      for (std::size_t j = 0; j < data.u_inf.size() && c.pass; ++j) {
        ++c.evaluated;
        if (!members.count(data.u_inf[i] * data.u_inf[j])) {
          c.pass = false;
          c.witness = {{"u", std::to_string(i)}, {"u'", std::to_string(j)}};
          c.note = "not closed under composition";
        }
      }
    }
    c.failures = c.pass ? 0 : 1;
    rep.add(std::move(c));
    if (!rep.checks().back().pass) fail("u_inf is not a group: " + rep.checks().back().note);
  }

  // Class preservation.
  {
    Sweep s("U and tau preserve the equivalence");
    auto check = [&](const Perm& g, const std::string& name) {
      std::vector<Index> img(data.classes.size(), kNpos);
      bool ok = true;
      for (Index x = 0; x < n && ok; ++x) {
        Index& slot = img[class_of[x]];
        if (slot == kNpos)
          slot = class_of[g(x)];
        else if (slot != class_of[g(x)])
          ok = false;
      }
      s.test(ok, [&] { return Witness{{"map", name}}; });
    };
    for (std::size_t i = 0; i < data.u_inf.size(); ++i) check(data.u_inf[i], "u_inf[" + std::to_string(i) + "]");
    check(data.tau, "tau");
    rep.add(s.finish());
    if (!rep.checks().back().pass) fail("a generator does not preserve the equivalence");
  }

  // Infinity.
  std::vector<Index> candidates;
  if (inf) {
    if (*inf >= n) throw SchemaError("infinity index out of range");
    candidates.push_back(*inf);
  } else {
    for (Index x = 0; x < n; ++x) {
      bool fixed = true;
      for (const Perm& u : data.u_inf)
        if (u(x) != x) {
          fixed = false;
          break;
        }
      if (fixed) candidates.push_back(x);
    }
  }
  if (candidates.empty()) {
    rep.add("C1: U has a fixed point", false);
    fail("C1 fails: U has no fixed point");
  }
  std::optional<Index> chosen;
  VerifyReport first;
  for (Index c : candidates) {
    VerifyReport r = check_candidate(data, class_of, c);
    if (r.ok()) {
      chosen = c;
      first = std::move(r);
      break;
    }
    if (first.checks().empty()) first = std::move(r);
  }
  rep.merge(first);
  if (!chosen) fail("construction hypotheses fail: " + first.first_failure());

  FinMoufang m;
  m.data_ = std::move(data);
  m.class_of_ = std::move(class_of);
  m.inf_ = *chosen;
  m.zero_ = m.data_.tau(m.inf_);
  m.tau_inv_ = m.data_.tau.inverse();
  m.construction_ = std::move(rep);

  m.alpha_of_.assign(n, kNpos);
  for (Index i = 0; i < m.data_.u_inf.size(); ++i) m.alpha_of_[m.data_.u_inf[i](m.zero_)] = i;
  m.u0_of_.assign(n, kNpos);
  for (const Perm& u : m.data_.u_inf) m.u_zero_.push_back(u.conjugate(m.data_.tau));
  for (Index i = 0; i < m.u_zero_.size(); ++i) m.u0_of_[m.u_zero_[i](m.inf_)] = i;

  m.neg_.assign(n, kNpos);
  for (Index x = 0; x < n; ++x)
    if (m.alpha_of_[x] != kNpos) m.neg_[x] = m.data_.u_inf[m.alpha_of_[x]].inverse()(m.zero_);

  m.mu_.resize(n);
  for (Index x = 0; x < n; ++x) {
    if (!m.is_unit(x)) continue;
    const Index a = m.tau_inv_(m.neg(x));
    const Index b = m.neg(m.tau_inv_(x));
    m.mu_[x] = m.gamma(a) * m.alpha(x) * m.gamma(b);
  }
  return m;
}

FinMoufang FinMoufang::swapped() const {
  MoufangData d;
  d.points = data_.points;
  d.classes = data_.classes;
  d.u_inf = u_zero_;
  d.tau = tau_inv_;
  return build(std::move(d), zero_);
}

std::optional<Index> FinMoufang::find(const std::string& label) const {
  for (Index x = 0; x < size(); ++x)
    if (data_.points[x] == label) return x;
  return std::nullopt;
}

std::vector<Index> FinMoufang::units() const {
  std::vector<Index> out;
  for (Index x = 0; x < size(); ++x)
    if (is_unit(x)) out.push_back(x);
  return out;
}

std::vector<Index> FinMoufang::plus_points() const {
  std::vector<Index> out;
  for (Index x = 0; x < size(); ++x)
    if (not_inf(x)) out.push_back(x);
  return out;
}

std::vector<Index> FinMoufang::minus_points() const {
  std::vector<Index> out;
  for (Index x = 0; x < size(); ++x)
    if (not_zero(x)) out.push_back(x);
  return out;
}

const Perm& FinMoufang::alpha(Index x) const {
  if (x >= size() || alpha_of_[x] == kNpos) throw Error("alpha_x needs x not equivalent to infinity");
  return data_.u_inf[alpha_of_[x]];
}

const Perm& FinMoufang::gamma(Index x) const {
  if (x >= size() || alpha_of_[x] == kNpos) throw Error("gamma_x needs x not equivalent to infinity");
  return u_zero_[alpha_of_[x]];
}

const Perm& FinMoufang::u0_to(Index y) const {
  if (y >= size() || u0_of_[y] == kNpos) throw Error("no element of U_0 maps infinity to " + label(y));
  return u_zero_[u0_of_[y]];
}

std::vector<Perm> FinMoufang::root_group(Index x) const {
  std::vector<Perm> out;
  if (not_inf(x)) {
    const Perm& a = alpha(x);
    for (const Perm& u : u_zero_) out.push_back(u.conjugate(a));
  } else {
    const Perm& g = gamma(tau_inv_(x));
    for (const Perm& u : data_.u_inf) out.push_back(u.conjugate(g));
  }
  return out;
}

Index FinMoufang::neg(Index x) const {
  if (x >= size() || neg_[x] == kNpos) throw Error("-x needs x not equivalent to infinity");
  return neg_[x];
}

Index FinMoufang::neg_tilde(Index y) const { return u0_to(y).inverse()(inf_); }

Index FinMoufang::scalar(Index x, long long n) const {
  if (n < 0) throw Error("scalar multiple needs n >= 0");
  const Perm& a = alpha(x);
  Index p = zero_;
  for (long long i = 0; i < n; ++i) p = a(p);
  return p;
}

Index FinMoufang::scalar_tilde(Index y, long long n) const {
  if (n < 0) throw Error("scalar multiple needs n >= 0");
  const Perm& g = u0_to(y);
  Index p = inf_;
  for (long long i = 0; i < n; ++i) p = g(p);
  return p;
}

const Perm& FinMoufang::mu(Index x) const {
  if (x >= size() || !mu_[x]) throw NotUnit(label(x) + " is not a unit");
  return *mu_[x];
}

Index FinMoufang::tilde(Index x) const { return neg(mu(x)(neg(x))); }

}  // namespace locmouf
