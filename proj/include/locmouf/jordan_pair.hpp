#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "locmouf/abelian_group.hpp"
#include "locmouf/error.hpp"
#include "locmouf/report.hpp"
#include "locmouf/ring.hpp"

namespace locmouf {

enum class Side : std::uint8_t { plus = 0, minus = 1 };

constexpr Side operator-(Side s) { return s == Side::plus ? Side::minus : Side::plus; }
constexpr std::size_t idx(Side s) { return static_cast<std::size_t>(s); }
inline const char* side_name(Side s) { return s == Side::plus ? "+" : "-"; }

/// An element of V^+ or V^-.
struct JElem {
  Side side = Side::plus;
  Elem value = 0;
  friend bool operator==(const JElem&, const JElem&) = default;
};

/// A quadratic Jordan pair (V^+, V^-) over finite abelian groups. The
/// operator family is tabulated once: q(s, x, y) = yQ_x for x in V^s and
/// y in V^-s, with the result in V^s. All actions are on the right.
class JordanPair {
 public:
  /// Evaluates yQ_x for x on side s and y on the opposite side.
  using QFunction = std::function<Elem(Side s, Elem x, Elem y)>;

  /// Tabulates `q` and validates additivity and quadraticity eagerly;
  /// throws InvalidPair (carrying the failed checks) on violation.
  static JordanPair create(std::string name, AbelianGroup plus, AbelianGroup minus, const QFunction& q);
  /// Tabulates without validation. Used for negative controls.
  static JordanPair unchecked(std::string name, AbelianGroup plus, AbelianGroup minus, const QFunction& q);

  const std::string& name() const { return name_; }
  const AbelianGroup& module(Side s) const { return modules_[idx(s)]; }
  std::size_t size(Side s) const { return modules_[idx(s)].size(); }
  const std::string& label(Side s, Elem a) const { return module(s).label(a); }

  /// yQ_x.
  Elem q(Side s, Elem x, Elem y) const { return q_[idx(s)][static_cast<std::size_t>(x) * size(-s) + y]; }
  /// yQ_{x,z} = yQ_{x+z} - yQ_x - yQ_z.
  Elem q2(Side s, Elem x, Elem z, Elem y) const {
    const auto& m = module(s);
    return m.sub(m.sub(q(s, m.add(x, z), y), q(s, x, y)), q(s, z, y));
  }
  /// {x y z} = yQ_{x,z} = zD_{x,y}.
  Elem triple(Side s, Elem x, Elem y, Elem z) const { return q2(s, x, z, y); }
  /// zB_{x,y} = z - zD_{x,y} + zQ_yQ_x, for x, z in V^s and y in V^-s.
  Elem bergman(Side s, Elem x, Elem y, Elem z) const {
    const auto& m = module(s);
    return m.add(m.sub(z, triple(s, x, y, z)), q(s, x, q(-s, y, z)));
  }

 private:
  JordanPair(std::string name, AbelianGroup plus, AbelianGroup minus, const QFunction& q);

  std::string name_;
  std::array<AbelianGroup, 2> modules_;
  std::array<std::vector<Elem>, 2> q_;
};

class InvalidPair : public Error {
 public:
  InvalidPair(const std::string& what, VerifyReport report) : Error(what), report_(std::move(report)) {}
  const VerifyReport& report() const { return report_; }

 private:
  VerifyReport report_;
};

/// (R, R) with yQ_x = x y x.
JordanPair make_pair_from_ring(const Ring& ring);

/// Additivity of every Q_x, Q_{2x} = 4Q_x, Q_{3x} = 9Q_x and bi-additivity
/// of Q_{x,z}, on both sides.
VerifyReport structure_checks(const JordanPair& v);

// Element-level operations with side checking; they throw SideMismatch.
JElem q_apply(const JordanPair& v, JElem x, JElem y);
JElem q_bilinear(const JordanPair& v, JElem x, JElem z, JElem y);
JElem triple_product(const JordanPair& v, JElem x, JElem y, JElem z);
JElem bergman_apply(const JordanPair& v, JElem x, JElem y, JElem z);

/// Q_v : V^-s -> V^s is a bijection.
bool is_invertible(const JordanPair& v, Side s, Elem x);
bool is_invertible(const JordanPair& v, JElem x);
/// v^{-1} = vQ_v^{-1}; throws NotInvertible.
Elem jp_inverse(const JordanPair& v, Side s, Elem x);
JElem jp_inverse(const JordanPair& v, JElem x);
/// w with wQ_x = target (i.e. target Q_x^{-1}); x must be invertible.
Elem q_inverse_apply(const JordanPair& v, Side s, Elem x, Elem target);

/// B_{x,y} is a bijection of V^s.
bool is_quasi_invertible(const JordanPair& v, Side s, Elem x, Elem y);
bool is_quasi_invertible(const JordanPair& v, JElem x, JElem y);
/// x^y = (x - yQ_x)B_{x,y}^{-1}; throws NotQuasiInvertible.
Elem quasi_inverse(const JordanPair& v, Side s, Elem x, Elem y);
JElem quasi_inverse(const JordanPair& v, JElem x, JElem y);

struct Radical {
  std::array<std::vector<bool>, 2> member;
  bool contains(Side s, Elem x) const { return member[idx(s)][x]; }
  std::vector<Elem> elements(Side s) const;
  std::size_t count(Side s) const;
};

/// Properly quasi-invertible elements of each side (exhaustive).
Radical radical(const JordanPair& v);

/// Invertibility, inverses and radical membership, computed once.
struct PairStructure {
  std::array<std::vector<bool>, 2> invertible;
  std::array<std::vector<Elem>, 2> inverse;  // meaningful where invertible
  Radical rad;

  static PairStructure analyze(const JordanPair& v);
};

/// Full quasi-inverse table: at(s, x, y) is x^y, or kNone.
class QuasiInverseTable {
 public:
  static constexpr Elem kNone = static_cast<Elem>(-1);
  explicit QuasiInverseTable(const JordanPair& v);
  Elem at(Side s, Elem x, Elem y) const { return t_[idx(s)][static_cast<std::size_t>(x) * n_[idx(-s)] + y]; }

 private:
  std::array<std::size_t, 2> n_;
  std::array<std::vector<Elem>, 2> t_;
};

/// Locality: non-invertibles = radical per side, the radical is an ideal,
/// and it is proper.
VerifyReport verify_local(const JordanPair& v);

/// JP1, JP2, JP3, the fully linearized JP1/JP2 identities and no 2-torsion,
/// on both orientations. A failed structure precheck stops the sweep.
VerifyReport verify_jordan_axioms(const JordanPair& v);

/// JP4, the Bergman factorization for invertible x, the shift, switch and
/// Q-transfer rules for quasi-inverses, radical absorption and the
/// inverse-radical rule.
VerifyReport verify_quasi_inverse_identities(const JordanPair& v);

}  // namespace locmouf
