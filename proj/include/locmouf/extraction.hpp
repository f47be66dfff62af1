#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "locmouf/abelian_group.hpp"
#include "locmouf/jordan_pair.hpp"
#include "locmouf/moufang.hpp"
#include "locmouf/report.hpp"

namespace locmouf {

/// The first unit in enumeration order.
Index first_unit(const FinMoufang& m);

/// The pair (V+, V-) of a local Moufang set: V+ = X minus the class of
/// infinity with x + z = 0 alpha_x alpha_z, V- = X minus the class of 0 with
/// y +~ w = inf g_y g_w. Elements of each side are numbered by increasing
/// point index. The bilinear maps mu_(x,z) and mu~_(y,w) are tabulated from
/// mu-maps of units through the cascade
///   mu_(x+z) - mu_x - mu_z   x, z, x+z units
///   -mu_(-x,z)               x, z units, x+z not
///   mu_(x,x+z) - mu_(x,x)    x unit, z not
///   mu_(z,x)                 z unit, x not
///   mu_(x+e,z) - mu_(e,z)    neither
/// with the same fixed unit e on both sides.
class ExtractedPair {
 public:
  /// Throws HypothesisFailed unless the Moufang set is special, has abelian
  /// U_inf and keeps units under . 2 and . 3. The cascade itself never
  /// throws; its problems show up in j4_report().
  static ExtractedPair build(const FinMoufang& m, Index e);

  const FinMoufang& moufang() const { return m_; }
  Index e() const { return e_; }
  const AbelianGroup& group(Side s) const { return groups_[idx(s)]; }
  std::size_t size(Side s) const { return points_[idx(s)].size(); }
  Index point(Side s, Elem a) const { return points_[idx(s)][a]; }
  /// Throws Error when the point is not on side s.
  Elem elem(Side s, Index p) const;
  bool on_side(Side s, Index p) const;
  bool is_unit(Side s, Elem a) const { return m_.is_unit(point(s, a)); }

  /// a mu_t for a unit point t and a in V^-s; the result lies in V^s.
  Elem mu(Side s, Index t, Elem a) const { return elem(s, m_.mu(t)(point(-s, a))); }
  /// y mu_(x,z) (s = plus) or x mu~_(y,w) (s = minus): x, z in V^s and
  /// y in V^-s, result in V^s. Throws Error where the cascade failed.
  Elem bilinear(Side s, Elem x, Elem z, Elem y) const;
  /// yQ_x = y mu_(x,x) . 1/2, resp. the tilde version.
  Elem q(Side s, Elem x, Elem y) const;
  bool q_defined() const { return q_ok_; }

  /// J4: cascade termination, symmetry, bi-additivity, additivity in the
  /// argument and cascade-branch agreement, on both sides.
  const VerifyReport& j4_report() const { return j4_; }

  /// The Jordan pair (V+, V-) with the halved Q. Throws InvalidPair.
  JordanPair jordan_pair() const;

 private:
  ExtractedPair(const FinMoufang& m, Index e) : m_(m), e_(e) {}
  void tabulate(Side s);
  const std::vector<Elem>& cascade(Side s, Elem x, Elem z);
  void check_j4(Side s);
  void halve();

  FinMoufang m_;
  Index e_;
  std::vector<AbelianGroup> groups_;
  std::array<std::vector<Index>, 2> points_;
  std::array<std::vector<Elem>, 2> elem_of_;  // point -> elem or npos
  // [s][x * n_s + z] -> map V^-s -> V^s
  std::array<std::vector<std::vector<Elem>>, 2> bil_;
  std::array<std::vector<std::uint8_t>, 2> state_;
  std::array<std::vector<Elem>, 2> q_;
  bool q_ok_ = false;
  VerifyReport j4_;
};

/// J1 special, J2 abelian, J3 units stay units under . 2 and . 3, and J4
/// evaluated constructively from the cascade with unit e (default: first unit).
VerifyReport check_preconditions(const FinMoufang& m, std::optional<Index> e = std::nullopt);

struct Extraction {
  std::optional<ExtractedPair> pair;
  std::optional<JordanPair> w;
  VerifyReport report;
};

/// check_preconditions, the group laws of V+/-, unique halving, then the
/// Jordan pair axioms and locality of the result, and Rad = (0bar, infbar).
/// Never throws on failure; the report says what went wrong.
Extraction extract(const FinMoufang& m, std::optional<Index> e = std::nullopt);

/// The identities relating mu-maps and the extracted bilinear maps. `deep`
/// adds the e-anchored identity chain leading to JP2 for units.
VerifyReport verify_extraction_identities(const ExtractedPair& p, bool deep = false);

}  // namespace locmouf
