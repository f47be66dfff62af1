#pragma once

#include <string>
#include <utility>
#include <vector>

#include "locmouf/jordan_pair.hpp"
#include "locmouf/perm.hpp"
#include "locmouf/report.hpp"

namespace locmouf {

enum class PointForm : std::uint8_t { affine, rad_offset };

/// Affine(x) is [x,0] for x in V^+; RadOffset(y) is [e, e^-1 + y] for y in
/// Rad V^-. Every point of P(V) has exactly one such canonical form.
struct ProjPoint {
  PointForm form = PointForm::affine;
  Elem value = 0;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// The point set P(V) of a local Jordan pair with a chosen invertible
/// e in V^+. Points are enumerated as all Affine(x) in module order, then all
/// RadOffset(y) for y in Rad V^- in module order.
class ProjectiveSpace {
 public:
  /// Throws NotInvertible when e is not invertible.
  ProjectiveSpace(JordanPair v, Elem e);

  const JordanPair& pair() const { return v_; }
  const PairStructure& structure() const { return ps_; }
  Elem e() const { return e_; }
  Elem e_inverse() const { return e_inv_; }

  std::size_t size() const { return points_.size(); }
  const std::vector<ProjPoint>& points() const { return points_; }
  ProjPoint point(Index i) const { return points_[i]; }
  /// Throws Error when a RadOffset value is not radical.
  Index index_of(ProjPoint p) const;
  Index affine(Elem x) const { return x; }
  Index rad_offset(Elem y) const { return index_of({PointForm::rad_offset, y}); }
  /// [0,0].
  Index zero() const { return affine(v_.module(Side::plus).zero()); }
  /// [e, e^-1], the common fixed point of all alpha_v.
  Index infinity() const { return rad_offset(v_.module(Side::minus).zero()); }

  /// "A:<elem>" or "R:<elem>".
  std::string label(Index i) const;
  std::vector<std::string> labels() const;

  /// The point [e, e^-1 + s] for arbitrary s in V^-.
  Index from_offset(Elem s) const;
  /// The point [x, y]. Throws AssertionFailure if the pair is not local.
  Index canonicalize(Elem x, Elem y) const;
  /// A raw representative (x, y) of a point.
  std::pair<Elem, Elem> expand(Index i) const;

  bool rad_equivalent(Index a, Index b) const { return class_of_[a] == class_of_[b]; }
  /// Class id per point; classes are numbered by their first member.
  const std::vector<Index>& class_of() const { return class_of_; }
  std::size_t class_count() const { return class_count_; }
  std::vector<std::vector<Index>> classes() const;

  Perm alpha(Elem v) const;
  Perm zeta(Elem w) const;
  /// mu_v from the closed forms; asserts agreement with the composite
  /// zeta_{v^-1} alpha_v zeta_{v^-1} and that mu_v is an involution.
  Perm mu(Elem v) const;
  Perm mu_closed(Elem v) const;
  Perm mu_composite(Elem v) const;

 private:
  JordanPair v_;
  PairStructure ps_;
  Elem e_;
  Elem e_inv_;
  std::vector<ProjPoint> points_;
  std::vector<Index> rad_index_;  // V^- element -> point index, or npos
  std::vector<Index> class_of_;
  std::size_t class_count_ = 0;
};

/// (x, y) ~ (x', y'): (x, y - y') is quasi-invertible and x' = x^(y - y'),
/// evaluated directly from the definition.
bool proj_equivalent(const JordanPair& v, Elem x, Elem y, Elem x2, Elem y2);

/// Point count, canonical forms, morphism and equivalence-preservation
/// properties of alpha, zeta and mu.
VerifyReport verify_projective_space(const ProjectiveSpace& p);

/// Every closed and consolidated form of the mu-action against the
/// composite, and mu_v^2 = 1, for every invertible v.
VerifyReport verify_mu_actions(const ProjectiveSpace& p);

/// alpha_v^{mu_t} = zeta_{vQ_t^-1} for all invertible t and all v.
VerifyReport verify_dictionary(const ProjectiveSpace& p);

}  // namespace locmouf
