#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locmouf/perm.hpp"
#include "locmouf/projective_space.hpp"
#include "locmouf/report.hpp"

namespace locmouf {

/// Raw input of the M(U, tau) construction: a set with an equivalence
/// relation, the full element list of U, and tau.
struct MoufangData {
  std::vector<std::string> points;
  std::vector<std::vector<Index>> classes;
  std::vector<Perm> u_inf;
  Perm tau;
};

/// U = {alpha_v}, tau = mu_e on P(V).
MoufangData moufang_data(const ProjectiveSpace& p);

/// Thrown when the construction hypotheses fail; carries the checks.
class ConstructionFailure : public ConstructionError {
 public:
  ConstructionFailure(const std::string& what, VerifyReport report)
      : ConstructionError(what), report_(std::move(report)) {}
  const VerifyReport& report() const { return report_; }

 private:
  VerifyReport report_;
};

/// A finite instance of M(U, tau) with all derived data: alpha_x, gamma_x,
/// U_0, the root groups and the mu-maps of all units.
class FinMoufang {
 public:
  /// Validates the partition, U being a class-preserving group, C1, C1' and
  /// C2. Infinity is `inf` when given; otherwise the lowest common fixed
  /// point of U for which C1 and C2 hold.
  static FinMoufang build(MoufangData data, std::optional<Index> inf = std::nullopt);

  /// The same Moufang set with the roles of 0 and infinity exchanged:
  /// U := U_0, tau := tau^-1.
  FinMoufang swapped() const;

  const MoufangData& data() const { return data_; }
  std::size_t size() const { return data_.points.size(); }
  const std::string& label(Index x) const { return data_.points[x]; }
  std::optional<Index> find(const std::string& label) const;
  Index class_of(Index x) const { return class_of_[x]; }
  std::size_t class_count() const { return data_.classes.size(); }
  bool equivalent(Index x, Index y) const { return class_of_[x] == class_of_[y]; }

  Index inf() const { return inf_; }
  Index zero() const { return zero_; }
  const Perm& tau() const { return data_.tau; }
  const Perm& tau_inv() const { return tau_inv_; }
  const std::vector<Perm>& u_inf() const { return data_.u_inf; }
  const std::vector<Perm>& u_zero() const { return u_zero_; }

  bool not_inf(Index x) const { return !equivalent(x, inf_); }
  bool not_zero(Index x) const { return !equivalent(x, zero_); }
  bool is_unit(Index x) const { return not_inf(x) && not_zero(x); }
  std::vector<Index> units() const;
  /// Points of X minus the class of infinity, in index order.
  std::vector<Index> plus_points() const;
  /// Points of X minus the class of 0, in index order.
  std::vector<Index> minus_points() const;

  /// The element of U mapping 0 to x (x not ~ infinity).
  const Perm& alpha(Index x) const;
  /// alpha_x^tau, which maps infinity to x tau.
  const Perm& gamma(Index x) const;
  /// The element of U_0 mapping infinity to y (y not ~ 0).
  const Perm& u0_to(Index y) const;
  /// U_0^{alpha_x} for x not ~ infinity, U_inf^{gamma_(x tau^-1)} otherwise.
  std::vector<Perm> root_group(Index x) const;

  /// -x = 0 alpha_x^-1.
  Index neg(Index x) const;
  /// x + z = 0 alpha_x alpha_z.
  Index add(Index x, Index z) const { return alpha(z)(x); }
  Index sub(Index x, Index z) const { return add(x, neg(z)); }
  /// The group law on X minus the class of 0: y +~ w = infinity g_y g_w.
  Index add_tilde(Index y, Index w) const { return u0_to(w)(y); }
  Index neg_tilde(Index y) const;
  Index sub_tilde(Index y, Index w) const { return add_tilde(y, neg_tilde(w)); }
  /// x . n = 0 alpha_x^n (n >= 0).
  Index scalar(Index x, long long n) const;
  /// y .~ n = infinity g_y^n (n >= 0).
  Index scalar_tilde(Index y, long long n) const;

  /// mu_x = gamma_((-x)tau^-1) alpha_x gamma_(-(x tau^-1)) for a unit x.
  const Perm& mu(Index x) const;
  /// ~x = -((-x) mu_x).
  Index tilde(Index x) const;

  /// Construction checks recorded at build time.
  const VerifyReport& construction_report() const { return construction_; }

 private:
  FinMoufang() = default;

  MoufangData data_;
  std::vector<Index> class_of_;
  Index inf_ = 0;
  Index zero_ = 0;
  Perm tau_inv_;
  std::vector<Perm> u_zero_;
  std::vector<Index> alpha_of_;  // point -> index in u_inf
  std::vector<Index> u0_of_;     // point -> index in u_zero of the element mapping inf there
  std::vector<Index> neg_;
  std::vector<std::optional<Perm>> mu_;
  VerifyReport construction_;
};

}  // namespace locmouf
