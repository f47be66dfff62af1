#pragma once

#include "locmouf/moufang.hpp"
#include "locmouf/report.hpp"

namespace locmouf {

/// Exhaustive sweeps of the identities of a local Moufang set over all
/// units (and all unit mu-maps where an identity quantifies over them):
/// the general mu-map laws, the special laws, the abelian laws, scaling
/// and division. Families whose hypotheses fail are reported as not
/// evaluated, with required = false.
VerifyReport verify_moufang_identities(const FinMoufang& m);

/// Unique k-th parts on either side, tabulated once. Throws NotUnique or
/// NoSolution when x -> x . k is not a bijection of the side.
class ScalarTables {
 public:
  ScalarTables(const FinMoufang& m, int max_k);
  /// x . k (plain) or x .~ k (tilde) for 1 <= k <= max_k^2.
  Index times(Index x, int k, bool tilde) const;
  /// The unique y with y . k = x (resp. .~).
  Index part(Index x, int k, bool tilde) const;
  /// x . (num / den).
  Index scale(Index x, int num, int den, bool tilde) const { return part(times(x, num, tilde), den, tilde); }

 private:
  const FinMoufang* m_;
  int max_k_;
  // [tilde][k][x]
  std::vector<std::vector<std::vector<Index>>> mult_, div_;
};

}  // namespace locmouf
