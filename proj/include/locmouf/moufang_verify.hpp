#pragma once

#include <cstddef>
#include <vector>

#include "locmouf/jordan_pair.hpp"
#include "locmouf/moufang.hpp"
#include "locmouf/report.hpp"

namespace locmouf {

/// The three equivalent criteria of the construction theorem, plus LM1,
/// LM2, LM2' and LM3. LM3 is checked under conjugation by U_inf and U_0,
/// which generate G; `full_lm3` conjugates by every element of G instead.
VerifyReport verify_moufang(const FinMoufang& m, bool full_lm3 = false);

/// x is a unit, computed as x !~ 0, x !~ inf and cross-checked against
/// "the induced alpha_x fixes no class besides that of infinity".
bool is_unit_point(const FinMoufang& m, Index x);

/// g alpha_x h with g in U_0 mapping inf to -x and h in U_0 mapping x to
/// inf. Asserts that it swaps 0 and inf and equals FinMoufang::mu(x).
Perm mu_map(const FinMoufang& m, Index x);

struct GroupSummary {
  std::size_t order = 0;
  VerifyReport report;
};

/// Closure of U_inf and U_0 under composition; throws CapExceeded once more
/// than `cap` elements are found. Also checks that G is transitive on pairs
/// of non-equivalent points.
GroupSummary little_projective_group(const FinMoufang& m, std::size_t cap);
/// All elements of G, in discovery order.
std::vector<Perm> group_elements(const FinMoufang& m, std::size_t cap);

/// (-x)tau = -(x tau) for all units.
Check check_special(const FinMoufang& m);
/// U_inf is commutative.
Check check_abelian(const FinMoufang& m);

/// Side::plus works on X minus the class of infinity with x . n; Side::minus
/// on X minus the class of 0 with the tilde operations.
/// For all units u and 2 <= k <= n, u . k is a unit. Returns the failing
/// check otherwise.
Check divisibility_hypothesis(const FinMoufang& m, int n, Side side = Side::plus);
/// The unique y with y . n = x. Throws HypothesisFailed, NoSolution or
/// NotUnique. For a unit x on the plain side, asserts agreement with
/// (-x . n) mu_(-x).
Index divide(const FinMoufang& m, Index x, int n, Side side = Side::plus);

}  // namespace locmouf
