#pragma once

#include "locmouf/jordan_pair.hpp"
#include "locmouf/moufang.hpp"
#include "locmouf/report.hpp"

namespace locmouf {

/// V -> M(V) -> W and back: checks that V is local with V+ uniquely 2- and
/// 3-divisible, extracts W from M(V) with unit [e,0], and verifies that
/// h+ : [x,0] -> x and h- : [e,e^-1+y] -> y are additive bijections
/// compatible with the quadratic maps, including the explicit mu-map
/// expressions for units and non-units. When the divisibility precondition
/// fails, M(V) is still built and the J1-J4 report explains why extraction
/// is impossible.
VerifyReport verify_roundtrip_pair(const JordanPair& v, Elem e);

/// M -> W -> M(W): checks condition (*) over all t ~ inf and x !~ inf, then
/// that phi : X -> P(W) and theta : alpha_x -> alpha_[x,0] intertwine U and
/// tau = mu_e with U' and mu_[e,0]. A failing (*) is reported as
/// informational and the isomorphism checks are then skipped.
VerifyReport verify_star_and_iso(const FinMoufang& m, Index e);

}  // namespace locmouf
