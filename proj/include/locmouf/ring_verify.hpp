#pragma once

#include "locmouf/report.hpp"
#include "locmouf/ring.hpp"

namespace locmouf {

/// Commutative ring axioms, the non-units forming an ideal of index p, and
/// inversion being an involution. Triple sweeps are exhaustive up to
/// kExhaustiveLimit elements; above that the third variable runs over the
/// generators 1 and t (resp. 1 and p) only.
VerifyReport verify_ring(const Ring& r);

inline constexpr std::size_t kExhaustiveLimit = 729;

}  // namespace locmouf
