#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabcover/diagram.hpp"
#include "stabcover/rational.hpp"

namespace stabcover {

// A dimension-(1,...,1) representation of the doubled cycle quiver on the
// affine A_n vertices: forward scalar x_t on the arrow t -> t+1 (mod r),
// backward scalar y_t on t+1 -> t. The preprojective relation at a vertex
// reads x_{t-1} y_{t-1} - x_t y_t = 0; the nilpotent representations used
// here have every loop scalar equal to zero.
struct CycleRep {
  std::vector<Rational> x;
  std::vector<Rational> y;

  std::size_t size() const { return x.size(); }
};

// Invariant check: preprojective relation, x_t y_t = 0 for all t, and both
// long cycles vanish. Throws InvalidInput on failure.
void validate_rep(const CycleRep& rep);

// King weight: rational vector with theta . (1,...,1) = 0.
struct Weight {
  std::vector<Rational> theta;
};

struct SemistabilityReport {
  bool semistable;
  // A proper nonzero arrow-closed vertex subset with positive weight, when
  // not semistable.
  std::optional<std::vector<std::size_t>> certificate;
};

// King semistability for dimension vector delta: every proper nonzero
// subrepresentation support (subset closed under all nonzero arrows out of
// it) must have theta-sum <= 0. Checked by enumeration over all proper
// subsets (r <= 9 here).
SemistabilityReport is_semistable(const CycleRep& rep, const Weight& theta);

// A nilpotent representation of class delta that is semistable for the
// given weight: all y = 0 and x = 1 except one cut arrow, placed after a
// position minimizing the cyclic prefix sums of theta.
CycleRep find_semistable(const Diagram& d, const Weight& theta);

}  // namespace stabcover
