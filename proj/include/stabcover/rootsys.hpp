#pragma once

#include <optional>
#include <set>
#include <vector>

#include "stabcover/charges_fwd.hpp"
#include "stabcover/diagram.hpp"

namespace stabcover {

using ClassVector = IntVector;

// v - chi(s, v) s, the reflection in a spherical class (chi(s,s) = 2).
ClassVector reflect(const Diagram& d, const ClassVector& s, const ClassVector& v);

bool is_real_root(const Diagram& d, const ClassVector& v);

// Decomposition of an affine class as finite part plus a multiple of delta.
struct AffineRootView {
  ClassVector finite_part;  // entry at the special vertex is 0
  std::int64_t delta_coeff;
};

AffineRootView affine_view(const Diagram& d, const ClassVector& v);

bool is_imaginary_root(const Diagram& d, const ClassVector& v);

// All real roots of a finite diagram: closure of {+-e_i} under the simple
// reflections. Throws InvalidInput for affine input (infinite set).
std::vector<ClassVector> enumerate_roots(const Diagram& d);

// Positive roots only (those with positive sign-coherent entries).
std::vector<ClassVector> positive_roots(const Diagram& d);

struct RegularityReport {
  bool regular;
  std::optional<ClassVector> witness;  // a vanishing root when not regular
};

// Finite: Z(alpha) != 0 for every root. Affine: Z(delta) != 0 and
// Z(alpha)/Z(delta) is not an integer for any finite-type positive root
// alpha; a vanishing real or imaginary root is reported as witness.
RegularityReport is_regular(const Diagram& d, const CentralCharge& Z);

}  // namespace stabcover
