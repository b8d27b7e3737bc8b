#pragma once

#include "stabcover/charges_fwd.hpp"
#include "stabcover/diagram.hpp"
#include "stabcover/linalg.hpp"

namespace stabcover {

// Sum v_i Z(e_i); dimension mismatch throws InvalidInput.
Gaussian evaluate(const CentralCharge& Z, const IntVector& v);

// (w . Z)(v) = Z(w^{-1} v).
CentralCharge act_weyl(const IntMatrix& w, const CentralCharge& Z);

// Rescale every coordinate by a nonzero Gaussian rational mu (the exact
// shadow of the C-action element with exp(-i pi lambda) = mu).
CentralCharge scale_charge(const CentralCharge& Z, const Gaussian& mu);

// Im Z(e_t) > 0 for every slot (the complexified fundamental chamber R).
bool in_fundamental(const Diagram& d, const CentralCharge& Z);

}  // namespace stabcover
