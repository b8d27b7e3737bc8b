#pragma once

#include <vector>

#include "stabcover/rational.hpp"

namespace stabcover {

// Values of Z on the simple classes, one Gaussian rational per slot.
using CentralCharge = std::vector<Gaussian>;

}  // namespace stabcover
