#include "stabcover/charges.hpp"

#include "stabcover/errors.hpp"

namespace stabcover {

Gaussian evaluate(const CentralCharge& Z, const IntVector& v) {
  if (Z.size() != v.size()) throw InvalidInput("charge/class dimension mismatch");
  Gaussian acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    acc = acc + Z[i] * Rational(static_cast<long>(v[i]));
  }
  return acc;
}

CentralCharge act_weyl(const IntMatrix& w, const CentralCharge& Z) {
  if (w.size() != Z.size()) throw InvalidInput("charge/matrix dimension mismatch");
  IntMatrix inv = w.inverse();
  CentralCharge out(Z.size());
  for (std::size_t i = 0; i < Z.size(); ++i) {
    // Z'(e_i) = Z(w^{-1} e_i); column i of the inverse.
    Gaussian acc;
    for (std::size_t j = 0; j < Z.size(); ++j) {
      std::int64_t c = inv.at(j, i);
      if (c == 0) continue;
      acc = acc + Z[j] * Rational(static_cast<long>(c));
    }
    out[i] = acc;
  }
  return out;
}

CentralCharge scale_charge(const CentralCharge& Z, const Gaussian& mu) {
  if (mu.is_zero()) throw InvalidInput("scalar action by zero");
  CentralCharge out(Z.size());
  for (std::size_t i = 0; i < Z.size(); ++i) out[i] = Z[i] * mu;
  return out;
}

bool in_fundamental(const Diagram& d, const CentralCharge& Z) {
  if (Z.size() != d.size()) throw InvalidInput("charge dimension mismatch");
  for (const auto& z : Z)
    if (!(z.im > 0)) return false;
  return true;
}

}  // namespace stabcover
