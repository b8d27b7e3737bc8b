#include "stabcover/rootsys.hpp"

#include <algorithm>
#include <set>

#include "stabcover/charges.hpp"
#include "stabcover/errors.hpp"

namespace stabcover {

ClassVector reflect(const Diagram& d, const ClassVector& s, const ClassVector& v) {
  if (d.euler_form(s, s) != 2) throw InvalidInput("reflection requires chi(s,s) = 2");
  return sub(v, scale(s, d.euler_form(s, v)));
}

bool is_real_root(const Diagram& d, const ClassVector& v) {
  return d.euler_form(v, v) == 2;
}

AffineRootView affine_view(const Diagram& d, const ClassVector& v) {
  if (!d.affine()) throw InvalidInput("affine decomposition of a finite class");
  if (v.size() != d.size()) throw InvalidInput("class vector dimension mismatch");
  // delta has entry 1 at the special vertex, so the coefficient is v[0].
  std::int64_t coeff = v[0];
  AffineRootView view{sub(v, scale(d.delta(), coeff)), coeff};
  return view;
}

bool is_imaginary_root(const Diagram& d, const ClassVector& v) {
  if (!d.affine()) return false;
  auto view = affine_view(d, v);
  return view.delta_coeff != 0 && is_zero(view.finite_part);
}

std::vector<ClassVector> enumerate_roots(const Diagram& d) {
  if (d.affine())
    throw InvalidInput("affine root systems are infinite; use the affine predicates");
  const std::size_t n = d.size();
  std::set<ClassVector> roots;
  std::vector<ClassVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    ClassVector e(n, 0), f(n, 0);
    e[i] = 1;
    f[i] = -1;
    roots.insert(e);
    roots.insert(f);
    frontier.push_back(e);
    frontier.push_back(f);
  }
  while (!frontier.empty()) {
    std::vector<ClassVector> next;
    for (const auto& v : frontier)
      for (std::size_t i = 0; i < n; ++i) {
        ClassVector e(n, 0);
        e[i] = 1;
        ClassVector w = reflect(d, e, v);
        if (roots.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return {roots.begin(), roots.end()};
}

std::vector<ClassVector> positive_roots(const Diagram& d) {
  std::vector<ClassVector> out;
  for (auto& r : enumerate_roots(d))
    if (root_sign(r) > 0) out.push_back(std::move(r));
  return out;
}

namespace {

// Embed a root of the deleted-vertex finite diagram into the affine lattice
// (coordinate 0 stays zero).
ClassVector embed_finite(const ClassVector& v) {
  ClassVector out(v.size() + 1, 0);
  std::copy(v.begin(), v.end(), out.begin() + 1);
  return out;
}

}  // namespace

RegularityReport is_regular(const Diagram& d, const CentralCharge& Z) {
  if (Z.size() != d.size()) throw InvalidInput("charge dimension mismatch");
  if (!d.affine()) {
    for (const auto& alpha : positive_roots(d)) {
      if (evaluate(Z, alpha).is_zero()) return {false, alpha};
    }
    return {true, std::nullopt};
  }

  Gaussian z_delta = evaluate(Z, d.delta());
  if (z_delta.is_zero()) return {false, d.delta()};

  // Z(alpha + d*delta) = 0 for some integer d iff Z(alpha)/Z(delta) is an
  // integer; this decides regularity against the full (infinite) set of
  // real roots with one exact division per finite positive root.
  for (const auto& alpha_fin : positive_roots(d.finite_part())) {
    ClassVector alpha = embed_finite(alpha_fin);
    Gaussian q = evaluate(Z, alpha) / z_delta;
    if (q.is_real() && is_integer(q.re)) {
      std::int64_t k = static_cast<std::int64_t>(q.re.get_num().get_si());
      ClassVector witness = sub(alpha, scale(d.delta(), k));
      return {false, witness};
    }
  }
  return {true, std::nullopt};
}

}  // namespace stabcover
