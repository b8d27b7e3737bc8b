#include "stabcover/constellations.hpp"

#include <algorithm>

#include "stabcover/errors.hpp"

namespace stabcover {

void validate_rep(const CycleRep& rep) {
  const std::size_t r = rep.size();
  if (r < 2 || rep.y.size() != r) throw InvalidInput("malformed cycle representation");
  auto prev = [&](std::size_t v) { return (v + r - 1) % r; };
  for (std::size_t v = 0; v < r; ++v) {
    // Preprojective relation at v: incoming loop minus outgoing loop.
    if (rep.x[prev(v)] * rep.y[prev(v)] - rep.x[v] * rep.y[v] != 0)
      throw InvalidInput("preprojective relation fails at a vertex");
    if (rep.x[v] * rep.y[v] != 0) throw InvalidInput("vertex loop scalar is nonzero");
  }
  Rational fwd = 1, bwd = 1;
  for (std::size_t v = 0; v < r; ++v) {
    fwd *= rep.x[v];
    bwd *= rep.y[v];
  }
  if (fwd != 0 || bwd != 0) throw InvalidInput("long cycle acts invertibly (not nilpotent)");
}

namespace {

// Closed under every nonzero arrow leaving the subset.
bool arrow_closed(const CycleRep& rep, const std::vector<bool>& in) {
  const std::size_t r = rep.size();
  for (std::size_t v = 0; v < r; ++v) {
    if (!in[v]) continue;
    std::size_t fwd = (v + 1) % r;
    std::size_t bwd = (v + r - 1) % r;
    if (rep.x[v] != 0 && !in[fwd]) return false;
    if (rep.y[bwd] != 0 && !in[bwd]) return false;
  }
  return true;
}

}  // namespace

SemistabilityReport is_semistable(const CycleRep& rep, const Weight& theta) {
  validate_rep(rep);
  const std::size_t r = rep.size();
  if (theta.theta.size() != r) throw InvalidInput("weight dimension mismatch");
  Rational total = 0;
  for (const auto& t : theta.theta) total += t;
  if (total != 0) throw InvalidInput("weight does not pair to zero with delta");

  for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << r); ++mask) {
    std::vector<bool> in(r);
    for (std::size_t v = 0; v < r; ++v) in[v] = (mask >> v) & 1;
    if (!arrow_closed(rep, in)) continue;
    Rational sum = 0;
    for (std::size_t v = 0; v < r; ++v)
      if (in[v]) sum += theta.theta[v];
    if (sum > 0) {
      std::vector<std::size_t> cert;
      for (std::size_t v = 0; v < r; ++v)
        if (in[v]) cert.push_back(v);
      return {false, cert};
    }
  }
  return {true, std::nullopt};
}

CycleRep find_semistable(const Diagram& d, const Weight& theta) {
  if (!d.affine() || d.family() != Family::A)
    throw InvalidInput("constellation search is defined for affine type A only");
  const std::size_t r = d.size();
  if (theta.theta.size() != r) throw InvalidInput("weight dimension mismatch");
  Rational total = 0;
  for (const auto& t : theta.theta) total += t;
  if (total != 0) throw InvalidInput("weight does not pair to zero with delta");

  // Cycle-lemma cut: start the walk right after a minimizing prefix, so
  // every cyclic suffix ending at the cut has nonpositive weight.
  Rational prefix = 0, best = 0;
  std::size_t start = 0;
  for (std::size_t v = 0; v < r; ++v) {
    prefix += theta.theta[v];
    if (prefix < best) {
      best = prefix;
      start = v + 1;
    }
  }
  start %= r;
  std::size_t cut = (start + r - 1) % r;  // arrow cut -> start is removed

  CycleRep rep;
  rep.x.assign(r, Rational(1));
  rep.y.assign(r, Rational(0));
  rep.x[cut] = 0;

  auto check = is_semistable(rep, theta);
  if (!check.semistable)
    throw InvariantViolation("cycle-lemma cut produced an unstable representation");
  return rep;
}

}  // namespace stabcover
