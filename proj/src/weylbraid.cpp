#include "stabcover/weylbraid.hpp"

#include <algorithm>

#include "stabcover/errors.hpp"

namespace stabcover {

BraidWord inverse_word(const BraidWord& w) {
  BraidWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->slot, -it->sign});
  return out;
}

IntMatrix simple_reflection(const Diagram& d, std::size_t slot) {
  const std::size_t n = d.size();
  if (slot >= n) throw InvalidInput("slot index out of range");
  IntMatrix m = IntMatrix::identity(n);
  // e_t |-> e_t - chi(e_slot, e_t) e_slot: subtract the Euler row.
  for (std::size_t j = 0; j < n; ++j) m.at(slot, j) -= d.euler_matrix().at(slot, j);
  return m;
}

IntMatrix word_to_matrix(const Diagram& d, const BraidWord& w) {
  IntMatrix m = IntMatrix::identity(d.size());
  for (const auto& letter : w) m = m * simple_reflection(d, letter.slot);
  return m;
}

std::int64_t shift_scalar(std::int64_t m) { return (m % 2 == 0) ? 1 : -1; }

int coxeter_number(const Diagram& d) {
  if (d.affine()) throw InvalidInput("Coxeter number of an affine diagram");
  IntMatrix cox = IntMatrix::identity(d.size());
  for (std::size_t t = 0; t < d.size(); ++t) cox = cox * simple_reflection(d, t);
  IntMatrix power = cox;
  const IntMatrix id = IntMatrix::identity(d.size());
  for (int k = 1; k <= 1000; ++k) {
    if (power == id) return k;
    power = power * cox;
  }
  throw InvariantViolation("Coxeter element order not found within bound");
}

RelationReport verify_relations(const Diagram& d) {
  const std::size_t n = d.size();
  RelationReport report;
  report.all_ok = true;
  const IntMatrix id = IntMatrix::identity(n);

  auto record = [&](RelationKind kind, std::size_t i, std::size_t j, bool ok) {
    report.checks.push_back({kind, i, j, ok});
    report.all_ok = report.all_ok && ok;
  };

  std::vector<IntMatrix> s;
  s.reserve(n);
  for (std::size_t t = 0; t < n; ++t) s.push_back(simple_reflection(d, t));

  for (std::size_t i = 0; i < n; ++i) record(RelationKind::Involution, i, i, s[i] * s[i] == id);

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int mult = d.multiplicity(i, j);
      if (mult == 0) {
        record(RelationKind::Commutation, i, j, s[i] * s[j] == s[j] * s[i]);
      } else if (mult == 1) {
        record(RelationKind::Braid, i, j, s[i] * s[j] * s[i] == s[j] * s[i] * s[j]);
      } else {
        // Affine A_1 double edge: s_i s_j is a translation, so no power up
        // to the bound may give the identity.
        IntMatrix prod = s[i] * s[j];
        IntMatrix power = prod;
        bool ok = true;
        for (int k = 1; k <= 100; ++k) {
          if (power == id) {
            ok = false;
            break;
          }
          power = power * prod;
        }
        record(RelationKind::InfiniteOrder, i, j, ok);
      }
    }
  return report;
}

}  // namespace stabcover
