#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabcover/diagram.hpp"

namespace stabcover {

// One generator letter: a 0-based slot index plus an exponent sign.
struct Letter {
  std::size_t slot;
  int sign;  // +1 or -1

  bool operator==(const Letter& o) const { return slot == o.slot && sign == o.sign; }
};

// A word in the braid generators. The FIRST letter is the OUTERMOST functor:
// {a, b} stands for the composition (sigma_a o sigma_b).
using BraidWord = std::vector<Letter>;

BraidWord inverse_word(const BraidWord& w);

// The simple reflection matrix s_t acting on column class vectors.
IntMatrix simple_reflection(const Diagram& d, std::size_t slot);

// Product of the simple reflections in word order (signs are irrelevant at
// the matrix level since each s_t is an involution). Empty word -> identity.
IntMatrix word_to_matrix(const Diagram& d, const BraidWord& w);

// The shift [m] acts on K by (-1)^m.
std::int64_t shift_scalar(std::int64_t m);

// Order of the product s_1 ... s_n of a finite diagram (its Coxeter number).
int coxeter_number(const Diagram& d);

enum class RelationKind { Involution, Commutation, Braid, InfiniteOrder };

struct RelationCheck {
  RelationKind kind;
  std::size_t i;
  std::size_t j;  // == i for involution checks
  bool ok;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_ok;
};

// Matrix-level verification: s_t^2 = id for every slot, the braid relation
// for single-edge pairs, commutation for non-adjacent pairs, and for the
// affine A_1 double edge the check that no power (s_0 s_1)^k with k <= 100
// is the identity.
RelationReport verify_relations(const Diagram& d);

}  // namespace stabcover
