#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stabcover/charges.hpp"
#include "stabcover/diagram.hpp"
#include "stabcover/rootsys.hpp"
#include "stabcover/weylbraid.hpp"

namespace stabcover {

enum class Direction { Ascending, Descending };

std::string direction_name(Direction dir);

// A point of the modeled covering-space component: a regular charge, the
// classes of the current simples (one per slot), per-slot shift ledgers,
// and an append-only audit log of crossings.
//
// Invariants (see validate_state):
//   * Im Z(c_t) > 0 for every slot;
//   * chi(c_t, c_t) = 2, chi(c_s, c_t) in {0, -1} off the diagonal
//     (-2 only for the affine A_1 double edge);
//   * the matrix with columns c_t is unimodular;
//   * c_t = (-1)^shift_count * M_log e_t with M_log = word_to_matrix(log).
//
// shift_count records the uniform shifts picked up at fully degenerate
// crossings (all slot charges real simultaneously), where the whole heart
// is translated by [+-1] instead of being tilted at a single wall.
struct CoverState {
  Diagram diagram;
  CentralCharge charge;
  std::vector<ClassVector> classes;
  std::vector<std::int64_t> ledgers;
  BraidWord log;
  std::int64_t shift_count = 0;

  explicit CoverState(Diagram d) : diagram(std::move(d)) {}

  std::size_t slots() const { return classes.size(); }
};

// Equality in the modeled quotient: charge, classes and ledgers (the log is
// an audit trail, not part of the point).
bool same_state(const CoverState& a, const CoverState& b);

// Full invariant check; throws InvariantViolation with a description.
// check_positivity is switched off for combinatorial exploration where no
// meaningful charge is attached.
void validate_state(const CoverState& s, bool check_positivity = true);

// Base state over a fundamental regular charge: c_t = e_t, ledgers 0.
CoverState initial_state(const Diagram& d, const CentralCharge& Z);

// The standard basepoint: (i, ..., i) for finite diagrams, and the interior
// alcove point Z*(e_t) = i / (marks_t * size) (so Z*(delta) = i) for affine.
CentralCharge standard_basepoint(const Diagram& d);

// One wall crossing at a slot. Ascending means the slot charge exits the
// upper half plane through the negative real axis (phase rising through 1):
// every class is reflected in the old c_s, the crossed ledger moves by -1
// and the log gains a positive letter. Descending is the mirror image
// (ledger +1, negative letter). A slot whose class changes root sign under
// the reflection absorbs a compensating unit of shift: +1 on ascending
// crossings, -1 on descending ones (this is what makes homotopic paths lift
// to identical ledgers; see the braid-relation and Coxeter tests).
//
// cross performs no charge checks; geometric validity of a crossing is the
// lifter's responsibility, and direct calls are combinatorial exploration.
CoverState cross(const CoverState& s, std::size_t slot, Direction dir);

// Piecewise-linear path of charges. Segment s runs from vertices[s] to
// vertices[s+1], affinely in t in [0,1].
struct ChargePath {
  std::vector<CentralCharge> vertices;

  std::size_t segments() const { return vertices.empty() ? 0 : vertices.size() - 1; }
};

ChargePath reverse_path(const ChargePath& p);

struct LiftEvent {
  std::size_t segment;
  Rational time;
  // Wall crossing at one slot, or a fully degenerate global shift where
  // every slot crosses simultaneously (slot is meaningless then).
  bool global_shift;
  std::size_t slot;
  Direction dir;
};

struct LiftResult {
  CoverState state;
  std::vector<LiftEvent> events;
};

// Walk the path from the given state, crossing walls as the imaginary part
// of a slot charge changes sign. Exact rational event times; every event
// requires a nonzero real part and distinct times (except the fully
// degenerate all-real configuration, which lifts as a global shift).
// Throws NonGenericPath on tangencies, coincidences, endpoints on walls,
// and affine segments that cross Im Z(delta) = 0 away from the degenerate
// configuration.
LiftResult lift_path(const CoverState& start, const ChargePath& path);

// The scalar loop 1 -> -i -> -1 -> i -> 1 (clockwise for positive turns),
// lifted |turns| times from the state's charge. Retries with a rationally
// perturbed polygon when the lift is non-generic.
LiftResult rotate_loop(const CoverState& state, std::int64_t turns);

// Loop (as a charge path from the standard basepoint to its Weyl image)
// whose lift realises the word: one two-segment dip per letter, first
// letter first, each transported by the accumulated Weyl matrix. Positive
// letters dip through the negative real axis (one ascending event at the
// letter's slot), inverse letters mirror through the positive axis. Each
// dip is validated by lifting; waypoints are perturbed on failure.
ChargePath loop_from_word(const Diagram& d, const BraidWord& w);

struct DeckTransform {
  BraidWord word;          // event log of the lift
  IntMatrix k_matrix;      // = word_to_matrix(word)
  std::vector<std::int64_t> ledger_delta;
  bool pure_shift;         // classes standard and ledgers uniform
};

// Lift loop_from_word(w) from the base state at the standard basepoint and
// package the resulting deck transformation. Asserts that the K-matrix
// equals word_to_matrix(w).
DeckTransform monodromy(const Diagram& d, const BraidWord& w);

struct NormalizeResult {
  Gaussian mu;
  BraidWord word;
  CoverState state;      // normalized state at the standard basepoint
  CentralCharge replay;  // act_weyl(word_to_matrix(word), mu * Z), lies in R
};

// Lemma-3.6-style normalization: a scalar mu and a braid word whose
// combined action maps the regular charge Z into the closure of the
// fundamental chamber. Affine mu = i / Z(delta); finite mu is searched over
// a fixed fan of sixteen rational directions.
NormalizeResult normalize(const Diagram& d, const CentralCharge& Z);

// Exchange-graph exploration. Nodes are (classes, ledgers) up to the
// uniform shift [m] (which negates classes for odd m); edges are single
// crossings.
struct ExchangeNode {
  std::vector<ClassVector> classes;
  std::vector<std::int64_t> ledgers;  // normalized: slot-0 ledger = 0

  bool operator<(const ExchangeNode& o) const {
    if (classes != o.classes) return classes < o.classes;
    return ledgers < o.ledgers;
  }
};

struct ExchangeEdge {
  std::size_t from;
  std::size_t to;
  std::size_t slot;
  Direction dir;
};

struct ExchangeGraph {
  std::vector<ExchangeNode> nodes;
  std::vector<ExchangeEdge> edges;
  bool closed;  // no frontier left when the depth bound was reached
};

ExchangeGraph exchange_bfs(const Diagram& d, int depth);

// Relabel a state by a diagram automorphism: charge coordinates, slots,
// class-vector coordinates and log letters all move together.
CoverState act_automorphism(const GraphAutomorphism& g, const CoverState& s);

CentralCharge act_automorphism(const GraphAutomorphism& g, const CentralCharge& Z);
ChargePath act_automorphism(const GraphAutomorphism& g, const ChargePath& p);

}  // namespace stabcover
