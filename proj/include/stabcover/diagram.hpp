#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabcover/linalg.hpp"

namespace stabcover {

enum class Family { A, D, E };

std::string family_name(Family f);

// A finite or affine ADE Dynkin diagram together with its Euler matrix.
//
// Slots are 0-based internal indices. For a finite diagram of rank n, slot
// t holds vertex t+1 (Bourbaki labels 1..n). For an affine diagram, slot t
// holds vertex t (labels 0..n, with 0 the special vertex). Edge
// multiplicity is 1 everywhere except the affine A_1 double edge.
class Diagram {
 public:
  Diagram(Family family, int rank, bool affine);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool affine() const { return affine_; }

  // Number of vertices (rank for finite, rank+1 for affine).
  std::size_t size() const { return size_; }

  int multiplicity(std::size_t i, std::size_t j) const;
  const IntMatrix& euler_matrix() const { return euler_; }

  // Symmetric Euler form x^T E y.
  std::int64_t euler_form(const IntVector& x, const IntVector& y) const;

  // Vertex label of a slot ("0".."n" affine, "1".."n" finite).
  int vertex_label(std::size_t slot) const { return affine_ ? int(slot) : int(slot) + 1; }

  // Marks vector delta (affine only): primitive positive kernel generator
  // of E with entry 1 at the special vertex.
  const IntVector& delta() const;

  // Canonical name, e.g. "A2", "D4", "E8", "A1~".
  std::string name() const;

  // Parse "A2" / "D4" / "E8" / "A1~"; throws InvalidInput on bad names or
  // out-of-range ranks.
  static Diagram parse(const std::string& name);

  // The finite diagram obtained by deleting the special vertex.
  Diagram finite_part() const;

  bool operator==(const Diagram& o) const {
    return family_ == o.family_ && rank_ == o.rank_ && affine_ == o.affine_;
  }
  bool operator!=(const Diagram& o) const { return !(*this == o); }

 private:
  Family family_;
  int rank_;
  bool affine_;
  std::size_t size_;
  IntMatrix euler_;
  IntVector delta_;  // empty for finite diagrams

  void build_edges();
};

// A vertex permutation preserving edge multiplicities. perm[i] = image slot.
struct GraphAutomorphism {
  std::vector<std::size_t> perm;

  bool is_identity() const;
  GraphAutomorphism compose(const GraphAutomorphism& inner) const;
  GraphAutomorphism inverse() const;
  bool operator==(const GraphAutomorphism& o) const { return perm == o.perm; }
  bool operator<(const GraphAutomorphism& o) const { return perm < o.perm; }
};

bool preserves_diagram(const Diagram& d, const GraphAutomorphism& g);

// All automorphisms of the diagram (brute force over permutations; sizes
// here are <= 9 vertices). With fix_special, only those fixing vertex 0 of
// an affine diagram.
std::vector<GraphAutomorphism> all_automorphisms(const Diagram& d, bool fix_special = false);

// A small generating set of the (sub)group, greedily extracted from the
// full list.
std::vector<GraphAutomorphism> automorphism_generators(const Diagram& d,
                                                       bool fix_special = false);

}  // namespace stabcover
