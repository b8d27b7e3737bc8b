#pragma once

#include <cstdint>
#include <vector>

#include "stabcover/rational.hpp"

namespace stabcover {

using IntVector = std::vector<std::int64_t>;

// Dense square integer matrix, row-major. Sizes here are tiny (rank <= 9),
// so everything is done directly with exact arithmetic.
class IntMatrix {
 public:
  IntMatrix() : n_(0) {}
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  std::int64_t& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  std::int64_t at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix transpose() const;

  // Exact determinant (fraction-free Gaussian elimination over rationals).
  Rational determinant() const;

  // Exact inverse; throws InvariantViolation if singular or non-integral.
  // Only ever applied to Weyl matrices, whose determinant is +-1.
  IntMatrix inverse() const;

  const std::vector<std::int64_t>& raw() const { return data_; }

 private:
  std::size_t n_;
  std::vector<std::int64_t> data_;
};

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, std::int64_t s);
IntVector negate(const IntVector& a);
bool is_zero(const IntVector& v);

// Rational kernel of a square integer matrix, returned as a primitive
// integer basis (used for the marks vector of affine Euler matrices).
std::vector<IntVector> integer_kernel(const IntMatrix& m);

// Root vectors of an ADE (affine or finite) lattice are sign-coherent:
// every nonzero entry has the same sign. Returns +1 / -1 accordingly and
// throws InvariantViolation for mixed signs or the zero vector.
int root_sign(const IntVector& v);

}  // namespace stabcover
