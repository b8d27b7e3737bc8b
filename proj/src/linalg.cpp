#include "stabcover/linalg.hpp"

#include <numeric>

#include "stabcover/errors.hpp"

namespace stabcover {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (n_ != o.n_) throw InvalidInput("matrix size mismatch");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      std::int64_t a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) += a * o.at(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != n_) throw InvalidInput("matrix/vector size mismatch");
  IntVector out(n_, 0);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

namespace {

// Gauss-Jordan over exact rationals on [m | rhs]; returns rank.
std::size_t eliminate(std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  const std::size_t n = rows.size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < n; ++col) {
    std::size_t pivot = rank;
    while (pivot < n && rows[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[rank]);
    Rational inv = rows[rank][col];
    for (auto& x : rows[rank]) x /= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

Rational IntMatrix::determinant() const {
  std::vector<std::vector<Rational>> rows(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = Rational(at(i, j));
  Rational det = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && rows[pivot][col] == 0) ++pivot;
    if (pivot == n_) return Rational(0);
    if (pivot != col) {
      std::swap(rows[pivot], rows[col]);
      det = -det;
    }
    det *= rows[col][col];
    Rational inv = rows[col][col];
    for (std::size_t c = col; c < n_; ++c) rows[col][c] /= inv;
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col];
      for (std::size_t c = col; c < n_; ++c) rows[r][c] -= f * rows[col][c];
    }
  }
  return det;
}

IntMatrix IntMatrix::inverse() const {
  std::vector<std::vector<Rational>> rows(n_, std::vector<Rational>(2 * n_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) rows[i][j] = Rational(at(i, j));
    rows[i][n_ + i] = 1;
  }
  if (eliminate(rows, n_) != n_) throw InvariantViolation("singular matrix inverse");
  IntMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) {
      const Rational& q = rows[i][n_ + j];
      if (!is_integer(q)) throw InvariantViolation("non-integral matrix inverse");
      out.at(i, j) = static_cast<std::int64_t>(q.get_num().get_si());
    }
  return out;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

IntVector scale(const IntVector& a, std::int64_t s) {
  IntVector out(a);
  for (auto& x : out) x *= s;
  return out;
}

IntVector negate(const IntVector& a) { return scale(a, -1); }

bool is_zero(const IntVector& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = Rational(m.at(i, j));
  eliminate(rows, n);

  // Locate pivot columns.
  std::vector<long> pivot_of_col(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    if (rows[r][c] == 1) {
      bool pivot = true;
      for (std::size_t rr = 0; rr < n; ++rr) {
        if (rr != r && rows[rr][c] != 0) pivot = false;
      }
      if (pivot) {
        pivot_of_col[c] = long(r);
        ++r;
      }
    }
  }

  std::vector<IntVector> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (pivot_of_col[free_col] != -1) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free_col] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_of_col[c] != -1) v[c] = -rows[std::size_t(pivot_of_col[c])][free_col];
    }
    // Clear denominators and make primitive.
    mpz_class lcm = 1;
    for (const auto& q : v) lcm = lcm / gcd(lcm, q.get_den()) * q.get_den();
    IntVector iv(n);
    mpz_class g = 0;
    for (std::size_t c = 0; c < n; ++c) {
      Rational scaled = v[c] * Rational(lcm);
      mpz_class z = scaled.get_num();  // denominator is 1 after scaling
      g = gcd(g, z);
      iv[c] = z.get_si();
    }
    if (g > 1) {
      for (auto& x : iv) x /= g.get_si();
    }
    basis.push_back(iv);
  }
  return basis;
}

int root_sign(const IntVector& v) {
  int sign = 0;
  for (auto x : v) {
    if (x == 0) continue;
    int s = x > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (sign != s) throw InvariantViolation("sign-incoherent root vector");
  }
  if (sign == 0) throw InvariantViolation("zero vector has no root sign");
  return sign;
}

}  // namespace stabcover
