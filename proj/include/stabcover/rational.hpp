#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace stabcover {

using Rational = mpq_class;

// mpq_class(num, den) keeps whatever factors it is given; every ratio built
// from runtime values must go through here so comparisons stay exact.
inline Rational make_ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Strict parse of "p", "-p" or "p/q" with q > 0 after canonicalisation.
// Decimal points, exponents and whitespace are rejected; returns nullopt on
// any malformed input.
std::optional<Rational> parse_rational(const std::string& text);

// Canonical "p/q" (or bare "p" when the denominator is 1).
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

// Exact complex number with rational real and imaginary parts.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() : re(0), im(0) {}
  Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Gaussian integer(long v) { return Gaussian(Rational(v), Rational(0)); }
  static Gaussian imaginary_unit() { return Gaussian(Rational(0), Rational(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Gaussian operator+(const Gaussian& o) const { return {re + o.re, im + o.im}; }
  Gaussian operator-(const Gaussian& o) const { return {re - o.re, im - o.im}; }
  Gaussian operator-() const { return {-re, -im}; }

  Gaussian operator*(const Gaussian& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }

  // Exact division; caller guarantees o != 0.
  Gaussian operator/(const Gaussian& o) const {
    Rational n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }

  Gaussian operator*(const Rational& s) const { return {re * s, im * s}; }

  bool operator==(const Gaussian& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Gaussian& o) const { return !(*this == o); }
};

}  // namespace stabcover
