#ifndef EKLOC_CYCLOTOMIC_HPP
#define EKLOC_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "ekloc/rational.hpp"

namespace ekloc {

long euler_phi(long n);
std::vector<long> divisors_of(long n);

/**
 * Coefficients of the n-th cyclotomic polynomial, ascending degree, monic,
 * degree euler_phi(n). Results are cached per order.
 */
const std::vector<Rational>& cyclotomic_polynomial(long n);

/**
 * An element of the cyclotomic field Q(zeta_N), stored as exact rational
 * coordinates on the power basis 1, zeta_N, ..., zeta_N^{phi(N)-1}.
 *
 * Coordinates on this basis are unique, so equality at a common order is
 * coordinate equality; mixed orders are merged by promoting both operands to
 * the lcm via zeta_M = zeta_L^{L/M}. A value whose non-constant coordinates
 * vanish is rational and is stored demoted to order 1.
 */
class Cyclotomic {
 public:
  Cyclotomic() : _order(1), _c(1) {}
  Cyclotomic(const Rational& r) : _order(1), _c{r} {}
  Cyclotomic(long n) : _order(1), _c{Rational(n)} {}
  Cyclotomic(int n) : _order(1), _c{Rational(n)} {}

  /** zeta_n^k, reduced to canonical coordinates (demoted if rational). */
  static Cyclotomic root_of_unity(long n, long k);

  long order() const { return _order; }
  const std::vector<Rational>& coeffs() const { return _c; }

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const;
  /** The value as a Rational; throws unless is_rational(). */
  Rational rational_value() const;

  /** Same value re-expressed in Q(zeta_m); requires order() | m. */
  Cyclotomic promoted(long m) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  /** Multiplicative inverse; throws on zero. */
  Cyclotomic inverse() const;
  /** Galois image zeta -> zeta^k; requires gcd(k, order) = 1. */
  Cyclotomic galois(long k) const;
  /** Complex conjugate (the Galois image zeta -> zeta^-1). */
  Cyclotomic conjugate() const;
  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  long _order;
  std::vector<Rational> _c;

  // Reduces arbitrary power-basis coordinates (any length) mod Phi_order,
  // keeping the stated order.
  static Cyclotomic reduce_at(long order, std::vector<Rational> poly);
  // reduce_at plus demotion to order 1 when the value is rational.
  static Cyclotomic make(long order, std::vector<Rational> poly);
  void normalize();
};

inline Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= Cyclotomic(r); }

}  // namespace ekloc

#endif
