#ifndef EKLOC_LAURENT_HPP
#define EKLOC_LAURENT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ekloc/cyclotomic.hpp"

namespace ekloc {

/** Exponent vector of a Laurent monomial; entries may be negative. */
using Monomial = std::vector<int>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_inverse(const Monomial& a);
bool mono_is_one(const Monomial& a);

/** Raised when a localized element fails to collapse to a polynomial. */
class residual_denominator_error : public error {
 public:
  explicit residual_denominator_error(const std::string& what) : error(what) {}
};

/**
 * Multivariate Laurent polynomial over the cyclotomic numbers, on a fixed
 * variable count. Terms are kept in lex order on exponent vectors and zero
 * coefficients are never stored, so representation is canonical and equality
 * is structural.
 */
class LaurentPoly {
 public:
  explicit LaurentPoly(int nvars) : _nvars(nvars) {}

  static LaurentPoly constant(int nvars, const Cyclotomic& c);
  static LaurentPoly monomial(Monomial m, const Cyclotomic& c = Cyclotomic(1));
  static LaurentPoly variable(int nvars, int index, int exponent = 1);

  int nvars() const { return _nvars; }
  const std::map<Monomial, Cyclotomic>& terms() const { return _terms; }
  bool is_zero() const { return _terms.empty(); }
  size_t term_count() const { return _terms.size(); }

  Cyclotomic coeff(const Monomial& m) const;
  /** Adds c * x^m, dropping the term if the sum cancels. */
  void add_term(const Monomial& m, const Cyclotomic& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }

  LaurentPoly scaled(const Cyclotomic& c) const;
  LaurentPoly shifted(const Monomial& m) const;

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /**
   * Exact substitution x_i = point[i]. Points must be nonzero wherever a
   * negative exponent occurs; otherwise an error is raised.
   */
  Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;

  /** Variable relabeling x_i -> x_{perm[i]}. */
  LaurentPoly permuted(const std::vector<int>& perm) const;
  /** Invariance under every permutation of the variables. */
  bool is_symmetric() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int _nvars;
  std::map<Monomial, Cyclotomic> _terms;
};

/**
 * A factor 1 - c * x^m of a localization denominator. The pair (c, m) =
 * (1, 1) would represent zero and is rejected at construction.
 */
struct BinomialFactor {
  Cyclotomic c;
  Monomial m;

  BinomialFactor(Cyclotomic coeff, Monomial mono);
  LaurentPoly to_poly(int nvars) const;
  bool same_as(const BinomialFactor& o) const { return m == o.m && c == o.c; }
};

/**
 * Laurent divisibility test: the quotient f / g when it exists. Both are
 * shifted into the polynomial ring, divided there with lex order (a single
 * divisor is its own Groebner basis, so a nonzero remainder proves
 * non-divisibility), and the quotient is shifted back.
 */
std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g);

/**
 * An element num / prod(1 - c_i x^{m_i}) of the localized Laurent ring.
 * The denominator is a multiset of binomial factors; cancellation happens
 * only by exact trial division of the numerator by the factors. Equality is
 * semantic, via cross multiplication.
 */
class Localized {
 public:
  explicit Localized(LaurentPoly num, std::vector<BinomialFactor> den = {});

  int nvars() const { return _num.nvars(); }
  const LaurentPoly& num() const { return _num; }
  const std::vector<BinomialFactor>& den() const { return _den; }

  Localized operator-() const;
  Localized& operator+=(const Localized& o);
  Localized& operator-=(const Localized& o);
  Localized& operator*=(const Localized& o);
  friend Localized operator+(Localized a, const Localized& b) { return a += b; }
  friend Localized operator-(Localized a, const Localized& b) { return a -= b; }
  friend Localized operator*(Localized a, const Localized& b) { return a *= b; }

  Localized scaled(const Cyclotomic& c) const;
  bool is_zero() const { return _num.is_zero(); }

  bool operator==(const Localized& o) const;
  bool operator!=(const Localized& o) const { return !(*this == o); }

  /**
   * The value as a Laurent polynomial. Throws residual_denominator_error if
   * factors survive trial division.
   */
  LaurentPoly as_polynomial() const;

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  LaurentPoly _num;
  std::vector<BinomialFactor> _den;

  // Cancels denominator factors that divide the numerator exactly and keeps
  // the factor list canonically sorted.
  void reduce();
};

LaurentPoly denominator_product(int nvars, const std::vector<BinomialFactor>& den);

}  // namespace ekloc

#endif
