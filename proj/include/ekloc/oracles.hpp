#ifndef EKLOC_ORACLES_HPP
#define EKLOC_ORACLES_HPP

#include <vector>

#include "ekloc/laurent.hpp"

namespace ekloc {
namespace oracles {

/**
 * Brute-force reference values computed by direct enumeration, kept free of
 * the localization machinery so the two routes stay independent.
 */

/** h_d(x_0..x_{n-1}): sum over all degree-d monomials, by enumeration. */
LaurentPoly complete_homogeneous(int nvars, int d);

/**
 * s_lambda(x_0..x_{n-1}) by summing the content monomials of all semistandard
 * tableaux of shape lambda with entries in 1..n. lambda must be weakly
 * decreasing and nonnegative.
 */
LaurentPoly schur_polynomial(int nvars, const std::vector<int>& lambda);

/**
 * Dimension of the irreducible GL_n representation with highest weight
 * lambda (weakly decreasing, length n): prod_{i<j} (l_i - l_j + j - i)/(j - i).
 */
Rational gl_dimension(const std::vector<int>& lambda);

}  // namespace oracles
}  // namespace ekloc

#endif
