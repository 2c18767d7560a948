#ifndef EKLOC_GKM_HPP
#define EKLOC_GKM_HPP

#include <string>
#include <vector>

#include "ekloc/group.hpp"
#include "ekloc/laurent.hpp"

namespace ekloc {

/** An isolated torus fixed point: a label and the tangent weights there. */
struct FixedPoint {
  std::string label;
  std::vector<Monomial> tangent;
};

/**
 * A space presented through its isolated torus fixed points: the character
 * variables x_0..x_{nvars-1} and, per point, the multiset of tangent weights.
 * Assemble through make_fixed_point_data, which checks the shape.
 */
struct FixedPointData {
  int nvars = 0;
  std::vector<FixedPoint> points;
  std::vector<std::string> variable_names;
};

/**
 * Validates fixed point data: at least one point, weights of the right
 * length and never the trivial character, and nonempty tangent multisets
 * whenever there is more than one point (fixed points are isolated).
 * Default variable names are x0..x{nvars-1}.
 */
FixedPointData make_fixed_point_data(int nvars, std::vector<FixedPoint> points,
                                     std::vector<std::string> variable_names = {});

/**
 * A class in localized equivariant K-theory, recorded by its restrictions to
 * the fixed points. Genuine bundle classes restrict to Laurent polynomials,
 * and every constructor here produces those; ring operations are pointwise.
 */
class EquivClass {
 public:
  EquivClass(const FixedPointData* data, std::vector<LaurentPoly> restrictions);
  static EquivClass zero(const FixedPointData& data);
  static EquivClass one(const FixedPointData& data);

  const FixedPointData* data() const { return _data; }
  const std::vector<LaurentPoly>& restrictions() const { return _v; }
  const LaurentPoly& at(int point) const { return _v[point]; }

  EquivClass operator+(const EquivClass& o) const;
  EquivClass operator-(const EquivClass& o) const;
  EquivClass operator*(const EquivClass& o) const;
  EquivClass scaled(const Cyclotomic& c) const;
  bool operator==(const EquivClass& o) const;
  bool operator!=(const EquivClass& o) const { return !(*this == o); }

 private:
  const FixedPointData* _data;
  std::vector<LaurentPoly> _v;
};

/**
 * The alternating sum of exterior powers of the dual bundle with the given
 * weights: prod_chi (1 - chi^-1), expanded. Empty input gives 1.
 */
LaurentPoly lambda_minus_one(int nvars, const std::vector<Monomial>& weights);

/**
 * The localization sum sum_p alpha_p / lambda_minus_one(T_p), carried out in
 * exact localized arithmetic. For a genuine class the denominators cancel and
 * the virtual character of global sections comes back as a Laurent
 * polynomial; residual_denominator_error otherwise.
 */
LaurentPoly pushforward_to_point(const EquivClass& alpha);

/**
 * Projective n-space under the diagonal torus of GL_{n+1}: points p_0..p_n
 * with tangent weights {x_i x_j^-1 : j != i} at p_i.
 */
FixedPointData projective_space_data(int n, const Caps& caps = {});
/** O(d) on that data: restriction x_i^d at p_i. */
EquivClass o_d_class(const FixedPointData& data, int d, const Caps& caps = {});

/** A standard parabolic of GL_n: block sizes summing to n. */
struct FlagShape {
  int n = 0;
  std::vector<int> composition;
};
FlagShape full_flag_shape(int n);

/**
 * The flag variety of a composition: fixed points are ordered set partitions
 * of {1..n} with the given block sizes, enumerated lexicographically. The
 * tangent multiset at a partition is {x_a x_b^-1 : a in an earlier block
 * than b}; this orientation is pinned by the rank-two line bundle character
 * x_1 + x_2 and makes the Weyl-constant identities below hold. Variables are
 * named x1..xn.
 */
struct FlagData {
  FlagShape shape;
  FixedPointData data;
  // Per point, the ordered blocks with ascending 1-based members.
  std::vector<std::vector<std::vector<int>>> blocks;
};
FlagData flag_data(const FlagShape& shape, const Caps& caps = {});

/**
 * The line bundle of an integer weight vector on the full flag variety:
 * restriction prod_i x_{w(i)}^{lambda_i} at the permutation point w. Its
 * pushforward to the point is the Weyl character; for a weakly decreasing
 * lambda that is the Schur polynomial s_lambda.
 */
EquivClass line_bundle_class(const FlagData& flag, const std::vector<int>& lambda,
                             const Caps& caps = {});

/**
 * A fibration of fixed point data: a surjection of point sets together with
 * the relative tangent weights of each source point, constrained by
 * source tangent = relative tangent + pulled-back target tangent (as
 * multisets, checked at construction).
 */
struct FiberedFixedPointData {
  const FixedPointData* source;
  const FixedPointData* target;
  std::vector<int> to;
  std::vector<std::vector<Monomial>> relative;
};

FiberedFixedPointData make_fibered_data(const FixedPointData* source,
                                        const FixedPointData* target,
                                        std::vector<int> to,
                                        std::vector<std::vector<Monomial>> relative);

/** The projection of the full flag onto a coarser flag of the same rank. */
FiberedFixedPointData flag_fibration(const FlagData& full, const FlagData& partial);

/**
 * Fiberwise localization: at each target point, the sum over its fiber of
 * beta_s / lambda_minus_one(relative tangent at s). Each coordinate must
 * collapse; residual_denominator_error otherwise.
 */
EquivClass fiberwise_pushforward(const FiberedFixedPointData& fib, const EquivClass& beta);

/**
 * The class restricting to lambda_minus_one(T_p) at every point p: the
 * K-theory Euler class of the tangent data. It equals the sum over points of
 * the self-intersection classes below.
 */
EquivClass euler_class_expansion(const FixedPointData& data);
/**
 * The pushforward of 1 from the l-th fixed point: restriction
 * delta_{lm} lambda_minus_one(T_l) at p_m. Its pushforward to the point is 1.
 */
EquivClass point_pushforward_class(const FixedPointData& data, int l);

/**
 * Whether every weight evaluates away from 1 at the given character values,
 * i.e. the Euler factor prod(1 - chi^-1) is invertible there.
 */
bool invertible_at(const std::vector<Monomial>& weights,
                   const std::vector<Cyclotomic>& point);

/**
 * The three flag pushforward identities with their Weyl-group constants, for
 * a symmetric alpha (a class pulled back from the point):
 *  - full flag:     pi_*(lambda_{-1}(T_pi) . pi^* alpha) = |W| alpha;
 *  - coarser flag:  q_*(lambda_{-1}(T_q) . q^* alpha) = |W|/|W_Z| alpha;
 *  - fiberwise:     p_*(lambda_{-1}(T_pi) . p^* beta) =
 *                       |W_Z| lambda_{-1}(T_q) . beta  with beta = q^* alpha,
 * where W is the symmetric group S_n and W_Z the block subgroup.
 */
struct FlagIdentityReport {
  long weyl_order = 0;
  long levi_order = 0;
  bool full_flag_ok = false;
  bool partial_flag_ok = false;
  bool fiber_ok = false;
  bool ok() const { return full_flag_ok && partial_flag_ok && fiber_ok; }
};

FlagIdentityReport weyl_constant_identities(const FlagShape& shape,
                                            const LaurentPoly& alpha);

}  // namespace ekloc

#endif
