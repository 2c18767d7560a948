#ifndef EKLOC_GSET_HPP
#define EKLOC_GSET_HPP

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ekloc/group.hpp"

namespace ekloc {

/**
 * The set of stabilizer pairs (g, x) with g.x = x of a finite G-set, with
 * the conjugation-translation action g'.(g, x) = (g'gg'^-1, g'x). Pairs are
 * stored sorted by (g, x), and the orbit partition of the pair set is
 * precomputed. Pure data; produced and cached by GSet.
 */
struct StabilizerPairSet {
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> orbits;  // orbits of pair indices, by least member
  std::vector<int> orbit_of;             // pair index -> orbit index

  int size() const { return static_cast<int>(pairs.size()); }
  /** Index of (g, x) among the pairs, -1 when g does not fix x. */
  int index_of(int g, int x) const;

 private:
  friend class GSet;
  std::vector<int> _index;  // flat [g * npoints + x] lookup, -1 for non-pairs
  int _npoints = 0;
};

/**
 * A finite set with a verified action of a finite group. Points are 0-based
 * indices; the action table is complete and the action axioms are checked
 * exhaustively at construction. Orbits, transporters, point stabilizers and
 * the stabilizer pair set are computed on demand and cached.
 */
class GSet {
 public:
  /** Full action table act[g][x]; axioms verified. */
  static GSet from_element_action(const FiniteGroup& G, std::vector<std::vector<int>> act);
  /** One 0-based image list per group generator; extended along words. */
  static GSet from_generator_images(const FiniteGroup& G, int npoints,
                                    const std::vector<std::vector<int>>& gen_images);
  /** The defining permutation action of a permutation group. */
  static GSet natural(const FiniteGroup& G);
  /** A single fixed point. */
  static GSet point(const FiniteGroup& G);
  /** n fixed points. */
  static GSet trivial(const FiniteGroup& G, int n);
  /** G acting on itself by left translation (a free transitive set). */
  static GSet left_translation(const FiniteGroup& G);
  /** Left cosets gH with the translation action; points ordered by least member. */
  static GSet cosets(const FiniteGroup& G, const Subgroup& H);
  /** Disjoint union (same group); points of a first, then b shifted. */
  static GSet disjoint_union(const GSet& a, const GSet& b);

  const FiniteGroup& group() const { return *_G; }
  int size() const { return _npoints; }
  int apply(int g, int x) const { return _act[g][x]; }

  const std::vector<std::vector<int>>& orbits() const;
  int orbit_of(int x) const;
  /** Least point of the orbit of x. */
  int orbit_rep(int orbit_index) const;
  /** An element t with x = t . orbit_rep(orbit_of(x)); identity at the rep. */
  int transporter(int x) const;
  Subgroup point_stabilizer(int x) const;
  /** The stabilizer of orbit_rep(i), re-enumerated as a group; shared and cached. */
  std::shared_ptr<const MaterializedSubgroup> orbit_stabilizer(int orbit_index) const;

  const StabilizerPairSet& stabilizer_pairs() const;

 private:
  GSet(const FiniteGroup* G, int npoints) : _G(G), _npoints(npoints) {}
  void verify_action() const;
  void compute_orbits() const;

  const FiniteGroup* _G;
  int _npoints;
  std::vector<std::vector<int>> _act;

  mutable std::vector<std::vector<int>> _orbits;
  mutable std::vector<int> _orbit_of;
  mutable std::vector<int> _transporter;
  mutable std::vector<std::shared_ptr<const MaterializedSubgroup>> _orbit_stab;
  mutable StabilizerPairSet _pairs;
  mutable bool _pairs_ready = false;
};

/** An equivariant map of G-sets over the same group; equivariance verified. */
struct GMap {
  const GSet* source;
  const GSet* target;
  std::vector<int> to;

  GMap(const GSet* source, const GSet* target, std::vector<int> to);
  static GMap identity(const GSet& X);
  /** The unique map to a one-point G-set. */
  static GMap collapse(const GSet& X, const GSet& pt);
  int operator()(int x) const { return to[x]; }
};

/**
 * An element of the K-theory model of a G-set: a function on the stabilizer
 * pairs with cyclotomic values, constant on orbits of the pair set. Classes
 * of equivariant sheaves land here by taking fiberwise traces; arbitrary
 * elements are complex combinations of such classes.
 */
class StabilizerClass {
 public:
  StabilizerClass(const GSet* X, std::vector<Cyclotomic> pair_values);
  static StabilizerClass zero(const GSet& X);
  /** The class of the structure sheaf: constant 1. */
  static StabilizerClass one(const GSet& X);

  const GSet* space() const { return _X; }
  const std::vector<Cyclotomic>& pair_values() const { return _v; }
  const Cyclotomic& at_pair(int i) const { return _v[i]; }
  /** Value at (g, x); zero when g does not fix x. */
  Cyclotomic value(int g, int x) const;

  StabilizerClass operator+(const StabilizerClass& o) const;
  StabilizerClass operator-(const StabilizerClass& o) const;
  /** Pointwise product: the model of the tensor product. */
  StabilizerClass operator*(const StabilizerClass& o) const;
  StabilizerClass scaled(const Cyclotomic& c) const;
  bool operator==(const StabilizerClass& o) const;
  bool operator!=(const StabilizerClass& o) const { return !(*this == o); }
  bool is_zero() const;

  /**
   * Support decomposition along conjugacy classes of the acting group:
   * component c keeps the pairs whose group coordinate lies in class c.
   * The components have disjoint support and sum back to the class.
   */
  std::vector<StabilizerClass> decompose() const;
  /** Single component of decompose(). */
  StabilizerClass component(int class_index) const;

 private:
  const GSet* _X;
  std::vector<Cyclotomic> _v;
};

/** (q_* beta)(g, x) = sum of beta(g, x') over the g-fixed fiber of x. */
StabilizerClass pushforward(const GMap& q, const StabilizerClass& beta);
/** (q^* alpha)(g, x') = alpha(g, q(x')). */
StabilizerClass pullback(const GMap& q, const StabilizerClass& alpha);

/**
 * An equivariant sheaf on a finite G-set: one representation of the
 * (materialized) stabilizer group per orbit, in orbit order. This is the
 * concrete category the function model is checked against.
 */
class GSheaf {
 public:
  /** reps[i] must be a representation of X.orbit_stabilizer(i)->group. */
  GSheaf(const GSet* X, std::vector<MatrixRep> reps);
  static GSheaf structure(const GSet& X);

  const GSet* space() const { return _X; }
  const MatrixRep& rep(int orbit_index) const { return _reps[orbit_index]; }
  /** Fiber dimension over the orbit of x. */
  int fiber_dim(int x) const;

  GSheaf direct_sum(const GSheaf& o) const;
  GSheaf tensor(const GSheaf& o) const;
  /** Sheaf-level flat pullback along q : X' -> X (this lives on X). */
  GSheaf pulled_back(const GMap& q) const;
  /** Sheaf-level direct image along q : X' -> X (this lives on X'). */
  GSheaf pushed_forward(const GMap& q) const;

  /**
   * The class of the sheaf: value at (g, x) is the trace of g on the fiber
   * at x, computed through the orbit transporter.
   */
  StabilizerClass to_class() const;

 private:
  const GSet* _X;
  std::vector<MatrixRep> _reps;
};

/**
 * A function on the orbit set X/G with cyclotomic values; the target of the
 * invariants map.
 */
struct OrbitFunction {
  const GSet* space;
  std::vector<Cyclotomic> values;  // indexed by orbit

  OrbitFunction operator+(const OrbitFunction& o) const;
  OrbitFunction scaled(const Cyclotomic& c) const;
  bool operator==(const OrbitFunction& o) const;
  bool operator!=(const OrbitFunction& o) const { return !(*this == o); }
};

/**
 * The invariants of a class: at the orbit of x, the average over the
 * stabilizer (1/|G_x|) sum_{g in G_x} alpha(g, x). For the class of a sheaf
 * this is the fiberwise dimension of the invariant subsheaf.
 */
OrbitFunction invariants(const StabilizerClass& alpha);
/** Sum an orbit function over the fibers of the induced map on orbit sets. */
OrbitFunction orbit_pushforward(const GMap& q, const OrbitFunction& f);

/**
 * The slice of the stabilizer pair set over one conjugacy class, realized as
 * a G-set of its own: points are the pairs (h, x) with h in the class, the
 * action is by conjugation-translation, and to_base records the projection
 * to the underlying set. May be empty when the class fixes nothing.
 */
struct SliceSpace {
  GSet space;
  std::vector<std::pair<int, int>> labels;  // slice point -> (h, x) in the base
  std::vector<int> to_base;                 // slice point -> x
  int class_index;
};

SliceSpace build_slice(const GSet& X, int class_index);
/** The projection of a slice onto its base set, as an equivariant map. */
GMap slice_projection(const SliceSpace& S, const GSet& X);

/**
 * The balanced product G x_Z W of a subgroup inclusion with a Z-set W:
 * points are equivalence classes [k, w] of pairs under (k, w) ~ (k z^-1, zw),
 * stored by lexicographically least representative, with G acting by left
 * translation on the first coordinate. Module classes transport across this
 * construction losslessly in both directions (Morita equivalence).
 */
struct MixedSpace {
  std::shared_ptr<const MaterializedSubgroup> Z;  // subgroup of the big group
  const GSet* w_space;                            // W, caller-owned, must outlive this
  GSet space;                                     // G x_Z W
  std::vector<std::pair<int, int>> canonical;     // point -> least (k, w)

  /** The point [k, w]. */
  int point_of(int k, int w) const;

 private:
  friend MixedSpace build_mixed_space(const FiniteGroup& G,
                                      std::shared_ptr<const MaterializedSubgroup> Z,
                                      const GSet& W);
  MixedSpace(std::shared_ptr<const MaterializedSubgroup> Z, const GSet* w, GSet s,
             std::vector<std::pair<int, int>> canonical,
             std::map<std::pair<int, int>, int> index);
  std::map<std::pair<int, int>, int> _index;
};

MixedSpace build_mixed_space(const FiniteGroup& G,
                             std::shared_ptr<const MaterializedSubgroup> Z, const GSet& W);

/**
 * Transport of a class on W to a class on G x_Z W: the value at (g, [k, w])
 * is the value at (k^-1 g k, w). A linear isomorphism.
 */
StabilizerClass morita_transport(const MixedSpace& M, const StabilizerClass& beta_on_w);
/** Inverse transport: restrict to the pairs (z, [e, w]). */
StabilizerClass morita_inverse(const MixedSpace& M, const StabilizerClass& alpha_on_mixed);

/**
 * Twist of a class on a Z-set by a central element h acting trivially on the
 * set: the translation (h^-1 . beta)(z, x) = beta(hz, x). This closed form is
 * checked against the eigensheaf definition below.
 */
StabilizerClass twist_central(const StabilizerClass& beta, int h);
/**
 * Twist of a sheaf class computed from the definition: decompose every fiber
 * into exact h-eigenspaces, scale the eigensheaf with eigenvalue mu by mu,
 * and take traces. Must agree with twist_central of the sheaf's class.
 */
StabilizerClass twist_via_reps(const GSheaf& F, int h);
/**
 * Twist of a class on a slice by the tautological central element: the point
 * (h, x) is twisted by its own group coordinate h. Under the Morita transport
 * to the centralizer model this is exactly twist_central at the slice class
 * representative.
 */
StabilizerClass twist_tautological(const SliceSpace& S, const StabilizerClass& beta);

/**
 * The central summand of a class on a slice: the part carried by the central
 * coordinate of the centralizer model. Two independent computations are
 * provided and must agree:
 *  - support route: keep the second-order pairs (g, (h, x)) with g = h;
 *  - centralizer route: transport to (Z, X^h) across the balanced-product
 *    isomorphism with Z the centralizer of a chosen representative h, project
 *    onto the singleton conjugacy class {h} of Z, and transport back. The
 *    result is independent of the choice of h in the class.
 */
StabilizerClass central_summand_support(const SliceSpace& S, const StabilizerClass& beta);
StabilizerClass central_summand_centralizer(const GSet& X, const SliceSpace& S,
                                            const StabilizerClass& beta, int h);

/**
 * The fixed locus X^h as a set with an action of a subgroup Z that commutes
 * with h (typically the centralizer of h). point_labels maps back into X.
 */
struct FixedLocus {
  std::shared_ptr<const MaterializedSubgroup> Z;
  GSet space;
  std::vector<int> point_labels;
};

FixedLocus fixed_locus(const GSet& X, std::shared_ptr<const MaterializedSubgroup> Z, int h);

enum class SummandRoute { support, centralizer };

/**
 * Localization of a class at a conjugacy class: push the central summand of
 * the pulled-back class forward along the slice projection f,
 *
 *     f_* ( lambda-factor . (f^* alpha)_central ),
 *
 * where the lambda-factor slot carries the alternating sum of exterior powers
 * of the conormal module of f; on zero-dimensional sets the module is zero,
 * so the factor is the unit class, kept explicit so the formula shape of the
 * positive-dimensional statement survives. The result equals the support
 * component alpha.component(class_index); the equality is the content of the
 * localization theorem and is what the tests and the verification binary
 * check.
 */
StabilizerClass localize_at_class(const GSet& X, const StabilizerClass& alpha,
                                  int class_index, SummandRoute route);

/**
 * Both routes of the Euler-characteristic sector formula on X/G:
 *  - support_route: invariants of the class-component of alpha;
 *  - stabilizer_route: pushforward to X/G of the invariants of the
 *    tautologically twisted central summand of f^* alpha on the slice.
 * The two must be equal; `equal` records the verdict.
 */
struct SectorComparison {
  OrbitFunction support_route;
  OrbitFunction stabilizer_route;
  bool equal;
};

SectorComparison sector_invariants(const GSet& X, const StabilizerClass& alpha,
                                   int class_index);

}  // namespace ekloc

#endif
