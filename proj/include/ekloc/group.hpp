#ifndef EKLOC_GROUP_HPP
#define EKLOC_GROUP_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ekloc/cyc_matrix.hpp"

namespace ekloc {

/** Resource guards; desk scale by design. */
struct Caps {
  long group_order = 2000;
  long monomial_basis = 5000;
  int max_degree = 60;
};

/**
 * A finite group, fully enumerated from permutation or matrix generators.
 * Elements are indices into a canonically sorted element table (permutations
 * by image vectors, matrices by entry lists), so identical generator input
 * always yields the identical indexing. The defining realization of each
 * element is kept alongside the abstract structure.
 */
class FiniteGroup {
 public:
  /** Generators as 1-based image lists of {1..degree}. */
  static FiniteGroup from_permutations(int degree,
                                       const std::vector<std::vector<int>>& gens,
                                       const Caps& caps = {});
  /** Generators as square matrices over Q(zeta_order). */
  static FiniteGroup from_matrices(long cyc_order, const std::vector<CycMatrix>& gens,
                                   const Caps& caps = {});
  /** Builtins: "S3", "S4", "A4", "D4", "Q8", "Z/n". */
  static FiniteGroup named(const std::string& name, const Caps& caps = {});

  int size() const { return static_cast<int>(_words.size()); }
  int identity() const { return _identity; }
  int mul(int a, int b) const;
  int inv(int a) const;
  /** g h g^-1. */
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }
  int pow(int a, long e) const;
  long element_order(int a) const;
  long exponent() const;

  bool is_permutation_group() const { return !_perm.empty(); }
  int degree() const { return _degree; }
  const std::vector<int>& perm_of(int a) const;
  const CycMatrix& matrix_of(int a) const;
  long matrix_order() const { return _matrix_order; }

  int num_generators() const { return static_cast<int>(_gens.size()); }
  int generator(int i) const { return _gens[i]; }
  /** Generator word with left-to-right product equal to the element. */
  const std::vector<int>& word_of(int a) const { return _words[a]; }

  std::string describe_element(int a) const;

  struct ConjugacyClass {
    int representative;        // smallest member index
    std::vector<int> members;  // sorted
  };

  /** Classes ordered by size, then representative; cached. */
  const std::vector<ConjugacyClass>& conjugacy_classes() const;
  int class_index_of(int g) const;

 private:
  FiniteGroup() = default;

  int _degree = 0;                       // permutation degree, 0 for matrix groups
  long _matrix_order = 1;                // cyclotomic order of matrix entries
  std::vector<std::vector<int>> _perm;   // 0-based image vectors
  std::vector<CycMatrix> _mat;
  std::vector<std::vector<int>> _words;
  std::vector<int> _gens;
  int _identity = 0;
  std::vector<std::vector<int>> _table;  // full multiplication table (small groups)
  std::map<std::vector<int>, int> _perm_index;
  std::map<std::string, int> _mat_index;

  mutable std::vector<ConjugacyClass> _classes;
  mutable std::vector<int> _class_of;

  void finish_construction(const Caps& caps);
  int compose_lookup(int a, int b) const;
};

/** A subgroup as a sorted element list inside its parent. */
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elems;

  int size() const { return static_cast<int>(elems.size()); }
  bool contains(int g) const;
};

Subgroup subgroup_closure(const FiniteGroup& G, std::vector<int> gens);
Subgroup centralizer(const FiniteGroup& G, int h);
bool is_central_in(const FiniteGroup& G, const Subgroup& Z, int h);

/**
 * A subgroup re-enumerated as a group of its own, with index maps in both
 * directions (from_parent is -1 off the subgroup).
 */
struct MaterializedSubgroup {
  FiniteGroup group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;
};

MaterializedSubgroup materialize_subgroup(const FiniteGroup& G, const Subgroup& H);

/**
 * The parts of a conjugacy class of G meeting a subgroup Z, split into
 * Z-conjugacy blocks; blocks are sorted by least member, members sorted.
 */
std::vector<std::vector<int>> class_intersection(const FiniteGroup& G, const Subgroup& Z,
                                                 const std::vector<int>& class_members);

/** Every subgroup (element lists); closure enumeration, |G| <= 30 guard. */
std::vector<Subgroup> all_subgroups(const FiniteGroup& G);
/** One representative per conjugacy class of subgroups. */
std::vector<Subgroup> subgroup_conjugacy_reps(const FiniteGroup& G);

/**
 * A function of conjugacy classes with cyclotomic values; the coordinate
 * model of R(G) tensored with the cyclotomic field.
 */
class ClassFunction {
 public:
  ClassFunction(const FiniteGroup* G, std::vector<Cyclotomic> values);
  static ClassFunction zero(const FiniteGroup& G);

  const FiniteGroup* group() const { return _G; }
  const std::vector<Cyclotomic>& values() const { return _v; }
  Cyclotomic at_class(int c) const { return _v[c]; }
  Cyclotomic at_element(int g) const;

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction scaled(const Cyclotomic& c) const;
  bool operator==(const ClassFunction& o) const;
  bool operator!=(const ClassFunction& o) const { return !(*this == o); }

  /** Coordinate projection: zero outside the named class. */
  ClassFunction localized(int class_index) const;

 private:
  const FiniteGroup* _G;
  std::vector<Cyclotomic> _v;
};

/**
 * A matrix representation, stored as one matrix per group element and
 * verified to be a homomorphism on the full multiplication table.
 */
class MatrixRep {
 public:
  MatrixRep(const FiniteGroup* G, std::vector<CycMatrix> images);
  static MatrixRep from_generator_images(const FiniteGroup& G,
                                         const std::vector<CycMatrix>& gen_images);
  static MatrixRep trivial(const FiniteGroup& G);
  static MatrixRep defining_permutation(const FiniteGroup& G);
  static MatrixRep defining_matrix(const FiniteGroup& G);
  static MatrixRep regular(const FiniteGroup& G);

  const FiniteGroup* group() const { return _G; }
  int dim() const { return _dim; }
  const CycMatrix& at(int g) const { return _images[g]; }

  bool is_faithful() const;
  ClassFunction character() const;

  MatrixRep tensor(const MatrixRep& o) const;
  MatrixRep direct_sum(const MatrixRep& o) const;
  /** Restriction along a materialized subgroup. */
  MatrixRep restricted_to(const MaterializedSubgroup& H) const;

 private:
  const FiniteGroup* _G;
  int _dim;
  std::vector<CycMatrix> _images;
};

/** Induction from a subgroup representation, on the coset basis. */
MatrixRep induced_rep(const FiniteGroup& G, const MaterializedSubgroup& H,
                      const MatrixRep& rho);
/** The rank-one character zeta_k^j of the cyclic group generated by c. */
MatrixRep induced_cyclic_character(const FiniteGroup& G, int c, long j);

/**
 * Exact eigenvalue multiset of rho(g): keys are roots of unity as reduced
 * (order, exponent) pairs, values are multiplicities. Computed by averaging
 * traces of powers, which is exact for finite-order matrices.
 */
std::map<std::pair<long, long>, long> eigenvalue_multiset(const MatrixRep& rep, int g);

/** (1/|G|) sum over g of a(g) * conj(b(g)); exact. */
Cyclotomic character_pairing(const ClassFunction& a, const ClassFunction& b);
/** dim Hom_G(V, W) via the nullspace of the intertwiner system. */
int hom_dimension(const MatrixRep& V, const MatrixRep& W);

struct EmbeddingCheck {
  bool separated;
  int colliding_class;  // -1 when separated
};

/**
 * Whether the eigenvalue data of a jointly faithful representation list
 * distinguishes the given class from every other class. Throws if the list
 * is not jointly faithful.
 */
EmbeddingCheck good_embedding_check(const FiniteGroup& G,
                                    const std::vector<MatrixRep>& reps, int class_index);

}  // namespace ekloc

#endif
