#ifndef EKLOC_QUOTIENT_RR_HPP
#define EKLOC_QUOTIENT_RR_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ekloc/gkm.hpp"
#include "ekloc/group.hpp"

namespace ekloc {

/**
 * A finite group acting linearly and faithfully on V, hence on the
 * projective space P(V) and on the coordinate forms of every degree.
 * Elements act on functions by precomposition with the inverse, so g acts
 * on degree-d forms with the d-fold products of the inverse eigenvalues of
 * rho(g); this orientation is fixed once and shared by the symbolic and the
 * matrix route below.
 */
struct LinearAction {
  MatrixRep rep;
  /** Set by named_action so a builtin fixture owns its group; otherwise the
   * group behind rep is caller-owned and must outlive the action. */
  std::shared_ptr<const FiniteGroup> owned_group;

  const FiniteGroup& group() const { return *rep.group(); }
  /** dim V = n + 1 for P^n. */
  int dim() const { return rep.dim(); }
};

/** Checks faithfulness; finite order makes every image diagonalizable. */
LinearAction make_linear_action(MatrixRep rep);

/**
 * Builtin quotient fixtures:
 *  - "Z3-P1":           Z/3 on P^1 by diag(1, zeta_3);
 *  - "S3-irrep2":       S_3 on P^1 by its 2-dimensional irreducible;
 *  - "Z5-weights(1,2)": Z/5 on P^1 by diag(zeta_5, zeta_5^2);
 *  - "A4-std":          A_4 on P^2 by the 3-dimensional summand of the
 *                       permutation representation.
 */
LinearAction named_action(const std::string& name);
std::vector<std::string> named_action_list();

/** Degree-d monomial exponent basis in nvars variables, lex ordered. */
std::vector<Monomial> monomial_basis(int nvars, int d, const Caps& caps = {});

/**
 * The exact matrix of g on the degree-d monomial basis, computed by
 * substituting the coordinate images and expanding. Shares no code with the
 * eigenvalue route, which is the point: their traces must agree anyway.
 */
CycMatrix form_matrix(const LinearAction& act, int g, int d, const Caps& caps = {});

/**
 * One conjugacy-class sector of chi(P(V)/G, O(d)). The eigenvalue profile
 * of the representative doubles as the fixed-locus description: the
 * components of the fixed set of h are the projectivized eigenspaces, so
 * the profile lists one component per distinct eigenvalue, of dimension
 * (multiplicity - 1). The fixed set is never empty.
 */
struct SectorReport {
  int class_index = 0;
  int representative = 0;
  long class_size = 0;
  /** Eigenvalues of the representative on V, multiplicity-expanded. */
  std::vector<Cyclotomic> eigenvalues;
  /** Root of unity (order, exponent) -> multiplicity. */
  std::map<std::pair<long, long>, long> profile;
  Cyclotomic contribution;
  /** Whether the contribution is a rational number (true whenever the
   * eigenvalue data of the class is stable under Galois conjugation). */
  bool rational = false;
};

/**
 * (|class| / |G|) times the character of the representative on degree-d
 * forms, the latter evaluated symbolically: the universal section character
 * of O(d) on P^n is collapsed to a Laurent polynomial first and only then
 * evaluated at the eigenvalue profile. Requires d >= 0 so that the section
 * character is the full Euler characteristic.
 */
Cyclotomic sector_contribution(const LinearAction& act, int class_index, int d,
                               const Caps& caps = {});

/** The same data with the report fields filled in. */
SectorReport sector_report(const LinearAction& act, int class_index, int d,
                           const Caps& caps = {});

struct RRResult {
  int degree = 0;
  std::vector<SectorReport> sectors;
  /** Sum of the sector contributions; always a nonnegative integer. */
  Rational total;
  /** Independent Molien average over explicit matrices. */
  Rational oracle;
  /** total == oracle, checked exactly. */
  bool verdict = false;
};

/**
 * chi(P(V)/G, O(d)) as a sum of conjugacy-class sectors, together with the
 * Molien oracle and the exact comparison verdict. The total is checked to
 * be a nonnegative integer (it is the dimension of the invariant forms).
 */
RRResult kawasaki_chi(const LinearAction& act, int d, const Caps& caps = {});

/**
 * (1/|G|) sum of trace(g on degree-d forms) over all of G, element by
 * element from explicit matrices; the dimension of the invariant forms.
 */
Rational molien_oracle(const LinearAction& act, int d, const Caps& caps = {});
/** Rank of the averaging projector on degree-d forms; equals the oracle. */
long molien_projector_rank(const LinearAction& act, int d, const Caps& caps = {});

/**
 * Cross-check of one sector: the symbolic eigenvalue route against
 * (|class|/|G|) trace(form_matrix(representative)). Exact equality.
 */
bool sector_vs_lefschetz(const LinearAction& act, int class_index, int d,
                         const Caps& caps = {});

}  // namespace ekloc

#endif
