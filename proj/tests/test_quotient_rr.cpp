#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "ekloc/quotient_rr.hpp"

using namespace ekloc;

namespace {

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

/** #{(a,b) >= 0 : a + b = d, w0 a + w1 b = 0 mod m}: diagonal invariants. */
long cyclic_invariant_count(int d, int w0, int w1, int m) {
  long count = 0;
  for (int b = 0; b <= d; ++b)
    if (((w0 * (d - b) + w1 * b) % m) == 0) ++count;
  return count;
}

/** #{(a,b) >= 0 : 2a + 3b = d}: the free invariant ring of the dihedral
 * reflection action of S_3 on the plane. */
long reflection_invariant_count(int d) {
  long count = 0;
  for (int b = 0; 3 * b <= d; ++b)
    if ((d - 3 * b) % 2 == 0) ++count;
  return count;
}

long binomial(int n, int k) {
  long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST_CASE("builtin actions") {
  CHECK(named_action_list().size() == 4);
  for (const std::string& name : named_action_list()) {
    LinearAction act = named_action(name);
    CHECK(act.rep.is_faithful());
  }
  CHECK(named_action("Z3-P1").group().size() == 3);
  CHECK(named_action("Z3-P1").dim() == 2);
  CHECK(named_action("S3-irrep2").group().size() == 6);
  CHECK(named_action("S3-irrep2").dim() == 2);
  CHECK(named_action("Z5-weights(1,2)").group().size() == 5);
  CHECK(named_action("A4-std").group().size() == 12);
  CHECK(named_action("A4-std").dim() == 3);
  CHECK_THROWS_AS(named_action("Z9-P9"), error);

  // The three-dimensional summand has the expected character: fixed points
  // minus one, on classes of sizes (1, 3, 4, 4).
  LinearAction a4 = named_action("A4-std");
  const auto& classes = a4.group().conjugacy_classes();
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].members.size() == 1);
  CHECK(classes[1].members.size() == 3);
  CHECK(classes[2].members.size() == 4);
  CHECK(classes[3].members.size() == 4);
  ClassFunction chi = a4.rep.character();
  CHECK(chi.at_class(0) == Cyclotomic(3));
  CHECK(chi.at_class(1) == Cyclotomic(-1));
  CHECK(chi.at_class(2) == Cyclotomic(0));
  CHECK(chi.at_class(3) == Cyclotomic(0));

  FiniteGroup S3 = FiniteGroup::named("S3");
  CHECK_THROWS_AS(make_linear_action(MatrixRep::trivial(S3)), error);
}

TEST_CASE("monomial bases") {
  std::vector<Monomial> b = monomial_basis(2, 3);
  REQUIRE(b.size() == 4);
  CHECK(b[0] == Monomial{0, 3});
  CHECK(b[1] == Monomial{1, 2});
  CHECK(b[2] == Monomial{2, 1});
  CHECK(b[3] == Monomial{3, 0});

  CHECK(monomial_basis(3, 4).size() == 15);
  CHECK(monomial_basis(1, 7).size() == 1);
  CHECK(monomial_basis(4, 0).size() == 1);

  CHECK_THROWS_AS(monomial_basis(2, -1), error);
  CHECK_THROWS_AS(monomial_basis(0, 2), error);
  // binom(24, 4) = 10626 blows the default cap.
  CHECK_THROWS_AS(monomial_basis(5, 20), error);
}

TEST_CASE("form matrices") {
  LinearAction z3 = named_action("Z3-P1");
  const FiniteGroup& G = z3.group();

  CHECK(form_matrix(z3, G.identity(), 6) == CycMatrix::identity(7));

  // The generator fixes x and scales y by zeta_3, so it acts on x^a y^b
  // with zeta_3^-b; the trace over b = 0..6 is 1.
  CycMatrix M = form_matrix(z3, 1, 6);
  CHECK(M.rows() == 7);
  CHECK(M.trace() == Cyclotomic(1));

  // The assignment g -> form_matrix(g) is itself a representation.
  for (const std::string& name : {"S3-irrep2", "A4-std"}) {
    LinearAction act = named_action(name);
    const FiniteGroup& H = act.group();
    std::vector<CycMatrix> images;
    for (int g = 0; g < H.size(); ++g) images.push_back(form_matrix(act, g, 2));
    for (int a = 0; a < H.size(); ++a)
      for (int b = 0; b < H.size(); ++b)
        CHECK(images[a] * images[b] == images[H.mul(a, b)]);
  }

  CHECK_THROWS_AS(form_matrix(z3, 17, 2), error);
  CHECK_THROWS_AS(form_matrix(z3, 1, -1), error);
}

TEST_CASE("cyclic sectors on the line") {
  LinearAction z3 = named_action("Z3-P1");
  RRResult r = kawasaki_chi(z3, 6);

  REQUIRE(r.sectors.size() == 3);
  // Classes of Z/3 are the singletons (e, g, g^2) in element order.
  CHECK(r.sectors[0].representative == 0);
  CHECK(r.sectors[1].representative == 1);
  CHECK(r.sectors[2].representative == 2);
  CHECK(r.sectors[0].contribution == Cyclotomic(rat(7, 3)));
  CHECK(r.sectors[1].contribution == Cyclotomic(rat(1, 3)));
  CHECK(r.sectors[2].contribution == Cyclotomic(rat(1, 3)));
  for (const SectorReport& s : r.sectors) CHECK(s.rational);
  CHECK(r.total == rat(3));
  CHECK(r.oracle == rat(3));
  CHECK(r.verdict);

  // Eigenvalue profiles: the identity has 1 twice, the generator 1 and
  // zeta_3; the fixed locus of g is two isolated points.
  CHECK(r.sectors[0].eigenvalues ==
        std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(1)});
  CHECK(r.sectors[1].eigenvalues == std::vector<Cyclotomic>{Cyclotomic(1), zeta(3)});
  CHECK(r.sectors[1].profile ==
        std::map<std::pair<long, long>, long>{{{1, 0}, 1}, {{3, 1}, 1}});

  // The whole d-sweep against the diagonal-invariant count.
  for (int d = 0; d <= 12; ++d) {
    RRResult rd = kawasaki_chi(z3, d);
    CHECK(rd.verdict);
    CHECK(rd.total == rat(cyclic_invariant_count(d, 0, 1, 3)));
  }
}

TEST_CASE("identity sector counts monomials") {
  for (const std::string& name : named_action_list()) {
    LinearAction act = named_action(name);
    const FiniteGroup& G = act.group();
    int n = act.dim() - 1;
    for (int d : {0, 1, 2, 5}) {
      CHECK(sector_contribution(act, 0, d) ==
            Cyclotomic(rat(binomial(n + d, d), G.size())));
    }
    // Degree zero: every sector is the mass |class| / |G| of its class.
    const auto& classes = G.conjugacy_classes();
    Cyclotomic total(0);
    for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
      Cyclotomic s = sector_contribution(act, c, 0);
      CHECK(s == Cyclotomic(rat(static_cast<long>(classes[c].members.size()),
                                G.size())));
      total = total + s;
    }
    CHECK(total == Cyclotomic(1));
    CHECK(kawasaki_chi(act, 0).total == rat(1));
  }
}

TEST_CASE("dihedral reflection action") {
  LinearAction s3 = named_action("S3-irrep2");
  RRResult r = kawasaki_chi(s3, 6);

  // Classes in (size, representative) order: identity, 3-cycles,
  // transpositions.
  REQUIRE(r.sectors.size() == 3);
  CHECK(r.sectors[0].class_size == 1);
  CHECK(r.sectors[1].class_size == 2);
  CHECK(r.sectors[2].class_size == 3);
  CHECK(r.sectors[0].contribution == Cyclotomic(rat(7, 6)));
  CHECK(r.sectors[1].contribution == Cyclotomic(rat(1, 3)));
  CHECK(r.sectors[2].contribution == Cyclotomic(rat(1, 2)));
  CHECK(r.total == rat(2));
  CHECK(r.verdict);

  // A transposition acts with eigenvalues (1, -1).
  CHECK(r.sectors[2].profile ==
        std::map<std::pair<long, long>, long>{{{1, 0}, 1}, {{2, 1}, 1}});

  // Invariants form a free ring on generators of degrees 2 and 3.
  for (int d = 0; d <= 10; ++d) {
    RRResult rd = kawasaki_chi(s3, d);
    CHECK(rd.verdict);
    CHECK(rd.total == rat(reflection_invariant_count(d)));
  }
  CHECK(molien_oracle(s3, 2) == rat(1));
  CHECK(molien_projector_rank(s3, 2) == 1);
}

TEST_CASE("irrational sectors with rational totals") {
  LinearAction z5 = named_action("Z5-weights(1,2)");
  const FiniteGroup& G = z5.group();

  for (int d = 0; d <= 20; ++d) {
    RRResult r = kawasaki_chi(z5, d);
    CHECK(r.verdict);
    CHECK(r.total == rat(cyclic_invariant_count(d, 1, 2, 5)));
  }

  // At degree 1 the generator sector is a genuinely irrational cyclotomic:
  // (zeta_5^4 + zeta_5^3) / 5, the trace of g^-1 on coordinates.
  SectorReport s1 = sector_report(z5, 1, 1);
  CHECK_FALSE(s1.rational);
  CHECK(s1.contribution ==
        (zeta(5, 4) + zeta(5, 3)) * Cyclotomic(rat(1, 5)));

  // Galois equivariance: the sector of g^k is the sigma_k image of the
  // sector of g, since sigma_k permutes the eigenvalue data accordingly.
  for (int d : {1, 4, 7}) {
    Cyclotomic base = sector_contribution(z5, 1, d);
    for (long k = 2; k <= 4; ++k) {
      int cls = G.class_index_of(G.pow(1, k));
      CHECK(sector_contribution(z5, cls, d) == base.galois(k));
    }
    // Conjugate classes carry complex conjugate sectors, and the full
    // Galois orbit sums to a rational number.
    int inv_cls = G.class_index_of(G.inv(1));
    CHECK(sector_contribution(z5, inv_cls, d) == base.conjugate());
    Cyclotomic orbit(0);
    for (long k = 1; k <= 4; ++k) orbit = orbit + base.galois(k);
    CHECK(orbit.is_rational());
  }
}

TEST_CASE("tetrahedral action on the plane") {
  LinearAction a4 = named_action("A4-std");

  // Hand count of invariant forms: parity forces all-even or all-odd
  // exponents, then the cyclic part groups them into orbit sums.
  std::vector<long> expected = {1, 0, 1, 1, 2, 1, 4};
  for (int d = 0; d <= 6; ++d) {
    RRResult r = kawasaki_chi(a4, d);
    CHECK(r.verdict);
    CHECK(r.total == rat(expected[d]));
    CHECK(molien_projector_rank(a4, d) == expected[d]);
  }
}

TEST_CASE("sectors match element traces") {
  for (const std::string& name : named_action_list()) {
    LinearAction act = named_action(name);
    int nclasses = static_cast<int>(act.group().conjugacy_classes().size());
    for (int c = 0; c < nclasses; ++c)
      for (int d : {0, 1, 2, 3, 6})
        CHECK(sector_vs_lefschetz(act, c, d));
  }
}

TEST_CASE("sectors do not depend on the representative") {
  for (const std::string& name : {"S3-irrep2", "A4-std"}) {
    LinearAction act = named_action(name);
    const FiniteGroup& G = act.group();
    for (const auto& cls : G.conjugacy_classes()) {
      auto profile = eigenvalue_multiset(act.rep, cls.representative);
      Cyclotomic tr = form_matrix(act, cls.representative, 3).trace();
      for (int m : cls.members) {
        CHECK(eigenvalue_multiset(act.rep, m) == profile);
        CHECK(form_matrix(act, m, 3).trace() == tr);
      }
    }
  }
}

TEST_CASE("projector rank agrees with the trace average") {
  for (const std::string& name : named_action_list()) {
    LinearAction act = named_action(name);
    for (int d : {0, 1, 2, 4}) {
      Rational avg = molien_oracle(act, d);
      CHECK(rat_is_integer(avg));
      CHECK(avg == rat(molien_projector_rank(act, d)));
    }
  }
}

TEST_CASE("degree and class validation") {
  LinearAction z3 = named_action("Z3-P1");
  CHECK_THROWS_AS(sector_contribution(z3, 0, -1), error);
  CHECK_THROWS_AS(sector_contribution(z3, 5, 2), error);
  CHECK_THROWS_AS(sector_contribution(z3, 0, 100), error);
  CHECK_THROWS_AS(kawasaki_chi(z3, -2), error);
}

TEST_CASE("reports are deterministic") {
  LinearAction a4 = named_action("A4-std");
  RRResult a = kawasaki_chi(a4, 4);
  RRResult b = kawasaki_chi(a4, 4);
  CHECK(a.total == b.total);
  CHECK(a.oracle == b.oracle);
  REQUIRE(a.sectors.size() == b.sectors.size());
  for (size_t i = 0; i < a.sectors.size(); ++i) {
    CHECK(a.sectors[i].contribution == b.sectors[i].contribution);
    CHECK(a.sectors[i].eigenvalues == b.sectors[i].eigenvalues);
    CHECK(a.sectors[i].profile == b.sectors[i].profile);
  }
}
