#include "ekloc/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ekloc/gset.hpp"
#include "ekloc/oracles.hpp"
#include "ekloc/quotient_rr.hpp"

namespace ekloc {

namespace {

std::string count_str(long k, const std::string& what) {
  return std::to_string(k) + " " + what;
}

CheckResult counted(std::string name, long expected, long actual,
                    const std::string& what) {
  CheckResult c;
  c.name = std::move(name);
  c.expected = count_str(expected, what);
  c.actual = count_str(actual, what);
  c.pass = (expected == actual);
  return c;
}

CheckResult holds(std::string name, bool ok) {
  CheckResult c;
  c.name = std::move(name);
  c.expected = "holds";
  c.actual = ok ? "holds" : "fails";
  c.pass = ok;
  return c;
}

CheckResult value_check(std::string name, const std::string& expected,
                        const std::string& actual) {
  CheckResult c;
  c.name = std::move(name);
  c.expected = expected;
  c.actual = actual;
  c.pass = (expected == actual);
  return c;
}

Cyclotomic random_cyc(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-4, 4);
  return Cyclotomic(rat(coef(rng))) +
         Cyclotomic::root_of_unity(3, 1) * Cyclotomic(rat(coef(rng)));
}

StabilizerClass random_class(std::mt19937_64& rng, const GSet& X) {
  const StabilizerPairSet& P = X.stabilizer_pairs();
  std::vector<Cyclotomic> v(P.size());
  for (const auto& orbit : P.orbits) {
    Cyclotomic c = random_cyc(rng);
    for (int i : orbit) v[i] = c;
  }
  return StabilizerClass(&X, std::move(v));
}

GSheaf random_sheaf(std::mt19937_64& rng, const GSet& X) {
  std::vector<MatrixRep> reps;
  for (size_t i = 0; i < X.orbits().size(); ++i) {
    const FiniteGroup& H = X.orbit_stabilizer(static_cast<int>(i))->group;
    switch (rng() % 3) {
      case 0:
        reps.push_back(MatrixRep::trivial(H));
        break;
      case 1:
        reps.push_back(MatrixRep::regular(H));
        break;
      default:
        reps.push_back(MatrixRep::regular(H).direct_sum(MatrixRep::trivial(H)));
        break;
    }
  }
  return GSheaf(&X, std::move(reps));
}

LaurentPoly random_symmetric(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<int> expo(-2, 2), coef(-3, 3), nterms(1, 3);
  LaurentPoly base(nvars);
  int k = nterms(rng);
  for (int t = 0; t < k; ++t) {
    Monomial m(nvars, 0);
    for (int& e : m) e = expo(rng);
    base.add_term(m, Cyclotomic(rat(coef(rng))));
  }
  std::vector<int> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly sym(nvars);
  do {
    sym += base.permuted(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sym;
}

// ---------------------------------------------------------------------------

CriterionResult abelian_collapse(const Caps& caps) {
  CriterionResult r;
  r.title = "abelian localization collapse on projective spaces";
  for (int n = 1; n <= 4; ++n) {
    FixedPointData data = projective_space_data(n, caps);
    long good = 0;
    for (int d = 0; d <= 6; ++d)
      if (pushforward_to_point(o_d_class(data, d, caps)) ==
          oracles::complete_homogeneous(n + 1, d))
        ++good;
    r.checks.push_back(counted(
        "sections of O(d) on P^" + std::to_string(n) +
            " equal the monomial enumeration, d = 0..6",
        7, good, "degrees"));
  }
  r.finish();
  return r;
}

CriterionResult euler_expansion(const Caps& caps) {
  CriterionResult r;
  r.title = "fixed point expansion of the Euler class";

  std::vector<std::pair<std::string, FixedPointData>> spaces;
  for (int n = 1; n <= 3; ++n)
    spaces.emplace_back("P^" + std::to_string(n), projective_space_data(n, caps));
  spaces.emplace_back("full flag of rank 2", flag_data(full_flag_shape(2), caps).data);
  spaces.emplace_back("full flag of rank 3", flag_data(full_flag_shape(3), caps).data);
  spaces.emplace_back("(2,1) flag of rank 3",
                      flag_data(FlagShape{3, {2, 1}}, caps).data);
  spaces.emplace_back("(2) flag of rank 2",
                      flag_data(FlagShape{2, {2}}, caps).data);

  for (const auto& [name, data] : spaces) {
    EquivClass euler = euler_class_expansion(data);
    EquivClass total = EquivClass::zero(data);
    bool points_ok = true;
    for (size_t l = 0; l < data.points.size(); ++l) {
      EquivClass part = point_pushforward_class(data, static_cast<int>(l));
      points_ok = points_ok &&
                  pushforward_to_point(part) ==
                      LaurentPoly::constant(data.nvars, Cyclotomic(1));
      total = total + part;
    }
    bool ok = points_ok && euler == total &&
              pushforward_to_point(euler) ==
                  LaurentPoly::constant(
                      data.nvars,
                      Cyclotomic(static_cast<long>(data.points.size())));
    r.checks.push_back(holds(
        "Euler class on " + name + " decomposes into " +
            std::to_string(data.points.size()) + " point contributions",
        ok));
  }
  r.finish();
  return r;
}

CriterionResult flag_identities(std::mt19937_64& rng, const Caps&) {
  CriterionResult r;
  r.title = "flag projection identities with Weyl constants";

  struct Shape {
    FlagShape shape;
    long weyl;
    long ratio;
  };
  std::vector<Shape> shapes = {
      {FlagShape{2, {1, 1}}, 2, 2},
      {FlagShape{3, {1, 1, 1}}, 6, 6},
      {FlagShape{3, {2, 1}}, 6, 3},
  };
  for (const Shape& s : shapes) {
    long good = 0;
    for (int t = 0; t < 20; ++t) {
      LaurentPoly alpha = random_symmetric(rng, s.shape.n);
      FlagIdentityReport rep = weyl_constant_identities(s.shape, alpha);
      if (rep.ok() && rep.weyl_order == s.weyl &&
          rep.weyl_order / rep.levi_order == s.ratio)
        ++good;
    }
    std::string label;
    for (size_t i = 0; i < s.shape.composition.size(); ++i)
      label += (i ? "," : "(") + std::to_string(s.shape.composition[i]);
    label += ")";
    r.checks.push_back(counted(
        "all three projection identities on the " + label +
            " flag, constants " + std::to_string(s.weyl) + " and " +
            std::to_string(s.ratio),
        20, good, "random symmetric classes"));
  }
  r.finish();
  return r;
}

void dominant_weights(int n, int bound, std::vector<int>& prefix,
                      std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == n) {
    out.push_back(prefix);
    return;
  }
  int top = prefix.empty() ? bound : prefix.back();
  for (int v = top; v >= 0; --v) {
    prefix.push_back(v);
    dominant_weights(n, bound, prefix, out);
    prefix.pop_back();
  }
}

CriterionResult weyl_characters(const Caps& caps) {
  CriterionResult r;
  r.title = "Weyl characters against tableau and dimension oracles";
  for (int n = 1; n <= 3; ++n) {
    FlagData flag = flag_data(full_flag_shape(n), caps);
    std::vector<std::vector<int>> lambdas;
    std::vector<int> prefix;
    dominant_weights(n, 3, prefix, lambdas);
    long good = 0;
    for (const auto& lam : lambdas) {
      LaurentPoly chi = pushforward_to_point(line_bundle_class(flag, lam, caps));
      std::vector<Cyclotomic> ones(n, Cyclotomic(1));
      if (chi == oracles::schur_polynomial(n, lam) &&
          chi.evaluate(ones) == Cyclotomic(oracles::gl_dimension(lam)))
        ++good;
    }
    r.checks.push_back(counted(
        "rank " + std::to_string(n) +
            " line bundle characters equal Schur polynomials with the right "
            "dimensions",
        static_cast<long>(lambdas.size()), good, "dominant weights"));
  }
  r.finish();
  return r;
}

CriterionResult nonabelian_localization(std::mt19937_64& rng, const Caps& caps) {
  CriterionResult r;
  r.title = "nonabelian localization on finite G-sets";

  for (const std::string& name : {"S3", "S4", "Z/6", "D4", "Q8", "A4"}) {
    FiniteGroup G = FiniteGroup::named(name, caps);
    long expected = 0, good = 0;
    for (const Subgroup& H : subgroup_conjugacy_reps(G)) {
      if (G.size() / H.size() > 12) continue;
      GSet X = GSet::cosets(G, H);

      // The pair-orbit indicators are a basis of the model space; the sheaf
      // classes add trace-generated elements on top.
      std::vector<StabilizerClass> classes;
      const StabilizerPairSet& P = X.stabilizer_pairs();
      for (const auto& orbit : P.orbits) {
        std::vector<Cyclotomic> v(P.size());
        for (int i : orbit) v[i] = Cyclotomic(1);
        classes.emplace_back(&X, std::move(v));
      }
      classes.push_back(GSheaf::structure(X).to_class());
      classes.push_back(random_sheaf(rng, X).to_class());

      int nclasses = static_cast<int>(G.conjugacy_classes().size());
      for (const StabilizerClass& alpha : classes)
        for (int c = 0; c < nclasses; ++c) {
          StabilizerClass part = alpha.component(c);
          ++expected;
          if (localize_at_class(X, alpha, c, SummandRoute::support) == part &&
              localize_at_class(X, alpha, c, SummandRoute::centralizer) == part)
            ++good;
        }
    }
    r.checks.push_back(counted(
        name + ": localization at every class reproduces the component on "
               "every transitive set of size at most 12",
        expected, good, "localizations"));
  }
  r.finish();
  return r;
}

CriterionResult twisting_consistency(std::mt19937_64& rng, const Caps& caps) {
  CriterionResult r;
  r.title = "twisting consistency";

  // Each case twists classes on G / <h> by the central element h.
  auto run_case = [&](const std::string& gname, int h, long& expected,
                      long& good) {
    FiniteGroup G = FiniteGroup::named(gname, caps);
    GSet X = GSet::cosets(G, subgroup_closure(G, {h}));
    int e_class = G.class_index_of(G.identity());
    int h_class = G.class_index_of(h);

    for (int t = 0; t < 3; ++t) {
      GSheaf F = random_sheaf(rng, X);
      StabilizerClass beta = F.to_class();
      ++expected;
      if (twist_central(beta, h) == twist_via_reps(F, h)) ++good;
      // Twisting moves the component at {h} onto the untwisted component.
      StabilizerClass gamma = random_class(rng, X) + beta;
      ++expected;
      if (twist_central(gamma, h).component(e_class) ==
          twist_central(gamma.component(h_class), h))
        ++good;
    }
  };

  long expected = 0, good = 0;
  {
    FiniteGroup Z6 = FiniteGroup::named("Z/6", caps);
    int g = Z6.generator(0);
    run_case("Z/6", Z6.mul(g, Z6.mul(g, g)), expected, good);  // order two
    run_case("Z/6", Z6.mul(g, g), expected, good);             // order three
  }
  {
    FiniteGroup D4 = FiniteGroup::named("D4", caps);
    int rot = D4.generator(0);
    run_case("D4", D4.mul(rot, rot), expected, good);
  }
  {
    FiniteGroup Q8 = FiniteGroup::named("Q8", caps);
    int i = Q8.generator(0);
    run_case("Q8", Q8.mul(i, i), expected, good);
  }
  r.checks.push_back(counted(
      "translation twist equals the eigensheaf twist and moves the central "
      "component onto the untwisted one",
      expected, good, "twists"));

  // Independence of the class representative in the centralizer route.
  long pairs = 0, pairs_good = 0;
  for (const std::string& gname : {"S3", "D4"}) {
    FiniteGroup G = FiniteGroup::named(gname, caps);
    GSet X = GSet::natural(G);
    int nclasses = static_cast<int>(G.conjugacy_classes().size());
    for (int c = 0; c < nclasses; ++c) {
      const auto& members = G.conjugacy_classes()[c].members;
      if (members.size() < 2) continue;
      SliceSpace S = build_slice(X, c);
      if (S.space.size() == 0) continue;
      StabilizerClass beta = random_class(rng, S.space);
      ++pairs;
      if (central_summand_centralizer(X, S, beta, members.front()) ==
          central_summand_centralizer(X, S, beta, members.back()))
        ++pairs_good;
    }
  }
  r.checks.push_back(counted(
      "central summand through the centralizer model is representative "
      "independent",
      pairs, pairs_good, "classes"));
  r.finish();
  return r;
}

CriterionResult invariants_on_slices(std::mt19937_64& rng, const Caps& caps) {
  CriterionResult r;
  r.title = "invariants and twist invariance on slices";

  long taut = 0, taut_good = 0;
  long dims = 0, dims_good = 0;
  for (const std::string& gname : {"S3", "D4", "A4"}) {
    FiniteGroup G = FiniteGroup::named(gname, caps);
    GSet N = GSet::natural(G);
    GSet X = GSet::disjoint_union(N, GSet::point(G));

    // Invariants of sheaf classes match the intertwiner dimension oracle.
    std::vector<GSheaf> sheaves;
    sheaves.push_back(GSheaf::structure(X));
    sheaves.push_back(random_sheaf(rng, X));
    sheaves.push_back(random_sheaf(rng, X));
    for (const GSheaf& F : sheaves) {
      OrbitFunction inv = invariants(F.to_class());
      for (size_t i = 0; i < X.orbits().size(); ++i) {
        const FiniteGroup& H = X.orbit_stabilizer(static_cast<int>(i))->group;
        ++dims;
        if (inv.values[i] ==
            Cyclotomic(hom_dimension(MatrixRep::trivial(H), F.rep(static_cast<int>(i)))))
          ++dims_good;
      }
    }

    // The tautological twist does not change invariants on any slice.
    int nclasses = static_cast<int>(G.conjugacy_classes().size());
    for (int c = 0; c < nclasses; ++c) {
      SliceSpace S = build_slice(X, c);
      if (S.space.size() == 0) continue;
      GMap f = slice_projection(S, X);
      std::vector<StabilizerClass> betas;
      betas.push_back(random_class(rng, S.space));
      betas.push_back(random_class(rng, S.space));
      betas.push_back(pullback(f, GSheaf::structure(X).to_class()));
      betas.push_back(pullback(f, random_sheaf(rng, X).to_class()));
      for (const StabilizerClass& beta : betas) {
        ++taut;
        if (invariants(twist_tautological(S, beta)) == invariants(beta))
          ++taut_good;
      }
    }
  }
  r.checks.push_back(counted(
      "invariants of sheaf classes equal the intertwiner dimension oracle",
      dims, dims_good, "orbits"));
  r.checks.push_back(counted(
      "tautological twist preserves invariants on every nonempty slice",
      taut, taut_good, "classes"));
  r.finish();
  return r;
}

CriterionResult riemann_roch_sectors(const Caps& caps) {
  CriterionResult r;
  r.title = "Riemann-Roch sector sums for projective quotients";

  {
    LinearAction z3 = named_action("Z3-P1");
    RRResult res = kawasaki_chi(z3, 6, caps);
    std::string sectors;
    for (const SectorReport& s : res.sectors) {
      if (!sectors.empty()) sectors += ", ";
      sectors += s.rational ? rat_to_string(s.contribution.rational_value())
                            : s.contribution.to_string();
    }
    r.checks.push_back(value_check("Z3-P1 degree 6 sectors", "7/3, 1/3, 1/3",
                                   sectors));
    r.checks.push_back(
        value_check("Z3-P1 degree 6 total", "3", rat_to_string(res.total)));
  }
  {
    LinearAction s3 = named_action("S3-irrep2");
    RRResult res = kawasaki_chi(s3, 6, caps);
    r.checks.push_back(
        value_check("S3-irrep2 degree 6 total", "2", rat_to_string(res.total)));
  }

  struct Range {
    std::string name;
    int dmax;
  };
  for (const Range& range : {Range{"Z3-P1", 20}, Range{"Z5-weights(1,2)", 20},
                             Range{"S3-irrep2", 10}, Range{"A4-std", 6}}) {
    LinearAction act = named_action(range.name);
    int nclasses = static_cast<int>(act.group().conjugacy_classes().size());
    long expected = 0, good = 0;
    for (int d = 0; d <= range.dmax; ++d) {
      ++expected;
      if (kawasaki_chi(act, d, caps).verdict) ++good;
      for (int c = 0; c < nclasses; ++c) {
        ++expected;
        if (sector_vs_lefschetz(act, c, d, caps)) ++good;
      }
    }
    r.checks.push_back(counted(
        range.name + ": sector sums match the Molien average and every "
                     "sector matches its element trace, d = 0.." +
            std::to_string(range.dmax),
        expected, good, "comparisons"));
  }
  r.finish();
  return r;
}

CriterionResult class_separation(const Caps& caps) {
  CriterionResult r;
  r.title = "class separation by eigenvalue data";

  for (const std::string& gname : {"S3", "S4"}) {
    FiniteGroup G = FiniteGroup::named(gname, caps);
    MatrixRep perm = MatrixRep::defining_permutation(G);
    long nclasses = static_cast<long>(G.conjugacy_classes().size());
    long good = 0;
    for (long c = 0; c < nclasses; ++c)
      if (good_embedding_check(G, {perm}, static_cast<int>(c)).separated) ++good;
    r.checks.push_back(counted(
        gname + ": the permutation representation separates every class",
        nclasses, good, "classes"));
  }

  {
    FiniteGroup Q8 = FiniteGroup::named("Q8", caps);
    MatrixRep rep = MatrixRep::defining_matrix(Q8);
    int minus_one = -1;
    for (int g = 0; g < Q8.size(); ++g)
      if (Q8.element_order(g) == 2) minus_one = g;
    EmbeddingCheck central =
        good_embedding_check(Q8, {rep}, Q8.class_index_of(minus_one));
    r.checks.push_back(holds(
        "Q8: the two-dimensional representation separates the central "
        "involution",
        central.separated));
    EmbeddingCheck collide =
        good_embedding_check(Q8, {rep}, Q8.class_index_of(Q8.generator(0)));
    r.checks.push_back(holds(
        "Q8: the same representation collides the order-four classes, with a "
        "witness",
        !collide.separated && collide.colliding_class >= 0));
  }

  {
    FiniteGroup S3 = FiniteGroup::named("S3", caps);
    bool rejected = false;
    try {
      good_embedding_check(S3, {MatrixRep::trivial(S3)}, 0);
    } catch (const error&) {
      rejected = true;
    }
    r.checks.push_back(
        holds("a non-faithful representation list is rejected", rejected));
  }
  r.finish();
  return r;
}

}  // namespace

CriterionResult run_criterion(int index, std::uint64_t seed, const Caps& caps) {
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index)));
  CriterionResult r;
  try {
    switch (index) {
      case 1: r = abelian_collapse(caps); break;
      case 2: r = euler_expansion(caps); break;
      case 3: r = flag_identities(rng, caps); break;
      case 4: r = weyl_characters(caps); break;
      case 5: r = nonabelian_localization(rng, caps); break;
      case 6: r = twisting_consistency(rng, caps); break;
      case 7: r = invariants_on_slices(rng, caps); break;
      case 8: r = riemann_roch_sectors(caps); break;
      case 9: r = class_separation(caps); break;
      default: throw error("no such criterion: " + std::to_string(index));
    }
  } catch (const error& e) {
    r.checks.push_back(value_check("criterion ran to completion", "no errors",
                                   std::string("error: ") + e.what()));
    r.pass = false;
  }
  r.index = index;
  return r;
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed, const Caps& caps) {
  std::vector<CriterionResult> out;
  for (int k = 1; k <= 9; ++k) out.push_back(run_criterion(k, seed, caps));
  return out;
}

}  // namespace ekloc
