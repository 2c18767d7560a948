#include "ekloc/quotient_rr.hpp"

#include <algorithm>

namespace ekloc {

namespace {

/** Eigenvalues of rho(g), multiplicity-expanded in (order, exponent) order. */
std::vector<Cyclotomic> eigenvalue_vector(const MatrixRep& rep, int g) {
  std::vector<Cyclotomic> v;
  for (const auto& [key, mult] : eigenvalue_multiset(rep, g))
    for (long i = 0; i < mult; ++i)
      v.push_back(Cyclotomic::root_of_unity(key.first, key.second));
  return v;
}

/** Eigenvalues of g on the coordinates: those of rho(g^-1). */
std::vector<Cyclotomic> section_profile(const LinearAction& act, int g) {
  return eigenvalue_vector(act.rep, act.group().inv(g));
}

/**
 * The universal character of sections of O(d) on P^{dim-1}, as a symmetric
 * Laurent polynomial obtained by collapsing the localization sum.
 */
LaurentPoly section_character(int dim, int d, const Caps& caps) {
  if (d < 0) throw error("degree must be nonnegative");
  if (d > caps.max_degree) throw error("degree exceeds the caps");
  FixedPointData data = projective_space_data(dim - 1, caps);
  return pushforward_to_point(o_d_class(data, d, caps));
}

SectorReport make_sector(const LinearAction& act, int class_index,
                         const LaurentPoly& chi_d) {
  const FiniteGroup& G = act.group();
  const auto& classes = G.conjugacy_classes();
  if (class_index < 0 || class_index >= static_cast<int>(classes.size()))
    throw error("no such conjugacy class");
  const auto& cls = classes[class_index];

  SectorReport s;
  s.class_index = class_index;
  s.representative = cls.representative;
  s.class_size = static_cast<long>(cls.members.size());
  s.eigenvalues = eigenvalue_vector(act.rep, cls.representative);
  s.profile = eigenvalue_multiset(act.rep, cls.representative);
  Cyclotomic value = chi_d.evaluate(section_profile(act, cls.representative));
  s.contribution = value * Cyclotomic(rat(s.class_size, G.size()));
  s.rational = s.contribution.is_rational();
  return s;
}

}  // namespace

LinearAction make_linear_action(MatrixRep rep) {
  if (rep.dim() < 1) throw error("action needs a positive-dimensional space");
  if (!rep.is_faithful()) throw error("action must be faithful");
  return LinearAction{std::move(rep), nullptr};
}

LinearAction named_action(const std::string& name) {
  if (name == "Z3-P1") {
    auto G = std::make_shared<FiniteGroup>(FiniteGroup::named("Z/3"));
    CycMatrix m(2, 2);
    m.at(0, 0) = Cyclotomic(1);
    m.at(1, 1) = Cyclotomic::root_of_unity(3, 1);
    LinearAction act = make_linear_action(MatrixRep::from_generator_images(*G, {m}));
    act.owned_group = G;
    return act;
  }
  if (name == "S3-irrep2") {
    auto G = std::make_shared<FiniteGroup>(FiniteGroup::named("S3"));
    CycMatrix swap(2, 2), rot(2, 2);
    swap.at(0, 1) = Cyclotomic(1);
    swap.at(1, 0) = Cyclotomic(1);
    rot.at(0, 0) = Cyclotomic::root_of_unity(3, 1);
    rot.at(1, 1) = Cyclotomic::root_of_unity(3, 2);
    LinearAction act =
        make_linear_action(MatrixRep::from_generator_images(*G, {swap, rot}));
    act.owned_group = G;
    return act;
  }
  if (name == "Z5-weights(1,2)") {
    auto G = std::make_shared<FiniteGroup>(FiniteGroup::named("Z/5"));
    CycMatrix m(2, 2);
    m.at(0, 0) = Cyclotomic::root_of_unity(5, 1);
    m.at(1, 1) = Cyclotomic::root_of_unity(5, 2);
    LinearAction act = make_linear_action(MatrixRep::from_generator_images(*G, {m}));
    act.owned_group = G;
    return act;
  }
  if (name == "A4-std") {
    auto G = std::make_shared<FiniteGroup>(FiniteGroup::named("A4"));
    // The 3-dimensional summand of the permutation representation on the
    // basis f_i = e_i - e_4: the image of g sends f_i to f_{g(i)} - f_{g(4)}
    // with f_4 read as zero.
    std::vector<CycMatrix> images;
    for (int i = 0; i < G->num_generators(); ++i) {
      const std::vector<int>& p = G->perm_of(G->generator(i));
      CycMatrix m(3, 3);
      for (int col = 0; col < 3; ++col) {
        if (p[col] < 3) m.at(p[col], col) = m.at(p[col], col) + Cyclotomic(1);
        if (p[3] < 3) m.at(p[3], col) = m.at(p[3], col) - Cyclotomic(1);
      }
      images.push_back(std::move(m));
    }
    LinearAction act =
        make_linear_action(MatrixRep::from_generator_images(*G, images));
    act.owned_group = G;
    return act;
  }
  throw error("unknown builtin action: " + name);
}

std::vector<std::string> named_action_list() {
  return {"Z3-P1", "S3-irrep2", "Z5-weights(1,2)", "A4-std"};
}

std::vector<Monomial> monomial_basis(int nvars, int d, const Caps& caps) {
  if (nvars < 1) throw error("need at least one variable");
  if (d < 0) throw error("degree must be nonnegative");
  long long count = 1;  // binom(nvars - 1 + d, d), checked against the cap
  for (int i = 1; i <= d; ++i) {
    count = count * (nvars - 1 + i) / i;
    if (count > caps.monomial_basis) throw error("monomial basis exceeds the caps");
  }
  std::vector<Monomial> basis;
  Monomial expo(nvars, 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      expo[var] = remaining;
      basis.push_back(expo);
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      expo[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  return basis;
}

CycMatrix form_matrix(const LinearAction& act, int g, int d, const Caps& caps) {
  const FiniteGroup& G = act.group();
  if (g < 0 || g >= G.size()) throw error("no such element");
  if (d < 0) throw error("degree must be nonnegative");
  int n = act.dim();
  std::vector<Monomial> basis = monomial_basis(n, d, caps);
  std::map<Monomial, int> row;
  for (size_t i = 0; i < basis.size(); ++i) row[basis[i]] = static_cast<int>(i);

  // g sends the coordinate x_k to sum_j rho(g^-1)_{kj} x_j.
  const CycMatrix& A = act.rep.at(G.inv(g));
  std::vector<LaurentPoly> image;
  for (int k = 0; k < n; ++k) {
    LaurentPoly f(n);
    for (int j = 0; j < n; ++j) {
      if (A.at(k, j).is_zero()) continue;
      Monomial e(n, 0);
      e[j] = 1;
      f.add_term(e, A.at(k, j));
    }
    image.push_back(std::move(f));
  }

  CycMatrix M(static_cast<int>(basis.size()), static_cast<int>(basis.size()));
  for (size_t c = 0; c < basis.size(); ++c) {
    LaurentPoly f = LaurentPoly::constant(n, Cyclotomic(1));
    for (int k = 0; k < n; ++k)
      for (int e = 0; e < basis[c][k]; ++e) f *= image[k];
    for (const auto& [m, coef] : f.terms())
      M.at(row.at(m), static_cast<int>(c)) = coef;
  }
  return M;
}

Cyclotomic sector_contribution(const LinearAction& act, int class_index, int d,
                               const Caps& caps) {
  return make_sector(act, class_index, section_character(act.dim(), d, caps))
      .contribution;
}

SectorReport sector_report(const LinearAction& act, int class_index, int d,
                           const Caps& caps) {
  return make_sector(act, class_index, section_character(act.dim(), d, caps));
}

RRResult kawasaki_chi(const LinearAction& act, int d, const Caps& caps) {
  const FiniteGroup& G = act.group();
  LaurentPoly chi_d = section_character(act.dim(), d, caps);

  RRResult R;
  R.degree = d;
  Cyclotomic total(0);
  for (int c = 0; c < static_cast<int>(G.conjugacy_classes().size()); ++c) {
    R.sectors.push_back(make_sector(act, c, chi_d));
    total = total + R.sectors.back().contribution;
  }
  if (!total.is_rational()) throw error("sector total is not rational");
  R.total = total.rational_value();
  if (!rat_is_integer(R.total) || R.total < 0)
    throw error("sector total is not a nonnegative integer");
  R.oracle = molien_oracle(act, d, caps);
  R.verdict = (R.total == R.oracle);
  return R;
}

Rational molien_oracle(const LinearAction& act, int d, const Caps& caps) {
  const FiniteGroup& G = act.group();
  Cyclotomic total(0);
  for (int g = 0; g < G.size(); ++g)
    total = total + form_matrix(act, g, d, caps).trace();
  Cyclotomic avg = total * Cyclotomic(rat(1, G.size()));
  if (!avg.is_rational()) throw error("Molien average is not rational");
  return avg.rational_value();
}

long molien_projector_rank(const LinearAction& act, int d, const Caps& caps) {
  const FiniteGroup& G = act.group();
  CycMatrix sum = form_matrix(act, G.identity(), d, caps);
  for (int g = 0; g < G.size(); ++g) {
    if (g == G.identity()) continue;
    sum = sum + form_matrix(act, g, d, caps);
  }
  return mat_rank(sum.scaled(Cyclotomic(rat(1, G.size()))));
}

bool sector_vs_lefschetz(const LinearAction& act, int class_index, int d,
                         const Caps& caps) {
  const FiniteGroup& G = act.group();
  const auto& classes = G.conjugacy_classes();
  if (class_index < 0 || class_index >= static_cast<int>(classes.size()))
    throw error("no such conjugacy class");
  const auto& cls = classes[class_index];
  Cyclotomic lhs = sector_contribution(act, class_index, d, caps);
  Cyclotomic rhs = form_matrix(act, cls.representative, d, caps).trace() *
                   Cyclotomic(rat(static_cast<long>(cls.members.size()), G.size()));
  return lhs == rhs;
}

}  // namespace ekloc
