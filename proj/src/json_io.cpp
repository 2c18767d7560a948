#include "ekloc/json_io.hpp"

#include <optional>

namespace ekloc {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw error(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw error(where + ": missing key \"" + key + "\"");
  return *it;
}

long int_field(const json& j, const char* key, const std::string& where) {
  const json& v = field(j, key, where);
  if (!v.is_number_integer())
    throw error(where + "/" + key + ": expected an integer");
  return v.get<long>();
}

}  // namespace

json rational_to_json(const Rational& r) { return json(rat_to_string(r)); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return rat(j.get<long>());
  if (!j.is_string()) throw error("rational: expected a \"p/q\" string");
  return rat_parse(j.get<std::string>());
}

json cyclotomic_to_json(const Cyclotomic& c) {
  json coeffs = json::array();
  for (const Rational& r : c.coeffs()) coeffs.push_back(rat_to_string(r));
  return json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (j.is_number_integer() || j.is_string())
    return Cyclotomic(rational_from_json(j));
  long order = int_field(j, "order", "cyclotomic");
  if (order < 1) throw error("cyclotomic/order: must be positive");
  const json& coeffs = field(j, "coeffs", "cyclotomic");
  if (!coeffs.is_array()) throw error("cyclotomic/coeffs: expected an array");
  Cyclotomic value(0);
  long k = 0;
  for (const json& entry : coeffs) {
    value += Cyclotomic(rational_from_json(entry)) *
             Cyclotomic::root_of_unity(order, k);
    ++k;
  }
  return value;
}

json poly_to_json(const LaurentPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms())
    terms.push_back(json{{"exponents", m}, {"coeff", cyclotomic_to_json(c)}});
  return json{{"nvars", f.nvars()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
  long nvars = int_field(j, "nvars", "polynomial");
  const json& terms = field(j, "terms", "polynomial");
  if (!terms.is_array()) throw error("polynomial/terms: expected an array");
  LaurentPoly f(static_cast<int>(nvars));
  for (const json& t : terms) {
    const json& expo = field(t, "exponents", "polynomial/terms");
    if (!expo.is_array() || static_cast<long>(expo.size()) != nvars)
      throw error("polynomial/terms/exponents: wrong length");
    Monomial m;
    for (const json& e : expo) {
      if (!e.is_number_integer())
        throw error("polynomial/terms/exponents: expected integers");
      m.push_back(e.get<int>());
    }
    f.add_term(m, cyclotomic_from_json(field(t, "coeff", "polynomial/terms")));
  }
  return f;
}

Caps caps_from_json(const json& j) {
  if (!j.is_object()) throw error("caps: expected an object");
  Caps caps;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "group_order")
      caps.group_order = int_field(j, "group_order", "caps");
    else if (it.key() == "monomial_basis")
      caps.monomial_basis = int_field(j, "monomial_basis", "caps");
    else if (it.key() == "max_degree")
      caps.max_degree = static_cast<int>(int_field(j, "max_degree", "caps"));
    else
      throw error("caps: unknown key \"" + it.key() + "\"");
  }
  return caps;
}

namespace {

CycMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw error(where + ": expected a matrix");
  int rows = static_cast<int>(j.size());
  int cols = -1;
  for (const json& row : j) {
    if (!row.is_array()) throw error(where + ": expected rows of entries");
    if (cols < 0) cols = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != cols)
      throw error(where + ": ragged matrix");
  }
  CycMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m.at(i, k) = cyclotomic_from_json(j[i][k]);
  return m;
}

std::vector<std::vector<int>> perm_list_from_json(const json& j,
                                                  const std::string& where) {
  if (!j.is_array() || j.empty())
    throw error(where + ": expected a list of permutations");
  std::vector<std::vector<int>> out;
  for (const json& p : j) {
    if (!p.is_array()) throw error(where + ": expected 1-based image lists");
    std::vector<int> images;
    for (const json& e : p) {
      if (!e.is_number_integer()) throw error(where + ": expected integers");
      images.push_back(e.get<int>());
    }
    out.push_back(std::move(images));
  }
  return out;
}

}  // namespace

FiniteGroup group_from_json(const json& j, const Caps& caps) {
  if (j.is_string()) return FiniteGroup::named(j.get<std::string>(), caps);
  const json& type = field(j, "type", "group");
  if (!type.is_string()) throw error("group/type: expected a string");
  std::string t = type.get<std::string>();
  if (t == "named") {
    const json& name = field(j, "name", "group");
    if (!name.is_string()) throw error("group/name: expected a string");
    return FiniteGroup::named(name.get<std::string>(), caps);
  }
  if (t == "permutation") {
    long degree = int_field(j, "degree", "group");
    return FiniteGroup::from_permutations(
        static_cast<int>(degree),
        perm_list_from_json(field(j, "generators", "group"), "group/generators"),
        caps);
  }
  if (t == "matrix") {
    long order = int_field(j, "cyclotomic_order", "group");
    const json& gens = field(j, "generators", "group");
    if (!gens.is_array() || gens.empty())
      throw error("group/generators: expected a list of matrices");
    std::vector<CycMatrix> mats;
    for (size_t i = 0; i < gens.size(); ++i)
      mats.push_back(matrix_from_json(gens[i], "group/generators/" +
                                                   std::to_string(i)));
    return FiniteGroup::from_matrices(order, mats, caps);
  }
  throw error("group/type: unknown type \"" + t + "\"");
}

LinearAction action_from_json(const json& j, const Caps& caps) {
  auto G = std::make_shared<FiniteGroup>(
      group_from_json(field(j, "group", "action"), caps));
  const json& rep = field(j, "rep", "action");
  const json& images = field(rep, "generator_images", "action/rep");
  if (!images.is_array() ||
      static_cast<int>(images.size()) != G->num_generators())
    throw error("action/rep/generator_images: need one matrix per generator");
  std::vector<CycMatrix> mats;
  for (size_t i = 0; i < images.size(); ++i)
    mats.push_back(matrix_from_json(
        images[i], "action/rep/generator_images/" + std::to_string(i)));
  LinearAction act = make_linear_action(MatrixRep::from_generator_images(*G, mats));
  act.owned_group = G;
  return act;
}

FixedPointData gkm_from_json(const json& j) {
  const json& vars = field(j, "variables", "gkm");
  if (!vars.is_array() || vars.empty())
    throw error("gkm/variables: expected a nonempty array of names");
  std::vector<std::string> names;
  for (const json& v : vars) {
    if (!v.is_string()) throw error("gkm/variables: expected strings");
    names.push_back(v.get<std::string>());
  }
  int nvars = static_cast<int>(names.size());

  const json& pts = field(j, "points", "gkm");
  if (!pts.is_array()) throw error("gkm/points: expected an array");
  std::vector<FixedPoint> points;
  for (const json& p : pts) {
    FixedPoint fp;
    const json& label = field(p, "label", "gkm/points");
    if (!label.is_string()) throw error("gkm/points/label: expected a string");
    fp.label = label.get<std::string>();
    const json& tangent = field(p, "tangent", "gkm/points");
    if (!tangent.is_array()) throw error("gkm/points/tangent: expected an array");
    for (const json& w : tangent) {
      if (!w.is_array()) throw error("gkm/points/tangent: expected exponent lists");
      Monomial m;
      for (const json& e : w) {
        if (!e.is_number_integer())
          throw error("gkm/points/tangent: expected integers");
        m.push_back(e.get<int>());
      }
      fp.tangent.push_back(std::move(m));
    }
    points.push_back(std::move(fp));
  }
  return make_fixed_point_data(nvars, std::move(points), std::move(names));
}

EquivClass equiv_class_from_json(const json& j, const FixedPointData& data) {
  const json& restr = field(j, "restrictions", "class");
  if (!restr.is_array() || restr.size() != data.points.size())
    throw error("class/restrictions: need one polynomial per fixed point (" +
                std::to_string(data.points.size()) + ")");
  std::vector<LaurentPoly> v;
  for (size_t i = 0; i < restr.size(); ++i) {
    LaurentPoly p = poly_from_json(restr[i]);
    if (p.nvars() != data.nvars)
      throw error("class/restrictions/" + std::to_string(i) +
                  ": wrong number of variables");
    v.push_back(std::move(p));
  }
  return EquivClass(&data, std::move(v));
}

LoadedGSet gset_from_json(const json& j, const Caps& caps) {
  auto G = std::make_shared<FiniteGroup>(
      group_from_json(field(j, "group", "gset"), caps));
  long npoints = int_field(j, "points", "gset");
  if (npoints < 0) throw error("gset/points: must be nonnegative");
  auto images =
      perm_list_from_json(field(j, "action", "gset"), "gset/action");
  if (static_cast<int>(images.size()) != G->num_generators())
    throw error("gset/action: need one permutation per group generator");
  for (auto& p : images) {
    if (static_cast<long>(p.size()) != npoints)
      throw error("gset/action: permutation has wrong length");
    for (int& v : p) {
      if (v < 1 || v > npoints)
        throw error("gset/action: images must be 1-based points");
      --v;
    }
  }
  GSet space = GSet::from_generator_images(*G, static_cast<int>(npoints), images);
  return LoadedGSet{G, std::move(space)};
}

GSheaf sheaf_from_json(const json& j, const GSet& X) {
  if (!j.is_array()) throw error("sheaf: expected an array of orbit entries");
  size_t norbits = X.orbits().size();
  std::vector<std::optional<MatrixRep>> reps(norbits);
  for (size_t i = 0; i < j.size(); ++i) {
    std::string where = "sheaf/" + std::to_string(i);
    long x1 = int_field(j[i], "orbit_rep", where);
    if (x1 < 1 || x1 > X.size())
      throw error(where + "/orbit_rep: no such point");
    int x = static_cast<int>(x1) - 1;
    int orbit = X.orbit_of(x);
    if (X.orbit_rep(orbit) != x)
      throw error(where + "/orbit_rep: must be the least point of its orbit (" +
                  std::to_string(X.orbit_rep(orbit) + 1) + ")");
    if (reps[orbit])
      throw error(where + ": duplicate entry for this orbit");
    const MaterializedSubgroup& stab = *X.orbit_stabilizer(orbit);
    const json& images =
        field(field(j[i], "rep", where), "generator_images", where + "/rep");
    if (!images.is_array() ||
        static_cast<int>(images.size()) != stab.group.num_generators())
      throw error(where + "/rep/generator_images: need one matrix per "
                          "stabilizer generator (" +
                  std::to_string(stab.group.num_generators()) + ")");
    std::vector<CycMatrix> mats;
    for (size_t k = 0; k < images.size(); ++k)
      mats.push_back(matrix_from_json(
          images[k], where + "/rep/generator_images/" + std::to_string(k)));
    reps[orbit] = MatrixRep::from_generator_images(stab.group, mats);
  }
  std::vector<MatrixRep> ordered;
  for (size_t o = 0; o < norbits; ++o) {
    if (!reps[o])
      throw error("sheaf: missing entry for the orbit of point " +
                  std::to_string(X.orbit_rep(static_cast<int>(o)) + 1));
    ordered.push_back(std::move(*reps[o]));
  }
  return GSheaf(&X, std::move(ordered));
}

}  // namespace ekloc
