#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "ekloc/json_io.hpp"
#include "ekloc/oracles.hpp"
#include "ekloc/verify.hpp"

using namespace ekloc;

TEST_CASE("rational json round trip") {
  for (const char* s : {"0", "1", "-3", "7/3", "-22/7", "123456789/1000003"}) {
    Rational r = rat_parse(s);
    json j = rational_to_json(r);
    CHECK(j.is_string());
    CHECK(j.get<std::string>() == s);
    CHECK(rational_from_json(j) == r);
  }
  CHECK(rational_from_json(json(5)) == rat(5));
  CHECK(rational_from_json(json(-2)) == rat(-2));
  CHECK_THROWS_AS(rational_from_json(json::parse("1.5")), error);
  CHECK_THROWS_AS(rational_from_json(json::parse("[1]")), error);
  CHECK_THROWS_AS(rational_from_json(json("3/0")), error);
}

TEST_CASE("cyclotomic json round trip") {
  Cyclotomic z = rat(3, 7) * Cyclotomic::root_of_unity(5, 2) +
                 Cyclotomic(rat(-1, 2));
  json j = cyclotomic_to_json(z);
  CHECK(j.at("order").get<long>() == 5);
  CHECK(cyclotomic_from_json(j) == z);

  // Alternate accepted input forms: bare rational string, bare integer.
  CHECK(cyclotomic_from_json(json("2/3")) == Cyclotomic(rat(2, 3)));
  CHECK(cyclotomic_from_json(json(-4)) == Cyclotomic(-4));

  // The zeta_3 + zeta_3^2 = -1 collapse must survive a round trip.
  Cyclotomic collapsed =
      Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
  json jc = cyclotomic_to_json(collapsed);
  CHECK(jc.at("order").get<long>() == 1);
  CHECK(cyclotomic_from_json(jc) == Cyclotomic(-1));

  CHECK_THROWS_AS(cyclotomic_from_json(json::parse("{\"order\":0,\"coeffs\":[]}")),
                  error);
  CHECK_THROWS_AS(cyclotomic_from_json(json::parse("{\"coeffs\":[\"1\"]}")), error);
}

TEST_CASE("polynomial json round trip") {
  LaurentPoly p(2);
  p.add_term({1, -2}, Cyclotomic(rat(5, 3)));
  p.add_term({0, 0}, Cyclotomic::root_of_unity(4, 1));
  json j = poly_to_json(p);
  CHECK(j.at("nvars").get<int>() == 2);
  CHECK(poly_from_json(j) == p);

  LaurentPoly zero(3);
  CHECK(poly_from_json(poly_to_json(zero)) == zero);

  CHECK_THROWS_AS(poly_from_json(json::parse("{\"nvars\":2,\"terms\":3}")), error);
  CHECK_THROWS_WITH_AS(
      poly_from_json(json::parse(
          "{\"nvars\":2,\"terms\":[{\"exponents\":[1],\"coeff\":\"1\"}]}")),
      "polynomial/terms/exponents: wrong length", error);
}

TEST_CASE("caps json") {
  Caps c = caps_from_json(json::parse("{\"monomial_basis\": 17}"));
  CHECK(c.monomial_basis == 17);
  CHECK(c.group_order == Caps{}.group_order);
  CHECK(c.max_degree == Caps{}.max_degree);

  Caps all = caps_from_json(json::parse(
      "{\"group_order\": 10, \"monomial_basis\": 20, \"max_degree\": 4}"));
  CHECK(all.group_order == 10);
  CHECK(all.max_degree == 4);

  CHECK_THROWS_WITH_AS(caps_from_json(json::parse("{\"grp\": 1}")),
                       "caps: unknown key \"grp\"", error);
  CHECK_THROWS_AS(caps_from_json(json::parse("[1]")), error);
}

TEST_CASE("group descriptors") {
  FiniteGroup named = FiniteGroup::named("S3");
  FiniteGroup from_perms = group_from_json(json::parse(
      "{\"type\": \"permutation\", \"degree\": 3,"
      " \"generators\": [[2, 1, 3], [2, 3, 1]]}"));
  CHECK(from_perms.size() == named.size());
  CHECK(from_perms.conjugacy_classes().size() == named.conjugacy_classes().size());

  FiniteGroup by_name = group_from_json(json::parse(
      "{\"type\": \"named\", \"name\": \"Q8\"}"));
  CHECK(by_name.size() == 8);
  CHECK(group_from_json(json("D4")).size() == 8);

  FiniteGroup matrix = group_from_json(json::parse(
      "{\"type\": \"matrix\", \"cyclotomic_order\": 4,"
      " \"generators\": [[[{\"order\": 4, \"coeffs\": [\"0\", \"1\"]}]]]}"));
  CHECK(matrix.size() == 4);  // <i> inside the fourth roots of unity
  CHECK(matrix.element_order(matrix.generator(0)) == 4);

  CHECK_THROWS_WITH_AS(group_from_json(json::parse("{\"name\": \"S3\"}")),
                       "group: missing key \"type\"", error);
  CHECK_THROWS_WITH_AS(group_from_json(json::parse(
                           "{\"type\": \"party\"}")),
                       "group/type: unknown type \"party\"", error);
  CHECK_THROWS_AS(group_from_json(json::parse(
                      "{\"type\": \"permutation\", \"degree\": 3,"
                      " \"generators\": [[2, 1]]}")),
                  error);
  CHECK_THROWS_WITH_AS(
      group_from_json(json::parse(
          "{\"type\": \"matrix\", \"cyclotomic_order\": 4,"
          " \"generators\": [[[\"1\", \"0\"], [\"0\"]]]}")),
      "group/generators/0: ragged matrix", error);
}

TEST_CASE("action descriptors") {
  json j = json::parse(
      "{\"group\": {\"type\": \"permutation\", \"degree\": 3,"
      "             \"generators\": [[2, 3, 1]]},"
      " \"rep\": {\"generator_images\": [[[\"1\", \"0\"],"
      "   [\"0\", {\"order\": 3, \"coeffs\": [\"0\", \"1\"]}]]]}}");
  LinearAction act = action_from_json(j);
  CHECK(act.owned_group != nullptr);
  CHECK(act.group().size() == 3);
  CHECK(act.dim() == 2);

  // Identical sector data to the builtin fixture.
  LinearAction builtin = named_action("Z3-P1");
  for (int d : {0, 3, 6, 7}) {
    RRResult a = kawasaki_chi(act, d);
    RRResult b = kawasaki_chi(builtin, d);
    CHECK(a.total == b.total);
    CHECK(a.verdict);
    for (size_t k = 0; k < a.sectors.size(); ++k)
      CHECK(a.sectors[k].contribution == b.sectors[k].contribution);
  }

  // A non-faithful rep is rejected at construction.
  json bad = json::parse(
      "{\"group\": {\"type\": \"permutation\", \"degree\": 3,"
      "             \"generators\": [[2, 3, 1]]},"
      " \"rep\": {\"generator_images\": [[[\"1\"]]]}}");
  CHECK_THROWS_AS(action_from_json(bad), error);
  CHECK_THROWS_WITH_AS(
      action_from_json(json::parse("{\"rep\": {\"generator_images\": []}}")),
      "action: missing key \"group\"", error);
}

TEST_CASE("fixed point data descriptors") {
  json j = json::parse(
      "{\"variables\": [\"u\", \"v\"],"
      " \"points\": [{\"label\": \"north\", \"tangent\": [[1, -1]]},"
      "              {\"label\": \"south\", \"tangent\": [[-1, 1]]}]}");
  FixedPointData data = gkm_from_json(j);
  CHECK(data.nvars == 2);
  CHECK(data.variable_names == std::vector<std::string>{"u", "v"});

  // This is P^1; sections of O(2) are the degree two monomials in u, v.
  LaurentPoly chi = pushforward_to_point(o_d_class(data, 2));
  CHECK(chi == oracles::complete_homogeneous(2, 2));

  // A class given by its restrictions, here O(1) with restrictions u and v.
  json cj = json::parse(
      "{\"restrictions\": ["
      " {\"nvars\": 2, \"terms\": [{\"exponents\": [1, 0], \"coeff\": 1}]},"
      " {\"nvars\": 2, \"terms\": [{\"exponents\": [0, 1], \"coeff\": 1}]}]}");
  EquivClass alpha = equiv_class_from_json(cj, data);
  CHECK(alpha == o_d_class(data, 1));
  CHECK(pushforward_to_point(alpha) == oracles::complete_homogeneous(2, 1));

  CHECK_THROWS_WITH_AS(
      equiv_class_from_json(json::parse("{\"restrictions\": []}"), data),
      "class/restrictions: need one polynomial per fixed point (2)", error);
  CHECK_THROWS_WITH_AS(
      equiv_class_from_json(
          json::parse("{\"restrictions\": ["
                      " {\"nvars\": 1, \"terms\": []},"
                      " {\"nvars\": 1, \"terms\": []}]}"),
          data),
      "class/restrictions/0: wrong number of variables", error);

  CHECK_THROWS_WITH_AS(gkm_from_json(json::parse("{\"points\": []}")),
                       "gkm: missing key \"variables\"", error);
  // Trivial tangent weight rejected by the shape validation underneath.
  CHECK_THROWS_AS(gkm_from_json(json::parse(
                      "{\"variables\": [\"u\"],"
                      " \"points\": [{\"label\": \"p\", \"tangent\": [[0]]}]}")),
                  error);
}

TEST_CASE("gset descriptors") {
  json j = json::parse(
      "{\"group\": \"S3\", \"points\": 3, \"action\": [[2, 1, 3], [2, 3, 1]]}");
  LoadedGSet loaded = gset_from_json(j);
  const GSet& X = loaded.space;
  CHECK(X.size() == 3);
  CHECK(X.orbits().size() == 1);

  GSet natural = GSet::natural(*loaded.group);
  CHECK(X.stabilizer_pairs().size() == natural.stabilizer_pairs().size());
  CHECK(X.stabilizer_pairs().orbits.size() ==
        natural.stabilizer_pairs().orbits.size());

  CHECK_THROWS_WITH_AS(
      gset_from_json(json::parse(
          "{\"group\": \"S3\", \"points\": 3, \"action\": [[2, 1, 3]]}")),
      "gset/action: need one permutation per group generator", error);
  CHECK_THROWS_WITH_AS(
      gset_from_json(json::parse(
          "{\"group\": \"S3\", \"points\": 2,"
          " \"action\": [[2, 1, 3], [2, 3, 1]]}")),
      "gset/action: permutation has wrong length", error);
  CHECK_THROWS_WITH_AS(
      gset_from_json(json::parse(
          "{\"group\": \"S3\", \"points\": 3,"
          " \"action\": [[2, 1, 4], [2, 3, 1]]}")),
      "gset/action: images must be 1-based points", error);
}

namespace {

bool odd_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 1;
}

}  // namespace

TEST_CASE("sheaf descriptors") {
  LoadedGSet loaded = gset_from_json(json::parse(
      "{\"group\": \"S3\", \"points\": 3, \"action\": [[2, 1, 3], [2, 3, 1]]}"));
  const GSet& X = loaded.space;
  const FiniteGroup& G = *loaded.group;
  const MaterializedSubgroup& stab = *X.orbit_stabilizer(0);
  REQUIRE(stab.group.size() == 2);
  // Generators are the stabilizer elements in parent order, identity first.
  REQUIRE(stab.group.num_generators() == 2);
  REQUIRE(stab.to_parent[stab.group.generator(0)] == G.identity());

  // Sign character of the point stabilizer: -1 on the fixing transposition.
  GSheaf sign = sheaf_from_json(
      json::parse("[{\"orbit_rep\": 1, \"rep\": {\"generator_images\": "
                  "[[[\"1\"]], [[\"-1\"]]]}}]"),
      X);
  StabilizerClass alpha = sign.to_class();
  CHECK(alpha.value(G.identity(), 0) == Cyclotomic(1));
  int t = stab.to_parent[stab.group.generator(1)];
  CHECK(alpha.value(t, 0) == Cyclotomic(-1));
  CHECK(invariants(alpha).values[0] == Cyclotomic(0));

  CHECK_THROWS_WITH_AS(sheaf_from_json(json::parse("[]"), X),
                       "sheaf: missing entry for the orbit of point 1", error);
  CHECK_THROWS_WITH_AS(
      sheaf_from_json(
          json::parse("[{\"orbit_rep\": 2, \"rep\": {\"generator_images\": "
                      "[[[\"1\"]], [[\"-1\"]]]}}]"),
          X),
      "sheaf/0/orbit_rep: must be the least point of its orbit (1)", error);
  CHECK_THROWS_WITH_AS(
      sheaf_from_json(
          json::parse("[{\"orbit_rep\": 1, \"rep\": {\"generator_images\": "
                      "[[[\"1\"]]]}}]"),
          X),
      "sheaf/0/rep/generator_images: need one matrix per stabilizer "
      "generator (2)",
      error);
  // An involution cannot map to 2: not a representation.
  CHECK_THROWS_AS(
      sheaf_from_json(
          json::parse("[{\"orbit_rep\": 1, \"rep\": {\"generator_images\": "
                      "[[[\"1\"]], [[\"2\"]]]}}]"),
          X),
      error);
  CHECK_THROWS_WITH_AS(
      sheaf_from_json(
          json::parse("[{\"orbit_rep\": 1, \"rep\": {\"generator_images\": "
                      "[[[\"1\"]], [[\"1\"]]]}},"
                      " {\"orbit_rep\": 1, \"rep\": {\"generator_images\": "
                      "[[[\"1\"]], [[\"1\"]]]}}]"),
          X),
      "sheaf/1: duplicate entry for this orbit", error);
}

TEST_CASE("sheaf descriptors on several orbits") {
  LoadedGSet loaded = gset_from_json(json::parse(
      "{\"group\": \"S3\", \"points\": 4,"
      " \"action\": [[2, 1, 3, 4], [2, 3, 1, 4]]}"));
  const GSet& X = loaded.space;
  const FiniteGroup& G = *loaded.group;
  REQUIRE(X.orbits().size() == 2);

  // Orbit of point 4 is fixed; its stabilizer is all of S3. Build the sign
  // character against the generators the library reports, trivial on the
  // 3-point orbit; entry order must not matter.
  const MaterializedSubgroup& full = *X.orbit_stabilizer(X.orbit_of(3));
  REQUIRE(full.group.size() == 6);
  json sign_images = json::array();
  for (int k = 0; k < full.group.num_generators(); ++k) {
    int parent = full.to_parent[full.group.generator(k)];
    const char* v = odd_permutation(G.perm_of(parent)) ? "-1" : "1";
    sign_images.push_back(json::array({json::array({v})}));
  }
  const MaterializedSubgroup& small = *X.orbit_stabilizer(X.orbit_of(0));
  json trivial_images = json::array();
  for (int k = 0; k < small.group.num_generators(); ++k)
    trivial_images.push_back(json::array({json::array({"1"})}));

  json descriptor = json::array();
  json fixed_entry = json::object();
  fixed_entry["orbit_rep"] = 4;
  fixed_entry["rep"] = json::object({{"generator_images", sign_images}});
  descriptor.push_back(fixed_entry);
  json moving_entry = json::object();
  moving_entry["orbit_rep"] = 1;
  moving_entry["rep"] = json::object({{"generator_images", trivial_images}});
  descriptor.push_back(moving_entry);

  GSheaf F = sheaf_from_json(descriptor, X);
  StabilizerClass alpha = F.to_class();
  int transposition = -1;
  for (int g = 0; g < G.size(); ++g)
    if (G.element_order(g) == 2 && odd_permutation(G.perm_of(g)))
      transposition = g;
  REQUIRE(transposition >= 0);
  CHECK(alpha.value(G.identity(), 3) == Cyclotomic(1));
  CHECK(alpha.value(transposition, 3) == Cyclotomic(-1));
  // Sign has no invariants on the fixed orbit; trivial rep has one per point.
  OrbitFunction inv = invariants(alpha);
  CHECK(inv.values[X.orbit_of(0)] == Cyclotomic(1));
  CHECK(inv.values[X.orbit_of(3)] == Cyclotomic(0));
}

TEST_CASE("criteria run clean") {
  for (int k : {1, 2, 4, 9}) {
    CriterionResult r = run_criterion(k, 0);
    CHECK(r.index == k);
    CHECK(r.pass);
    CHECK(!r.checks.empty());
    for (const CheckResult& c : r.checks) CHECK(c.pass);
  }
}

TEST_CASE("criteria are deterministic in the seed") {
  CriterionResult a = run_criterion(3, 42);
  CriterionResult b = run_criterion(3, 42);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].expected == b.checks[i].expected);
    CHECK(a.checks[i].actual == b.checks[i].actual);
    CHECK(a.checks[i].pass == b.checks[i].pass);
  }
  CHECK(run_criterion(5, 7).pass);
}

TEST_CASE("unknown criterion index is reported, not thrown") {
  CriterionResult r = run_criterion(99, 0);
  CHECK(!r.pass);
  REQUIRE(r.checks.size() == 1);
  CHECK(!r.checks[0].pass);
  CHECK(r.checks[0].actual.find("no such criterion") != std::string::npos);
}
