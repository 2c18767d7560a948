/**
 * Command line driver. Loads builtin fixtures or JSON descriptors, runs one
 * job, and emits a machine readable report on stdout (and, with --out, to a
 * file with identical bytes). Exit status is 0 exactly when every check in
 * the report passes; descriptor or usage errors exit with status 2.
 *
 * Reports carry no timestamps or timing: reruns with the same inputs and
 * seed are byte identical. Wall clock timing goes to stderr instead.
 */
#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ekloc/json_io.hpp"
#include "ekloc/oracles.hpp"
#include "ekloc/verify.hpp"

namespace {

using ekloc::json;

struct Report {
  json doc = json::object();
  json checks = json::array();
  bool all_pass = true;

  explicit Report(const std::string& command) {
    doc["command"] = command;
    doc["inputs"] = json::object();
    doc["results"] = json::object();
  }

  void add_check(const std::string& name, const std::string& expected,
                 const std::string& actual) {
    bool pass = (expected == actual);
    json c = json::object();
    c["name"] = name;
    c["expected"] = expected;
    c["actual"] = actual;
    c["pass"] = pass;
    checks.push_back(std::move(c));
    all_pass = all_pass && pass;
  }

  void add_check(const ekloc::CheckResult& c) {
    json e = json::object();
    e["name"] = c.name;
    e["expected"] = c.expected;
    e["actual"] = c.actual;
    e["pass"] = c.pass;
    checks.push_back(std::move(e));
    all_pass = all_pass && c.pass;
  }

  int emit(const std::string& out_path) {
    doc["checks"] = checks;
    doc["pass"] = all_pass;
    std::string text = doc.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw ekloc::error("cannot open output file: " + out_path);
      f << text;
    }
    return all_pass ? 0 : 1;
  }
};

json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ekloc::error("cannot open input file: " + path);
  try {
    return json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw ekloc::error(path + ": " + e.what());
  }
}

ekloc::Caps parse_caps(const std::string& text) {
  if (text.empty()) return {};
  try {
    return ekloc::caps_from_json(json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw ekloc::error(std::string("--caps: ") + e.what());
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// ---------------------------------------------------------------------------
// verify

int run_verify(std::uint64_t seed, const std::string& caps_text,
               const std::string& out_path) {
  Report rep("verify");
  rep.doc["inputs"]["seed"] = seed;
  if (!caps_text.empty()) rep.doc["inputs"]["caps"] = json::parse(caps_text);

  ekloc::Caps caps = parse_caps(caps_text);
  std::vector<ekloc::CriterionResult> results = ekloc::run_all_criteria(seed, caps);

  json criteria = json::array();
  for (const ekloc::CriterionResult& r : results) {
    json c = json::object();
    c["index"] = r.index;
    c["title"] = r.title;
    c["pass"] = r.pass;
    json inner = json::array();
    long good = 0;
    for (const ekloc::CheckResult& ch : r.checks) {
      json e = json::object();
      e["name"] = ch.name;
      e["expected"] = ch.expected;
      e["actual"] = ch.actual;
      e["pass"] = ch.pass;
      inner.push_back(std::move(e));
      if (ch.pass) ++good;
    }
    c["checks"] = inner;
    criteria.push_back(std::move(c));

    std::string n = std::to_string(r.checks.size());
    rep.add_check("criterion " + std::to_string(r.index) + ": " + r.title,
                  n + " of " + n + " checks pass",
                  std::to_string(good) + " of " + n + " checks pass");
  }
  rep.doc["results"]["criteria"] = criteria;
  return rep.emit(out_path);
}

// ---------------------------------------------------------------------------
// chi / sectors

struct ActionJob {
  ekloc::LinearAction action;
  int degree;
};

ActionJob load_action(const std::string& fixture, const std::string& input,
                      int degree_flag, bool degree_given, const ekloc::Caps& caps,
                      Report& rep) {
  std::optional<ekloc::LinearAction> action;
  bool have_degree = degree_given;
  int degree = degree_flag;
  if (!fixture.empty()) {
    rep.doc["inputs"]["fixture"] = fixture;
    action = ekloc::named_action(fixture);
  } else if (!input.empty()) {
    rep.doc["inputs"]["input"] = input;
    json j = load_json_file(input);
    const json& action_json = j.contains("action") ? j.at("action") : j;
    action = ekloc::action_from_json(action_json, caps);
    if (!have_degree && j.contains("degree")) {
      if (!j.at("degree").is_number_integer())
        throw ekloc::error("degree: expected an integer");
      degree = j.at("degree").get<int>();
      have_degree = true;
    }
  } else {
    throw ekloc::error("one of --fixture or --input is required");
  }
  if (!have_degree) throw ekloc::error("--degree is required");
  rep.doc["inputs"]["degree"] = degree;
  return ActionJob{std::move(*action), degree};
}

json sectors_to_json(const ekloc::RRResult& res, const ekloc::FiniteGroup& G) {
  json sectors = json::array();
  for (const ekloc::SectorReport& s : res.sectors) {
    json e = json::object();
    e["class_index"] = s.class_index;
    e["representative"] = G.describe_element(s.representative);
    e["class_size"] = s.class_size;
    json evs = json::array();
    for (const ekloc::Cyclotomic& ev : s.eigenvalues)
      evs.push_back(ekloc::cyclotomic_to_json(ev));
    e["eigenvalues"] = evs;
    e["contribution"] = ekloc::cyclotomic_to_json(s.contribution);
    e["rational"] = s.rational;
    sectors.push_back(std::move(e));
  }
  json r = json::object();
  r["degree"] = res.degree;
  r["sectors"] = sectors;
  r["total"] = ekloc::rational_to_json(res.total);
  r["oracle"] = ekloc::rational_to_json(res.oracle);
  return r;
}

int run_chi(const std::string& fixture, const std::string& input, int degree,
            bool degree_given, const std::string& caps_text,
            const std::string& out_path, bool with_lefschetz) {
  Report rep(with_lefschetz ? "sectors" : "chi");
  ekloc::Caps caps = parse_caps(caps_text);
  ActionJob job = load_action(fixture, input, degree, degree_given, caps, rep);
  const ekloc::FiniteGroup& G = job.action.group();

  ekloc::RRResult res = ekloc::kawasaki_chi(job.action, job.degree, caps);
  rep.doc["results"] = sectors_to_json(res, G);
  rep.add_check("sector sum equals the Molien series coefficient",
                ekloc::rat_to_string(res.oracle), ekloc::rat_to_string(res.total));

  if (with_lefschetz) {
    int nclasses = static_cast<int>(G.conjugacy_classes().size());
    for (int c = 0; c < nclasses; ++c) {
      bool ok = ekloc::sector_vs_lefschetz(job.action, c, job.degree, caps);
      rep.add_check("sector of class " + std::to_string(c) + " (" +
                        G.describe_element(G.conjugacy_classes()[c].representative) +
                        ") matches its trace on the monomial basis",
                    "equal", ok ? "equal" : "different");
    }
  }
  return rep.emit(out_path);
}

// ---------------------------------------------------------------------------
// weyl-char

bool is_partition(const std::vector<int>& lam) {
  for (size_t i = 0; i < lam.size(); ++i) {
    if (lam[i] < 0) return false;
    if (i && lam[i] > lam[i - 1]) return false;
  }
  return true;
}

int run_weyl_char(int n, const std::vector<int>& lambda,
                  const std::string& caps_text, const std::string& out_path) {
  if (n < 1) throw ekloc::error("--n must be at least 1");
  if (static_cast<int>(lambda.size()) != n)
    throw ekloc::error("--lambda must list exactly n integers");
  Report rep("weyl-char");
  rep.doc["inputs"]["n"] = n;
  rep.doc["inputs"]["lambda"] = lambda;

  ekloc::Caps caps = parse_caps(caps_text);
  ekloc::FlagData flag = ekloc::flag_data(ekloc::full_flag_shape(n), caps);
  ekloc::LaurentPoly chi = ekloc::pushforward_to_point(
      ekloc::line_bundle_class(flag, lambda, caps));
  std::vector<ekloc::Cyclotomic> ones(n, ekloc::Cyclotomic(1));
  ekloc::Cyclotomic dim = chi.evaluate(ones);
  std::string dim_str = dim.is_rational()
                            ? ekloc::rat_to_string(dim.rational_value())
                            : dim.to_string();

  const std::vector<std::string>& names = flag.data.variable_names;
  rep.doc["results"]["character"] = ekloc::poly_to_json(chi);
  rep.doc["results"]["printed"] = chi.to_string(names);
  rep.doc["results"]["dimension"] = dim_str;

  if (is_partition(lambda)) {
    ekloc::LaurentPoly schur = ekloc::oracles::schur_polynomial(n, lambda);
    rep.add_check("character equals the Schur polynomial of (" +
                      join_ints(lambda) + ")",
                  schur.to_string(names), chi.to_string(names));
    rep.add_check("dimension matches the Weyl dimension formula",
                  ekloc::rat_to_string(ekloc::oracles::gl_dimension(lambda)),
                  dim_str);
  }
  return rep.emit(out_path);
}

// ---------------------------------------------------------------------------
// euler-gkm

ekloc::FixedPointData euler_fixture(const std::string& name, const ekloc::Caps& caps) {
  if (name == "P1") return ekloc::projective_space_data(1, caps);
  if (name == "P2") return ekloc::projective_space_data(2, caps);
  if (name == "P3") return ekloc::projective_space_data(3, caps);
  if (name == "P4") return ekloc::projective_space_data(4, caps);
  if (name == "GL2-flag") return ekloc::flag_data(ekloc::full_flag_shape(2), caps).data;
  if (name == "GL3-flag") return ekloc::flag_data(ekloc::full_flag_shape(3), caps).data;
  throw ekloc::error("unknown fixture: " + name +
                     " (expected P1..P4, GL2-flag, GL3-flag)");
}

int run_euler_gkm(const std::string& fixture, const std::string& input, int n,
                  const std::vector<int>& composition, const std::string& caps_text,
                  const std::string& out_path) {
  Report rep("euler-gkm");
  ekloc::Caps caps = parse_caps(caps_text);

  ekloc::FixedPointData data;
  std::optional<ekloc::EquivClass> user_class;
  if (!fixture.empty()) {
    rep.doc["inputs"]["fixture"] = fixture;
    data = euler_fixture(fixture, caps);
  } else if (!input.empty()) {
    rep.doc["inputs"]["input"] = input;
    json input_doc = load_json_file(input);
    data = ekloc::gkm_from_json(input_doc);
    if (input_doc.contains("class"))
      user_class = ekloc::equiv_class_from_json(input_doc["class"], data);
  } else if (n > 0) {
    rep.doc["inputs"]["n"] = n;
    rep.doc["inputs"]["composition"] = composition;
    std::vector<int> comp = composition;
    if (comp.empty()) comp.assign(static_cast<size_t>(n), 1);
    data = ekloc::flag_data(ekloc::FlagShape{n, comp}, caps).data;
  } else {
    throw ekloc::error("one of --fixture, --input, or --n is required");
  }

  const std::vector<std::string>& names = data.variable_names;
  json points = json::array();
  for (const ekloc::FixedPoint& p : data.points) {
    json e = json::object();
    e["label"] = p.label;
    json tangent = json::array();
    for (const ekloc::Monomial& w : p.tangent)
      tangent.push_back(ekloc::LaurentPoly::monomial(w).to_string(names));
    e["tangent"] = tangent;
    points.push_back(std::move(e));
  }
  rep.doc["results"]["variables"] = names;
  rep.doc["results"]["points"] = points;
  if (user_class) {
    json rj = json::array();
    for (size_t l = 0; l < data.points.size(); ++l)
      rj.push_back(user_class->at(static_cast<int>(l)).to_string(names));
    rep.doc["results"]["class_restrictions"] = rj;
  }

  try {
    ekloc::EquivClass euler = ekloc::euler_class_expansion(data);
    ekloc::EquivClass total = ekloc::EquivClass::zero(data);
    long unit_points = 0;
    ekloc::LaurentPoly one_poly =
        ekloc::LaurentPoly::constant(data.nvars, ekloc::Cyclotomic(1));
    for (size_t l = 0; l < data.points.size(); ++l) {
      ekloc::EquivClass part =
          ekloc::point_pushforward_class(data, static_cast<int>(l));
      if (ekloc::pushforward_to_point(part) == one_poly) ++unit_points;
      total = total + part;
    }
    json euler_json = json::array();
    for (size_t l = 0; l < data.points.size(); ++l)
      euler_json.push_back(euler.at(static_cast<int>(l)).to_string(names));
    rep.doc["results"]["euler_restrictions"] = euler_json;

    long npoints = static_cast<long>(data.points.size());
    rep.add_check("Euler class equals the sum of the point classes", "equal",
                  euler == total ? "equal" : "different");
    rep.add_check("every point class pushes forward to 1",
                  std::to_string(npoints) + " points",
                  std::to_string(unit_points) + " points");
    rep.add_check(
        "Euler class pushes forward to the fixed point count",
        ekloc::LaurentPoly::constant(data.nvars, ekloc::Cyclotomic(npoints))
            .to_string(names),
        ekloc::pushforward_to_point(euler).to_string(names));
  } catch (const ekloc::residual_denominator_error& e) {
    rep.add_check("denominators clear at every fixed point", "clear",
                  std::string("error: ") + e.what());
  }

  if (user_class) {
    try {
      ekloc::LaurentPoly val = ekloc::pushforward_to_point(*user_class);
      rep.doc["results"]["class_pushforward"] = val.to_string(names);
      rep.add_check("class pushforward has no residual denominator", "clear",
                    "clear");
    } catch (const ekloc::residual_denominator_error& e) {
      rep.add_check("class pushforward has no residual denominator", "clear",
                    std::string("error: ") + e.what());
    }
  }
  return rep.emit(out_path);
}

// ---------------------------------------------------------------------------
// localize-gset

struct LoadedSpace {
  std::shared_ptr<const ekloc::FiniteGroup> group;
  std::optional<ekloc::GSet> space;
};

LoadedSpace gset_fixture(const std::string& name, const ekloc::Caps& caps) {
  LoadedSpace out;
  auto make = [&](const std::string& gname) {
    out.group = std::make_shared<const ekloc::FiniteGroup>(
        ekloc::FiniteGroup::named(gname, caps));
  };
  if (name == "S3-natural") {
    make("S3");
    out.space = ekloc::GSet::natural(*out.group);
  } else if (name == "S4-cosets-S3") {
    make("S4");
    std::vector<int> fixing;  // the point stabilizer of 4 is a copy of S3
    for (int g = 0; g < out.group->size(); ++g)
      if (out.group->perm_of(g)[3] == 3) fixing.push_back(g);
    out.space = ekloc::GSet::cosets(*out.group,
                                    ekloc::subgroup_closure(*out.group, fixing));
  } else if (name == "D4-natural") {
    make("D4");
    out.space = ekloc::GSet::natural(*out.group);
  } else if (name == "Q8-translation") {
    make("Q8");
    out.space = ekloc::GSet::left_translation(*out.group);
  } else if (name == "A4-natural") {
    make("A4");
    out.space = ekloc::GSet::natural(*out.group);
  } else if (name == "Z/6-natural") {
    make("Z/6");
    out.space = ekloc::GSet::natural(*out.group);
  } else {
    throw ekloc::error(
        "unknown fixture: " + name +
        " (expected S3-natural, S4-cosets-S3, D4-natural, Q8-translation, "
        "A4-natural, Z/6-natural)");
  }
  return out;
}

int run_localize_gset(const std::string& fixture, const std::string& input,
                      std::uint64_t seed, const std::string& caps_text,
                      const std::string& out_path) {
  Report rep("localize-gset");
  rep.doc["inputs"]["seed"] = seed;
  ekloc::Caps caps = parse_caps(caps_text);

  LoadedSpace loaded;
  std::optional<json> sheaf_json;
  if (!fixture.empty()) {
    rep.doc["inputs"]["fixture"] = fixture;
    loaded = gset_fixture(fixture, caps);
  } else if (!input.empty()) {
    rep.doc["inputs"]["input"] = input;
    json j = load_json_file(input);
    ekloc::LoadedGSet in = ekloc::gset_from_json(j, caps);
    loaded.group = in.group;
    loaded.space = in.space;
    if (j.contains("sheaf")) sheaf_json = j.at("sheaf");
  } else {
    throw ekloc::error("one of --fixture or --input is required");
  }
  const ekloc::FiniteGroup& G = *loaded.group;
  const ekloc::GSet& X = *loaded.space;
  ekloc::GSheaf F = sheaf_json ? ekloc::sheaf_from_json(*sheaf_json, X)
                               : ekloc::GSheaf::structure(X);

  rep.doc["results"]["group_order"] = G.size();
  rep.doc["results"]["points"] = X.size();
  rep.doc["results"]["conjugacy_classes"] =
      static_cast<int>(G.conjugacy_classes().size());

  json orbits_json = json::array();
  for (size_t o = 0; o < X.orbits().size(); ++o) {
    const ekloc::MaterializedSubgroup& stab =
        *X.orbit_stabilizer(static_cast<int>(o));
    json e = json::object();
    e["orbit_rep"] = X.orbit_rep(static_cast<int>(o)) + 1;
    e["stabilizer_order"] = stab.group.size();
    json gens = json::array();
    for (int k = 0; k < stab.group.num_generators(); ++k)
      gens.push_back(
          G.describe_element(stab.to_parent[stab.group.generator(k)]));
    e["stabilizer_generators"] = gens;
    e["rep_dimension"] = F.rep(static_cast<int>(o)).dim();
    orbits_json.push_back(std::move(e));
  }
  rep.doc["results"]["orbits"] = orbits_json;

  // Test classes: the pair-orbit indicator basis of the model, the structure
  // sheaf, and seeded random classes.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-4, 4);
  auto random_class = [&]() {
    const ekloc::StabilizerPairSet& P = X.stabilizer_pairs();
    std::vector<ekloc::Cyclotomic> v(P.size());
    for (const auto& orbit : P.orbits) {
      ekloc::Cyclotomic c = ekloc::Cyclotomic(ekloc::rat(coef(rng))) +
                            ekloc::Cyclotomic::root_of_unity(3, 1) *
                                ekloc::Cyclotomic(ekloc::rat(coef(rng)));
      for (int i : orbit) v[i] = c;
    }
    return ekloc::StabilizerClass(&X, std::move(v));
  };

  std::vector<ekloc::StabilizerClass> classes;
  const ekloc::StabilizerPairSet& P = X.stabilizer_pairs();
  for (const auto& orbit : P.orbits) {
    std::vector<ekloc::Cyclotomic> v(P.size());
    for (int i : orbit) v[i] = ekloc::Cyclotomic(1);
    classes.emplace_back(&X, std::move(v));
  }
  ekloc::StabilizerClass sheaf_class = F.to_class();
  classes.push_back(sheaf_class);
  classes.push_back(random_class());
  classes.push_back(random_class());

  int nclasses = static_cast<int>(G.conjugacy_classes().size());

  // The class of the sheaf (structure sheaf unless one was supplied),
  // projected onto each conjugacy class, one value per pair orbit.
  json comps = json::array();
  for (int c = 0; c < nclasses; ++c) {
    ekloc::StabilizerClass part = sheaf_class.component(c);
    json e = json::object();
    e["class_index"] = c;
    e["representative"] =
        G.describe_element(G.conjugacy_classes()[c].representative);
    json vals = json::array();
    for (const auto& orbit : P.orbits) {
      auto [g, x] = P.pairs[orbit.front()];
      json v = json::object();
      v["pair"] = "(" + G.describe_element(g) + "; " + std::to_string(x + 1) + ")";
      v["value"] = ekloc::cyclotomic_to_json(part.at_pair(orbit.front()));
      vals.push_back(std::move(v));
    }
    e["values"] = vals;
    comps.push_back(std::move(e));
  }
  rep.doc["results"]["sheaf_class_components"] = comps;

  for (int c = 0; c < nclasses; ++c) {
    long good = 0;
    for (const ekloc::StabilizerClass& alpha : classes) {
      ekloc::StabilizerClass part = alpha.component(c);
      if (ekloc::localize_at_class(X, alpha, c, ekloc::SummandRoute::support) ==
              part &&
          ekloc::localize_at_class(X, alpha, c,
                                   ekloc::SummandRoute::centralizer) == part)
        ++good;
    }
    std::string rep_name =
        G.describe_element(G.conjugacy_classes()[c].representative);
    rep.add_check("class " + std::to_string(c) + " (" + rep_name +
                      "): both localization routes reproduce the component",
                  std::to_string(classes.size()) + " classes",
                  std::to_string(good) + " classes");

    ekloc::SectorComparison cmp =
        ekloc::sector_invariants(X, random_class(), c);
    rep.add_check("class " + std::to_string(c) + " (" + rep_name +
                      "): slice invariants agree across the two sector models",
                  "equal", cmp.equal ? "equal" : "different");
  }
  return rep.emit(out_path);
}

}  // namespace

// ---------------------------------------------------------------------------

int main(int argc, char** argv) {
  CLI::App app{"exact equivariant localization toolkit"};
  app.require_subcommand(1);

  std::string fixture, input, caps_text, out_path;
  std::uint64_t seed = 0;
  int degree = 0, n = 0;
  std::vector<int> lambda;

  CLI::App* verify = app.add_subcommand(
      "verify", "run the numbered verification criteria");
  verify->add_option("--seed", seed, "seed for randomized sweeps");
  verify->add_option("--caps", caps_text, "resource caps as inline JSON");
  verify->add_option("--out", out_path, "also write the report to this file");

  CLI::App* chi = app.add_subcommand(
      "chi", "Euler characteristic of a projective quotient by sectors");
  chi->add_option("--fixture", fixture,
                  "named action: Z3-P1, S3-irrep2, Z5-weights(1,2), A4-std");
  chi->add_option("--input", input, "JSON file {\"action\": ..., \"degree\": d}");
  CLI::Option* chi_deg = chi->add_option("--degree", degree, "section degree");
  chi->add_option("--caps", caps_text, "resource caps as inline JSON");
  chi->add_option("--out", out_path, "also write the report to this file");

  CLI::App* sectors = app.add_subcommand(
      "sectors", "per-class sector breakdown with element trace checks");
  sectors->add_option("--fixture", fixture,
                      "named action: Z3-P1, S3-irrep2, Z5-weights(1,2), A4-std");
  sectors->add_option("--input", input,
                      "JSON file {\"action\": ..., \"degree\": d}");
  CLI::Option* sectors_deg =
      sectors->add_option("--degree", degree, "section degree");
  sectors->add_option("--caps", caps_text, "resource caps as inline JSON");
  sectors->add_option("--out", out_path, "also write the report to this file");

  CLI::App* weyl = app.add_subcommand(
      "weyl-char", "pushforward of a line bundle on the full flag space");
  weyl->add_option("--n", n, "rank")->required();
  weyl->add_option("--lambda", lambda, "weight, comma separated")
      ->required()
      ->delimiter(',');
  weyl->add_option("--caps", caps_text, "resource caps as inline JSON");
  weyl->add_option("--out", out_path, "also write the report to this file");

  CLI::App* euler = app.add_subcommand(
      "euler-gkm", "fixed point expansion of the Euler class");
  euler->add_option("--fixture", fixture,
                    "named space: P1..P4, GL2-flag, GL3-flag");
  euler->add_option("--input", input,
                    "JSON file {\"variables\": [...], \"points\": [...]}");
  euler->add_option("--n", n, "rank of a flag space");
  euler->add_option("--lambda", lambda,
                    "composition of the flag space, comma separated")
      ->delimiter(',');
  euler->add_option("--caps", caps_text, "resource caps as inline JSON");
  euler->add_option("--out", out_path, "also write the report to this file");

  CLI::App* localize = app.add_subcommand(
      "localize-gset", "conjugacy class localization on a finite G-set");
  localize->add_option("--fixture", fixture,
                       "named space: S3-natural, S4-cosets-S3, D4-natural, "
                       "Q8-translation, A4-natural, Z/6-natural");
  localize->add_option("--input", input,
                       "JSON file {\"group\": ..., \"points\": n, \"action\": ...}");
  localize->add_option("--seed", seed, "seed for random test classes");
  localize->add_option("--caps", caps_text, "resource caps as inline JSON");
  localize->add_option("--out", out_path, "also write the report to this file");

  CLI11_PARSE(app, argc, argv);

  auto t0 = std::chrono::steady_clock::now();
  int status = 2;
  try {
    if (verify->parsed()) {
      status = run_verify(seed, caps_text, out_path);
    } else if (chi->parsed()) {
      status = run_chi(fixture, input, degree, chi_deg->count() > 0, caps_text,
                       out_path, false);
    } else if (sectors->parsed()) {
      status = run_chi(fixture, input, degree, sectors_deg->count() > 0,
                       caps_text, out_path, true);
    } else if (weyl->parsed()) {
      status = run_weyl_char(n, lambda, caps_text, out_path);
    } else if (euler->parsed()) {
      status = run_euler_gkm(fixture, input, n, lambda, caps_text, out_path);
    } else if (localize->parsed()) {
      status = run_localize_gset(fixture, input, seed, caps_text, out_path);
    }
  } catch (const ekloc::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  std::cerr << "timing: " << ms << " ms\n";
  return status;
}
