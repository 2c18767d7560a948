#include "ekloc/gkm.hpp"

#include <algorithm>
#include <map>

namespace ekloc {

namespace {

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Monomial> sorted_weights(std::vector<Monomial> w) {
  std::sort(w.begin(), w.end());
  return w;
}

void combinations_rec(const std::vector<int>& pool, size_t start, int k,
                      std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i + k <= pool.size(); ++i) {
    cur.push_back(pool[i]);
    combinations_rec(pool, i + 1, k - 1, cur, out);
    cur.pop_back();
  }
}

void partitions_rec(const std::vector<int>& comp, size_t depth, const std::vector<int>& pool,
                    std::vector<std::vector<int>>& blocks,
                    std::vector<std::vector<std::vector<int>>>& out) {
  if (depth == comp.size()) {
    out.push_back(blocks);
    return;
  }
  std::vector<std::vector<int>> choices;
  std::vector<int> cur;
  combinations_rec(pool, 0, comp[depth], cur, choices);
  for (const auto& choice : choices) {
    std::vector<int> rest;
    size_t pos = 0;
    for (int v : pool) {
      if (pos < choice.size() && choice[pos] == v) {
        ++pos;
        continue;
      }
      rest.push_back(v);
    }
    blocks.push_back(choice);
    partitions_rec(comp, depth + 1, rest, blocks, out);
    blocks.pop_back();
  }
}

std::vector<Monomial> tangent_of_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<Monomial> t;
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j)
      for (int a : blocks[i])
        for (int b : blocks[j]) {
          Monomial m(n, 0);
          m[a - 1] = 1;
          m[b - 1] = -1;
          t.push_back(m);
        }
  return t;
}

std::string label_of_blocks(const std::vector<std::vector<int>>& blocks) {
  std::string s;
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += '|';
    for (size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) s += ',';
      s += std::to_string(blocks[i][j]);
    }
  }
  return s;
}

void check_composition(const FlagShape& shape) {
  if (shape.n < 1 || shape.composition.empty()) throw error("malformed composition");
  int total = 0;
  for (int c : shape.composition) {
    if (c < 1) throw error("malformed composition");
    total += c;
  }
  if (total != shape.n) throw error("composition does not sum to the rank");
}

}  // namespace

FixedPointData make_fixed_point_data(int nvars, std::vector<FixedPoint> points,
                                     std::vector<std::string> variable_names) {
  if (nvars < 1) throw error("need at least one character variable");
  if (points.empty()) throw error("need at least one fixed point");
  for (const FixedPoint& p : points) {
    if (points.size() > 1 && p.tangent.empty())
      throw error("tangent weights required when there are several points");
    for (const Monomial& w : p.tangent) {
      if (static_cast<int>(w.size()) != nvars) throw error("weight has wrong length");
      if (mono_is_one(w)) throw error("tangent weight is the trivial character");
    }
  }
  if (variable_names.empty())
    for (int i = 0; i < nvars; ++i) variable_names.push_back("x" + std::to_string(i));
  if (static_cast<int>(variable_names.size()) != nvars)
    throw error("wrong number of variable names");
  return FixedPointData{nvars, std::move(points), std::move(variable_names)};
}

EquivClass::EquivClass(const FixedPointData* data, std::vector<LaurentPoly> restrictions)
    : _data(data), _v(std::move(restrictions)) {
  if (_v.size() != _data->points.size())
    throw error("class needs one restriction per fixed point");
  for (const LaurentPoly& f : _v)
    if (f.nvars() != _data->nvars) throw error("restriction has wrong variable count");
}

EquivClass EquivClass::zero(const FixedPointData& data) {
  return EquivClass(&data,
                    std::vector<LaurentPoly>(data.points.size(), LaurentPoly(data.nvars)));
}

EquivClass EquivClass::one(const FixedPointData& data) {
  return EquivClass(&data, std::vector<LaurentPoly>(
                               data.points.size(),
                               LaurentPoly::constant(data.nvars, Cyclotomic(1))));
}

EquivClass EquivClass::operator+(const EquivClass& o) const {
  if (_data != o._data) throw error("classes on different fixed point data");
  std::vector<LaurentPoly> v = _v;
  for (size_t i = 0; i < v.size(); ++i) v[i] += o._v[i];
  return EquivClass(_data, std::move(v));
}

EquivClass EquivClass::operator-(const EquivClass& o) const {
  return *this + o.scaled(Cyclotomic(-1));
}

EquivClass EquivClass::operator*(const EquivClass& o) const {
  if (_data != o._data) throw error("classes on different fixed point data");
  std::vector<LaurentPoly> v = _v;
  for (size_t i = 0; i < v.size(); ++i) v[i] *= o._v[i];
  return EquivClass(_data, std::move(v));
}

EquivClass EquivClass::scaled(const Cyclotomic& c) const {
  std::vector<LaurentPoly> v = _v;
  for (LaurentPoly& f : v) f = f.scaled(c);
  return EquivClass(_data, std::move(v));
}

bool EquivClass::operator==(const EquivClass& o) const {
  return _data == o._data && _v == o._v;
}

LaurentPoly lambda_minus_one(int nvars, const std::vector<Monomial>& weights) {
  LaurentPoly out = LaurentPoly::constant(nvars, Cyclotomic(1));
  for (const Monomial& w : weights) {
    LaurentPoly factor = LaurentPoly::constant(nvars, Cyclotomic(1));
    factor.add_term(mono_inverse(w), Cyclotomic(-1));
    out *= factor;
  }
  return out;
}

LaurentPoly pushforward_to_point(const EquivClass& alpha) {
  const FixedPointData& D = *alpha.data();
  Localized acc(LaurentPoly(D.nvars));
  for (size_t p = 0; p < D.points.size(); ++p) {
    std::vector<BinomialFactor> den;
    for (const Monomial& w : D.points[p].tangent)
      den.emplace_back(Cyclotomic(1), mono_inverse(w));
    acc += Localized(alpha.at(static_cast<int>(p)), std::move(den));
  }
  return acc.as_polynomial();
}

FixedPointData projective_space_data(int n, const Caps& caps) {
  if (n < 0) throw error("projective space needs nonnegative dimension");
  if (n + 1 > caps.monomial_basis) throw error("too many fixed points for the caps");
  std::vector<FixedPoint> points;
  for (int i = 0; i <= n; ++i) {
    FixedPoint p;
    p.label = "p" + std::to_string(i);
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      Monomial m(n + 1, 0);
      m[i] = 1;
      m[j] = -1;
      p.tangent.push_back(std::move(m));
    }
    points.push_back(std::move(p));
  }
  return make_fixed_point_data(n + 1, std::move(points));
}

EquivClass o_d_class(const FixedPointData& data, int d, const Caps& caps) {
  if (data.nvars != static_cast<int>(data.points.size()))
    throw error("data does not look like a projective space");
  if (std::abs(d) > caps.max_degree) throw error("degree exceeds the caps");
  std::vector<LaurentPoly> v;
  for (int i = 0; i < data.nvars; ++i) {
    Monomial m(data.nvars, 0);
    m[i] = d;
    v.push_back(LaurentPoly::monomial(std::move(m)));
  }
  return EquivClass(&data, std::move(v));
}

FlagShape full_flag_shape(int n) { return FlagShape{n, std::vector<int>(n, 1)}; }

FlagData flag_data(const FlagShape& shape, const Caps& caps) {
  check_composition(shape);
  if (shape.n > 20) throw error("rank too large");
  long long count = factorial(shape.n);
  for (int c : shape.composition) count /= factorial(c);
  if (count > caps.monomial_basis) throw error("too many fixed points for the caps");

  std::vector<int> pool(shape.n);
  for (int i = 0; i < shape.n; ++i) pool[i] = i + 1;
  std::vector<std::vector<std::vector<int>>> all;
  std::vector<std::vector<int>> blocks;
  partitions_rec(shape.composition, 0, pool, blocks, all);

  std::vector<FixedPoint> points;
  for (const auto& bl : all)
    points.push_back(FixedPoint{label_of_blocks(bl), tangent_of_blocks(shape.n, bl)});
  std::vector<std::string> names;
  for (int i = 1; i <= shape.n; ++i) names.push_back("x" + std::to_string(i));
  FlagData F{shape, make_fixed_point_data(shape.n, std::move(points), std::move(names)),
             std::move(all)};
  return F;
}

EquivClass line_bundle_class(const FlagData& flag, const std::vector<int>& lambda,
                             const Caps& caps) {
  for (int c : flag.shape.composition)
    if (c != 1) throw error("line bundles need the full flag");
  if (static_cast<int>(lambda.size()) != flag.shape.n)
    throw error("weight vector has wrong length");
  long total = 0;
  for (int l : lambda) total += std::abs(l);
  if (total > caps.max_degree) throw error("weight exceeds the caps");
  std::vector<LaurentPoly> v;
  for (const auto& blocks : flag.blocks) {
    Monomial m(flag.shape.n, 0);
    for (size_t i = 0; i < blocks.size(); ++i) m[blocks[i][0] - 1] += lambda[i];
    v.push_back(LaurentPoly::monomial(std::move(m)));
  }
  return EquivClass(&flag.data, std::move(v));
}

FiberedFixedPointData make_fibered_data(const FixedPointData* source,
                                        const FixedPointData* target,
                                        std::vector<int> to,
                                        std::vector<std::vector<Monomial>> relative) {
  if (source->nvars != target->nvars) throw error("fibered data over different tori");
  if (to.size() != source->points.size() || relative.size() != source->points.size())
    throw error("fibered data needs one image and one weight list per source point");
  std::vector<bool> hit(target->points.size(), false);
  for (size_t s = 0; s < to.size(); ++s) {
    if (to[s] < 0 || to[s] >= static_cast<int>(target->points.size()))
      throw error("fiber map leaves the target");
    hit[to[s]] = true;
    std::vector<Monomial> combined = relative[s];
    const auto& base = target->points[to[s]].tangent;
    combined.insert(combined.end(), base.begin(), base.end());
    if (sorted_weights(std::move(combined)) != sorted_weights(source->points[s].tangent))
      throw error("relative and base weights do not add up to the source tangent");
  }
  for (bool h : hit)
    if (!h) throw error("fiber map is not surjective");
  return FiberedFixedPointData{source, target, std::move(to), std::move(relative)};
}

FiberedFixedPointData flag_fibration(const FlagData& full, const FlagData& partial) {
  if (full.shape.n != partial.shape.n) throw error("flags of different rank");
  for (int c : full.shape.composition)
    if (c != 1) throw error("fibration source must be the full flag");
  std::map<std::vector<std::vector<int>>, int> index;
  for (size_t t = 0; t < partial.blocks.size(); ++t)
    index[partial.blocks[t]] = static_cast<int>(t);

  int n = full.shape.n;
  std::vector<int> to;
  std::vector<std::vector<Monomial>> relative;
  for (const auto& blocks : full.blocks) {
    std::vector<int> w;
    for (const auto& b : blocks) w.push_back(b[0]);
    std::vector<std::vector<int>> grouped;
    std::vector<Monomial> rel;
    size_t pos = 0;
    for (int c : partial.shape.composition) {
      std::vector<int> segment(w.begin() + pos, w.begin() + pos + c);
      // Weights of pairs that collapse into one block: earlier-position over
      // later-position within the segment.
      for (size_t a = 0; a + 1 < segment.size(); ++a)
        for (size_t b = a + 1; b < segment.size(); ++b) {
          Monomial m(n, 0);
          m[segment[a] - 1] = 1;
          m[segment[b] - 1] = -1;
          rel.push_back(std::move(m));
        }
      std::sort(segment.begin(), segment.end());
      grouped.push_back(std::move(segment));
      pos += c;
    }
    auto it = index.find(grouped);
    if (it == index.end()) throw error("collapsed point missing from the coarser flag");
    to.push_back(it->second);
    relative.push_back(std::move(rel));
  }
  return make_fibered_data(&full.data, &partial.data, std::move(to), std::move(relative));
}

EquivClass fiberwise_pushforward(const FiberedFixedPointData& fib, const EquivClass& beta) {
  if (beta.data() != fib.source) throw error("class does not live on the fiber source");
  int nvars = fib.source->nvars;
  std::vector<Localized> acc(fib.target->points.size(), Localized(LaurentPoly(nvars)));
  for (size_t s = 0; s < fib.to.size(); ++s) {
    std::vector<BinomialFactor> den;
    for (const Monomial& w : fib.relative[s]) den.emplace_back(Cyclotomic(1), mono_inverse(w));
    acc[fib.to[s]] += Localized(beta.at(static_cast<int>(s)), std::move(den));
  }
  std::vector<LaurentPoly> v;
  for (const Localized& a : acc) v.push_back(a.as_polynomial());
  return EquivClass(fib.target, std::move(v));
}

EquivClass euler_class_expansion(const FixedPointData& data) {
  std::vector<LaurentPoly> v;
  for (const FixedPoint& p : data.points)
    v.push_back(lambda_minus_one(data.nvars, p.tangent));
  return EquivClass(&data, std::move(v));
}

EquivClass point_pushforward_class(const FixedPointData& data, int l) {
  if (l < 0 || l >= static_cast<int>(data.points.size()))
    throw error("no such fixed point");
  std::vector<LaurentPoly> v(data.points.size(), LaurentPoly(data.nvars));
  v[l] = lambda_minus_one(data.nvars, data.points[l].tangent);
  return EquivClass(&data, std::move(v));
}

bool invertible_at(const std::vector<Monomial>& weights,
                   const std::vector<Cyclotomic>& point) {
  for (const Monomial& w : weights) {
    if (w.size() != point.size()) throw error("weight and point sizes differ");
    if (LaurentPoly::monomial(w).evaluate(point) == Cyclotomic(1)) return false;
  }
  return true;
}

FlagIdentityReport weyl_constant_identities(const FlagShape& shape,
                                            const LaurentPoly& alpha) {
  check_composition(shape);
  if (alpha.nvars() != shape.n) throw error("class has the wrong variable count");
  if (!alpha.is_symmetric()) throw error("identity check needs a symmetric class");

  FlagData full = flag_data(full_flag_shape(shape.n));
  FlagData part = flag_data(shape);
  FiberedFixedPointData fib = flag_fibration(full, part);

  FlagIdentityReport R;
  R.weyl_order = factorial(shape.n);
  R.levi_order = 1;
  for (int c : shape.composition) R.levi_order *= factorial(c);

  EquivClass pulled_full(&full.data,
                         std::vector<LaurentPoly>(full.data.points.size(), alpha));
  EquivClass pulled_part(&part.data,
                         std::vector<LaurentPoly>(part.data.points.size(), alpha));
  EquivClass euler_full = euler_class_expansion(full.data);
  EquivClass euler_part = euler_class_expansion(part.data);

  R.full_flag_ok = pushforward_to_point(euler_full * pulled_full) ==
                   alpha.scaled(Cyclotomic(R.weyl_order));
  R.partial_flag_ok = pushforward_to_point(euler_part * pulled_part) ==
                      alpha.scaled(Cyclotomic(R.weyl_order / R.levi_order));
  R.fiber_ok = fiberwise_pushforward(fib, euler_full * pulled_full) ==
               (euler_part * pulled_part).scaled(Cyclotomic(R.levi_order));
  return R;
}

}  // namespace ekloc
