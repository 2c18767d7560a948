#include "ekloc/gset.hpp"

#include <algorithm>
#include <deque>

namespace ekloc {

int StabilizerPairSet::index_of(int g, int x) const {
  return _index[g * _npoints + x];
}

GSet GSet::from_element_action(const FiniteGroup& G, std::vector<std::vector<int>> act) {
  if (static_cast<int>(act.size()) != G.size())
    throw error("action table needs one row per group element");
  int npoints = act.empty() ? 0 : static_cast<int>(act[0].size());
  for (const auto& row : act)
    if (static_cast<int>(row.size()) != npoints) throw error("ragged action table");
  GSet X(&G, npoints);
  X._act = std::move(act);
  X.verify_action();
  return X;
}

GSet GSet::from_generator_images(const FiniteGroup& G, int npoints,
                                 const std::vector<std::vector<int>>& gen_images) {
  if (static_cast<int>(gen_images.size()) != G.num_generators())
    throw error("need one point permutation per group generator");
  for (const auto& img : gen_images) {
    if (static_cast<int>(img.size()) != npoints) throw error("point permutation has wrong length");
    std::vector<bool> seen(npoints, false);
    for (int y : img) {
      if (y < 0 || y >= npoints || seen[y]) throw error("generator image is not a point permutation");
      seen[y] = true;
    }
  }
  std::vector<std::vector<int>> act(G.size());
  for (int a = 0; a < G.size(); ++a) {
    std::vector<int> row(npoints);
    for (int x = 0; x < npoints; ++x) row[x] = x;
    // word_of lists generators with left-to-right product equal to the
    // element, so the rightmost generator acts first.
    for (int s : G.word_of(a)) {
      std::vector<int> next(npoints);
      for (int x = 0; x < npoints; ++x) next[x] = row[gen_images[s][x]];
      row = std::move(next);
    }
    act[a] = std::move(row);
  }
  return from_element_action(G, std::move(act));
}

GSet GSet::natural(const FiniteGroup& G) {
  if (!G.is_permutation_group()) throw error("group has no defining permutation action");
  std::vector<std::vector<int>> act(G.size());
  for (int a = 0; a < G.size(); ++a) act[a] = G.perm_of(a);
  return from_element_action(G, std::move(act));
}

GSet GSet::point(const FiniteGroup& G) { return trivial(G, 1); }

GSet GSet::trivial(const FiniteGroup& G, int n) {
  std::vector<int> row(n);
  for (int x = 0; x < n; ++x) row[x] = x;
  return from_element_action(G, std::vector<std::vector<int>>(G.size(), row));
}

GSet GSet::left_translation(const FiniteGroup& G) {
  std::vector<std::vector<int>> act(G.size(), std::vector<int>(G.size()));
  for (int a = 0; a < G.size(); ++a)
    for (int x = 0; x < G.size(); ++x) act[a][x] = G.mul(a, x);
  return from_element_action(G, std::move(act));
}

GSet GSet::cosets(const FiniteGroup& G, const Subgroup& H) {
  if (H.parent != &G) throw error("subgroup belongs to a different group");
  // Canonical coset labels: the least member of each coset, ascending.
  std::vector<int> coset_of(G.size(), -1);
  std::vector<int> reps;
  for (int g = 0; g < G.size(); ++g) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h : H.elems) coset_of[G.mul(g, h)] = c;
  }
  int n = static_cast<int>(reps.size());
  std::vector<std::vector<int>> act(G.size(), std::vector<int>(n));
  for (int a = 0; a < G.size(); ++a)
    for (int x = 0; x < n; ++x) act[a][x] = coset_of[G.mul(a, reps[x])];
  return from_element_action(G, std::move(act));
}

GSet GSet::disjoint_union(const GSet& a, const GSet& b) {
  if (&a.group() != &b.group()) throw error("disjoint union over different groups");
  std::vector<std::vector<int>> act(a.group().size());
  for (int g = 0; g < a.group().size(); ++g) {
    act[g].reserve(a.size() + b.size());
    for (int x = 0; x < a.size(); ++x) act[g].push_back(a.apply(g, x));
    for (int x = 0; x < b.size(); ++x) act[g].push_back(a.size() + b.apply(g, x));
  }
  return from_element_action(a.group(), std::move(act));
}

void GSet::verify_action() const {
  const FiniteGroup& G = *_G;
  for (int x = 0; x < _npoints; ++x)
    if (_act[G.identity()][x] != x) throw error("identity does not act trivially");
  for (int g = 0; g < G.size(); ++g)
    for (int x = 0; x < _npoints; ++x) {
      int y = _act[g][x];
      if (y < 0 || y >= _npoints) throw error("action leaves the point set");
      for (int h = 0; h < G.size(); ++h)
        if (_act[G.mul(h, g)][x] != _act[h][y]) throw error("action is not associative");
    }
}

void GSet::compute_orbits() const {
  if (!_orbit_of.empty() || _npoints == 0) return;
  _orbit_of.assign(_npoints, -1);
  _transporter.assign(_npoints, _G->identity());
  for (int x = 0; x < _npoints; ++x) {
    if (_orbit_of[x] >= 0) continue;
    int o = static_cast<int>(_orbits.size());
    std::vector<int> members;
    std::deque<int> queue{x};
    _orbit_of[x] = o;
    _transporter[x] = _G->identity();
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      members.push_back(p);
      for (int i = 0; i < _G->num_generators(); ++i) {
        int s = _G->generator(i);
        int q = _act[s][p];
        if (_orbit_of[q] < 0) {
          _orbit_of[q] = o;
          _transporter[q] = _G->mul(s, _transporter[p]);
          queue.push_back(q);
        }
      }
    }
    std::sort(members.begin(), members.end());
    _orbits.push_back(std::move(members));
  }
  _orbit_stab.assign(_orbits.size(), nullptr);
}

const std::vector<std::vector<int>>& GSet::orbits() const {
  compute_orbits();
  return _orbits;
}

int GSet::orbit_of(int x) const {
  compute_orbits();
  return _orbit_of[x];
}

int GSet::orbit_rep(int orbit_index) const {
  compute_orbits();
  return _orbits[orbit_index][0];
}

int GSet::transporter(int x) const {
  compute_orbits();
  return _transporter[x];
}

Subgroup GSet::point_stabilizer(int x) const {
  Subgroup H;
  H.parent = _G;
  for (int g = 0; g < _G->size(); ++g)
    if (_act[g][x] == x) H.elems.push_back(g);
  return H;
}

std::shared_ptr<const MaterializedSubgroup> GSet::orbit_stabilizer(int orbit_index) const {
  compute_orbits();
  if (!_orbit_stab[orbit_index])
    _orbit_stab[orbit_index] = std::make_shared<const MaterializedSubgroup>(
        materialize_subgroup(*_G, point_stabilizer(orbit_rep(orbit_index))));
  return _orbit_stab[orbit_index];
}

const StabilizerPairSet& GSet::stabilizer_pairs() const {
  if (_pairs_ready) return _pairs;
  StabilizerPairSet P;
  P._npoints = _npoints;
  P._index.assign(static_cast<size_t>(_G->size()) * _npoints, -1);
  for (int g = 0; g < _G->size(); ++g)
    for (int x = 0; x < _npoints; ++x)
      if (_act[g][x] == x) {
        P._index[g * _npoints + x] = static_cast<int>(P.pairs.size());
        P.pairs.emplace_back(g, x);
      }
  // Orbits of the conjugation-translation action on pairs.
  P.orbit_of.assign(P.pairs.size(), -1);
  for (size_t i = 0; i < P.pairs.size(); ++i) {
    if (P.orbit_of[i] >= 0) continue;
    int o = static_cast<int>(P.orbits.size());
    std::vector<int> members;
    std::deque<int> queue{static_cast<int>(i)};
    P.orbit_of[i] = o;
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      members.push_back(p);
      auto [g, x] = P.pairs[p];
      for (int t = 0; t < _G->num_generators(); ++t) {
        int s = _G->generator(t);
        int q = P._index[_G->conj(s, g) * _npoints + _act[s][x]];
        if (P.orbit_of[q] < 0) {
          P.orbit_of[q] = o;
          queue.push_back(q);
        }
      }
    }
    std::sort(members.begin(), members.end());
    P.orbits.push_back(std::move(members));
  }
  _pairs = std::move(P);
  _pairs_ready = true;
  return _pairs;
}

GMap::GMap(const GSet* source, const GSet* target, std::vector<int> to_)
    : source(source), target(target), to(std::move(to_)) {
  if (&source->group() != &target->group()) throw error("map between sets of different groups");
  if (static_cast<int>(to.size()) != source->size()) throw error("map has wrong domain size");
  const FiniteGroup& G = source->group();
  for (int x = 0; x < source->size(); ++x) {
    if (to[x] < 0 || to[x] >= target->size()) throw error("map leaves the target set");
    for (int g = 0; g < G.size(); ++g)
      if (to[source->apply(g, x)] != target->apply(g, to[x]))
        throw error("map is not equivariant");
  }
}

GMap GMap::identity(const GSet& X) {
  std::vector<int> to(X.size());
  for (int x = 0; x < X.size(); ++x) to[x] = x;
  return GMap(&X, &X, std::move(to));
}

GMap GMap::collapse(const GSet& X, const GSet& pt) {
  if (pt.size() != 1) throw error("collapse target must be a single point");
  return GMap(&X, &pt, std::vector<int>(X.size(), 0));
}

StabilizerClass::StabilizerClass(const GSet* X, std::vector<Cyclotomic> pair_values)
    : _X(X), _v(std::move(pair_values)) {
  const StabilizerPairSet& P = X->stabilizer_pairs();
  if (static_cast<int>(_v.size()) != P.size())
    throw error("class needs one value per stabilizer pair");
  // Constancy on orbits of the pair set.
  const FiniteGroup& G = X->group();
  for (int i = 0; i < P.size(); ++i) {
    auto [g, x] = P.pairs[i];
    for (int t = 0; t < G.num_generators(); ++t) {
      int s = G.generator(t);
      int j = P.index_of(G.conj(s, g), X->apply(s, x));
      if (_v[i] != _v[j]) throw error("class values are not constant on pair orbits");
    }
  }
}

StabilizerClass StabilizerClass::zero(const GSet& X) {
  return StabilizerClass(&X, std::vector<Cyclotomic>(X.stabilizer_pairs().size()));
}

StabilizerClass StabilizerClass::one(const GSet& X) {
  return StabilizerClass(&X,
                         std::vector<Cyclotomic>(X.stabilizer_pairs().size(), Cyclotomic(1)));
}

Cyclotomic StabilizerClass::value(int g, int x) const {
  int i = _X->stabilizer_pairs().index_of(g, x);
  return i < 0 ? Cyclotomic() : _v[i];
}

StabilizerClass StabilizerClass::operator+(const StabilizerClass& o) const {
  if (_X != o._X) throw error("classes on different sets");
  std::vector<Cyclotomic> v = _v;
  for (size_t i = 0; i < v.size(); ++i) v[i] += o._v[i];
  return StabilizerClass(_X, std::move(v));
}

StabilizerClass StabilizerClass::operator-(const StabilizerClass& o) const {
  return *this + o.scaled(Cyclotomic(-1));
}

StabilizerClass StabilizerClass::operator*(const StabilizerClass& o) const {
  if (_X != o._X) throw error("classes on different sets");
  std::vector<Cyclotomic> v = _v;
  for (size_t i = 0; i < v.size(); ++i) v[i] *= o._v[i];
  return StabilizerClass(_X, std::move(v));
}

StabilizerClass StabilizerClass::scaled(const Cyclotomic& c) const {
  std::vector<Cyclotomic> v = _v;
  for (auto& x : v) x *= c;
  return StabilizerClass(_X, std::move(v));
}

bool StabilizerClass::operator==(const StabilizerClass& o) const {
  return _X == o._X && _v == o._v;
}

bool StabilizerClass::is_zero() const {
  for (const auto& c : _v)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<StabilizerClass> StabilizerClass::decompose() const {
  size_t nclasses = _X->group().conjugacy_classes().size();
  std::vector<StabilizerClass> out;
  for (size_t c = 0; c < nclasses; ++c) out.push_back(component(static_cast<int>(c)));
  return out;
}

StabilizerClass StabilizerClass::component(int class_index) const {
  const StabilizerPairSet& P = _X->stabilizer_pairs();
  std::vector<Cyclotomic> v(_v.size());
  for (int i = 0; i < P.size(); ++i)
    if (_X->group().class_index_of(P.pairs[i].first) == class_index) v[i] = _v[i];
  return StabilizerClass(_X, std::move(v));
}

StabilizerClass pushforward(const GMap& q, const StabilizerClass& beta) {
  if (beta.space() != q.source) throw error("pushforward source mismatch");
  const StabilizerPairSet& src = q.source->stabilizer_pairs();
  const StabilizerPairSet& dst = q.target->stabilizer_pairs();
  std::vector<Cyclotomic> v(dst.size());
  for (int i = 0; i < src.size(); ++i) {
    auto [g, x] = src.pairs[i];
    // g fixes q(x) whenever it fixes x, so the pair below always exists.
    v[dst.index_of(g, q(x))] += beta.at_pair(i);
  }
  return StabilizerClass(q.target, std::move(v));
}

StabilizerClass pullback(const GMap& q, const StabilizerClass& alpha) {
  if (alpha.space() != q.target) throw error("pullback target mismatch");
  const StabilizerPairSet& src = q.source->stabilizer_pairs();
  std::vector<Cyclotomic> v(src.size());
  for (int i = 0; i < src.size(); ++i) {
    auto [g, x] = src.pairs[i];
    v[i] = alpha.value(g, q(x));
  }
  return StabilizerClass(q.source, std::move(v));
}

GSheaf::GSheaf(const GSet* X, std::vector<MatrixRep> reps) : _X(X), _reps(std::move(reps)) {
  if (_reps.size() != X->orbits().size()) throw error("sheaf needs one fiber rep per orbit");
  for (size_t o = 0; o < _reps.size(); ++o)
    if (_reps[o].group() != &X->orbit_stabilizer(static_cast<int>(o))->group)
      throw error("fiber rep is not a rep of the orbit stabilizer");
}

GSheaf GSheaf::structure(const GSet& X) {
  std::vector<MatrixRep> reps;
  for (size_t o = 0; o < X.orbits().size(); ++o)
    reps.push_back(MatrixRep::trivial(X.orbit_stabilizer(static_cast<int>(o))->group));
  return GSheaf(&X, std::move(reps));
}

int GSheaf::fiber_dim(int x) const { return _reps[_X->orbit_of(x)].dim(); }

GSheaf GSheaf::direct_sum(const GSheaf& o) const {
  if (_X != o._X) throw error("sheaves on different sets");
  std::vector<MatrixRep> reps;
  for (size_t i = 0; i < _reps.size(); ++i) reps.push_back(_reps[i].direct_sum(o._reps[i]));
  return GSheaf(_X, std::move(reps));
}

GSheaf GSheaf::tensor(const GSheaf& o) const {
  if (_X != o._X) throw error("sheaves on different sets");
  std::vector<MatrixRep> reps;
  for (size_t i = 0; i < _reps.size(); ++i) reps.push_back(_reps[i].tensor(o._reps[i]));
  return GSheaf(_X, std::move(reps));
}

GSheaf GSheaf::pulled_back(const GMap& q) const {
  if (_X != q.target) throw error("sheaf pullback target mismatch");
  const GSet& S = *q.source;
  const FiniteGroup& G = S.group();
  std::vector<MatrixRep> reps;
  for (size_t o = 0; o < S.orbits().size(); ++o) {
    auto stab = S.orbit_stabilizer(static_cast<int>(o));
    int y = q(S.orbit_rep(static_cast<int>(o)));
    int to = _X->orbit_of(y);
    auto target_stab = _X->orbit_stabilizer(to);
    int t = _X->transporter(y);
    // The fiber at y is the fiber at the target orbit representative,
    // carried along t; the stabilizer of the source point lands inside the
    // stabilizer of y under conjugation by t^-1.
    std::vector<CycMatrix> images;
    for (int a = 0; a < stab->group.size(); ++a) {
      int g = stab->to_parent[a];
      int local = target_stab->from_parent[G.mul(G.mul(G.inv(t), g), t)];
      if (local < 0) throw error("pullback stabilizer bookkeeping broke");
      images.push_back(_reps[to].at(local));
    }
    reps.emplace_back(&stab->group, std::move(images));
  }
  return GSheaf(&S, std::move(reps));
}

GSheaf GSheaf::pushed_forward(const GMap& q) const {
  if (_X != q.source) throw error("sheaf pushforward source mismatch");
  const GSet& S = *q.source;
  const GSet& T = *q.target;
  const FiniteGroup& G = S.group();
  std::vector<MatrixRep> reps;
  for (size_t o = 0; o < T.orbits().size(); ++o) {
    auto stab = T.orbit_stabilizer(static_cast<int>(o));
    int y = T.orbit_rep(static_cast<int>(o));
    // Basis of the direct-image fiber at y: the fibers over the preimage
    // points, each identified with its orbit representative's fiber through
    // the transporter.
    std::vector<int> fiber;
    for (int x = 0; x < S.size(); ++x)
      if (q(x) == y) fiber.push_back(x);
    std::vector<int> offset(S.size(), -1);
    int dim = 0;
    for (int x : fiber) {
      offset[x] = dim;
      dim += fiber_dim(x);
    }
    std::vector<CycMatrix> images;
    for (int a = 0; a < stab->group.size(); ++a) {
      int g = stab->to_parent[a];
      CycMatrix m(dim, dim);
      for (int x : fiber) {
        int gx = S.apply(g, x);  // stays in the fiber: q(gx) = g.y = y
        int so = S.orbit_of(x);
        auto fiber_stab = S.orbit_stabilizer(so);
        // Map fiber(x) -> fiber(gx) in representative coordinates.
        int local = fiber_stab->from_parent[G.mul(
            G.mul(G.inv(S.transporter(gx)), g), S.transporter(x))];
        if (local < 0) throw error("pushforward stabilizer bookkeeping broke");
        const CycMatrix& block = _reps[so].at(local);
        for (int r = 0; r < block.rows(); ++r)
          for (int c = 0; c < block.cols(); ++c)
            m.at(offset[gx] + r, offset[x] + c) = block.at(r, c);
      }
      images.push_back(std::move(m));
    }
    reps.emplace_back(&stab->group, std::move(images));
  }
  return GSheaf(&T, std::move(reps));
}

StabilizerClass GSheaf::to_class() const {
  const StabilizerPairSet& P = _X->stabilizer_pairs();
  const FiniteGroup& G = _X->group();
  std::vector<Cyclotomic> v(P.size());
  for (int i = 0; i < P.size(); ++i) {
    auto [g, x] = P.pairs[i];
    int o = _X->orbit_of(x);
    auto stab = _X->orbit_stabilizer(o);
    int t = _X->transporter(x);
    int local = stab->from_parent[G.mul(G.mul(G.inv(t), g), t)];
    if (local < 0) throw error("trace bookkeeping broke");
    v[i] = _reps[o].at(local).trace();
  }
  return StabilizerClass(_X, std::move(v));
}

OrbitFunction OrbitFunction::operator+(const OrbitFunction& o) const {
  if (space != o.space) throw error("orbit functions on different sets");
  std::vector<Cyclotomic> v = values;
  for (size_t i = 0; i < v.size(); ++i) v[i] += o.values[i];
  return OrbitFunction{space, std::move(v)};
}

OrbitFunction OrbitFunction::scaled(const Cyclotomic& c) const {
  std::vector<Cyclotomic> v = values;
  for (auto& x : v) x *= c;
  return OrbitFunction{space, std::move(v)};
}

bool OrbitFunction::operator==(const OrbitFunction& o) const {
  return space == o.space && values == o.values;
}

OrbitFunction invariants(const StabilizerClass& alpha) {
  const GSet& X = *alpha.space();
  std::vector<Cyclotomic> v;
  for (size_t o = 0; o < X.orbits().size(); ++o) {
    int x = X.orbit_rep(static_cast<int>(o));
    Subgroup H = X.point_stabilizer(x);
    Cyclotomic total;
    for (int g : H.elems) total += alpha.value(g, x);
    v.push_back(total * Cyclotomic(rat(1, H.size())));
  }
  return OrbitFunction{&X, std::move(v)};
}

OrbitFunction orbit_pushforward(const GMap& q, const OrbitFunction& f) {
  if (f.space != q.source) throw error("orbit pushforward source mismatch");
  std::vector<Cyclotomic> v(q.target->orbits().size());
  for (size_t o = 0; o < q.source->orbits().size(); ++o)
    v[q.target->orbit_of(q(q.source->orbit_rep(static_cast<int>(o))))] += f.values[o];
  return OrbitFunction{q.target, std::move(v)};
}

SliceSpace build_slice(const GSet& X, int class_index) {
  const FiniteGroup& G = X.group();
  const StabilizerPairSet& P = X.stabilizer_pairs();
  std::vector<std::pair<int, int>> labels;
  std::vector<int> pair_to_point(P.size(), -1);
  for (int i = 0; i < P.size(); ++i)
    if (G.class_index_of(P.pairs[i].first) == class_index) {
      pair_to_point[i] = static_cast<int>(labels.size());
      labels.push_back(P.pairs[i]);
    }
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> act(G.size(), std::vector<int>(n));
  for (int g = 0; g < G.size(); ++g)
    for (int p = 0; p < n; ++p) {
      auto [h, x] = labels[p];
      act[g][p] = pair_to_point[P.index_of(G.conj(g, h), X.apply(g, x))];
    }
  SliceSpace S{GSet::from_element_action(G, std::move(act)), labels, {}, class_index};
  for (const auto& [h, x] : labels) S.to_base.push_back(x);
  return S;
}

GMap slice_projection(const SliceSpace& S, const GSet& X) {
  return GMap(&S.space, &X, S.to_base);
}

MixedSpace::MixedSpace(std::shared_ptr<const MaterializedSubgroup> Z_, const GSet* w,
                       GSet s, std::vector<std::pair<int, int>> canonical_,
                       std::map<std::pair<int, int>, int> index)
    : Z(std::move(Z_)),
      w_space(w),
      space(std::move(s)),
      canonical(std::move(canonical_)),
      _index(std::move(index)) {}

int MixedSpace::point_of(int k, int w) const {
  const FiniteGroup& G = space.group();
  std::pair<int, int> best{G.size(), w_space->size()};
  for (int z = 0; z < Z->group.size(); ++z)
    best = std::min(best, {G.mul(k, G.inv(Z->to_parent[z])), w_space->apply(z, w)});
  return _index.at(best);
}

MixedSpace build_mixed_space(const FiniteGroup& G,
                             std::shared_ptr<const MaterializedSubgroup> Z, const GSet& W) {
  if (&W.group() != &Z->group) throw error("mixed space needs a set with a subgroup action");
  // Equivalence classes of (k, w) under (k, w) ~ (k z^-1, zw), keyed by the
  // least representative.
  auto least = [&](int k, int w) {
    std::pair<int, int> best{G.size(), W.size()};
    for (int z = 0; z < Z->group.size(); ++z)
      best = std::min(best, {G.mul(k, G.inv(Z->to_parent[z])), W.apply(z, w)});
    return best;
  };
  std::map<std::pair<int, int>, int> index;
  for (int k = 0; k < G.size(); ++k)
    for (int w = 0; w < W.size(); ++w) index.emplace(least(k, w), 0);
  int n = 0;
  std::vector<std::pair<int, int>> canonical;
  for (auto& [key, idx] : index) {
    idx = n++;
    canonical.push_back(key);
  }
  if (static_cast<size_t>(n) * Z->group.size() !=
      static_cast<size_t>(G.size()) * W.size())
    throw error("mixed space enumeration is inconsistent");

  std::vector<std::vector<int>> act(G.size(), std::vector<int>(n));
  for (int g = 0; g < G.size(); ++g)
    for (int p = 0; p < n; ++p) {
      auto [k, w] = canonical[p];
      act[g][p] = index.at(least(G.mul(g, k), w));
    }
  return MixedSpace(Z, &W, GSet::from_element_action(G, std::move(act)),
                    std::move(canonical), std::move(index));
}

StabilizerClass morita_transport(const MixedSpace& M, const StabilizerClass& beta_on_w) {
  if (beta_on_w.space() != M.w_space) throw error("transport source mismatch");
  const FiniteGroup& G = M.space.group();
  const StabilizerPairSet& P = M.space.stabilizer_pairs();
  std::vector<Cyclotomic> v(P.size());
  for (int i = 0; i < P.size(); ++i) {
    auto [g, p] = P.pairs[i];
    auto [k, w] = M.canonical[p];
    int z = M.Z->from_parent[G.mul(G.mul(G.inv(k), g), k)];
    if (z < 0) throw error("stabilizer of a mixed point left the subgroup");
    v[i] = beta_on_w.value(z, w);
  }
  // The constructor's orbit-constancy check certifies that the transported
  // values do not depend on the choice of representative pair.
  return StabilizerClass(&M.space, std::move(v));
}

StabilizerClass morita_inverse(const MixedSpace& M, const StabilizerClass& alpha_on_mixed) {
  if (alpha_on_mixed.space() != &M.space) throw error("transport source mismatch");
  const StabilizerPairSet& P = M.w_space->stabilizer_pairs();
  const FiniteGroup& G = M.space.group();
  std::vector<Cyclotomic> v(P.size());
  for (int i = 0; i < P.size(); ++i) {
    auto [z, w] = P.pairs[i];
    v[i] = alpha_on_mixed.value(M.Z->to_parent[z], M.point_of(G.identity(), w));
  }
  return StabilizerClass(M.w_space, std::move(v));
}

StabilizerClass twist_central(const StabilizerClass& beta, int h) {
  const GSet& W = *beta.space();
  const FiniteGroup& Z = W.group();
  for (int z = 0; z < Z.size(); ++z)
    if (Z.mul(h, z) != Z.mul(z, h)) throw error("twisting element is not central");
  for (int x = 0; x < W.size(); ++x)
    if (W.apply(h, x) != x) throw error("twisting element does not act trivially");
  const StabilizerPairSet& P = W.stabilizer_pairs();
  std::vector<Cyclotomic> v(P.size());
  for (int i = 0; i < P.size(); ++i) {
    auto [z, x] = P.pairs[i];
    v[i] = beta.value(Z.mul(h, z), x);
  }
  return StabilizerClass(&W, std::move(v));
}

StabilizerClass twist_via_reps(const GSheaf& F, int h) {
  const GSet& W = *F.space();
  const FiniteGroup& Z = W.group();
  for (int z = 0; z < Z.size(); ++z)
    if (Z.mul(h, z) != Z.mul(z, h)) throw error("twisting element is not central");
  for (int x = 0; x < W.size(); ++x)
    if (W.apply(h, x) != x) throw error("twisting element does not act trivially");

  // Per orbit: split the fiber into exact eigenspaces of h and accumulate
  // the twisted character mu * trace(z restricted to the mu-eigenspace).
  std::vector<std::vector<Cyclotomic>> twisted_char;
  for (size_t o = 0; o < W.orbits().size(); ++o) {
    auto stab = W.orbit_stabilizer(static_cast<int>(o));
    const MatrixRep& rho = F.rep(static_cast<int>(o));
    int hl = stab->from_parent[h];
    if (hl < 0) throw error("twisting element missing from a stabilizer");
    long k = stab->group.element_order(hl);
    int d = rho.dim();
    std::vector<Cyclotomic> chars(stab->group.size());
    int total = 0;
    for (long j = 0; j < k; ++j) {
      Cyclotomic mu = Cyclotomic::root_of_unity(k, j);
      CycMatrix shifted = rho.at(hl) - CycMatrix::identity(d).scaled(mu);
      CycMatrix basis = mat_nullspace(shifted);
      if (basis.cols() == 0) continue;
      total += basis.cols();
      for (int a = 0; a < stab->group.size(); ++a) {
        // rho(a) preserves the eigenspace because a commutes with h; its
        // matrix in the basis solves basis * R = rho(a) * basis.
        CycMatrix restricted = mat_solve(basis, rho.at(a) * basis);
        chars[a] += mu * restricted.trace();
      }
    }
    if (total != d) throw error("eigenspaces do not fill the fiber");
    twisted_char.push_back(std::move(chars));
  }

  const StabilizerPairSet& P = W.stabilizer_pairs();
  std::vector<Cyclotomic> v(P.size());
  for (int i = 0; i < P.size(); ++i) {
    auto [z, x] = P.pairs[i];
    int o = W.orbit_of(x);
    auto stab = W.orbit_stabilizer(o);
    int t = W.transporter(x);
    int local = stab->from_parent[Z.mul(Z.mul(Z.inv(t), z), t)];
    if (local < 0) throw error("twist bookkeeping broke");
    v[i] = twisted_char[o][local];
  }
  return StabilizerClass(&W, std::move(v));
}

StabilizerClass twist_tautological(const SliceSpace& S, const StabilizerClass& beta) {
  if (beta.space() != &S.space) throw error("twist carrier mismatch");
  const FiniteGroup& G = S.space.group();
  const StabilizerPairSet& P = S.space.stabilizer_pairs();
  std::vector<Cyclotomic> v(P.size());
  for (int i = 0; i < P.size(); ++i) {
    auto [g, p] = P.pairs[i];
    // h_p commutes with g (g stabilizes the pair (h_p, x)) and fixes p, so
    // (h_p g, p) is again a stabilizer pair of the slice.
    v[i] = beta.value(G.mul(S.labels[p].first, g), p);
  }
  return StabilizerClass(&S.space, std::move(v));
}

FixedLocus fixed_locus(const GSet& X, std::shared_ptr<const MaterializedSubgroup> Z, int h) {
  std::vector<int> labels;
  std::vector<int> point_of(X.size(), -1);
  for (int x = 0; x < X.size(); ++x)
    if (X.apply(h, x) == x) {
      point_of[x] = static_cast<int>(labels.size());
      labels.push_back(x);
    }
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<int>> act(Z->group.size(), std::vector<int>(n));
  for (int z = 0; z < Z->group.size(); ++z)
    for (int p = 0; p < n; ++p) {
      int y = X.apply(Z->to_parent[z], labels[p]);
      if (point_of[y] < 0) throw error("subgroup does not preserve the fixed locus");
      act[z][p] = point_of[y];
    }
  return FixedLocus{Z, GSet::from_element_action(Z->group, std::move(act)), labels};
}

StabilizerClass central_summand_support(const SliceSpace& S, const StabilizerClass& beta) {
  if (beta.space() != &S.space) throw error("summand carrier mismatch");
  const StabilizerPairSet& P = S.space.stabilizer_pairs();
  std::vector<Cyclotomic> v(P.size());
  for (int i = 0; i < P.size(); ++i) {
    auto [g, p] = P.pairs[i];
    if (g == S.labels[p].first) v[i] = beta.at_pair(i);
  }
  return StabilizerClass(&S.space, std::move(v));
}

StabilizerClass central_summand_centralizer(const GSet& X, const SliceSpace& S,
                                            const StabilizerClass& beta, int h) {
  if (beta.space() != &S.space) throw error("summand carrier mismatch");
  const FiniteGroup& G = X.group();
  if (G.class_index_of(h) != S.class_index)
    throw error("representative does not lie in the slice class");
  auto Z = std::make_shared<const MaterializedSubgroup>(
      materialize_subgroup(G, centralizer(G, h)));
  FixedLocus L = fixed_locus(X, Z, h);
  MixedSpace M = build_mixed_space(G, Z, L.space);

  // The balanced product G x_Z X^h is isomorphic to the slice by
  // [k, w] -> (k h k^-1, k . w); build the point bijection and check it.
  const StabilizerPairSet& base_pairs = X.stabilizer_pairs();
  std::vector<int> slice_point_of_pair(base_pairs.size(), -1);
  for (size_t p = 0; p < S.labels.size(); ++p)
    slice_point_of_pair[base_pairs.index_of(S.labels[p].first, S.labels[p].second)] =
        static_cast<int>(p);
  if (M.space.size() != S.space.size())
    throw error("balanced product and slice have different sizes");
  std::vector<int> iso(M.space.size());
  std::vector<bool> hit(S.space.size(), false);
  for (int m = 0; m < M.space.size(); ++m) {
    auto [k, w] = M.canonical[m];
    int target = base_pairs.index_of(G.conj(k, h), X.apply(k, L.point_labels[w]));
    int sp = target < 0 ? -1 : slice_point_of_pair[target];
    if (sp < 0) throw error("balanced product landed outside the slice");
    if (hit[sp]) throw error("balanced product map is not injective");
    hit[sp] = true;
    iso[m] = sp;
  }
  GMap phi(&M.space, &S.space, std::move(iso));  // equivariance checked here

  // Centralizer model: carry beta over, project onto the singleton class of
  // h inside Z, and carry it back.
  StabilizerClass on_mixed = pullback(phi, beta);
  StabilizerClass on_w = morita_inverse(M, on_mixed);
  int h_local = Z->from_parent[h];
  int central_class = Z->group.class_index_of(h_local);
  if (Z->group.conjugacy_classes()[central_class].members.size() != 1)
    throw error("representative is not central in its centralizer");
  StabilizerClass projected = on_w.component(central_class);
  // The unit slot for the alternating sum of exterior powers of the dual of
  // the quotient of Lie algebras: both algebras vanish here.
  StabilizerClass lie_lambda = StabilizerClass::one(*M.w_space);
  StabilizerClass back = morita_transport(M, projected * lie_lambda);
  return pushforward(phi, back);
}

StabilizerClass localize_at_class(const GSet& X, const StabilizerClass& alpha,
                                  int class_index, SummandRoute route) {
  if (alpha.space() != &X) throw error("localization carrier mismatch");
  SliceSpace S = build_slice(X, class_index);
  if (S.space.size() == 0) return StabilizerClass::zero(X);
  GMap f = slice_projection(S, X);
  StabilizerClass pulled = pullback(f, alpha);
  StabilizerClass summand =
      route == SummandRoute::support
          ? central_summand_support(S, pulled)
          : central_summand_centralizer(
                X, S, pulled,
                X.group().conjugacy_classes()[class_index].representative);
  // The unit slot for the alternating sum of exterior powers of the conormal
  // module of f: the module is zero on finite sets.
  StabilizerClass conormal_lambda = StabilizerClass::one(S.space);
  return pushforward(f, summand * conormal_lambda);
}

SectorComparison sector_invariants(const GSet& X, const StabilizerClass& alpha,
                                   int class_index) {
  OrbitFunction lhs = invariants(alpha.component(class_index));
  SliceSpace S = build_slice(X, class_index);
  OrbitFunction rhs{&X, std::vector<Cyclotomic>(X.orbits().size())};
  if (S.space.size() > 0) {
    GMap f = slice_projection(S, X);
    StabilizerClass pulled = pullback(f, alpha);
    StabilizerClass summand = central_summand_support(S, pulled);
    StabilizerClass twisted = twist_tautological(S, summand);
    rhs = orbit_pushforward(f, invariants(twisted));
  }
  return SectorComparison{lhs, rhs, lhs == rhs};
}

}  // namespace ekloc
