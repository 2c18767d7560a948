#include "ekloc/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace ekloc {

namespace {

// Product a*b acts by b first, then a.
std::vector<int> perm_compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[b[i]];
  return out;
}

std::string matrix_key(const CycMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols() << "|";
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Cyclotomic& c = m.at(i, j);
      os << c.order() << ":";
      for (const auto& q : c.coeffs()) os << rat_to_string(q) << ",";
      os << ";";
    }
  return os.str();
}

constexpr int kTableLimit = 512;       // precompute products below this size
constexpr int kAssocCheckLimit = 64;   // exhaustive associativity check below this
constexpr int kSubgroupEnumLimit = 30;

}  // namespace

FiniteGroup FiniteGroup::from_permutations(int degree,
                                           const std::vector<std::vector<int>>& gens,
                                           const Caps& caps) {
  if (degree < 1) throw error("permutation degree must be positive");
  FiniteGroup G;
  G._degree = degree;
  std::vector<std::vector<int>> gen_payloads;
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw error("generator image list has wrong length");
    std::vector<int> p(degree);
    std::vector<bool> seen(degree, false);
    for (int i = 0; i < degree; ++i) {
      int img = g[i] - 1;  // descriptor images are 1-based
      if (img < 0 || img >= degree || seen[img]) throw error("generator is not a permutation");
      seen[img] = true;
      p[i] = img;
    }
    gen_payloads.push_back(std::move(p));
  }

  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> elems{id};
  std::vector<std::vector<int>> words{{}};
  index[id] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (size_t s = 0; s < gen_payloads.size(); ++s) {
      std::vector<int> prod = perm_compose(elems[a], gen_payloads[s]);
      if (index.emplace(prod, static_cast<int>(elems.size())).second) {
        if (static_cast<long>(elems.size()) + 1 > caps.group_order)
          throw error("group order cap exceeded");
        std::vector<int> w = words[a];
        w.push_back(static_cast<int>(s));
        elems.push_back(std::move(prod));
        words.push_back(std::move(w));
        queue.push_back(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  // Re-index in canonical (lex) order of image vectors.
  std::vector<int> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return elems[a] < elems[b]; });
  std::vector<int> newpos(elems.size());
  for (size_t i = 0; i < order.size(); ++i) newpos[order[i]] = static_cast<int>(i);
  G._perm.resize(elems.size());
  G._words.resize(elems.size());
  for (size_t i = 0; i < order.size(); ++i) {
    G._perm[i] = std::move(elems[order[i]]);
    G._words[i] = std::move(words[order[i]]);
    G._perm_index[G._perm[i]] = static_cast<int>(i);
  }
  G._identity = G._perm_index.at(id);
  for (const auto& p : gen_payloads) G._gens.push_back(G._perm_index.at(p));
  G.finish_construction(caps);
  return G;
}

FiniteGroup FiniteGroup::from_matrices(long cyc_order, const std::vector<CycMatrix>& gens,
                                       const Caps& caps) {
  if (gens.empty()) throw error("matrix group needs at least one generator");
  int dim = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != dim || g.cols() != dim) throw error("matrix generators must be square, equal size");
  FiniteGroup G;
  G._matrix_order = cyc_order;

  CycMatrix id = CycMatrix::identity(dim);
  std::map<std::string, int> index;
  std::vector<CycMatrix> elems{id};
  std::vector<std::vector<int>> words{{}};
  index[matrix_key(id)] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (size_t s = 0; s < gens.size(); ++s) {
      CycMatrix prod = elems[a] * gens[s];
      std::string key = matrix_key(prod);
      if (index.emplace(key, static_cast<int>(elems.size())).second) {
        if (static_cast<long>(elems.size()) + 1 > caps.group_order)
          throw error("group order cap exceeded");
        std::vector<int> w = words[a];
        w.push_back(static_cast<int>(s));
        elems.push_back(std::move(prod));
        words.push_back(std::move(w));
        queue.push_back(static_cast<int>(elems.size()) - 1);
      }
    }
  }

  std::vector<std::string> keys(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) keys[i] = matrix_key(elems[i]);
  std::vector<int> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
  G._mat.resize(elems.size());
  G._words.resize(elems.size());
  for (size_t i = 0; i < order.size(); ++i) {
    G._mat[i] = std::move(elems[order[i]]);
    G._words[i] = std::move(words[order[i]]);
    G._mat_index[keys[order[i]]] = static_cast<int>(i);
  }
  G._identity = G._mat_index.at(matrix_key(id));
  for (const auto& g : gens) G._gens.push_back(G._mat_index.at(matrix_key(g)));
  G.finish_construction(caps);
  return G;
}

FiniteGroup FiniteGroup::named(const std::string& name, const Caps& caps) {
  if (name == "S3")
    return from_permutations(3, {{2, 1, 3}, {2, 3, 1}}, caps);
  if (name == "S4")
    return from_permutations(4, {{2, 1, 3, 4}, {2, 3, 4, 1}}, caps);
  if (name == "A4")
    return from_permutations(4, {{2, 3, 1, 4}, {2, 1, 4, 3}}, caps);
  if (name == "D4")
    return from_permutations(4, {{2, 3, 4, 1}, {3, 2, 1, 4}}, caps);
  if (name == "Q8") {
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CycMatrix mi(2, 2), mj(2, 2);
    mi.at(0, 0) = i;
    mi.at(1, 1) = -i;
    mj.at(0, 1) = Cyclotomic(1);
    mj.at(1, 0) = Cyclotomic(-1);
    return from_matrices(4, {mi, mj}, caps);
  }
  if (name.rfind("Z/", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(name.substr(2));
    } catch (...) {
      throw error("bad cyclic group name: " + name);
    }
    if (n < 1) throw error("cyclic group order must be positive");
    std::vector<int> cycle(n);
    for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n + 1;
    return from_permutations(n, {cycle}, caps);
  }
  throw error("unknown builtin group: " + name);
}

void FiniteGroup::finish_construction(const Caps& caps) {
  (void)caps;
  int n = size();
  if (n <= kTableLimit) {
    _table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) _table[a][b] = compose_lookup(a, b);
  }
  // Inverse existence: closed finite sets of invertible maps form groups, but
  // verify the table anyway while it is cheap.
  for (int a = 0; a < n && !_table.empty(); ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b) has_inverse |= (_table[a][b] == _identity);
    if (!has_inverse) throw error("element without inverse; construction is broken");
  }
  if (n <= kAssocCheckLimit && !_table.empty()) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (_table[_table[a][b]][c] != _table[a][_table[b][c]])
            throw error("associativity violated; construction is broken");
  }
}

int FiniteGroup::compose_lookup(int a, int b) const {
  if (is_permutation_group()) {
    return _perm_index.at(perm_compose(_perm[a], _perm[b]));
  }
  return _mat_index.at(matrix_key(_mat[a] * _mat[b]));
}

int FiniteGroup::mul(int a, int b) const {
  if (!_table.empty()) return _table[a][b];
  return compose_lookup(a, b);
}

int FiniteGroup::inv(int a) const {
  if (is_permutation_group()) {
    const auto& p = _perm[a];
    std::vector<int> q(p.size());
    for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return _perm_index.at(q);
  }
  for (int b = 0; b < size(); ++b)
    if (mul(a, b) == _identity) return b;
  throw error("element without inverse");
}

int FiniteGroup::pow(int a, long e) const {
  if (e < 0) return pow(inv(a), -e);
  int out = _identity, base = a;
  while (e > 0) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

long FiniteGroup::element_order(int a) const {
  long k = 1;
  int x = a;
  while (x != _identity) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

long FiniteGroup::exponent() const {
  long e = 1;
  for (int a = 0; a < size(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

const std::vector<int>& FiniteGroup::perm_of(int a) const {
  if (!is_permutation_group()) throw error("not a permutation group");
  return _perm[a];
}

const CycMatrix& FiniteGroup::matrix_of(int a) const {
  if (is_permutation_group()) throw error("not a matrix group");
  return _mat[a];
}

std::string FiniteGroup::describe_element(int a) const {
  if (!is_permutation_group()) return _mat[a].to_string();
  const auto& p = _perm[a];
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i)) continue;
    os << "(";
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << (j + 1);
      first = false;
      j = p[j];
    }
    os << ")";
    any = true;
  }
  return any ? os.str() : "e";
}

const std::vector<FiniteGroup::ConjugacyClass>& FiniteGroup::conjugacy_classes() const {
  if (!_classes.empty() || size() == 0) return _classes;
  int n = size();
  std::vector<bool> visited(n, false);
  std::vector<ConjugacyClass> classes;
  for (int g = 0; g < n; ++g) {
    if (visited[g]) continue;
    std::vector<int> members;
    std::deque<int> queue{g};
    visited[g] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      members.push_back(x);
      for (int s : _gens) {
        int y = conj(s, x);
        if (!visited[y]) {
          visited[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    classes.push_back({members[0], std::move(members)});
  }
  std::sort(classes.begin(), classes.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.representative < b.representative;
  });
  _classes = std::move(classes);
  _class_of.assign(n, -1);
  for (size_t c = 0; c < _classes.size(); ++c)
    for (int m : _classes[c].members) _class_of[m] = static_cast<int>(c);
  return _classes;
}

int FiniteGroup::class_index_of(int g) const {
  conjugacy_classes();
  return _class_of[g];
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elems.begin(), elems.end(), g);
}

Subgroup subgroup_closure(const FiniteGroup& G, std::vector<int> gens) {
  std::set<int> seen{G.identity()};
  std::deque<int> queue{G.identity()};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int s : gens) {
      int b = G.mul(a, s);
      if (seen.insert(b).second) queue.push_back(b);
    }
  }
  Subgroup H;
  H.parent = &G;
  H.elems.assign(seen.begin(), seen.end());
  return H;
}

Subgroup centralizer(const FiniteGroup& G, int h) {
  Subgroup Z;
  Z.parent = &G;
  for (int g = 0; g < G.size(); ++g)
    if (G.mul(g, h) == G.mul(h, g)) Z.elems.push_back(g);
  return Z;
}

bool is_central_in(const FiniteGroup& G, const Subgroup& Z, int h) {
  if (!Z.contains(h)) return false;
  for (int z : Z.elems)
    if (G.mul(z, h) != G.mul(h, z)) return false;
  return true;
}

MaterializedSubgroup materialize_subgroup(const FiniteGroup& G, const Subgroup& H) {
  std::vector<int> from_parent(G.size(), -1);
  for (size_t i = 0; i < H.elems.size(); ++i)
    from_parent[H.elems[i]] = static_cast<int>(i);
  // Closure under multiplication is required of the input.
  for (int a : H.elems)
    for (int b : H.elems)
      if (from_parent[G.mul(a, b)] < 0) throw error("element list is not a subgroup");

  auto rebuild = [&]() {
    if (G.is_permutation_group()) {
      // The subgroup re-enumerated via its defining permutations; parent-sorted
      // element order is already canonical, and from_permutations re-sorts the
      // same keys, so indices line up with to_parent.
      std::vector<std::vector<int>> gens;
      for (int a : H.elems) {
        std::vector<int> img(G.degree());
        for (int i = 0; i < G.degree(); ++i) img[i] = G.perm_of(a)[i] + 1;
        gens.push_back(std::move(img));
      }
      return FiniteGroup::from_permutations(G.degree(), gens);
    }
    std::vector<CycMatrix> gens;
    for (int a : H.elems) gens.push_back(G.matrix_of(a));
    return FiniteGroup::from_matrices(G.matrix_order(), gens);
  };
  MaterializedSubgroup M{rebuild(), H.elems, std::move(from_parent)};
  if (M.group.size() != static_cast<int>(H.elems.size()))
    throw error("materialized subgroup has unexpected size");
  // Sanity: index maps must intertwine the two multiplications.
  for (size_t a = 0; a < H.elems.size(); ++a)
    for (size_t b = 0; b < H.elems.size(); ++b) {
      int parent_prod = G.mul(M.to_parent[a], M.to_parent[b]);
      if (M.to_parent[M.group.mul(static_cast<int>(a), static_cast<int>(b))] != parent_prod)
        throw error("materialized subgroup multiplication mismatch");
    }
  return M;
}

std::vector<std::vector<int>> class_intersection(const FiniteGroup& G, const Subgroup& Z,
                                                 const std::vector<int>& class_members) {
  std::vector<int> inside;
  for (int m : class_members)
    if (Z.contains(m)) inside.push_back(m);
  std::sort(inside.begin(), inside.end());

  std::vector<std::vector<int>> blocks;
  std::set<int> assigned;
  for (int m : inside) {
    if (assigned.count(m)) continue;
    std::vector<int> block;
    std::deque<int> queue{m};
    assigned.insert(m);
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      block.push_back(x);
      for (int z : Z.elems) {
        int y = G.conj(z, x);
        if (!assigned.count(y)) {
          assigned.insert(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    blocks.push_back(std::move(block));
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& G) {
  if (G.size() > kSubgroupEnumLimit) throw error("subgroup enumeration limited to small groups");
  std::set<std::vector<int>> found;
  std::deque<std::vector<int>> queue;
  auto add = [&](const Subgroup& H) {
    if (found.insert(H.elems).second) queue.push_back(H.elems);
  };
  add(subgroup_closure(G, {}));
  while (!queue.empty()) {
    std::vector<int> base = queue.front();
    queue.pop_front();
    for (int g = 0; g < G.size(); ++g) {
      if (std::binary_search(base.begin(), base.end(), g)) continue;
      std::vector<int> gens = base;
      gens.push_back(g);
      add(subgroup_closure(G, gens));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& elems : found) out.push_back(Subgroup{&G, elems});
  return out;
}

std::vector<Subgroup> subgroup_conjugacy_reps(const FiniteGroup& G) {
  std::set<std::vector<int>> reps;
  for (const auto& H : all_subgroups(G)) {
    std::vector<int> best = H.elems;
    for (int g = 0; g < G.size(); ++g) {
      std::vector<int> conj_elems;
      for (int h : H.elems) conj_elems.push_back(G.conj(g, h));
      std::sort(conj_elems.begin(), conj_elems.end());
      best = std::min(best, conj_elems);
    }
    reps.insert(best);
  }
  std::vector<Subgroup> out;
  for (const auto& elems : reps) out.push_back(Subgroup{&G, elems});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  });
  return out;
}

ClassFunction::ClassFunction(const FiniteGroup* G, std::vector<Cyclotomic> values)
    : _G(G), _v(std::move(values)) {
  if (_v.size() != G->conjugacy_classes().size())
    throw error("class function has wrong number of values");
}

ClassFunction ClassFunction::zero(const FiniteGroup& G) {
  return ClassFunction(&G, std::vector<Cyclotomic>(G.conjugacy_classes().size()));
}

Cyclotomic ClassFunction::at_element(int g) const { return _v[_G->class_index_of(g)]; }

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  if (_G != o._G) throw error("class functions over different groups");
  std::vector<Cyclotomic> v = _v;
  for (size_t i = 0; i < v.size(); ++i) v[i] += o._v[i];
  return ClassFunction(_G, std::move(v));
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
  return *this + o.scaled(Cyclotomic(-1));
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  if (_G != o._G) throw error("class functions over different groups");
  std::vector<Cyclotomic> v = _v;
  for (size_t i = 0; i < v.size(); ++i) v[i] *= o._v[i];
  return ClassFunction(_G, std::move(v));
}

ClassFunction ClassFunction::scaled(const Cyclotomic& c) const {
  std::vector<Cyclotomic> v = _v;
  for (auto& x : v) x *= c;
  return ClassFunction(_G, std::move(v));
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return _G == o._G && _v == o._v;
}

ClassFunction ClassFunction::localized(int class_index) const {
  std::vector<Cyclotomic> v(_v.size());
  v[class_index] = _v[class_index];
  return ClassFunction(_G, std::move(v));
}

MatrixRep::MatrixRep(const FiniteGroup* G, std::vector<CycMatrix> images)
    : _G(G), _images(std::move(images)) {
  if (static_cast<int>(_images.size()) != G->size())
    throw error("representation needs one matrix per element");
  _dim = _images.empty() ? 0 : _images[0].rows();
  for (const auto& m : _images)
    if (m.rows() != _dim || m.cols() != _dim) throw error("representation matrices must be square, equal size");
  if (!_images[G->identity()].is_identity())
    throw error("representation does not send identity to identity");
  // Products against generators pin down the whole multiplication table by
  // induction on words, so this check proves the homomorphism property.
  for (int a = 0; a < G->size(); ++a)
    for (int i = 0; i < G->num_generators(); ++i) {
      int s = G->generator(i);
      if (_images[a] * _images[s] != _images[G->mul(a, s)])
        throw error("representation is not a homomorphism");
    }
}

MatrixRep MatrixRep::from_generator_images(const FiniteGroup& G,
                                           const std::vector<CycMatrix>& gen_images) {
  if (static_cast<int>(gen_images.size()) != G.num_generators())
    throw error("need one matrix per generator");
  int d = gen_images.empty() ? 1 : gen_images[0].rows();
  std::vector<CycMatrix> images(G.size());
  for (int a = 0; a < G.size(); ++a) {
    CycMatrix m = CycMatrix::identity(d);
    for (int s : G.word_of(a)) m = m * gen_images[s];
    images[a] = std::move(m);
  }
  return MatrixRep(&G, std::move(images));
}

MatrixRep MatrixRep::trivial(const FiniteGroup& G) {
  return MatrixRep(&G, std::vector<CycMatrix>(G.size(), CycMatrix::identity(1)));
}

MatrixRep MatrixRep::defining_permutation(const FiniteGroup& G) {
  if (!G.is_permutation_group()) throw error("group has no permutation realization");
  std::vector<CycMatrix> images;
  for (int a = 0; a < G.size(); ++a) {
    CycMatrix m(G.degree(), G.degree());
    for (int j = 0; j < G.degree(); ++j) m.at(G.perm_of(a)[j], j) = Cyclotomic(1);
    images.push_back(std::move(m));
  }
  return MatrixRep(&G, std::move(images));
}

MatrixRep MatrixRep::defining_matrix(const FiniteGroup& G) {
  if (G.is_permutation_group()) throw error("group has no matrix realization");
  std::vector<CycMatrix> images;
  for (int a = 0; a < G.size(); ++a) images.push_back(G.matrix_of(a));
  return MatrixRep(&G, std::move(images));
}

MatrixRep MatrixRep::regular(const FiniteGroup& G) {
  std::vector<CycMatrix> images;
  for (int a = 0; a < G.size(); ++a) {
    CycMatrix m(G.size(), G.size());
    for (int b = 0; b < G.size(); ++b) m.at(G.mul(a, b), b) = Cyclotomic(1);
    images.push_back(std::move(m));
  }
  return MatrixRep(&G, std::move(images));
}

bool MatrixRep::is_faithful() const {
  for (int a = 0; a < _G->size(); ++a)
    if (a != _G->identity() && _images[a].is_identity()) return false;
  return true;
}

ClassFunction MatrixRep::character() const {
  std::vector<Cyclotomic> v;
  for (const auto& cls : _G->conjugacy_classes()) v.push_back(_images[cls.representative].trace());
  return ClassFunction(_G, std::move(v));
}

MatrixRep MatrixRep::tensor(const MatrixRep& o) const {
  if (_G != o._G) throw error("tensor of representations over different groups");
  std::vector<CycMatrix> images;
  for (int g = 0; g < _G->size(); ++g) {
    const CycMatrix &a = _images[g], &b = o._images[g];
    CycMatrix m(_dim * o._dim, _dim * o._dim);
    for (int i = 0; i < _dim; ++i)
      for (int j = 0; j < _dim; ++j) {
        if (a.at(i, j).is_zero()) continue;
        for (int k = 0; k < o._dim; ++k)
          for (int l = 0; l < o._dim; ++l)
            m.at(i * o._dim + k, j * o._dim + l) = a.at(i, j) * b.at(k, l);
      }
    images.push_back(std::move(m));
  }
  return MatrixRep(_G, std::move(images));
}

MatrixRep MatrixRep::direct_sum(const MatrixRep& o) const {
  if (_G != o._G) throw error("direct sum of representations over different groups");
  std::vector<CycMatrix> images;
  for (int g = 0; g < _G->size(); ++g) {
    CycMatrix m(_dim + o._dim, _dim + o._dim);
    for (int i = 0; i < _dim; ++i)
      for (int j = 0; j < _dim; ++j) m.at(i, j) = _images[g].at(i, j);
    for (int i = 0; i < o._dim; ++i)
      for (int j = 0; j < o._dim; ++j) m.at(_dim + i, _dim + j) = o._images[g].at(i, j);
    images.push_back(std::move(m));
  }
  return MatrixRep(_G, std::move(images));
}

MatrixRep MatrixRep::restricted_to(const MaterializedSubgroup& H) const {
  std::vector<CycMatrix> images;
  for (int a = 0; a < H.group.size(); ++a) images.push_back(_images[H.to_parent[a]]);
  return MatrixRep(&H.group, std::move(images));
}

MatrixRep induced_rep(const FiniteGroup& G, const MaterializedSubgroup& H,
                      const MatrixRep& rho) {
  if (rho.group() != &H.group) throw error("induction source mismatch");
  // Canonical left coset representatives: least parent index in each coset.
  std::vector<int> coset_of(G.size(), -1);
  std::vector<int> reps;
  for (int g = 0; g < G.size(); ++g) {
    if (coset_of[g] >= 0) continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(g);
    for (int h = 0; h < H.group.size(); ++h) coset_of[G.mul(g, H.to_parent[h])] = c;
  }
  int k = static_cast<int>(reps.size());
  int d = rho.dim();
  std::vector<CycMatrix> images;
  for (int g = 0; g < G.size(); ++g) {
    CycMatrix m(k * d, k * d);
    for (int j = 0; j < k; ++j) {
      int gj = G.mul(g, reps[j]);
      int i = coset_of[gj];
      int h = H.from_parent[G.mul(G.inv(reps[i]), gj)];
      if (h < 0) throw error("induction bookkeeping broke");
      const CycMatrix& block = rho.at(h);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) m.at(i * d + r, j * d + c) = block.at(r, c);
    }
    images.push_back(std::move(m));
  }
  return MatrixRep(&G, std::move(images));
}

MatrixRep induced_cyclic_character(const FiniteGroup& G, int c, long j) {
  long k = G.element_order(c);
  MaterializedSubgroup C = materialize_subgroup(G, subgroup_closure(G, {c}));
  // Power index of every element of <c>.
  std::vector<long> log_of(C.group.size(), -1);
  int x = G.identity();
  for (long m = 0; m < k; ++m) {
    log_of[C.from_parent[x]] = m;
    x = G.mul(x, c);
  }
  std::vector<CycMatrix> images;
  for (int a = 0; a < C.group.size(); ++a) {
    CycMatrix m(1, 1);
    m.at(0, 0) = Cyclotomic::root_of_unity(k, log_of[a] * j);
    images.push_back(std::move(m));
  }
  MatrixRep chi(&C.group, std::move(images));
  return induced_rep(G, C, chi);
}

std::map<std::pair<long, long>, long> eigenvalue_multiset(const MatrixRep& rep, int g) {
  const FiniteGroup& G = *rep.group();
  long k = G.element_order(g);
  std::vector<Cyclotomic> traces;
  for (long i = 0; i < k; ++i) traces.push_back(rep.at(G.pow(g, i)).trace());
  std::map<std::pair<long, long>, long> multiset;
  long total = 0;
  for (long j = 0; j < k; ++j) {
    Cyclotomic m;
    for (long i = 0; i < k; ++i)
      m += Cyclotomic::root_of_unity(k, -i * j) * traces[i];
    m *= Cyclotomic(rat(1, k));
    if (!m.is_integer()) throw error("eigenvalue multiplicity is not an integer");
    long mult = m.rational_value().get_num().get_si();
    if (mult < 0) throw error("negative eigenvalue multiplicity");
    if (mult == 0) continue;
    long g2 = std::gcd(j, k);
    std::pair<long, long> key = j == 0 ? std::make_pair(1L, 0L) : std::make_pair(k / g2, j / g2);
    multiset[key] += mult;
    total += mult;
  }
  if (total != rep.dim()) throw error("eigenvalue multiplicities do not fill the dimension");
  return multiset;
}

Cyclotomic character_pairing(const ClassFunction& a, const ClassFunction& b) {
  const FiniteGroup& G = *a.group();
  if (b.group() != &G) throw error("pairing across different groups");
  Cyclotomic total;
  const auto& classes = G.conjugacy_classes();
  for (size_t c = 0; c < classes.size(); ++c) {
    total += Cyclotomic(static_cast<long>(classes[c].members.size())) * a.at_class(static_cast<int>(c)) *
             b.at_class(static_cast<int>(c)).conjugate();
  }
  return total * Cyclotomic(rat(1, G.size()));
}

int hom_dimension(const MatrixRep& V, const MatrixRep& W) {
  const FiniteGroup& G = *V.group();
  if (W.group() != &G) throw error("hom dimension across different groups");
  int dv = V.dim(), dw = W.dim();
  int unknowns = dw * dv;  // entries of X: W <- V intertwiner, row-major
  int ngen = std::max(G.num_generators(), 1);
  CycMatrix sys(ngen * unknowns, unknowns);
  for (int t = 0; t < G.num_generators(); ++t) {
    int s = G.generator(t);
    const CycMatrix& rw = W.at(s);
    const CycMatrix& rv = V.at(s);
    // rho_W(s) X - X rho_V(s) = 0, one row per (a, b) entry
    for (int a = 0; a < dw; ++a)
      for (int b = 0; b < dv; ++b) {
        int row = t * unknowns + a * dv + b;
        for (int c = 0; c < dw; ++c) sys.at(row, c * dv + b) += rw.at(a, c);
        for (int d = 0; d < dv; ++d) sys.at(row, a * dv + d) -= rv.at(d, b);
      }
  }
  return unknowns - mat_rank(sys);
}

EmbeddingCheck good_embedding_check(const FiniteGroup& G,
                                    const std::vector<MatrixRep>& reps, int class_index) {
  if (reps.empty()) throw error("empty representation list");
  for (int g = 0; g < G.size(); ++g) {
    if (g == G.identity()) continue;
    bool all_identity = true;
    for (const auto& r : reps) all_identity &= r.at(g).is_identity();
    if (all_identity) throw error("representation list is not jointly faithful");
  }
  const auto& classes = G.conjugacy_classes();
  auto signature = [&](int cls) {
    std::vector<std::map<std::pair<long, long>, long>> sig;
    for (const auto& r : reps) sig.push_back(eigenvalue_multiset(r, classes[cls].representative));
    return sig;
  };
  auto target = signature(class_index);
  for (size_t c = 0; c < classes.size(); ++c) {
    if (static_cast<int>(c) == class_index) continue;
    if (signature(static_cast<int>(c)) == target)
      return {false, static_cast<int>(c)};
  }
  return {true, -1};
}

}  // namespace ekloc
