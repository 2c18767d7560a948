#include "ekloc/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ekloc {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw error("monomial arity mismatch");
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial mono_inverse(const Monomial& a) {
  Monomial out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool mono_is_one(const Monomial& a) {
  return std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
}

namespace {

// Deterministic (storage-level) ordering used to keep factor lists sorted.
bool cyc_storage_less(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (size_t i = 0; i < ca.size() && i < cb.size(); ++i) {
    int s = cmp(ca[i], cb[i]);
    if (s != 0) return s < 0;
  }
  return ca.size() < cb.size();
}

bool factor_less(const BinomialFactor& a, const BinomialFactor& b) {
  if (a.m != b.m) return a.m < b.m;
  return cyc_storage_less(a.c, b.c);
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const Cyclotomic& c) {
  LaurentPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(Monomial m, const Cyclotomic& c) {
  LaurentPoly p(static_cast<int>(m.size()));
  p.add_term(m, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index, int exponent) {
  if (index < 0 || index >= nvars) throw error("variable index out of range");
  Monomial m(nvars, 0);
  m[index] = exponent;
  return monomial(std::move(m));
}

Cyclotomic LaurentPoly::coeff(const Monomial& m) const {
  auto it = _terms.find(m);
  return it == _terms.end() ? Cyclotomic() : it->second;
}

void LaurentPoly::add_term(const Monomial& m, const Cyclotomic& c) {
  if (static_cast<int>(m.size()) != _nvars) throw error("term arity mismatch");
  if (c.is_zero()) return;
  auto [it, fresh] = _terms.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) _terms.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(_nvars);
  for (const auto& [m, c] : _terms) out._terms.emplace(m, -c);
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (_nvars != o._nvars) throw error("polynomial arity mismatch");
  for (const auto& [m, c] : o._terms) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  if (_nvars != o._nvars) throw error("polynomial arity mismatch");
  LaurentPoly out(_nvars);
  for (const auto& [ma, ca] : _terms)
    for (const auto& [mb, cb] : o._terms) out.add_term(mono_mul(ma, mb), ca * cb);
  return *this = std::move(out);
}

LaurentPoly LaurentPoly::scaled(const Cyclotomic& c) const {
  LaurentPoly out(_nvars);
  if (c.is_zero()) return out;
  for (const auto& [m, cm] : _terms) out.add_term(m, cm * c);
  return out;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly out(_nvars);
  for (const auto& [mm, c] : _terms) out._terms.emplace(mono_mul(mm, m), c);
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (_nvars != o._nvars) return false;
  if (_terms.size() != o._terms.size()) return false;
  auto it = _terms.begin();
  auto jt = o._terms.begin();
  for (; it != _terms.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second != jt->second) return false;
  }
  return true;
}

Cyclotomic LaurentPoly::evaluate(const std::vector<Cyclotomic>& point) const {
  if (static_cast<int>(point.size()) != _nvars) throw error("evaluation point arity mismatch");
  Cyclotomic total;
  for (const auto& [m, c] : _terms) {
    Cyclotomic v = c;
    for (int i = 0; i < _nvars; ++i) {
      if (m[i] == 0) continue;
      if (point[i].is_zero() && m[i] < 0)
        throw error("evaluation hits a zero with negative exponent");
      v *= point[i].pow(m[i]);
    }
    total += v;
  }
  return total;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != _nvars) throw error("permutation arity mismatch");
  LaurentPoly out(_nvars);
  for (const auto& [m, c] : _terms) {
    Monomial pm(_nvars);
    for (int i = 0; i < _nvars; ++i) pm[perm[i]] = m[i];
    out.add_term(pm, c);
  }
  return out;
}

bool LaurentPoly::is_symmetric() const {
  // Adjacent transpositions generate the full symmetric group.
  for (int i = 0; i + 1 < _nvars; ++i) {
    std::vector<int> perm(_nvars);
    for (int j = 0; j < _nvars; ++j) perm[j] = j;
    std::swap(perm[i], perm[i + 1]);
    if (permuted(perm) != *this) return false;
  }
  return true;
}

std::string LaurentPoly::to_string(const std::vector<std::string>& names) const {
  if (_terms.empty()) return "0";
  auto var_name = [&](int i) {
    return i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
  };
  std::ostringstream os;
  bool first = true;
  // Leading (lex-largest) terms first.
  for (auto it = _terms.rbegin(); it != _terms.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::string cs = c.to_string();
    bool have_vars = !mono_is_one(m);
    if (cs != "1" || !have_vars) {
      bool composite = cs.find(' ') != std::string::npos;
      os << (composite ? "(" + cs + ")" : cs);
      if (have_vars) os << "*";
    }
    bool first_var = true;
    for (int i = 0; i < _nvars; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << var_name(i);
      if (m[i] != 1) os << "^" << m[i];
    }
  }
  return os.str();
}

BinomialFactor::BinomialFactor(Cyclotomic coeff, Monomial mono)
    : c(std::move(coeff)), m(std::move(mono)) {
  if (mono_is_one(m) && c == Cyclotomic(1))
    throw error("binomial factor 1 - 1 would be zero");
}

LaurentPoly BinomialFactor::to_poly(int nvars) const {
  if (static_cast<int>(m.size()) != nvars) throw error("factor arity mismatch");
  LaurentPoly p = LaurentPoly::constant(nvars, Cyclotomic(1));
  p.add_term(m, -c);
  return p;
}

std::optional<LaurentPoly> try_divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.nvars() != g.nvars()) throw error("polynomial arity mismatch");
  if (g.is_zero()) throw error("division by the zero polynomial");
  const int n = f.nvars();
  if (f.is_zero()) return LaurentPoly(n);

  auto min_exponents = [n](const LaurentPoly& p) {
    Monomial lo = p.terms().begin()->first;
    for (const auto& [m, c] : p.terms())
      for (int i = 0; i < n; ++i) lo[i] = std::min(lo[i], m[i]);
    return lo;
  };
  Monomial sf = min_exponents(f), sg = min_exponents(g);
  LaurentPoly fr = f.shifted(mono_inverse(sf));
  LaurentPoly gr = g.shifted(mono_inverse(sg));

  // fr, gr now have nonnegative exponents with zero coordinate-wise minimum;
  // in the polynomial ring a single divisor is a Groebner basis, so fr lies
  // in (gr) iff lex division leaves no remainder, and the Laurent quotient
  // is the polynomial quotient shifted by the stripped monomials.
  const auto& gt = *gr.terms().rbegin();
  Cyclotomic glc_inv = gt.second.inverse();
  LaurentPoly q(n);
  while (!fr.is_zero()) {
    const auto& ft = *fr.terms().rbegin();
    Monomial qm(n);
    for (int i = 0; i < n; ++i) {
      qm[i] = ft.first[i] - gt.first[i];
      if (qm[i] < 0) return std::nullopt;
    }
    Cyclotomic qc = ft.second * glc_inv;
    q.add_term(qm, qc);
    fr -= gr.shifted(qm).scaled(qc);
  }
  return q.shifted(mono_mul(sf, mono_inverse(sg)));
}

Localized::Localized(LaurentPoly num, std::vector<BinomialFactor> den)
    : _num(std::move(num)), _den(std::move(den)) {
  for (const auto& f : _den)
    if (static_cast<int>(f.m.size()) != _num.nvars()) throw error("factor arity mismatch");
  reduce();
}

void Localized::reduce() {
  if (_num.is_zero()) {
    _den.clear();
    return;
  }
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = _den.begin(); it != _den.end(); ++it) {
      auto q = try_divide(_num, it->to_poly(_num.nvars()));
      if (q) {
        _num = std::move(*q);
        _den.erase(it);
        progress = true;
        break;
      }
    }
  }
  std::sort(_den.begin(), _den.end(), factor_less);
}

Localized Localized::operator-() const {
  Localized out = *this;
  out._num = -out._num;
  return out;
}

Localized& Localized::operator+=(const Localized& o) {
  if (nvars() != o.nvars()) throw error("localized arity mismatch");
  // Shared factors are counted once; each side is scaled by the other's
  // surplus, so the combined denominator is the multiset union of the two.
  std::vector<BinomialFactor> b_extra;
  std::vector<bool> used(_den.size(), false);
  for (const auto& f : o._den) {
    bool matched = false;
    for (size_t i = 0; i < _den.size(); ++i) {
      if (!used[i] && _den[i].same_as(f)) {
        used[i] = true;
        matched = true;
        break;
      }
    }
    if (!matched) b_extra.push_back(f);
  }
  std::vector<BinomialFactor> a_extra;
  for (size_t i = 0; i < _den.size(); ++i)
    if (!used[i]) a_extra.push_back(_den[i]);

  LaurentPoly num = _num * denominator_product(nvars(), b_extra) +
                    o._num * denominator_product(nvars(), a_extra);
  std::vector<BinomialFactor> den = _den;
  den.insert(den.end(), b_extra.begin(), b_extra.end());
  _num = std::move(num);
  _den = std::move(den);
  reduce();
  return *this;
}

Localized& Localized::operator-=(const Localized& o) { return *this += -o; }

Localized& Localized::operator*=(const Localized& o) {
  if (nvars() != o.nvars()) throw error("localized arity mismatch");
  _num *= o._num;
  _den.insert(_den.end(), o._den.begin(), o._den.end());
  reduce();
  return *this;
}

Localized Localized::scaled(const Cyclotomic& c) const {
  Localized out = *this;
  out._num = out._num.scaled(c);
  if (out._num.is_zero()) out._den.clear();
  return out;
}

bool Localized::operator==(const Localized& o) const {
  if (nvars() != o.nvars()) return false;
  return _num * denominator_product(nvars(), o._den) ==
         o._num * denominator_product(nvars(), _den);
}

LaurentPoly Localized::as_polynomial() const {
  Localized r = *this;
  r.reduce();
  if (!r._den.empty()) {
    std::ostringstream os;
    os << "residual denominator after reduction: " << r.to_string();
    throw residual_denominator_error(os.str());
  }
  return r._num;
}

std::string Localized::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "(" << _num.to_string(names) << ")";
  for (const auto& f : _den) os << " / (" << f.to_poly(_num.nvars()).to_string(names) << ")";
  return os.str();
}

LaurentPoly denominator_product(int nvars, const std::vector<BinomialFactor>& den) {
  LaurentPoly p = LaurentPoly::constant(nvars, Cyclotomic(1));
  for (const auto& f : den) p *= f.to_poly(nvars);
  return p;
}

}  // namespace ekloc
