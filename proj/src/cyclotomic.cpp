#include "ekloc/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ekloc {

long euler_phi(long n) {
  if (n <= 0) throw error("euler_phi of nonpositive argument");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> divisors_of(long n) {
  std::vector<long> ds;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

namespace {

using Poly = std::vector<Rational>;  // ascending degree

int degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

// Exact division q = a / b, requires zero remainder (used for Phi_n).
Poly divide_exact(Poly a, const Poly& b) {
  int db = degree(b);
  if (db < 0) throw error("polynomial division by zero");
  int da = degree(a);
  Poly q(std::max(da - db + 1, 0));
  while ((da = degree(a)) >= db) {
    Rational c = a[da] / b[db];
    q[da - db] = c;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= c * b[i];
  }
  if (degree(a) >= 0) throw error("inexact polynomial division");
  return q;
}

}  // namespace

const std::vector<Rational>& cyclotomic_polynomial(long n) {
  static std::map<long, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly p(n + 1);
  p[0] = -1;
  p[n] = 1;  // x^n - 1
  for (long d : divisors_of(n)) {
    if (d == n) continue;
    p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  if (degree(p) != euler_phi(n)) throw error("cyclotomic polynomial degree mismatch");
  return cache.emplace(n, std::move(p)).first->second;
}

Cyclotomic Cyclotomic::reduce_at(long order, std::vector<Rational> poly) {
  if (order < 1) throw error("cyclotomic order must be positive");
  const Poly& phi = cyclotomic_polynomial(order);
  const int d = static_cast<int>(phi.size()) - 1;  // = euler_phi(order), monic
  for (int k = static_cast<int>(poly.size()) - 1; k >= d; --k) {
    if (poly[k] == 0) continue;
    Rational c = poly[k];
    for (int i = 0; i <= d; ++i) poly[k - d + i] -= c * phi[i];
  }
  poly.resize(d);
  Cyclotomic out;
  out._order = order;
  out._c = std::move(poly);
  return out;
}

Cyclotomic Cyclotomic::make(long order, std::vector<Rational> poly) {
  Cyclotomic out = reduce_at(order, std::move(poly));
  out.normalize();
  return out;
}

void Cyclotomic::normalize() {
  if (_order == 1) return;
  for (size_t i = 1; i < _c.size(); ++i)
    if (_c[i] != 0) return;
  Rational r = _c.empty() ? Rational(0) : _c[0];
  _order = 1;
  _c.assign(1, r);
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw error("root_of_unity: order must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> poly(k + 1);
  poly[k] = 1;
  return make(n, std::move(poly));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : _c)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  // Power-basis coordinates are unique, so rational means no higher terms.
  for (size_t i = 1; i < _c.size(); ++i)
    if (_c[i] != 0) return false;
  return true;
}

bool Cyclotomic::is_integer() const {
  return is_rational() && rat_is_integer(_c[0]);
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw error("cyclotomic value is not rational: " + to_string());
  return _c.empty() ? Rational(0) : _c[0];
}

Cyclotomic Cyclotomic::promoted(long m) const {
  if (m % _order != 0) throw error("promotion target is not a multiple of the order");
  if (m == _order) return *this;
  long step = m / _order;
  std::vector<Rational> poly(static_cast<size_t>(_c.size() - 1) * step + 1);
  for (size_t i = 0; i < _c.size(); ++i) poly[i * step] = _c[i];
  return reduce_at(m, std::move(poly));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out._c) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  long l = std::lcm(_order, o._order);
  Cyclotomic a = promoted(l), b = o.promoted(l);
  for (size_t i = 0; i < a._c.size(); ++i) a._c[i] += b._c[i];
  a.normalize();
  return *this = a;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  long l = std::lcm(_order, o._order);
  Cyclotomic a = promoted(l), b = o.promoted(l);
  std::vector<Rational> prod(a._c.size() + b._c.size());
  for (size_t i = 0; i < a._c.size(); ++i) {
    if (a._c[i] == 0) continue;
    for (size_t j = 0; j < b._c.size(); ++j) {
      if (b._c[j] != 0) prod[i + j] += a._c[i] * b._c[j];
    }
  }
  return *this = make(l, std::move(prod));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw error("inverse of zero cyclotomic");
  if (_order == 1) return Cyclotomic(Rational(1) / _c[0]);
  // Extended Euclid in Q[x] for (value, Phi_order); Phi is irreducible, so the
  // gcd is a nonzero constant and u gives the inverse up to that constant.
  Poly r0(_c.begin(), _c.end());
  Poly r1 = cyclotomic_polynomial(_order);
  Poly u0{Rational(1)}, u1;
  while (true) {
    int d1 = degree(r1);
    if (d1 < 0) break;
    int d0 = degree(r0);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(u0, u1);
      continue;
    }
    // One long-division step folded into the Euclid loop.
    Rational c = r0[d0] / r1[d1];
    long shift = d0 - d1;
    for (int i = 0; i <= d1; ++i) r0[shift + i] -= c * r1[i];
    if (u1.size() + shift > u0.size()) u0.resize(u1.size() + shift);
    for (size_t i = 0; i < u1.size(); ++i) u0[shift + i] -= c * u1[i];
  }
  int d = degree(r0);
  if (d != 0) throw error("cyclotomic inverse: unexpected gcd degree");
  Rational g = r0[d];
  for (auto& c : u0) c /= g;
  return make(_order, std::move(u0));
}

Cyclotomic Cyclotomic::galois(long k) const {
  long n = _order;
  k %= n;
  if (k < 0) k += n;
  if (std::gcd(k, n) != 1) throw error("galois exponent not coprime to the order");
  if (n == 1) return *this;
  std::vector<Rational> poly(n);
  for (size_t i = 0; i < _c.size(); ++i) poly[(i * k) % n] += _c[i];
  return make(n, std::move(poly));
}

Cyclotomic Cyclotomic::conjugate() const {
  if (_order == 1) return *this;
  return galois(_order - 1);
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic base = *this, out(1);
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long l = std::lcm(_order, o._order);
  Cyclotomic a = promoted(l), b = o.promoted(l);
  return a._c == b._c;
}

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < _c.size(); ++i) {
    if (_c[i] == 0) continue;
    Rational c = _c[i];
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0 && i > 0) {
      os << "-";
      c = -c;
    }
    first = false;
    bool unit_coeff = (c == 1) && i > 0;
    if (!unit_coeff) os << rat_to_string(c);
    if (i > 0) {
      if (!unit_coeff) os << "*";
      os << "z" << _order;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace ekloc
