#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ekloc/cyclotomic.hpp"

using namespace ekloc;

namespace {

Cyclotomic zeta(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

Cyclotomic random_cyc(std::mt19937_64& rng) {
  static const long orders[] = {1, 2, 3, 4, 5, 6, 8, 12};
  std::uniform_int_distribution<int> ord_pick(0, 7);
  std::uniform_int_distribution<long> num(-3, 3);
  std::uniform_int_distribution<long> den(1, 3);
  long n = orders[ord_pick(rng)];
  Cyclotomic v;
  for (long i = 0; i < euler_phi(n); ++i)
    v += Cyclotomic(rat(num(rng), den(rng))) * zeta(n, i);
  return v;
}

}  // namespace

TEST_CASE("euler phi and cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(2000) == 800);

  auto phi1 = cyclotomic_polynomial(1);
  REQUIRE(phi1.size() == 2);
  CHECK(phi1[0] == -1);
  CHECK(phi1[1] == 1);

  auto phi4 = cyclotomic_polynomial(4);  // x^2 + 1
  REQUIRE(phi4.size() == 3);
  CHECK(phi4[0] == 1);
  CHECK(phi4[1] == 0);
  CHECK(phi4[2] == 1);

  auto phi6 = cyclotomic_polynomial(6);  // x^2 - x + 1
  REQUIRE(phi6.size() == 3);
  CHECK(phi6[0] == 1);
  CHECK(phi6[1] == -1);
  CHECK(phi6[2] == 1);

  auto phi12 = cyclotomic_polynomial(12);  // x^4 - x^2 + 1
  REQUIRE(phi12.size() == 5);
  CHECK(phi12[0] == 1);
  CHECK(phi12[2] == -1);
  CHECK(phi12[4] == 1);
}

TEST_CASE("primitive root relations") {
  // zeta3 + zeta3^2 = -1
  CHECK(zeta(3, 1) + zeta(3, 2) == Cyclotomic(-1));
  // zeta4 * zeta4 = -1
  CHECK(zeta(4) * zeta(4) == Cyclotomic(-1));
  // inverse of zeta5 is zeta5^4
  CHECK(zeta(5).inverse() == zeta(5, 4));
  // full vanishing sums
  Cyclotomic s;
  for (long k = 0; k < 5; ++k) s += zeta(5, k);
  CHECK(s.is_zero());
}

TEST_CASE("order merging and canonical equality") {
  CHECK(zeta(6, 2) == zeta(3, 1));   // zeta_6^2 = zeta_3
  CHECK(zeta(6, 3) == Cyclotomic(-1));
  CHECK(zeta(8, 4) == Cyclotomic(-1));
  CHECK(zeta(12, 3) == zeta(4, 1));
  CHECK(zeta(2, 1) == Cyclotomic(-1));
  CHECK(zeta(1, 0) == Cyclotomic(1));

  // mixing orders in arithmetic promotes to the lcm
  Cyclotomic v = zeta(3) * zeta(4);
  CHECK(v == zeta(12, 7));
  CHECK(v.pow(12) == Cyclotomic(1));
}

TEST_CASE("cross order arithmetic keeps every term") {
  Cyclotomic s = Cyclotomic(1) + zeta(3);
  CHECK(s.order() == 3);
  CHECK_FALSE(s.is_rational());
  CHECK(s - zeta(3) == Cyclotomic(1));
  // norm: (1 + w)(1 + conj w) = 2 + w + w^2 = 1
  CHECK(s * s.conjugate() == Cyclotomic(1));
  // promotion preserves the value and the requested order
  Cyclotomic p = Cyclotomic(rat(5, 2)).promoted(12);
  CHECK(p.order() == 12);
  CHECK(p.is_rational());
  CHECK(p == Cyclotomic(rat(5, 2)));
  // zeta_2 = zeta_6^3 and zeta_3 = zeta_6^2
  CHECK(zeta(2) + zeta(3) == zeta(6, 3) + zeta(6, 2));
}

TEST_CASE("rational detection and demotion") {
  CHECK(Cyclotomic(rat(7, 3)).is_rational());
  CHECK((zeta(3, 1) + zeta(3, 2)).is_rational());
  CHECK((zeta(3, 1) + zeta(3, 2)).rational_value() == rat(-1));
  CHECK((zeta(4).pow(2)).is_integer());
  CHECK_FALSE(zeta(5).is_rational());
  CHECK_THROWS_AS(zeta(5).rational_value(), error);
  // demoted values really live at order 1
  CHECK((zeta(5) * zeta(5, 4)).order() == 1);
}

TEST_CASE("galois action and conjugation") {
  CHECK(zeta(5).conjugate() == zeta(5, 4));
  CHECK(zeta(5).galois(2) == zeta(5, 2));
  CHECK(Cyclotomic(rat(3, 2)).conjugate() == Cyclotomic(rat(3, 2)));
  CHECK_THROWS_AS(zeta(6).galois(2), error);
  // conjugation is an involution and fixes rationals
  Cyclotomic v = Cyclotomic(2) + zeta(7, 3);
  CHECK(v.conjugate().conjugate() == v);
  // norm of a root of unity is 1
  CHECK(zeta(7) * zeta(7).conjugate() == Cyclotomic(1));
}

TEST_CASE("inverses and division") {
  CHECK_THROWS_AS(Cyclotomic().inverse(), error);
  Cyclotomic v = Cyclotomic(1) + zeta(5);  // nonzero, non-root-of-unity
  CHECK(v * v.inverse() == Cyclotomic(1));
  CHECK((v / v) == Cyclotomic(1));
  CHECK(Cyclotomic(rat(2, 3)).inverse() == Cyclotomic(rat(3, 2)));
}

TEST_CASE("power maps") {
  CHECK(zeta(12).pow(0) == Cyclotomic(1));
  CHECK(zeta(12).pow(13) == zeta(12));
  CHECK(zeta(12).pow(-1) == zeta(12, 11));
  CHECK(Cyclotomic(2).pow(10) == Cyclotomic(1024));
}

TEST_CASE("field axioms on random values") {
  std::mt19937_64 rng(20260823);
  for (int trial = 0; trial < 200; ++trial) {
    Cyclotomic a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Cyclotomic());
    CHECK(a * Cyclotomic(1) == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
    // Galois maps are ring homomorphisms.
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
  }
}

TEST_CASE("printing stays stable") {
  CHECK(Cyclotomic().to_string() == "0");
  CHECK(Cyclotomic(rat(-7, 2)).to_string() == "-7/2");
  CHECK(zeta(5).to_string() == "z5");
  CHECK((Cyclotomic(1) + zeta(3)).to_string() == "1 + z3");
  CHECK((zeta(3, 1) - zeta(3, 1)).to_string() == "0");
}
