#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ocs/cyclotomic.hpp"

#include <random>

using ocs::Cyc;
using ocs::Rat;

TEST_CASE("cyclotomic polynomials") {
  // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1
  CHECK(Cyc::cyclotomic_poly(1) == std::vector<mpz_class>{-1, 1});
  CHECK(Cyc::cyclotomic_poly(2) == std::vector<mpz_class>{1, 1});
  CHECK(Cyc::cyclotomic_poly(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(Cyc::cyclotomic_poly(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(Cyc::cyclotomic_poly(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
  CHECK(Cyc::phi(12) == 4);
  // degree of Phi_m is Euler phi(m); spot-check a few values
  CHECK(Cyc::phi(1) == 1);  // deg Phi_1 = 1 by convention (x - 1)
  CHECK(Cyc::phi(9) == 6);
  CHECK(Cyc::phi(10) == 4);
}

TEST_CASE("canonical forms of roots of unity") {
  // zeta_4^2 = -1 in canonical form
  CHECK(Cyc::zeta(4, 1) * Cyc::zeta(4, 1) == Cyc(Rat(-1)));
  // zeta_3 + zeta_3^2 = -1
  CHECK(Cyc::zeta(3, 1) + Cyc::zeta(3, 2) == Cyc(Rat(-1)));
  // zeta_2 = -1 exactly
  CHECK(Cyc::zeta(2, 1) == Cyc(Rat(-1)));
  CHECK(Cyc::zeta(2, 1).is_rational());
  // full sum of d-th roots of unity vanishes
  for (int m : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) {
    Cyc s;
    for (int k = 0; k < m; ++k) s += Cyc::zeta(m, k);
    CHECK(s.is_zero());
  }
  // zeta_m^m = 1
  for (int m : {1, 2, 3, 5, 8, 12}) {
    Cyc p(Rat(1));
    for (int k = 0; k < m; ++k) p *= Cyc::zeta(m, 1);
    CHECK(p == Cyc(Rat(1)));
  }
}

TEST_CASE("conjugation") {
  // conj(zeta_4) = zeta_4^3 = -zeta_4
  CHECK(Cyc::zeta(4, 1).conj() == -Cyc::zeta(4, 1));
  // conjugation is an involutive ring homomorphism
  std::mt19937 rng(7);
  auto rnd = [&](int m) {
    Cyc v;
    for (int k = 0; k < m; ++k)
      v += Cyc::rational(Rat(static_cast<long>(rng() % 7) - 3,
                             static_cast<long>(rng() % 4 + 1)),
                         1) *
           Cyc::zeta(m, k);
    return v;
  };
  for (int m : {3, 4, 5, 6, 8, 12}) {
    Cyc a = rnd(m), b = rnd(m);
    CHECK(a.conj().conj() == a);
    CHECK((a + b).conj() == a.conj() + b.conj());
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
  // |chi(g)|^2 = 1 for every character value of Z/d
  for (int d = 1; d <= 12; ++d)
    for (int j = 0; j < d; ++j)
      for (int g = 0; g < d; ++g) {
        Cyc v = Cyc::zeta(d, static_cast<long>(j) * g);
        Cyc n = v * v.conj();
        CHECK(n.is_rational());
        CHECK(n.to_rational() >= 0);
        CHECK(n == Cyc(Rat(1)));
      }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(11);
  auto rnd = [&](int m) {
    Cyc v;
    for (int k = 0; k < m; ++k)
      v += Cyc::rational(Rat(static_cast<long>(rng() % 9) - 4,
                             static_cast<long>(rng() % 5 + 1)),
                         1) *
           Cyc::zeta(m, k);
    return v;
  };
  for (int m : {1, 2, 3, 4, 5, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 8; ++trial) {
      Cyc a = rnd(m), b = rnd(m), c = rnd(m);
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) {
        CHECK(a * a.inv() == Cyc(Rat(1)));
        CHECK(a / a == Cyc(Rat(1)));
      }
    }
  }
  // the documented example: (1 + zeta_5) * (1 + zeta_5)^{-1} = 1
  Cyc v = Cyc(Rat(1)) + Cyc::zeta(5, 1);
  CHECK(v * v.inv() == Cyc(Rat(1)));
}

TEST_CASE("cross-order lifting") {
  // zeta_3 viewed in Q(zeta_6) is zeta_6^2
  CHECK(Cyc::zeta(3, 1).lifted(6) == Cyc::zeta(6, 2));
  CHECK(Cyc::zeta(2, 1) + Cyc::zeta(3, 1) == Cyc::zeta(6, 3) + Cyc::zeta(6, 2));
  CHECK_THROWS_AS(Cyc::zeta(4, 1).lifted(6), std::invalid_argument);
  // mixed-order product: zeta_2 * zeta_3 = zeta_6^5
  CHECK(Cyc::zeta(2, 1) * Cyc::zeta(3, 1) == Cyc::zeta(6, 5));
}

TEST_CASE("rationality detection and serialization text") {
  CHECK(Cyc::zeta(5, 0).is_rational());
  CHECK(!Cyc::zeta(5, 1).is_rational());
  CHECK(Cyc::zeta(5, 1).to_string() == "z5");
  CHECK((Cyc(Rat(3)) * Cyc::zeta(6, 1)).to_string() == "3*z6");
  CHECK(Cyc(Rat(-1, 2)).to_string() == "-1/2");
  CHECK_THROWS_AS(Cyc::zeta(5, 1).to_rational(), std::domain_error);
  // approx of zeta_4 is close to i
  auto z = Cyc::zeta(4, 1).approx();
  CHECK(std::abs(z.real()) < 1e-12);
  CHECK(std::abs(z.imag() - 1.0) < 1e-12);
}
